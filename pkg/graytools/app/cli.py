from __future__ import print_function

from argparse import ArgumentParser
import sys

import numpy as np
import pandas as pd

from graytools.bench import benchmark, summarize
from graytools.codes import check_size
from graytools.exc import GrayToolsError, ParameterError, SizeLimitError, StructuralError
from graytools.loopless import MODES, iterate
from graytools.storage import FORMATS, LINES, RAW, read_words, stream_words, write_cycle
from graytools.util import digit_dtype
from graytools.verify import AT_MOST_K, EXACT_K, cross_check, lambda_bruteforce, verify_gray_cycle
from graytools.words import AUTO, BASES, EVEN, ODD, SUPPORTS, VARIANTS, GrayCycle, lambda_max
from .config import RunConfig

# Exit codes
OK = 0
PARAMETER_ERROR = 2
VERIFICATION_FAILED = 3
SIZE_LIMIT = 4


def _add_parameters(parser):
    parser.add_argument("--p", "-p", type=int, required=True, help="alphabet size")
    parser.add_argument("--n", "-n", type=int, required=True, help="word length")
    parser.add_argument("--k", "-k", type=int, required=True,
                        help="number of letters substituted per step")
    parser.add_argument("--variant", choices=VARIANTS, default=None,
                        help="cycle variant (default: the maximum-length one)")
    parser.add_argument("--base", choices=BASES, default=AUTO,
                        help="base sequence for p >= 3 (default: auto)")
    parser.add_argument("--parity", choices=[EVEN, ODD], default=EVEN,
                        help="parity class for p = 2 and even k (default: even)")
    parser.add_argument("--threshold", type=str, default=None,
                        help="largest base table to preprocess, e.g. 2**20")


def _print_report(report, as_json):
    if as_json:
        print(report.to_json())
        return
    if report.ok:
        print("ok ({} terms, {})".format(report.length, report.mode))
        return
    for v in report.violations:
        where = '' if v.index is None else ' at {}'.format(v.index)
        print("{}{}: {}".format(v.condition, where, v.detail))


def generate(config):
    spec = config.spec()
    if config.output is not None:
        check_size(spec.length if config.limit is None else min(config.limit, spec.length))
    words = iterate(spec, config.mode, limit=config.limit, threshold=config.threshold)
    if config.output is not None:
        terms = np.array(list(words), dtype=digit_dtype(spec.p)).reshape(-1, spec.n)
        write_cycle(GrayCycle(spec, terms), config.output)
        print("Wrote", config.output, file=sys.stderr)
        return OK
    stream = sys.stdout.buffer if config.format == RAW else sys.stdout
    stream_words(words, stream, config.format)
    return OK


def verify(config):
    spec = config.spec()
    if config.input is None:
        words = [spec.alphabet.parse(line) for line in sys.stdin if line.strip()]
    else:
        words = read_words(config.input, spec.p)
    support = spec.support if config.support is None else config.support
    mode = AT_MOST_K if config.at_most else EXACT_K
    report = verify_gray_cycle(words, spec.k, mode, expected_support=support, p=spec.p, n=spec.n)
    _print_report(report, config.json)
    return OK if report.ok else VERIFICATION_FAILED


def crosscheck(config):
    mode = AT_MOST_K if config.at_most else EXACT_K
    report = cross_check(config.spec(), mode, threshold=config.threshold)
    _print_report(report, config.json)
    return OK if report.ok else VERIFICATION_FAILED


def lambda_(config):
    value = lambda_max(config.p, config.n, config.k)
    if not config.bruteforce:
        print(value)
        return OK
    found = lambda_bruteforce(config.p, config.n, config.k)
    if found == value:
        print("{} (confirmed by oracle)".format(value))
        return OK
    print("{} (oracle found {})".format(value, found))
    return VERIFICATION_FAILED


def bench(config):
    mode = config.resolved_mode()
    df = benchmark(config.spec(), mode, config.limit, config.threshold)
    summary = summarize(df)
    summary = pd.concat([pd.Series({'mode': mode}), summary])
    if config.json:
        print(summary.to_json())
    else:
        print(summary.to_string())
    return OK


_COMMANDS = {
    'generate': generate,
    'verify': verify,
    'crosscheck': crosscheck,
    'lambda': lambda_,
    'bench': bench,
}


def run(config):
    """Execute a validated :class:`RunConfig` and return the exit code."""
    try:
        return _COMMANDS[config.command](config)
    except (ParameterError, StructuralError) as e:
        print("error:", e, file=sys.stderr)
        return PARAMETER_ERROR
    except SizeLimitError as e:
        print("error:", e, file=sys.stderr)
        return SIZE_LIMIT
    except GrayToolsError as e:
        print("error:", e, file=sys.stderr)
        return PARAMETER_ERROR


def main(args=None):
    """Command-line interface for generating and checking sigma_k-Gray cycles."""
    parser = ArgumentParser(prog='python -m graytools.app',
                            description="sigma_k-Gray cycle generator and checker",
                            epilog="DON'T PANIC")
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    gen = subparsers.add_parser('generate', help='write the terms of a cycle')
    _add_parameters(gen)
    gen.add_argument("--mode", choices=MODES, default=AUTO,
                     help="generation mode (default: auto)")
    gen.add_argument("--format", "-f", choices=FORMATS, default=LINES,
                     help="stdout format (default: lines)")
    gen.add_argument("--limit", type=int, default=None, help="stop after this many terms")
    gen.add_argument("--output", "-o", type=str, default=None,
                     help="write a .txt, .csv, .raw or .h5 file instead of stdout")

    ver = subparsers.add_parser('verify', help='check a sequence of words read from a file or stdin')
    _add_parameters(ver)
    ver.add_argument("--input", "-i", type=str, default=None,
                     help=".txt or .csv file of words (default: stdin)")
    ver.add_argument("--support", choices=SUPPORTS, default=None,
                     help="words the sequence must cover (default: those of the cycle)")
    ver.add_argument("--at-most", action='store_true', default=False,
                     help="accept distances between 1 and k")
    ver.add_argument("--json", action='store_true', default=False, help="print the report as JSON")

    cc = subparsers.add_parser('crosscheck', help='build, iterate and verify a cycle')
    _add_parameters(cc)
    cc.add_argument("--at-most", action='store_true', default=False,
                    help="accept distances between 1 and k")
    cc.add_argument("--json", action='store_true', default=False, help="print the report as JSON")

    lam = subparsers.add_parser('lambda', help='print the maximum cycle length')
    _add_parameters(lam)
    lam.add_argument("--bruteforce", action='store_true', default=False,
                     help="confirm by exhaustive search (tiny instances only)")

    ben = subparsers.add_parser('bench', help='measure per-step costs of a generator')
    _add_parameters(ben)
    ben.add_argument("--mode", choices=MODES, default=AUTO,
                     help="generation mode (default: auto)")
    ben.add_argument("--limit", type=int, default=None, help="stop after this many steps")
    ben.add_argument("--json", action='store_true', default=False, help="print the summary as JSON")

    args = parser.parse_args(args)

    try:
        config = RunConfig.from_args(args).validate()
    except ParameterError as e:
        print("error:", e, file=sys.stderr)
        return PARAMETER_ERROR
    return run(config)
