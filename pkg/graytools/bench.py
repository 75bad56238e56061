"""Per-step cost measurements for the term-by-term generators.

Operation counts come from the generators' own instrumentation and are
deterministic; wall-clock delays are informational.

"""

from time import perf_counter_ns

import numpy as np
import pandas as pd

from .codes import check_size
from .exc import ParameterError, SequenceExhaustedError
from .loopless import RECURSIVE, make_state, resolve_mode


def benchmark(spec, mode='auto', limit=None, threshold=None):
    """Run a generator over its cycle and record every step.

    Parameters
    ----------
    spec : CycleSpec
    mode : str
        ``cat``, ``loopless`` or ``auto``.
    limit : int or None
        Maximum number of steps to record (default: the whole cycle).
    threshold : int or None
        Preprocessing threshold override.

    Returns
    -------
    pd.DataFrame
        Columns: index, ops, delay_ns. One row per step, starting at index 1.

    Raises
    ------
    SizeLimitError when more steps would be recorded than the materialization
    limit allows.

    """
    mode = resolve_mode(spec, mode, threshold)
    if mode == RECURSIVE:
        raise ParameterError("only the cat and loopless generators can be benchmarked")
    steps = spec.length - 1 if limit is None else min(limit, spec.length - 1)
    check_size(steps)
    state = make_state(spec, mode, threshold=threshold)

    ops = np.zeros(steps, dtype=np.int64)
    delays = np.zeros(steps, dtype=np.int64)
    for n in range(steps):
        start = perf_counter_ns()
        try:
            state.advance()
        except SequenceExhaustedError:
            ops, delays = ops[:n], delays[:n]
            break
        delays[n] = perf_counter_ns() - start
        ops[n] = state.last_cost

    return pd.DataFrame({
        'index': np.arange(1, len(ops) + 1),
        'ops': ops,
        'delay_ns': delays,
    })


def summarize(df):
    """Reduce a :func:`benchmark` table to its headline numbers."""
    if len(df) == 0:
        raise ParameterError("nothing to summarize: the run recorded no steps")
    quantiles = df.delay_ns.quantile([0.5, 0.9, 0.99])
    return pd.Series({
        'steps': len(df),
        'ops_max': int(df.ops.max()),
        'ops_min': int(df.ops.min()),
        'ops_mean': float(df.ops.mean()),
        'delay_p50_ns': float(quantiles[0.5]),
        'delay_p90_ns': float(quantiles[0.9]),
        'delay_p99_ns': float(quantiles[0.99]),
    })
