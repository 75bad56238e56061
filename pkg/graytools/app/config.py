import os.path as osp

from graytools.exc import ParameterError
from graytools.loopless import MODES, resolve_mode
from graytools.settings import preprocess_threshold
from graytools.storage import FORMATS, LINES
from graytools.util import SlotsMixin
from graytools.words import AUTO, BASES, EVEN, ODD, SUPPORTS, VARIANTS, CycleSpec

COMMANDS = ('generate', 'verify', 'crosscheck', 'lambda', 'bench')


class RunConfig(SlotsMixin):
    """Everything one invocation of the command-line tool needs.

    Parameters
    ----------
    command : str
        One of :data:`COMMANDS`.
    p, n, k : int
    variant : str or None
        Cycle variant; None picks the maximum-length one for (p, n, k).
    base : str
        Base sequence for the ``h`` variant.
    mode : str
        Generation mode (``recursive``, ``cat``, ``loopless`` or ``auto``).
    format : str
        Stream format for ``generate``.
    limit : int or None
        Cap on the number of terms or steps.
    threshold : str or None
        Preprocessing threshold override (``1048576`` or ``2**20``).
    output : str or None
        Output file; None writes to stdout.
    input : str or None
        Words to verify; None reads stdin.
    parity : str
        Parity class for p = 2 and even k.
    at_most : bool
        Check distances between 1 and k instead of exactly k.
    support : str or None
        Support checked by ``verify``; defaults to the one of the spec.
    bruteforce : bool
        Confirm ``lambda`` by exhaustive search.
    json : bool
        Print reports as JSON.

    """
    __slots__ = ('command', 'p', 'n', 'k', 'variant', 'base', 'mode', 'format',
                 'limit', 'threshold', 'output', 'input', 'parity', 'at_most',
                 'support', 'bruteforce', 'json')

    def __init__(self, command, p, n, k, variant=None, base=AUTO, mode=AUTO,
                 format=LINES, limit=None, threshold=None, output=None, input=None,
                 parity=EVEN, at_most=False, support=None, bruteforce=False, json=False):
        self.command = command
        self.p = p
        self.n = n
        self.k = k
        self.variant = variant
        self.base = base
        self.mode = mode
        self.format = format
        self.limit = limit
        self.threshold = threshold
        self.output = output
        self.input = input
        self.parity = parity
        self.at_most = at_most
        self.support = support
        self.bruteforce = bruteforce
        self.json = json

    @classmethod
    def from_args(cls, args):
        """Create a config from a parsed :class:`argparse.Namespace`."""
        kwargs = {
            slot: getattr(args, slot)
            for slot in cls.__slots__
            if hasattr(args, slot)
        }
        return cls(**kwargs)

    def spec(self):
        """The :class:`CycleSpec` these parameters describe."""
        if self.variant is None:
            return CycleSpec.for_parameters(self.p, self.n, self.k, self.parity, self.base)
        return CycleSpec(self.p, self.n, self.k, self.variant, base=self.base)

    def validate(self):
        """Check option values and their consistency.

        Raises
        ------
        ParameterError

        """
        if self.command not in COMMANDS:
            raise ParameterError("unknown command {!r}".format(self.command))
        choices = (
            ('variant', VARIANTS + (None,)),
            ('base', BASES),
            ('mode', MODES),
            ('format', FORMATS),
            ('parity', (EVEN, ODD)),
            ('support', SUPPORTS + (None,)),
        )
        for name, allowed in choices:
            if getattr(self, name) not in allowed:
                raise ParameterError("invalid {}: {!r}".format(name, getattr(self, name)))
        if self.limit is not None and self.limit < 0:
            raise ParameterError("limit must be non-negative")
        if self.input is not None and not osp.exists(self.input):
            raise ParameterError("no such file: {}".format(self.input))
        preprocess_threshold(self.threshold)
        self.spec()
        return self

    def resolved_mode(self):
        """The generation mode with ``auto`` resolved against the threshold."""
        return resolve_mode(self.spec(), self.mode, self.threshold)
