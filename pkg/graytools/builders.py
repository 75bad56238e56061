"""Materialize maximum-length sigma_k-Gray cycles by induction on k.

Every construction starts from a base sequence over words of length
``n0 = n - k + 1`` and lengthens the words one (p >= 3) or two (p = 2)
letters per level. Levels are built with whole-array numpy operations.

"""

import warnings

import numpy as np

from .codes import gamma_base, modular_pary, reflected_pary, rho_base, check_size
from .exc import ParameterError
from .util import digit_dtype
from .words import (
    CycleSpec, GrayCycle, H, GAMMA, RHO, GAMMA_EVEN, GAMMA_EVEN_ODDPART,
    TRIVIAL_BINARY, AUTO, REFLECTED, EVEN, ODD,
)

# Two-letter prefixes of the four blocks of the lifted gamma and rho.
_GAMMA_PREFIXES = np.array([[0, 0], [0, 1], [1, 1], [1, 0]], dtype=np.uint8)
_RHO_PREFIXES = np.array([[1, 0], [1, 1], [0, 1], [0, 0]], dtype=np.uint8)


class BuilderOutput(object):
    """Result of a construction.

    Parameters
    ----------
    cycle : GrayCycle
    companion : GrayCycle or None
        The rho cycle when gamma is built (and vice versa); both come out of
        the same induction.

    """
    def __init__(self, cycle, companion=None):
        self.cycle = cycle
        self.companion = companion

    def __repr__(self):
        return 'BuilderOutput(cycle={!r}, companion={!r})'.format(self.cycle, self.companion)


def build_h(p, n, k, base=AUTO):
    """Build ``h^{n,k}`` for an alphabet of size p >= 3.

    Term ``i = q p^{n-1} + r`` is the letter ``q + r mod p`` followed by
    term ``r`` of the cycle one level down.

    Parameters
    ----------
    p, n, k : int
    base : str
        ``reflected``, ``modular`` or ``auto``; see :class:`CycleSpec`.

    Returns
    -------
    BuilderOutput

    """
    spec = CycleSpec(p, n, k, H, base=base)
    check_size(p ** n)
    n0 = spec.n0

    if spec.resolved_base == REFLECTED:
        if p % 2 and n0 >= 2:
            warnings.warn("the reflected base over words of length {} is not cyclic "
                          "for p = {}; the result is not a Gray cycle".format(n0, p),
                          RuntimeWarning)
        seq = reflected_pary(p, n0).seq
    else:
        seq = modular_pary(p, n0).seq

    dtype = digit_dtype(p)
    for m in range(n0 + 1, n + 1):
        size = p ** (m - 1)
        i = np.arange(p ** m, dtype=np.int64)
        q, r = np.divmod(i, size)
        lead = ((q + r) % p).astype(dtype)
        seq = np.hstack([lead[:, np.newaxis], seq[r]])

    return BuilderOutput(GrayCycle(spec, seq))


def gamma_rho_levels(n, k):
    """Yield ``(m, j, gamma, rho)`` for every level of the binary odd-k
    induction, from ``(n0, 1)`` up to ``(n, k)``.

    """
    CycleSpec(2, n, k, GAMMA)
    check_size(2 ** n)
    m, j = n - k + 1, 1
    gamma = gamma_base(m).seq
    rho = rho_base(m).seq
    yield m, j, gamma, rho

    while m < n:
        size = 2 ** m
        i = np.arange(4 * size, dtype=np.int64)
        q, r = np.divmod(i, size)
        twist = (r & 1).astype(np.uint8)[:, np.newaxis]
        lower = np.where((q % 2 == 0)[:, np.newaxis], gamma[r], rho[r])
        gamma = np.hstack([_GAMMA_PREFIXES[q] ^ twist, lower])
        rho = np.hstack([_RHO_PREFIXES[q] ^ twist, lower])
        m, j = m + 2, j + 2
        yield m, j, gamma, rho


def build_gamma_rho_odd(n, k):
    """Build the pair ``gamma^{n,k}``, ``rho^{n,k}`` over the binary alphabet
    for odd k and n >= k + 1.

    Returns
    -------
    BuilderOutput
        ``cycle`` is gamma, ``companion`` is rho.

    """
    for _, _, gamma, rho in gamma_rho_levels(n, k):
        pass
    return BuilderOutput(GrayCycle(CycleSpec(2, n, k, GAMMA), gamma),
                         GrayCycle(CycleSpec(2, n, k, RHO), rho))


def build_gamma_even(n, k, parity=EVEN):
    """Build a maximum-length cycle over one parity class of the binary words,
    for even k and n >= k + 1.

    The leading letter alternates (starting from 0 for ``even``, 1 for
    ``odd``) in front of ``gamma^{n-1,k-1}``.

    """
    if parity == EVEN:
        variant, start = GAMMA_EVEN, 0
    elif parity == ODD:
        variant, start = GAMMA_EVEN_ODDPART, 1
    else:
        raise ParameterError("parity must be 'even' or 'odd', got {!r}".format(parity))
    spec = CycleSpec(2, n, k, variant)
    inner = build_gamma_rho_odd(n - 1, k - 1).cycle.terms
    lead = ((np.arange(len(inner)) + start) & 1).astype(np.uint8)
    return BuilderOutput(GrayCycle(spec, np.hstack([lead[:, np.newaxis], inner])))


def build_trivial_binary(k):
    """The two-term cycle ``(0^k, 1^k)``."""
    spec = CycleSpec(2, k, k, TRIVIAL_BINARY)
    terms = np.array([[0] * k, [1] * k], dtype=np.uint8)
    return BuilderOutput(GrayCycle(spec, terms))


def build(spec):
    """Build the cycle described by a :class:`CycleSpec`."""
    if spec.variant == H:
        return build_h(spec.p, spec.n, spec.k, base=spec.base)
    elif spec.variant == GAMMA:
        return build_gamma_rho_odd(spec.n, spec.k)
    elif spec.variant == RHO:
        out = build_gamma_rho_odd(spec.n, spec.k)
        return BuilderOutput(out.companion, out.cycle)
    elif spec.variant == GAMMA_EVEN:
        return build_gamma_even(spec.n, spec.k, EVEN)
    elif spec.variant == GAMMA_EVEN_ODDPART:
        return build_gamma_even(spec.n, spec.k, ODD)
    return build_trivial_binary(spec.k)
