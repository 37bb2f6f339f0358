"""Safe-covalency bounds and the spectral exceptional-prime test.

The trivial bound l0 = floor(4 sqrt(m)) - 2 guarantees the Ramanujan property
for every covalency up to it.  Whether covalency l0 + 1 is still safe for the
restricted family (y-coset not full) is decided by a single closed-form
eigenvalue, evaluated at the maximizing covalency split; primes where it
stays under the Ramanujan bound are the "exceptional" ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import mpmath

from . import spectra
from .subsets import FAMILY_ALL, enumerate_family

# Index of the split-shift table is the covalency mod 6.
SPLIT_SHIFT = {0: 0, 1: 2, 2: 4, 3: 0, 4: 2, 5: -2}

EXACT_SCAN_MAX_M = 12
SPECTRAL_MIN_PRIME = 67
_MP_DPS = 50
_NEAR_ZERO = 1e-9


@dataclass(frozen=True)
class SplitProfile:
    """The covalency split (l1, l2) maximizing the closed-form eigenvalue."""

    l: int
    residue: int    # l mod 6
    shift: int      # table entry for that residue
    l1: int
    l2: int


@dataclass(frozen=True)
class ExceptionalVerdict:
    p: int
    l0: int
    route: str                       # "spectral" or "arithmetic"
    exceptional: bool
    witness: Optional[dict] = None


def trivial_bound(m: int) -> int:
    """floor(4 sqrt(m)) - 2, in exact integer arithmetic."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return math.isqrt(16 * m) - 2


def ramanujan_bound_at(m: int, l: int) -> float:
    """Ramanujan bound shared by every subset of covalency l: 2 sqrt(4m-l-1)."""
    return 2.0 * math.sqrt(4 * m - l - 1)


def exact_safe_covalency(m: int, family: str = FAMILY_ALL) -> int:
    """Largest covalency below which every family member is Ramanujan.

    Exhaustive: enumerates every generating subset at covalencies 1, 2, ...
    and stops at the first covalency carrying a non-Ramanujan graph; returns
    the largest achievable covalency before it.  Empty covalencies are
    vacuously safe.  Feasible only for small m, hence the hard cap.
    """
    if m > EXACT_SCAN_MAX_M:
        raise ValueError(f"exhaustive scan capped at m <= {EXACT_SCAN_MAX_M}, got {m}")
    last_achievable = 0
    for l in range(1, 4 * m):
        empty = True
        for subset in enumerate_family(m, l, family):
            empty = False
            if not spectra.is_ramanujan(subset):
                return last_achievable
        if not empty:
            last_achievable = l
    return last_achievable


def extremal_mu2(m: int, l1: int, l2: int) -> float:
    """Closed form for the frequency-2 eigenvalue magnitude of the extremal subset.

    With d = parity of l1 + l2:

        |sin(pi (l1 - 1 + d) / m) / sin(pi / m) + (1 - d)|
        + 2 sin(pi l2 / (2m)) / sin(pi / m)

    The outer absolute value only matters for window sizes comparable to m
    (where the centered window's cosine sum goes negative); in the small-l
    regime the first term is positive as-is.  Agrees with
    mu_abs(extremal_subset(m, l1, l2), 2) whenever the removed windows fit
    inside the group.
    """
    _validate_split(m, l1, l2)
    delta = (l1 + l2) % 2
    s = math.sin(math.pi / m)
    return (
        abs(math.sin(math.pi * (l1 - 1 + delta) / m) / s + (1 - delta))
        + 2.0 * math.sin(math.pi * l2 / (2 * m)) / s
    )


def _extremal_mu2_mp(m, l1, l2):
    delta = (l1 + l2) % 2
    s = mpmath.sin(mpmath.pi / m)
    return (
        abs(mpmath.sin(mpmath.pi * (l1 - 1 + delta) / m) / s + (1 - delta))
        + 2 * mpmath.sin(mpmath.pi * l2 / (2 * m)) / s
    )


def _validate_split(m: int, l1: int, l2: int) -> None:
    if l2 <= 0 or l2 % 2 or l2 >= 2 * m:
        raise ValueError(f"l2 must be even with 0 < l2 < 2m, got l2={l2}, m={m}")
    if not 0 < l1 <= 2 * m:
        raise ValueError(f"l1 must satisfy 0 < l1 <= 2m, got l1={l1}, m={m}")
    delta = (l1 + l2) % 2
    if (l1 - 2 + delta) // 2 > m - 1 or l2 // 2 > m:
        raise ValueError(f"removal windows for (l1, l2)=({l1}, {l2}) do not fit in m={m}")


def maximizing_split(l: int) -> SplitProfile:
    """The (l1, l2) split at which the closed-form eigenvalue peaks.

    Determined by l mod 6 through a fixed shift table:
    (l1, l2) = ((l + shift) / 3, (2l - shift) / 3).
    """
    if l < 3:
        raise ValueError(f"no admissible split with positive l2 exists for l={l}")
    r = l % 6
    a = SPLIT_SHIFT[r]
    l1, rem1 = divmod(l + a, 3)
    if rem1:
        raise AssertionError(f"shift table broken for l={l}")
    return SplitProfile(l, r, a, l1, (2 * l - a) // 3)


def critical_lambda(p: int) -> float:
    """Largest non-trivial eigenvalue over the restricted family at covalency l0+1.

    Only established for odd primes p >= 67; below that an error is raised
    rather than guessing.
    """
    _check_spectral_scope(p)
    split = maximizing_split(trivial_bound(p) + 1)
    return extremal_mu2(p, split.l1, split.l2)


def _check_spectral_scope(p: int) -> None:
    from .primes import is_prime

    if p < SPECTRAL_MIN_PRIME:
        raise ValueError(
            f"spectral classification is out of theorem scope for p={p} "
            f"(requires p >= {SPECTRAL_MIN_PRIME})"
        )
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def is_exceptional_spectral(p: int) -> ExceptionalVerdict:
    """Classify p by comparing the critical eigenvalue against the Ramanujan bound.

    p is exceptional iff the peak eigenvalue at covalency l0 + 1 still sits
    at or below 2 sqrt(4p - l0 - 2).  Margins tighter than 1e-6 are resolved
    in extended precision.
    """
    _check_spectral_scope(p)
    l0 = trivial_bound(p)
    l = l0 + 1
    split = maximizing_split(l)
    lam = extremal_mu2(p, split.l1, split.l2)
    bound = ramanujan_bound_at(p, l)
    margin = lam - bound
    if abs(margin) < spectra.NEAR_TIE_MARGIN:
        with mpmath.workdps(_MP_DPS):
            margin_mp = _extremal_mu2_mp(p, split.l1, split.l2) - 2 * mpmath.sqrt(4 * p - l - 1)
            exceptional = bool(margin_mp <= 0)
    else:
        exceptional = margin <= 0
    witness = {
        "l1": split.l1,
        "l2": split.l2,
        "mu2_abs": lam,
        "ramanujan_bound": bound,
    }
    return ExceptionalVerdict(p, l0, "spectral", exceptional, witness)


# -- the interpolating gap function ------------------------------------------


def interpolated_gap(r: int, c: int, k: int, use_mp: bool = False) -> float:
    """Peak eigenvalue minus Ramanujan bound, interpolated along one family.

    Evaluated at t = 36 k^2 + 3 (r + 3) k + c with covalency l = 24 k + r + 1
    and the maximizing split for that l.  Its sign matches the sign of the
    exceptionality margin whenever t is prime.
    """
    if not 0 <= r <= 23:
        raise ValueError(f"family residue r must be in [0, 23], got {r}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    t = 36 * k * k + 3 * (r + 3) * k + c
    l = 24 * k + r + 1
    sp = maximizing_split(l)
    if use_mp:
        with mpmath.workdps(_MP_DPS):
            s = mpmath.sin(mpmath.pi / t)
            delta = l % 2
            val = (
                mpmath.sin(mpmath.pi * (sp.l1 - 1 + delta) / t) / s
                + (1 - delta)
                + 2 * mpmath.sin(mpmath.pi * sp.l2 / (2 * t)) / s
                - 2 * mpmath.sqrt(4 * t - l - 1)
            )
            return float(val)
    delta = l % 2
    s = math.sin(math.pi / t)
    return (
        math.sin(math.pi * (sp.l1 - 1 + delta) / t) / s
        + (1 - delta)
        + 2.0 * math.sin(math.pi * sp.l2 / (2 * t)) / s
        - 2.0 * math.sqrt(4 * t - l - 1)
    )


def interpolated_gap_sign(r: int, c: int, k: int) -> int:
    """Robust sign of the interpolated gap; near-zero values are re-evaluated."""
    g = interpolated_gap(r, c, k)
    if abs(g) < _NEAR_ZERO:
        g = interpolated_gap(r, c, k, use_mp=True)
    if g > 0:
        return 1
    if g < 0:
        return -1
    return 0


def asymptotic_coefficient(r: int, c: int) -> float:
    """Limit of k * gap along the family: (27 (r+3)^2 - 432 c - 256 pi^2) / 1296."""
    return (27 * (r + 3) ** 2 - 432 * c - 256 * math.pi**2) / 1296.0
