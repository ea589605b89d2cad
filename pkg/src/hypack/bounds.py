"""Packing-radius bounds for k equal disks on a hyperbolic surface.

The central object is the strictly decreasing function

    f_k(r) = (6 - (6*chi + 3*n)/k) * alpha(r) + (2*n/k) * beta(r)

whose unique root of f_k(r) = 2*pi is the packing-radius bound for k disks
on an n-cusped surface of Euler characteristic chi. The naive (area) bound
and the Voronoi-cell bound for closed surfaces are provided for comparison,
together with the exact vertex-count arithmetic and an attainability
classification.
"""

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from hypack import hyptrig

DEFAULT_TOLERANCE = 1e-12
_TOLERANCE_ENV = "HYPACK_TOLERANCE"

_BRACKET_LO = 1e-9
_BRACKET_HI = 50.0


def solver_tolerance() -> float:
    """Relative root tolerance, overridable via HYPACK_TOLERANCE."""
    raw = os.environ.get(_TOLERANCE_ENV)
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        tol = float(raw)
    except ValueError as exc:
        raise ValueError(f"{_TOLERANCE_ENV} must be a float, got {raw!r}") from exc
    if not 0 < tol < 1e-2:
        raise ValueError(f"{_TOLERANCE_ENV} out of range: {tol}")
    return tol


class Attainability(enum.Enum):
    ATTAINED_BY_CONSTRUCTION = "AttainedByConstruction"
    NOT_ATTAINED = "NotAttained"
    NECESSARY_CONDITION_FAILS = "NecessaryConditionFails"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SurfaceSignature:
    """Topological type (chi, n) of a complete finite-area surface.

    chi < 0 and n >= 0, with the constraint that some closed surface of
    Euler characteristic chi + n exists: chi + n <= 2, where chi + n = 2
    forces the orientable (sphere) case and chi + n <= 1 always admits a
    non-orientable one.
    """

    chi: int
    n: int

    def __post_init__(self):
        if not isinstance(self.chi, int) or not isinstance(self.n, int):
            raise TypeError("chi and n must be integers")
        if self.chi >= 0:
            raise ValueError(f"chi must be negative, got {self.chi}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if not (self.admits_orientable() or self.admits_nonorientable()):
            raise ValueError(
                f"no surface with chi={self.chi} and n={self.n} cusps exists"
            )

    def admits_orientable(self) -> bool:
        closed = self.chi + self.n
        return closed <= 2 and closed % 2 == 0

    def admits_nonorientable(self) -> bool:
        return self.chi + self.n <= 1

    def orientable_genus(self) -> int:
        if not self.admits_orientable():
            raise ValueError(f"{self} admits no orientable surface")
        return (2 - (self.chi + self.n)) // 2

    def nonorientable_genus(self) -> int:
        if not self.admits_nonorientable():
            raise ValueError(f"{self} admits no non-orientable surface")
        return 2 - (self.chi + self.n)


@dataclass(frozen=True)
class BoundReport:
    """The three radius bounds and vertex arithmetic for one (chi, n, k)."""

    signature: SurfaceSignature
    k: int
    r_vor: float
    r_boroczky: float
    r_naive: float
    i: Fraction
    j: Fraction
    attainability: Attainability

    @property
    def integral(self) -> bool:
        """True when (i, j) are integers, i.e. k | 6*chi and k | n."""
        return self.i.denominator == 1 and self.j.denominator == 1


def _check_k(k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return k


def f_k(r: float, sig: SurfaceSignature, k: int) -> float:
    """Total angle (6 - (6chi+3n)/k)*alpha(r) + (2n/k)*beta(r) at radius r."""
    _check_k(k)
    if r <= 0:
        raise ValueError(f"r must be > 0, got {r}")
    a_coeff = 6.0 - (6.0 * sig.chi + 3.0 * sig.n) / k
    b_coeff = 2.0 * sig.n / k
    return a_coeff * hyptrig.alpha(r) + b_coeff * hyptrig.beta(r)


def _bisect_secant(func, lo: float, hi: float, tol: float) -> float:
    """Root of a strictly decreasing func on [lo, hi] with func(lo) > 0 >
    func(hi): bisection to a safe interval, then secant polish."""
    flo, fhi = func(lo), func(hi)
    if flo <= 0 or fhi >= 0:
        raise ValueError("root not bracketed")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fmid = func(mid)
        if fmid > 0:
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
        if hi - lo < 1e-6 * max(1.0, hi):
            break
    x0, x1 = lo, hi
    f0, f1 = flo, fhi
    for _ in range(60):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        if not lo <= x2 <= hi:
            x2 = 0.5 * (lo + hi)
        f2 = func(x2)
        if abs(f2) <= tol:
            return x2
        if f2 > 0:
            lo = x2
        else:
            hi = x2
        x0, f0, x1, f1 = x1, f1, x2, f2
    return x1


def solve_vor(sig: SurfaceSignature, k: int, tol: float | None = None) -> float:
    """Radius bound: the unique r > 0 with f_k(r) = 2*pi.

    For n = 0 the equation inverts in closed form through alpha; otherwise a
    bracketed bisection-plus-secant solve is used. f_k(0+) = 2*pi*(1 - chi/k)
    > 2*pi, so the root always exists and is unique by monotonicity.
    """
    _check_k(k)
    if tol is None:
        tol = solver_tolerance()
    if sig.n == 0:
        return hyptrig.inv_alpha(2.0 * math.pi / (6.0 - 6.0 * sig.chi / k))
    target = 2.0 * math.pi
    return _bisect_secant(
        lambda r: f_k(r, sig, k) - target, _BRACKET_LO, _BRACKET_HI, tol * target
    )


def solve_vor_bisection(sig: SurfaceSignature, k: int, tol: float = 1e-13) -> float:
    """Pure-bisection oracle for solve_vor; independent of the secant path
    and of the closed-form n = 0 inversion."""
    _check_k(k)
    lo, hi = _BRACKET_LO, _BRACKET_HI
    target = 2.0 * math.pi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f_k(mid, sig, k) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def naive_bound(chi: int, k: int) -> float:
    """Area bound: cosh(r) = 1 - chi/k."""
    _check_k(k)
    if chi >= 0:
        raise ValueError(f"chi must be negative, got {chi}")
    return math.acosh(1.0 - chi / k)


def boroczky_bound(chi: int, k: int) -> float:
    """Voronoi-cell density bound for closed surfaces; equals the n = 0 case
    of solve_vor: alpha(r) = 2*pi/(6 - 6*chi/k)."""
    _check_k(k)
    if chi >= 0:
        raise ValueError(f"chi must be negative, got {chi}")
    return hyptrig.inv_alpha(2.0 * math.pi / (6.0 - 6.0 * chi / k))


def valences(sig: SurfaceSignature, k: int) -> tuple[Fraction, Fraction]:
    """Exact per-vertex triangle counts (i, j) = (6 - (6chi+3n)/k, 2n/k).

    i counts equilateral (compact) corners and j horocyclic corners at each
    disk center of an extremal decomposition; they are integers exactly when
    k divides both 6*chi and n.
    """
    _check_k(k)
    i = 6 - Fraction(6 * sig.chi + 3 * sig.n, k)
    j = Fraction(2 * sig.n, k)
    return i, j


def divisibility_holds(sig: SurfaceSignature, k: int) -> bool:
    """True when k divides both 6*chi and n."""
    _check_k(k)
    return (6 * sig.chi) % k == 0 and sig.n % k == 0


def attainability(sig: SurfaceSignature, k: int) -> Attainability:
    """Classify whether the bound solve_vor(sig, k) is attained.

    Attained when k divides both 6*chi and n. For closed signatures the
    divisibility is also necessary. For n > 0 and k > n, a disk center meets
    equilateral corners only, so alpha(r) must be 2*pi/m for an integer m;
    failing that necessary condition rules attainment out. Remaining cases
    are open.
    """
    _check_k(k)
    if divisibility_holds(sig, k):
        return Attainability.ATTAINED_BY_CONSTRUCTION
    if sig.n == 0:
        return Attainability.NOT_ATTAINED
    if k > sig.n:
        a = hyptrig.alpha(solve_vor(sig, k))
        m = round(2.0 * math.pi / a)
        if m < 1 or abs(a - 2.0 * math.pi / m) > 1e-9:
            return Attainability.NECESSARY_CONDITION_FAILS
    return Attainability.UNKNOWN


def report(sig: SurfaceSignature, k: int) -> BoundReport:
    """Aggregate the three bounds, (i, j), and attainability for one case."""
    _check_k(k)
    i, j = valences(sig, k)
    return BoundReport(
        signature=sig,
        k=k,
        r_vor=solve_vor(sig, k),
        r_boroczky=boroczky_bound(sig.chi, k),
        r_naive=naive_bound(sig.chi, k),
        i=i,
        j=j,
        attainability=attainability(sig, k),
    )
