"""Closed-form hyperbolic trigonometry used throughout the package.

All angles are in radians and all lengths in intrinsic hyperbolic units
(curvature -1). Every function is a pure composition of standard
transcendentals; nothing here iterates.
"""

import math

# Two-dimensional Margulis constant, used only as an advisory guard in
# thick_radius. The formulas hold for any sufficiently small radius.
MARGULIS_2D = 0.962

# Universal lower bound on the maximal injectivity radius of a complete
# hyperbolic surface: asinh(2/sqrt(3)).
YAMADA_RADIUS = math.asinh(2.0 / math.sqrt(3.0))


def _check_finite(name: str, x: float) -> float:
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return float(x)


def alpha(r: float) -> float:
    """Vertex angle of an equilateral hyperbolic triangle with sides 2r.

    alpha(r) = 2*asin(1/(2*cosh r)); strictly decreasing, alpha(0) = pi/3.
    """
    r = _check_finite("r", r)
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return 2.0 * math.asin(1.0 / (2.0 * math.cosh(r)))


def beta(r: float) -> float:
    """Angle at either finite vertex of a horocyclic ideal triangle whose
    compact side has length 2r.

    beta(r) = asin(1/cosh r); strictly decreasing, beta(0) = pi/2.
    """
    r = _check_finite("r", r)
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return math.asin(1.0 / math.cosh(r))


def inv_alpha(a: float) -> float:
    """Radius with equilateral vertex angle a; inverse of alpha on (0, pi/3]."""
    a = _check_finite("a", a)
    if not 0.0 < a <= math.pi / 3.0 + 1e-15:
        raise ValueError(f"angle must lie in (0, pi/3], got {a}")
    c = 1.0 / (2.0 * math.sin(a / 2.0))
    return math.acosh(max(c, 1.0))


def inv_beta(b: float) -> float:
    """Radius with horocyclic vertex angle b; inverse of beta on (0, pi/2]."""
    b = _check_finite("b", b)
    if not 0.0 < b <= math.pi / 2.0 + 1e-15:
        raise ValueError(f"angle must lie in (0, pi/2], got {b}")
    c = 1.0 / math.sin(b)
    return math.acosh(max(c, 1.0))


def triangle_areas(r: float) -> tuple[float, float]:
    """Areas (equilateral, horocyclic) of the two triangle types with compact
    side length 2r, by the angle-deficit formula.

    equilateral = pi - 3*alpha(r), horocyclic = pi - 2*beta(r). The horocyclic
    area strictly exceeds the equilateral one because 2*beta(r) < 3*alpha(r)
    for every r > 0.
    """
    r = _check_finite("r", r)
    if r <= 0:
        raise ValueError(f"r must be > 0, got {r}")
    return math.pi - 3.0 * alpha(r), math.pi - 2.0 * beta(r)


def disk_area(r: float) -> float:
    """Area of a hyperbolic disk of radius r: 2*pi*(cosh r - 1)."""
    r = _check_finite("r", r)
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return 2.0 * math.pi * (math.cosh(r) - 1.0)


def surface_area(chi: int) -> float:
    """Area of a complete finite-area hyperbolic surface, -2*pi*chi."""
    if chi >= 0:
        raise ValueError(f"Euler characteristic must be negative, got {chi}")
    return -2.0 * math.pi * chi


def thick_radius(r: float) -> float:
    """Injectivity-radius guarantee r' = asinh((1 - e^(-2r))/2) for the
    r-neighborhood of the r-thick part.

    Requires 0 < r < MARGULIS_2D; satisfies 0 < r' < r with r'/r -> 1 as
    r -> 0.
    """
    r = _check_finite("r", r)
    if not 0.0 < r < MARGULIS_2D:
        raise ValueError(f"r must lie in (0, {MARGULIS_2D}), got {r}")
    return math.asinh(0.5 * (1.0 - math.exp(-2.0 * r)))


def quad_loop_length(delta: float, h: float) -> float:
    """Length of the fourth side of a quadrilateral with base delta and two
    sides of length h meeting it at right angles.

    sinh(l/2) = cosh(h) * sinh(delta/2); equals delta exactly when h = 0.
    """
    delta = _check_finite("delta", delta)
    h = _check_finite("h", h)
    if delta <= 0:
        raise ValueError(f"delta must be > 0, got {delta}")
    if h < 0:
        raise ValueError(f"h must be >= 0, got {h}")
    return 2.0 * math.asinh(math.cosh(h) * math.sinh(delta / 2.0))
