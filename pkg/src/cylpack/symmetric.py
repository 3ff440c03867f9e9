"""The mirror-symmetric six-line family and its closed distance forms.

Six tangent lines in two latitude triples: the upper triple rides at
latitude phi with longitudes pi/6, 5pi/6, 3pi/2 advanced by kappa, the
lower triple at -phi with longitudes pi/2, 7pi/6, 11pi/6 retarded by
kappa, and every tangent is tilted off its meridian by the same angle
delta.  The family is invariant under the 120-degree rotation about the
z-axis and the half-turn about the x-axis, so the 15 pairwise distances
collapse to four orbit values: d_AB (within a triple), d_AD and d_BD
(between neighboring lines of opposite triples), and d_AE (the remaining
cross pairs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lines import (
    Configuration,
    DegenerateError,
    SphericalPoint,
    distance_sq,
    make_tangent_line,
    rotate_line,
    rotation_matrix,
)

SQRT3 = math.sqrt(3.0)

_UPPER_LON = (math.pi / 6, 5 * math.pi / 6, 3 * math.pi / 2)
_LOWER_LON = (math.pi / 2, 7 * math.pi / 6, 11 * math.pi / 6)

# pair index orbits under the symmetry group, lines ordered A..F = 0..5
PAIR_ORBITS = {
    "ab": ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)),
    "ad": ((0, 3), (1, 4), (2, 5)),
    "bd": ((1, 3), (2, 4), (0, 5)),
    "ae": ((0, 4), (1, 5), (2, 3)),
}

# below this denominator size a closed form is treated as degenerate
_DEGEN_TOL = 1e-12
# the cross-pair denominator 4(1 - nu^2) subtracts two O(1) quantities,
# so it carries absolute rounding error near 4e-16 no matter how small it
# is; below this size the closed form has lost more than five digits and
# the generic evaluation of the built pair is the more accurate one
_NEAR_PARALLEL_TOL = 1e-4


@dataclass(frozen=True)
class D3Params:
    """Angles (phi, delta, kappa) of the symmetric family.

    phi in (-pi/2, pi/2) tilts the two latitude circles apart, delta
    swings every tangent off its meridian (positive delta turns them
    toward decreasing longitude), kappa counter-rotates the triples.
    """

    phi: float
    delta: float
    kappa: float

    def __post_init__(self):
        for name in ("phi", "delta", "kappa"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if abs(self.phi) >= math.pi / 2:
            raise ValueError(f"latitude tilt out of range: {self.phi!r}")


def c6_chart(p: D3Params) -> tuple:
    """Per-line (latitude, longitude, tangent angle) triples, order A..F.

    The tangent angle is passed to make_tangent_line, whose positive
    sense is toward increasing longitude; the family's delta tilts the
    other way, hence -delta for all six lines.
    """
    upper = [(p.phi, lon + p.kappa, -p.delta) for lon in _UPPER_LON]
    lower = [(-p.phi, lon - p.kappa, -p.delta) for lon in _LOWER_LON]
    return tuple(upper + lower)


def build_c6(p: D3Params) -> Configuration:
    """The six tangent lines (A, B, C, D, E, F) of the symmetric family."""
    return Configuration(
        tuple(
            make_tangent_line(SphericalPoint(lat, lon), ang)
            for lat, lon, ang in c6_chart(p)
        )
    )


def d3_orbit_check(c: Configuration, tol: float = 1e-10) -> bool:
    """Whether a six-line configuration has the family's symmetry.

    Checks that the 120-degree rotation about z permutes the lines as
    (A,B,C,D,E,F) -> (B,C,A,E,F,D) and that the half-turn about x maps
    the line set onto itself.
    """
    if len(c) != 6:
        raise ValueError("orbit check needs exactly 6 lines")
    rz = rotation_matrix([0.0, 0.0, 1.0], 2 * math.pi / 3)
    perm = (1, 2, 0, 4, 5, 3)
    for i in range(6):
        if not rotate_line(c[i], rz).same_line_as(c[perm[i]], tol):
            return False
    rx = rotation_matrix([1.0, 0.0, 0.0], math.pi)
    for i in range(6):
        image = rotate_line(c[i], rx)
        if not any(image.same_line_as(c[j], tol) for j in range(6)):
            return False
    return True


@dataclass(frozen=True)
class AlgCoords:
    """Rational coordinates (S, T, U, Ubar) of the family.

    S = sin(phi), T = tan(delta), U = tan(kappa - pi/6),
    Ubar = -tan(kappa + pi/6).  U and Ubar derived from one kappa are
    Moebius-linked: -sqrt(3) U Ubar + U + Ubar + sqrt(3) = 0.
    """

    s_var: float
    t_var: float
    u_var: float
    ubar_var: float

    def __post_init__(self):
        for name in ("s_var", "t_var", "u_var", "ubar_var"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if abs(self.s_var) > 1.0:
            raise ValueError(f"S must lie in [-1, 1]: {self.s_var!r}")
        u, ub = self.u_var, self.ubar_var
        residual = -SQRT3 * u * ub + u + ub + SQRT3
        scale = 1.0 + abs(u) + abs(ub) + abs(u * ub)
        if abs(residual) > 1e-9 * scale:
            raise ValueError(
                f"U and Ubar do not come from a common kappa, residual {residual!r}"
            )


def alg_coords(p: D3Params) -> AlgCoords:
    """Coordinates (S, T, U, Ubar) of the family at given angles.

    Raises DegenerateError where a tangent hits a pole of its defining
    tangent function (delta = +-pi/2, kappa - pi/6 or kappa + pi/6 an odd
    multiple of pi/2).
    """
    if abs(math.cos(p.delta)) < 1e-15:
        raise DegenerateError("tan(delta) undefined: delta at a right angle")
    for arg, label in ((p.kappa - math.pi / 6, "kappa - pi/6"), (p.kappa + math.pi / 6, "kappa + pi/6")):
        if abs(math.cos(arg)) < 1e-15:
            raise DegenerateError(f"tan({label}) undefined")
    return AlgCoords(
        math.sin(p.phi),
        math.tan(p.delta),
        math.tan(p.kappa - math.pi / 6),
        -math.tan(p.kappa + math.pi / 6),
    )


def triplets_alg(a: AlgCoords) -> tuple:
    """(d_AB^2, d_AD^2, d_BD^2) from the rational coordinate forms.

    d_AB^2 degenerates to 0/0 at S = T = 0, where its limit along the
    delta direction, the value 3 of the initial configuration's skew
    pairs, is returned.
    """
    s, t, u, ub = a.s_var, a.t_var, a.u_var, a.ubar_var
    s2, t2 = s * s, t * t
    st = s2 + t2
    if st < 1e-30:
        dab = 3.0
    else:
        dab = 12.0 * t2 * (1.0 - s2) ** 2 / ((4.0 - 3.0 * s2 + t2) * st)
    dad = 4.0 * (t * s + u) ** 2 / (1.0 + u * u + t2 - s2 + 2.0 * s * t * u)
    dbd = 4.0 * (-t * s + ub) ** 2 / (1.0 + ub * ub + t2 - s2 - 2.0 * s * t * ub)
    return (dab, dad, dbd)


@dataclass(frozen=True)
class DistanceTriplets:
    """Squared distances of the four pair orbits of the family."""

    dab_sq: float
    dad_sq: float
    dbd_sq: float
    dae_sq: float

    def __post_init__(self):
        for name in ("dab_sq", "dad_sq", "dbd_sq", "dae_sq"):
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v >= 0.0):
                raise ValueError(f"{name} must be a finite nonnegative number")
            object.__setattr__(self, name, v)


def _generic_orbit_value(p: D3Params, orbit: str) -> float:
    c = build_c6(p)
    i, j = PAIR_ORBITS[orbit][0]
    return distance_sq(c[i], c[j])


def triplets_trig(p: D3Params) -> DistanceTriplets:
    """Squared orbit distances from the closed trigonometric forms.

    Where a form degenerates to 0/0 (a parallel or intersecting pair,
    e.g. the initial configuration's d_AB) the generic distance on the
    built pair, which is the limit value, is substituted.
    """
    sd, cd = math.sin(p.delta), math.cos(p.delta)
    sp, cp = math.sin(p.phi), math.cos(p.phi)
    c2p = math.cos(2 * p.phi)
    s2d, c2d = math.sin(2 * p.delta), math.cos(2 * p.delta)

    den_ab = (6 * cd * cd * c2p + 3 * c2d + 7) * (cd * cd * sp * sp + sd * sd)
    if abs(den_ab) < _DEGEN_TOL:
        dab = _generic_orbit_value(p, "ab")
    else:
        dab = 48 * sd * sd * cd * cd * cp ** 4 / den_ab

    def cross_pair(arg: float) -> float:
        sa, ca = math.sin(arg), math.cos(arg)
        mu = s2d * (2 * cp * cp + (c2p - 3) * sa) + 4 * c2d * sp * ca
        nu = -sa * (sd * sd - cd * cd * sp * sp) + s2d * sp * ca - cd * cd * cp * cp
        den = 4 * (1 - nu * nu)
        if abs(den) < _NEAR_PARALLEL_TOL:
            return math.nan
        return mu * mu / den

    dad = cross_pair(2 * p.kappa + math.pi / 6)
    if math.isnan(dad):
        dad = _generic_orbit_value(p, "ad")
    dbd = cross_pair(2 * p.kappa + 5 * math.pi / 6)
    if math.isnan(dbd):
        dbd = _generic_orbit_value(p, "bd")

    sk, ck = math.sin(p.kappa), math.cos(p.kappa)
    mu_ae = 2 * (cd * ck - sd * sp * sk)
    nu_ae = cd * cd * cp * cp + (sd * sk - cd * sp * ck) ** 2
    if abs(nu_ae) < _DEGEN_TOL:
        dae = _generic_orbit_value(p, "ae")
    else:
        dae = mu_ae * mu_ae / nu_ae
    return DistanceTriplets(dab, dad, dbd, dae)


def triplets_generic(p: D3Params) -> DistanceTriplets:
    """Squared orbit distances from the generic skew-line distance on the
    built configuration (one representative pair per orbit)."""
    c = build_c6(p)
    values = []
    for orbit in ("ab", "ad", "bd", "ae"):
        i, j = PAIR_ORBITS[orbit][0]
        values.append(distance_sq(c[i], c[j]))
    return DistanceTriplets(*values)
