"""The equal-distance trajectory of the six-line family.

Requiring the three neighbor distance squares d_AB^2 = d_AD^2 = d_BD^2
of the symmetric family cuts out a curve in (phi, delta, kappa) space.
In the coordinates S = sin(phi), T = tan(delta), U = tan(kappa - pi/6)
the two differences reduce to polynomials K1 and K2; eliminating U
leaves one planar constraint psi(s, t) = 0 in s = S^2, t = T^2, and that
constraint factors so the curve is rational in the single parameter
x = cos^2(phi) cos^2(delta).  The common squared distance along the
curve is F(x) = 12x/(1 + 7x + 4x^2), maximized at x = 1/2 with value
12/11, which yields the cylinder radius (3 + sqrt(33))/8.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lines import (
    DegenerateError,
    distance_sq,
    min_pairwise_distance,
    radius_from_distance,
)
from .symmetric import AlgCoords, D3Params, build_c6, triplets_alg

SQRT3 = math.sqrt(3.0)


def k1(S: float, T: float, U: float) -> float:
    """First equal-distance polynomial; vanishes on the trajectory."""
    return -SQRT3 * U * U + 2.0 * U * (1.0 - SQRT3 * S * T) + 2.0 * S * T + SQRT3


def k2(S: float, T: float, U: float) -> float:
    """Second equal-distance polynomial; vanishes on the trajectory."""
    s2, t2 = S * S, T * T
    return (-4.0 * s2 + 3.0 * s2 * s2 - t2) * (U + S * T) ** 2 - 3.0 * t2 * (s2 - 1.0) ** 3


def u_from_st(S: float, T: float) -> float:
    """The counter-rotation coordinate U forced by the trajectory at (S, T).

    Solves the elimination of U from k1 = k2 = 0; valid on the trajectory
    away from its endpoint, where the denominator 4S^2 - 3S^4 + T^2
    vanishes and the constraint surface is singular.
    """
    s2, t2 = S * S, T * T
    den = 4.0 * s2 - 3.0 * s2 * s2 + t2
    if abs(den) < 1e-15:
        raise DegenerateError("trajectory coordinate U undefined at S = T = 0")
    return 0.5 * (
        -3.0 * SQRT3 * t2 * (s2 - 1.0) ** 3 / den - SQRT3 - 2.0 * S * T - SQRT3 * s2 * t2
    )


def psi(s, t):
    """Planar trajectory constraint in s = sin^2(phi), t = tan^2(delta).

    Exact for Fraction inputs; floats are summed with fsum.
    """
    terms = [
        4 * s,
        -8 * t,
        -3 * s * s,
        29 * s * t,
        -4 * t * t,
        -22 * s * s * t,
        14 * s * t * t,
        4 * s ** 3 * t,
        -7 * s * s * t * t,
        s * t ** 3,
    ]
    if isinstance(s, Fraction) or isinstance(t, Fraction):
        return sum(terms)
    return math.fsum(terms)


def t_of_x(x):
    """Solve psi = 0 for t at given x = (1 - s)/(t + 1):
    t = (1 + 3x)(1 - x) / (x (1 + 7x + 4x^2)).  Exact for Fractions."""
    if x <= 0:
        raise ValueError(f"trajectory parameter must be positive: {x!r}")
    if x > 1:
        raise ValueError(f"trajectory parameter must lie in (0, 1]: {x!r}")
    return (1 + 3 * x) * (1 - x) / (x * (1 + 7 * x + 4 * x * x))


def f_of_x(x):
    """Common squared neighbor distance along the trajectory:
    F(x) = 12x / (1 + 7x + 4x^2).  Exact for Fractions."""
    if x <= 0 or x > 1:
        raise ValueError(f"trajectory parameter must lie in (0, 1]: {x!r}")
    return 12 * x / (1 + 7 * x + 4 * x * x)


@dataclass(frozen=True)
class CurveSample:
    """One point of the trajectory.

    x is the curve parameter cos^2(phi) cos^2(delta); s_var and t_var are
    sin^2(phi) and tan^2(delta); S, T, U the coordinate values; params
    the angles of the sampled configuration; f_value the common squared
    neighbor distance F(x).
    """

    x: float
    s_var: float
    t_var: float
    S: float
    T: float
    U: float
    params: D3Params
    f_value: float


def _check_sample(sample: CurveSample) -> None:
    s, t = sample.s_var, sample.t_var
    if abs(psi(s, t)) > 1e-9:
        raise ArithmeticError(f"trajectory sample off the constraint: psi = {psi(s, t)!r}")
    if abs(sample.x - (1 - s) / (t + 1)) > 1e-10:
        raise ArithmeticError("trajectory sample breaks the x relation")
    if sample.x < 1.0:
        ubar = -math.tan(sample.params.kappa + math.pi / 6)
        dists = triplets_alg(AlgCoords(sample.S, sample.T, sample.U, ubar))
        for d in dists:
            if abs(d - sample.f_value) > 1e-9:
                raise ArithmeticError(
                    f"trajectory sample distances off F(x): {dists!r} vs {sample.f_value!r}"
                )


def gamma_point(x) -> CurveSample:
    """Sample the trajectory at parameter x in (0, 1].

    Branch: S >= 0 and T >= 0 (phi and delta nonnegative), kappa in
    (-pi/2, 0].  x = 1 is the initial configuration (0, 0, 0) exactly;
    there the within-triple pairs are parallel (d_AB^2 = 3) while the
    neighbor value F(1) = 1 is attained by the cross pairs only, so the
    three-way distance equality is checked for x < 1.
    """
    xf = float(x)
    if not 0.0 < xf <= 1.0:
        raise ValueError(f"trajectory parameter must lie in (0, 1]: {x!r}")
    if xf == 1.0:
        params = D3Params(0.0, 0.0, 0.0)
        return CurveSample(1.0, 0.0, 0.0, 0.0, 0.0, math.tan(-math.pi / 6), params, 1.0)
    q = 1.0 + 7.0 * xf + 4.0 * xf * xf
    S = 2.0 * math.sqrt((1.0 - xf) * xf * (1.0 + xf) / q)
    T = math.sqrt((1.0 - xf) * (1.0 + 3.0 * xf) / (xf * q))
    tan_kappa = (xf - 1.0) / math.sqrt((1.0 + xf) * (1.0 + 3.0 * xf))
    kappa = math.atan(tan_kappa)
    params = D3Params(math.asin(S), math.atan(T), kappa)
    sample = CurveSample(
        xf, S * S, T * T, S, T, math.tan(kappa - math.pi / 6), params, float(f_of_x(xf))
    )
    _check_sample(sample)
    return sample


@dataclass(frozen=True)
class RecordReport:
    """The maximizing trajectory point, computed and in closed form.

    Attributes hold the values computed through gamma_point and the
    built configuration; `closed` maps the same keys (without the _m
    suffix) to their closed-form evaluations.  Construction via record()
    verifies each pair agrees to 1e-12.
    """

    x_m: float
    s_m: float
    t_m: float
    phi_m: float
    tan_kappa_m: float
    f_m: float
    d_m: float
    dae_sq_m: float
    r_m: float
    closed: dict


def record() -> RecordReport:
    """The trajectory maximum x = 1/2 with its closed forms."""
    sample = gamma_point(0.5)
    p = sample.params
    c = build_c6(p)
    d = min_pairwise_distance(c)
    report = RecordReport(
        x_m=sample.x,
        s_m=sample.s_var,
        t_m=sample.t_var,
        phi_m=p.phi,
        tan_kappa_m=math.tan(p.kappa),
        f_m=sample.f_value,
        d_m=d,
        dae_sq_m=distance_sq(c[0], c[4]),
        r_m=radius_from_distance(d),
        closed={
            "x": 0.5,
            "s": 3.0 / 11.0,
            "t": 5.0 / 11.0,
            "phi": math.asin(math.sqrt(3.0 / 11.0)),
            "tan_kappa": -1.0 / math.sqrt(15.0),
            "f": 12.0 / 11.0,
            "d": math.sqrt(12.0 / 11.0),
            "dae_sq": 540.0 / 143.0,
            "r": (3.0 + math.sqrt(33.0)) / 8.0,
        },
    )
    computed = {
        "x": report.x_m,
        "s": report.s_m,
        "t": report.t_m,
        "phi": report.phi_m,
        "tan_kappa": report.tan_kappa_m,
        "f": report.f_m,
        "d": report.d_m,
        "dae_sq": report.dae_sq_m,
        "r": report.r_m,
    }
    for key, value in computed.items():
        if abs(value - report.closed[key]) > 1e-12:
            raise ArithmeticError(
                f"record value {key} drifted: {value!r} vs {report.closed[key]!r}"
            )
    return report


def scan_unimodality(grid_size: int) -> dict:
    """Scan F on the interior grid x_i = i/(grid_size + 1), i = 1..grid_size.

    Reports the argmax and whether F is strictly increasing left of it
    and strictly decreasing right of it (the grid contains 1/2 exactly
    when grid_size is odd).
    """
    if grid_size < 3:
        raise ValueError(f"grid needs at least 3 points: {grid_size!r}")
    xs = [(i + 1) / (grid_size + 1) for i in range(grid_size)]
    fs = [f_of_x(x) for x in xs]
    k = max(range(grid_size), key=fs.__getitem__)
    increasing = all(fs[i] < fs[i + 1] for i in range(k))
    decreasing = all(fs[i] > fs[i + 1] for i in range(k, grid_size - 1))
    return {
        "grid_size": grid_size,
        "step": 1.0 / (grid_size + 1),
        "argmax_x": xs[k],
        "max_value": fs[k],
        "strictly_increasing_below": increasing,
        "strictly_decreasing_above": decreasing,
    }


def pure_geodetic_check(x) -> dict:
    """Exact-rational squared sines of the trajectory angles at rational x.

    sin^2(phi) = s, sin^2(delta) = t/(1+t) and sin^2(kappa) derived from
    tan^2(kappa) = (1-x)^2/((1+x)(1+3x)) are all rational whenever x is,
    which is the sense in which trajectory configurations at rational x
    are exactly constructible.  Floats are rejected: pass a Fraction (or
    int, or a string like '1/2').
    """
    if isinstance(x, float):
        raise TypeError("pass an exact rational, not a float")
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError(f"trajectory parameter must lie in (0, 1]: {x!r}")
    t = t_of_x(x)
    s = 1 - x * (t + 1)
    tan_sq_kappa = (1 - x) ** 2 / ((1 + x) * (1 + 3 * x))
    return {
        "x": x,
        "sin_sq_phi": s,
        "sin_sq_delta": t / (1 + t),
        "sin_sq_kappa": tan_sq_kappa / (1 + tan_sq_kappa),
        "f": f_of_x(x),
        "all_rational": True,
    }
