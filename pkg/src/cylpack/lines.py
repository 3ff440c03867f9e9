"""Lines tangent to the unit sphere and distances between them.

A tangent line touches the unit ball at a single point and is unoriented:
(base, dir) and (base, -dir) describe the same line.  Equal cylinders of
radius r around a family of such lines avoid overlap exactly when every
pairwise line distance is at least 2r/(1+r), which makes the conversion
between line distances and cylinder radii the bridge between the geometry
here and the packing statements elsewhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_TAU = 2.0 * math.pi

# Below this value of 1 - (dir . dir')^2 the skew-line formula is 0/0 and
# the point-to-line fallback is used instead.
PARALLEL_TOL = 1e-12


class DegenerateError(ArithmeticError):
    """A closed-form expression was evaluated where it degenerates."""


@dataclass(frozen=True)
class SphericalPoint:
    """Latitude/longitude pair naming a point of the unit sphere.

    Latitude phi lies in [-pi/2, pi/2]; longitude kappa is stored reduced
    to [0, 2*pi).  Longitude 0 is the positive-x meridian and longitude
    increases counterclockwise seen from above the north pole (0, 0, 1).
    """

    phi: float
    kappa: float

    def __post_init__(self):
        phi = float(self.phi)
        kappa = float(self.kappa)
        if not math.isfinite(phi) or abs(phi) > math.pi / 2:
            raise ValueError(f"latitude out of range: {self.phi!r}")
        if not math.isfinite(kappa):
            raise ValueError(f"longitude must be finite: {self.kappa!r}")
        kappa = kappa % _TAU
        if kappa >= _TAU:  # float wrap of tiny negative inputs
            kappa = 0.0
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "kappa", kappa)


def embed_point(p: SphericalPoint) -> np.ndarray:
    """Unit vector (cos phi cos kappa, cos phi sin kappa, sin phi)."""
    cp = math.cos(p.phi)
    return np.array([cp * math.cos(p.kappa), cp * math.sin(p.kappa), math.sin(p.phi)])


def north_tangent(p: SphericalPoint) -> np.ndarray:
    """Unit tangent at p pointing due north; undefined at the poles."""
    if abs(p.phi) >= math.pi / 2:
        raise ValueError("north direction undefined at the poles")
    sp = math.sin(p.phi)
    return np.array([-sp * math.cos(p.kappa), -sp * math.sin(p.kappa), math.cos(p.phi)])


def _frozen(v: np.ndarray) -> np.ndarray:
    v.flags.writeable = False
    return v


@dataclass(frozen=True, eq=False)
class TangentLine:
    """Unoriented line tangent to the unit sphere.

    base is the tangency point and dir a unit direction along the line.
    Construction accepts vectors within 1e-9 of unit and tangent, then
    snaps them so every stored instance satisfies |base| = 1, |dir| = 1
    and base . dir = 0 to machine precision.  The snap is skipped for
    inputs already clean to ~1 ulp, so negating dir of a stored line
    yields bit-exact negated components.
    """

    base: np.ndarray
    dir: np.ndarray

    def __post_init__(self):
        base = np.array(self.base, dtype=float)
        direction = np.array(self.dir, dtype=float)
        if base.shape != (3,) or direction.shape != (3,):
            raise ValueError("base and dir must be 3-vectors")
        if not (np.all(np.isfinite(base)) and np.all(np.isfinite(direction))):
            raise ValueError("base and dir must be finite")
        nb = float(np.linalg.norm(base))
        if abs(nb - 1.0) > 1e-9:
            raise ValueError(f"base must be a unit vector, |base| = {nb!r}")
        if abs(nb - 1.0) > 5e-16:
            base = base / nb
        dot = float(direction @ base)
        if abs(dot) > 1e-9:
            raise ValueError(f"dir must be tangent at base, base . dir = {dot!r}")
        if abs(dot) > 1e-15:
            direction = direction - dot * base
        nd = float(np.linalg.norm(direction))
        if abs(nd - 1.0) > 1e-9:
            raise ValueError(f"dir must be a unit vector, |dir| = {nd!r}")
        if abs(nd - 1.0) > 5e-16:
            direction = direction / nd
        object.__setattr__(self, "base", _frozen(base))
        object.__setattr__(self, "dir", _frozen(direction))

    def canonical(self) -> "TangentLine":
        """Copy whose dir has a positive first nonzero component.

        Gives every line one deterministic representative for printing
        and comparisons.
        """
        for c in self.dir:
            if c != 0.0:
                return self if c > 0.0 else TangentLine(self.base, -self.dir)
        return self

    def same_line_as(self, other: "TangentLine", tol: float = 1e-10) -> bool:
        """Whether the two lines coincide, ignoring dir orientation."""
        if float(np.max(np.abs(self.base - other.base))) > tol:
            return False
        straight = float(np.max(np.abs(self.dir - other.dir)))
        flipped = float(np.max(np.abs(self.dir + other.dir)))
        return min(straight, flipped) <= tol


def make_tangent_line(p: SphericalPoint, delta: float) -> TangentLine:
    """Tangent line at p, north tangent rotated by delta in the
    tangent plane; delta = pi/2 points it due east (toward increasing
    longitude).  Poles are rejected: the north direction is undefined
    there.
    """
    if abs(p.phi) >= math.pi / 2:
        raise ValueError("north direction undefined at the poles")
    sp, cp = math.sin(p.phi), math.cos(p.phi)
    sk, ck = math.sin(p.kappa), math.cos(p.kappa)
    base = np.array([cp * ck, cp * sk, sp])
    north = np.array([-sp * ck, -sp * sk, cp])
    east = np.array([-sk, ck, 0.0])
    return TangentLine(base, math.cos(delta) * north + math.sin(delta) * east)


def rotation_matrix(axis: np.ndarray, angle: float) -> np.ndarray:
    """3x3 rotation by angle about axis, right-hand rule."""
    k = np.asarray(axis, dtype=float)
    n = float(np.linalg.norm(k))
    if n == 0.0 or not math.isfinite(n):
        raise ValueError("rotation axis must be a nonzero vector")
    k = k / n
    kx = np.array([[0.0, -k[2], k[1]], [k[2], 0.0, -k[0]], [-k[1], k[0], 0.0]])
    c, s = math.cos(angle), math.sin(angle)
    return c * np.eye(3) + s * kx + (1.0 - c) * np.outer(k, k)


def rotate_line(line: TangentLine, matrix: np.ndarray) -> TangentLine:
    """Image of a tangent line under a rotation matrix."""
    return TangentLine(matrix @ line.base, matrix @ line.dir)


def _canonical_dir(d: np.ndarray) -> np.ndarray:
    for c in d:
        if c != 0.0:
            return d if c > 0.0 else -d
    return d


def distance_sq(u: TangentLine, v: TangentLine) -> float:
    """Squared distance between two lines.

    Skew pairs use det^2[du, dv, w] / (1 - (du . dv)^2) with
    w = v.base - u.base; within PARALLEL_TOL of parallel that formula is
    0/0 and the squared point-to-line gap is returned instead.  The
    denominator is evaluated as |du x dv|^2, equal to 1 - (du . dv)^2 for
    unit vectors but free of its catastrophic cancellation near parallel
    pairs.  The value is exactly symmetric in (u, v) and exactly invariant
    under negating either dir: both branches are built from expressions
    that only change by exact floating-point sign flips under those
    operations.
    """
    du, dv = u.dir, v.dir
    w = v.base - u.base
    cross = np.cross(du, dv)
    denom = float(cross @ cross)
    if denom <= PARALLEL_TOL:
        a = _canonical_dir(du)
        b = _canonical_dir(dv)
        n = a if tuple(a) >= tuple(b) else b
        wp = w - float(w @ n) * n
        return float(wp @ wp)
    det = float(cross @ w)
    return det * det / denom


def distance(u: TangentLine, v: TangentLine) -> float:
    """Distance between two lines; sqrt of distance_sq."""
    return math.sqrt(distance_sq(u, v))


@dataclass(frozen=True, eq=False)
class Configuration:
    """Ordered family of tangent lines (at least two)."""

    lines: tuple

    def __post_init__(self):
        lines = tuple(self.lines)
        if len(lines) < 2:
            raise ValueError("a configuration needs at least 2 lines")
        for line in lines:
            if not isinstance(line, TangentLine):
                raise TypeError("configuration members must be TangentLine")
        object.__setattr__(self, "lines", lines)

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __getitem__(self, i):
        return self.lines[i]

    def distance_sq_matrix(self) -> np.ndarray:
        """Symmetric matrix of pairwise squared distances (zero diagonal)."""
        n = len(self.lines)
        m = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                m[i, j] = m[j, i] = distance_sq(self.lines[i], self.lines[j])
        return m


def min_pairwise_distance(c: Configuration) -> float:
    """Smallest distance over all line pairs of the configuration."""
    lines = c.lines
    if len(lines) < 2:
        raise ValueError("need at least 2 lines")
    best = math.inf
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            best = min(best, distance_sq(lines[i], lines[j]))
    return math.sqrt(best)


def radius_from_distance(d: float) -> float:
    """Largest common cylinder radius for lines at pairwise distance d.

    Two unit-ball-tangent cylinders of radius r have axis distance
    (1+r) d and surfaces touching when (1+r) d = 2r, so r = d/(2-d).
    """
    if d < 0:
        raise ValueError(f"invalid distance: {d!r}")
    if d >= 2:
        raise ValueError("radius unbounded at distance >= 2")
    return d / (2.0 - d)


def distance_from_radius(r: float) -> float:
    """Line distance at which cylinders of radius r touch: 2r/(1+r)."""
    if r < 0:
        raise ValueError(f"invalid radius: {r!r}")
    return 2.0 * r / (1.0 + r)
