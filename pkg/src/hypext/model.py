"""Poincare ball model of constant curvature -lambda^2 in dimensions 2 and 3.

The model is the open unit ball with line element 2|dx| / (lam (1 - |x|^2)),
so all lengths at curvature scale ``lam`` are the curvature -1 lengths divided
by ``lam``.  Geodesics are diameters and circular arcs orthogonal to the unit
sphere; ideal boundary points are unit vectors.  Mobius translations (gyro
additions) supply exact isometries, which the rest of the package leans on for
normalization: most operations reduce their input to a diameter or to the
origin, apply a closed form, and map back.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import GeometryError

# Interior guard: coordinates are kept at Euclidean norm <= 1 - INTERIOR_EPS.
INTERIOR_EPS = 1e-12
# Two closure points closer than this (Euclidean) count as coincident.
COINCIDENCE_EPS = 1e-12

_SUPPORTED_DIMS = (2, 3)


def _as_vec(coords):
    v = np.asarray(coords, dtype=float)
    if v.ndim != 1 or v.shape[0] not in _SUPPORTED_DIMS:
        raise GeometryError(f"expected a vector of length 2 or 3, got shape {v.shape}")
    return v


@dataclass(frozen=True)
class CurvatureScale:
    """Curvature -lam^2 with lam >= 1; lam = 1 is the reference model."""

    lam: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.lam) or self.lam < 1.0:
            raise GeometryError(f"curvature scale must satisfy lam >= 1, got {self.lam}")


K1 = CurvatureScale(1.0)


@dataclass(frozen=True, eq=False)
class BallPoint:
    """Interior point of the unit ball, norm bounded away from the sphere."""

    coords: np.ndarray

    def __init__(self, coords):
        v = _as_vec(coords)
        if np.linalg.norm(v) > 1.0 - INTERIOR_EPS:
            raise GeometryError(
                f"point with norm {np.linalg.norm(v):.17g} violates the interior guard"
            )
        object.__setattr__(self, "coords", v)

    @property
    def n(self):
        return self.coords.shape[0]

    def __repr__(self):
        return f"BallPoint({self.coords.tolist()})"


@dataclass(frozen=True, eq=False)
class IdealPoint:
    """Boundary point of the model: a unit vector."""

    direction: np.ndarray

    def __init__(self, direction):
        v = _as_vec(direction)
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise GeometryError(f"ideal point must be a unit vector, |v| = {np.linalg.norm(v)!r}")
        object.__setattr__(self, "direction", v)

    @classmethod
    def from_direction(cls, v):
        """Normalize a nonzero vector onto the boundary sphere."""
        v = _as_vec(v)
        nv = np.linalg.norm(v)
        if nv == 0.0:
            raise GeometryError("cannot normalize the zero vector to an ideal point")
        return cls(v / nv)

    @property
    def n(self):
        return self.direction.shape[0]

    def __repr__(self):
        return f"IdealPoint({self.direction.tolist()})"


# Closure of the ball: interior points and ideal points.
ClosurePoint = BallPoint | IdealPoint


def closure_coords(p: ClosurePoint) -> np.ndarray:
    return p.coords if isinstance(p, BallPoint) else p.direction


def is_ideal(p: ClosurePoint) -> bool:
    return isinstance(p, IdealPoint)


def closure_eq(p: ClosurePoint, q: ClosurePoint, tol: float = COINCIDENCE_EPS) -> bool:
    if is_ideal(p) != is_ideal(q):
        return False
    return bool(np.linalg.norm(closure_coords(p) - closure_coords(q)) <= tol)


@dataclass(frozen=True, eq=False)
class TangentVector:
    """Euclidean vector attached at a base point; hyperbolic norm is scaled."""

    base: BallPoint
    vec: np.ndarray

    def __init__(self, base, vec):
        if not isinstance(base, BallPoint):
            base = BallPoint(base)
        v = _as_vec(vec)
        if v.shape != base.coords.shape:
            raise GeometryError("tangent vector dimension differs from its base point")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "vec", v)

    def hyp_norm(self, k: CurvatureScale = K1) -> float:
        conf = 2.0 / (k.lam * (1.0 - np.dot(self.base.coords, self.base.coords)))
        return conf * float(np.linalg.norm(self.vec))


# ---------------------------------------------------------------------------
# raw-array kernels (broadcast over leading axes; trailing axis is coords)
# ---------------------------------------------------------------------------

def _clamp_interior(x):
    """Rescale rows with norm beyond the interior guard back onto it."""
    x = np.asarray(x, dtype=float)
    nrm = np.linalg.norm(x, axis=-1, keepdims=True)
    limit = 1.0 - INTERIOR_EPS
    over = nrm > limit
    if np.any(over):
        # aim slightly inside the guard so rounding cannot push back over it
        scale = np.where(over, (limit * (1.0 - 4e-16)) / np.maximum(nrm, limit), 1.0)
        x = x * scale
    return x


def _mobius_add(a, x):
    """Mobius addition a (+) x; an isometry sending 0 to a.

    Works verbatim for |x| = 1 (boundary action of the translation) and
    broadcasts over leading axes of both arguments.
    """
    a = np.asarray(a, dtype=float)
    x = np.asarray(x, dtype=float)
    ax = np.sum(a * x, axis=-1)
    x2 = np.sum(x * x, axis=-1)
    a2 = np.sum(a * a, axis=-1)
    num = (1.0 + 2.0 * ax + x2)[..., None] * a + (1.0 - a2)[..., None] * x
    den = 1.0 + 2.0 * ax + a2 * x2
    return num / den[..., None]


def _translate_interior(a, x):
    return _clamp_interior(_mobius_add(a, x))


def _translate_ideal(a, u):
    out = _mobius_add(a, u)
    return out / np.linalg.norm(out, axis=-1, keepdims=True)


def _dist_raw(lam, x, y):
    """Distance at curvature -lam^2, stable near the boundary.

    arcosh(1 + 2t) == 2 asinh(sqrt(t)); the latter avoids cancellation.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    d2 = np.sum((x - y) ** 2, axis=-1)
    cx = 1.0 - np.sum(x * x, axis=-1)
    cy = 1.0 - np.sum(y * y, axis=-1)
    t = d2 / (cx * cy)
    return 2.0 * np.arcsinh(np.sqrt(t)) / lam


def _check_in_ball(coords):
    coords = np.asarray(coords, dtype=float)
    if np.any(np.linalg.norm(coords, axis=-1) > 1.0 - INTERIOR_EPS):
        raise GeometryError("coordinates violate the interior guard")
    return coords


def hyp_dist(k: CurvatureScale, x: BallPoint, y: BallPoint) -> float:
    """Distance between interior points in the lam-scaled metric."""
    xc = _check_in_ball(x.coords if isinstance(x, BallPoint) else x)
    yc = _check_in_ball(y.coords if isinstance(y, BallPoint) else y)
    return float(_dist_raw(k.lam, xc, yc))


# ---------------------------------------------------------------------------
# orthogonal matrices and Mobius isometries
# ---------------------------------------------------------------------------

def rotation_taking(u, v):
    """Orthogonal matrix rotating unit vector u onto unit vector v.

    Minimal rotation in the plane span(u, v); for u = -v a half turn in a
    deterministic plane is used.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    n = u.shape[0]
    c = float(np.dot(u, v))
    if c > 1.0 - 1e-15:
        return np.eye(n)
    if c < -1.0 + 1e-15:
        # half turn: pick any axis direction w orthogonal to u
        w = np.zeros(n)
        w[int(np.argmin(np.abs(u)))] = 1.0
        w = w - np.dot(w, u) * u
        w /= np.linalg.norm(w)
        return -np.eye(n) + 2.0 * np.outer(w, w) if n == 3 else -np.eye(n)
    w = v - c * u
    s = np.linalg.norm(w)
    w = w / s
    eye = np.eye(n)
    return eye + (c - 1.0) * (np.outer(u, u) + np.outer(w, w)) + s * (np.outer(w, u) - np.outer(u, w))


@dataclass(frozen=True)
class MobiusIsometry:
    """Isometry of the ball model stored as a chain of primitive steps.

    Each step is ("t", translation vector) or ("r", orthogonal matrix); the
    chain is applied left to right.  Keeping raw composition data sidesteps
    gyration bookkeeping and makes inverses exact.
    """

    steps: tuple = field(default_factory=tuple)

    @classmethod
    def identity(cls, n: int = 2):
        return cls(steps=(("r", np.eye(n)),))

    @classmethod
    def translation(cls, a):
        a = _as_vec(a)
        if np.linalg.norm(a) > 1.0 - INTERIOR_EPS:
            raise GeometryError("translation parameter must be an interior point")
        return cls(steps=(("t", a),))

    @classmethod
    def rotation(cls, matrix):
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape[0] != matrix.shape[1] or matrix.shape[0] not in _SUPPORTED_DIMS:
            raise GeometryError("rotation matrix must be 2x2 or 3x3")
        if np.linalg.norm(matrix @ matrix.T - np.eye(matrix.shape[0])) > 1e-10:
            raise GeometryError("matrix is not orthogonal")
        return cls(steps=(("r", matrix),))

    @property
    def n(self):
        kind, data = self.steps[0]
        return data.shape[0] if kind == "t" else data.shape[1]

    @property
    def orientation(self) -> int:
        """+1 for orientation preserving, -1 otherwise."""
        sign = 1.0
        for kind, data in self.steps:
            if kind == "r":
                sign *= np.sign(np.linalg.det(data))
        return int(sign)

    def then(self, other: "MobiusIsometry") -> "MobiusIsometry":
        """Isometry applying self first, then other."""
        return MobiusIsometry(steps=self.steps + other.steps)

    def inverse(self) -> "MobiusIsometry":
        inv = []
        for kind, data in reversed(self.steps):
            inv.append(("t", -data) if kind == "t" else ("r", data.T))
        return MobiusIsometry(steps=tuple(inv))

    def apply_interior_raw(self, x):
        x = np.asarray(x, dtype=float)
        for kind, data in self.steps:
            x = _translate_interior(data, x) if kind == "t" else x @ data.T
        return x

    def apply_ideal_raw(self, u):
        u = np.asarray(u, dtype=float)
        for kind, data in self.steps:
            u = _translate_ideal(data, u) if kind == "t" else u @ data.T
        return u / np.linalg.norm(u, axis=-1, keepdims=True)


def apply_mobius(m: MobiusIsometry, p: ClosurePoint) -> ClosurePoint:
    if isinstance(p, BallPoint):
        return BallPoint(m.apply_interior_raw(p.coords))
    return IdealPoint(m.apply_ideal_raw(p.direction))


# ---------------------------------------------------------------------------
# geodesics
# ---------------------------------------------------------------------------

def _endpoints_to_frame(u, v):
    """Anchor and direction of the arc orthogonal to the sphere from u to v.

    u and v are distinct unit vectors; the anchor is the point of the arc
    nearest the Euclidean origin and the direction points from the u side
    toward the v side.
    """
    s = float(np.dot(u, v))
    chord = u + v
    if np.linalg.norm(chord) < 1e-12:
        # diameter through the origin
        return np.zeros_like(u), v.copy()
    c = chord / (1.0 + s)
    nc = np.linalg.norm(c)
    if nc <= 1.0 + 1e-15:
        # u and v nearly coincide; the arc degenerates
        raise GeometryError("ideal endpoints too close to span a geodesic")
    chat = c / nc
    # |anchor| = nc - sqrt(nc^2 - 1), computed in the cancellation-free form
    anchor = chat / (nc + np.sqrt(nc * nc - 1.0))
    w = v - u
    w = w - np.dot(w, chat) * chat
    nw = np.linalg.norm(w)
    if nw == 0.0:
        raise GeometryError("degenerate geodesic direction")
    return anchor, w / nw


@dataclass(eq=False)
class Geodesic:
    """Complete geodesic through two closure points.

    ``point_at`` is unit speed in the lam metric with ``point_at(0)`` at the
    anchor (the point of the arc nearest the ball's origin) and increasing
    parameter running from the ``a`` side toward the ``b`` side.
    """

    a: ClosurePoint
    b: ClosurePoint
    anchor: BallPoint
    unit_direction_at_anchor: np.ndarray
    lam: float = 1.0

    @cached_property
    def ideal_ends(self):
        """(a-side, b-side) ideal endpoints as unit vectors."""
        m = self.anchor.coords
        d = self.unit_direction_at_anchor
        return _translate_ideal(m, -d), _translate_ideal(m, d)

    @property
    def n(self):
        return self.anchor.n

    def point_at(self, t: float) -> BallPoint:
        return BallPoint(self.point_at_raw(np.asarray(t, dtype=float)))

    def point_at_raw(self, t):
        radial = np.tanh(0.5 * self.lam * np.asarray(t, dtype=float))
        z = radial[..., None] * self.unit_direction_at_anchor
        return _translate_interior(self.anchor.coords, z)

    def param_of(self, p: BallPoint) -> float:
        """Arc-length parameter of an interior point lying on the geodesic."""
        return float(self.param_of_raw(p.coords if isinstance(p, BallPoint) else p))

    def param_of_raw(self, coords):
        z = _mobius_add(-self.anchor.coords, np.asarray(coords, dtype=float))
        r = np.minimum(np.linalg.norm(z, axis=-1), 1.0 - INTERIOR_EPS)
        sign = np.sign(np.sum(z * self.unit_direction_at_anchor, axis=-1))
        return 2.0 * np.arctanh(r) * sign / self.lam


def point_at(g: Geodesic, t: float) -> BallPoint:
    return g.point_at(t)


def geodesic_between(a: ClosurePoint, b: ClosurePoint, k: CurvatureScale = K1) -> Geodesic:
    """The unique complete geodesic whose closure contains a and b."""
    if closure_eq(a, b):
        raise GeometryError("geodesic endpoints must be distinct closure points")
    if is_ideal(a) and is_ideal(b):
        u, v = a.direction, b.direction
    elif not is_ideal(a):
        w = _mobius_add(-a.coords, closure_coords(b))
        nw = np.linalg.norm(w)
        if nw < COINCIDENCE_EPS:
            raise GeometryError("geodesic endpoints must be distinct closure points")
        what = w / nw
        u = _translate_ideal(a.coords, -what)
        v = b.direction if is_ideal(b) else _translate_ideal(a.coords, what)
    else:
        # a ideal, b interior: build from b and flip orientation
        w = _mobius_add(-b.coords, a.direction)
        what = w / np.linalg.norm(w)
        u = a.direction
        v = _translate_ideal(b.coords, -what)
    anchor, direction = _endpoints_to_frame(u, v)
    return Geodesic(a=a, b=b, anchor=BallPoint(anchor),
                    unit_direction_at_anchor=direction, lam=k.lam)


def normalize_to_diameter(g: Geodesic) -> MobiusIsometry:
    """Isometry carrying g onto the (-e1, e1) diameter, anchor to the origin."""
    n = g.n
    e1 = np.zeros(n)
    e1[0] = 1.0
    move = MobiusIsometry.translation(-g.anchor.coords)
    spin = MobiusIsometry.rotation(rotation_taking(g.unit_direction_at_anchor, e1))
    return move.then(spin)


# ---------------------------------------------------------------------------
# exponential map, rays, angles
# ---------------------------------------------------------------------------

def exp_map(x: BallPoint, v: TangentVector, k: CurvatureScale = K1) -> BallPoint:
    """Follow the geodesic from x with initial direction v for length |v|."""
    if not np.array_equal(v.base.coords, x.coords):
        raise GeometryError("tangent vector is not based at x")
    nv = np.linalg.norm(v.vec)
    if nv == 0.0:
        return x
    length = v.hyp_norm(k)
    z = np.tanh(0.5 * k.lam * length) * (v.vec / nv)
    return BallPoint(_translate_interior(x.coords, z))


def log_map(x: BallPoint, y: BallPoint, k: CurvatureScale = K1) -> TangentVector:
    """Inverse of exp_map: the initial velocity of the geodesic x -> y."""
    w = _mobius_add(-x.coords, y.coords)
    nw = np.linalg.norm(w)
    if nw < COINCIDENCE_EPS:
        raise GeometryError("log_map requires distinct points")
    length = 2.0 * np.arctanh(min(nw, 1.0 - INTERIOR_EPS)) / k.lam
    scale = length * k.lam * (1.0 - np.dot(x.coords, x.coords)) / 2.0
    return TangentVector(x, (w / nw) * scale)


def ray_limit(x: BallPoint, v: TangentVector) -> IdealPoint:
    """Ideal endpoint of the geodesic ray from x with initial direction v."""
    nv = np.linalg.norm(v.vec)
    if nv == 0.0:
        raise GeometryError("ray direction must be nonzero")
    return IdealPoint(_translate_ideal(x.coords, v.vec / nv))


def direction_at(x: BallPoint, target: ClosurePoint) -> np.ndarray:
    """Unit initial direction at x of the geodesic from x to target."""
    w = _mobius_add(-x.coords, closure_coords(target))
    nw = np.linalg.norm(w)
    if nw < COINCIDENCE_EPS:
        raise GeometryError("direction undefined: target coincides with the base point")
    return w / nw


def angle(x: BallPoint, y: ClosurePoint, z: ClosurePoint) -> float:
    """Riemannian angle at x between the geodesics xy and xz, in [0, pi].

    The model is conformal, so this is the Euclidean angle between the two
    initial directions after translating x to the origin.
    """
    d1 = direction_at(x, y)
    d2 = direction_at(x, z)
    return float(np.arccos(np.clip(np.dot(d1, d2), -1.0, 1.0)))


def right_triangle_residual(k: CurvatureScale, va: BallPoint, vb: BallPoint,
                            vc: BallPoint, *, right_angle_tol: float = 1e-9) -> float:
    """Residual cosh(lam a) sin(B) - cos(A) for a right angle at vc.

    ``a`` is the side opposite va.  Exactly built right triangles keep the
    residual below 1e-9.
    """
    gamma = angle(vc, va, vb)
    if abs(gamma - np.pi / 2.0) > right_angle_tol:
        raise GeometryError(f"angle at the right-angle vertex is {gamma!r}, not pi/2")
    side_a = hyp_dist(k, vb, vc)
    ang_a = angle(va, vb, vc)
    ang_b = angle(vb, va, vc)
    return float(np.cosh(k.lam * side_a) * np.sin(ang_b) - np.cos(ang_a))
