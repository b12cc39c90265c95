"""Delzant polytopes: verification, vertex frames, models and corner chops.

Conventions: the momentum image of an equivariant ball of radius ``r`` is a
simplex with lattice edge length ``t = r**2``, and symplectic volume is
``n! pi^n`` times Euclidean volume of the momentum polytope.  Under these
conventions ``CP^n`` with ``lambda`` times the Fubini-Study form has
momentum polytope ``conv{0, lambda e_1, ..., lambda e_n}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence, Union

from .errors import (
    BallTooLarge,
    ChopTooDeep,
    DegenerateSimplex,
    DimensionMismatch,
    InputError,
    NotDelzant,
    NotDelzantResult,
    NotSimple,
)
from .lattice import (
    QVector,
    ZMatrix,
    det,
    dot,
    format_rational,
    identity,
    inverse,
    is_unimodular_frame,
    lattice_direction,
    lattice_length,
    matmul,
    matvec,
    qvec,
    rank,
    solve,
    transpose,
    vadd,
    vsub,
)
from .opensimplex import OpenSimplex
from .polytope import HalfSpace, Polytope, affine_dim


@dataclass(frozen=True)
class VertexFrame:
    vertex: QVector
    directions: tuple[tuple[int, ...], ...]
    edge_lengths: tuple[Fraction, ...]
    neighbors: tuple[int, ...]


@dataclass(frozen=True)
class VertexDiagnostic:
    vertex: QVector
    edge_count: int
    rational: bool
    smooth: bool


@dataclass(frozen=True)
class DelzantReport:
    is_delzant: bool
    vertices: tuple[VertexDiagnostic, ...]
    euler_characteristic: int

    @property
    def chi(self) -> int:
        return self.euler_characteristic

    @property
    def simplicity_failures(self) -> list[QVector]:
        n = len(self.vertices[0].vertex)
        return [d.vertex for d in self.vertices if d.edge_count != n]


@dataclass(frozen=True)
class SymplecticVolume:
    """The value ``coefficient * pi**pi_power``."""

    coefficient: Fraction
    pi_power: int

    def __str__(self):
        return f"{format_rational(self.coefficient)}*pi^{self.pi_power}"

    def __truediv__(self, other: "SymplecticVolume") -> Fraction:
        if self.pi_power != other.pi_power:
            raise ValueError("ratio of volumes in different dimensions")
        return self.coefficient / other.coefficient


@dataclass(frozen=True)
class ProjectiveSpace:
    n: int
    lam: Fraction
    kind = "projective_space"

    def polytope(self) -> Polytope:
        return simplex_model(self.n, self.lam)


@dataclass(frozen=True)
class ProductCP1xCP1:
    lam: Fraction
    kind = "product_cp1_cp1"
    n = 2

    def polytope(self) -> Polytope:
        return square_model(self.lam)


@dataclass(frozen=True)
class Other:
    kind = "other"


Model = Union[ProjectiveSpace, ProductCP1xCP1, Other]


@dataclass(frozen=True)
class AffineMap:
    """``x -> A x + w`` with ``A`` unimodular."""

    A: ZMatrix
    w: QVector

    def apply(self, points):
        return [vadd(matvec(self.A, p), self.w) for p in points]


@dataclass(frozen=True)
class ClassificationResult:
    model: Model
    transform: AffineMap | None = None


def fmt_point(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def simplex_model(n: int, lam) -> Polytope:
    lam = Fraction(lam)
    pts = [(Fraction(0),) * n] + [tuple(lam if i == j else Fraction(0) for j in range(n)) for i in range(n)]
    return Polytope.from_vertices(pts)


def square_model(lam) -> Polytope:
    lam = Fraction(lam)
    return Polytope.from_vertices([(a, b) for a in (0, lam) for b in (0, lam)])


def _vertex(p: Polytope, v) -> int:
    if isinstance(v, int):
        if not 0 <= v < len(p.vertices):
            raise InputError(f"vertex index {v} out of range 0..{len(p.vertices) - 1}")
        return v
    return p.vertex_index(v)


def _edge_data(p: Polytope, i: int) -> list[tuple[tuple[int, ...], Fraction, int]]:
    out = []
    for j in p.neighbors(i):
        u, c = lattice_direction(vsub(p.vertices[j], p.vertices[i]))
        out.append((u, c, j))
    return sorted(out)


def vertex_frame(p: Polytope, v) -> VertexFrame:
    """Primitive edge directions and lattice lengths at a simple vertex."""
    i = _vertex(p, v)
    data = _edge_data(p, i)
    if len(data) != p.dim:
        raise NotSimple(f"vertex {p.vertices[i]} meets {len(data)} edges, expected {p.dim}")
    return VertexFrame(
        p.vertices[i],
        tuple(u for u, _, _ in data),
        tuple(c for _, c, _ in data),
        tuple(j for _, _, j in data),
    )


def check_delzant(p: Polytope) -> DelzantReport:
    diags = []
    for i, v in enumerate(p.vertices):
        data = _edge_data(p, i)
        smooth = len(data) == p.dim and is_unimodular_frame([u for u, _, _ in data])
        # every edge of a rational polytope has a rational direction
        diags.append(VertexDiagnostic(v, len(data), True, smooth))
    ok = all(d.edge_count == p.dim and d.rational and d.smooth for d in diags)
    return DelzantReport(ok, tuple(diags), len(p.vertices))


def require_delzant(p: Polytope) -> DelzantReport:
    report = check_delzant(p)
    if not report.is_delzant:
        raise NotDelzant(report=report)
    return report


def ball_momentum_image(p: Polytope, v, t) -> OpenSimplex:
    """Momentum image of the equivariant ball of radius ``sqrt(t)`` centred at the fixed point over ``v``."""
    t = Fraction(t)
    frame = vertex_frame(p, v)
    if not is_unimodular_frame(frame.directions):
        raise NotDelzant(f"vertex {frame.vertex} is not smooth")
    if t <= 0:
        raise InputError("radius parameter must be positive")
    for u, length, j in zip(frame.directions, frame.edge_lengths, frame.neighbors):
        if t > length:
            raise BallTooLarge(
                f"t = {format_rational(t)} exceeds the lattice length {format_rational(length)} "
                f"of the edge from {fmt_point(frame.vertex)} to {fmt_point(p.vertices[j])}",
                edge=(frame.vertex, p.vertices[j]),
            )
    return OpenSimplex(frame.vertex, frame.directions, t)


def integral_simplex_routes(vertices: Sequence[Sequence], anchor: Sequence) -> tuple[bool, bool]:
    """Both integrality tests: (all edges equal + volume, unimodular anchored frame)."""
    pts = [qvec(v) for v in vertices]
    anchor = qvec(anchor)
    n = len(anchor)
    if len(pts) != n + 1 or any(len(q) != n for q in pts):
        raise DimensionMismatch(f"a simplex in dimension {n} needs {n + 1} vertices")
    if anchor not in pts:
        raise InputError("anchor is not a vertex of the simplex")
    if affine_dim(pts) != n:
        raise DegenerateSimplex("vertices are affinely dependent")

    lengths = {lattice_length(a, b) for a, b in combinations(pts, 2)}
    vol = Fraction(abs(det([vsub(q, pts[0]) for q in pts[1:]])), math.factorial(n))
    by_edges = len(lengths) == 1 and vol == next(iter(lengths)) ** n / math.factorial(n)

    frame = [lattice_direction(vsub(q, anchor)) for q in pts if q != anchor]
    by_frame = len({c for _, c in frame}) == 1 and is_unimodular_frame([u for u, _ in frame])
    return by_edges, by_frame


def is_integral_simplex(vertices: Sequence[Sequence], anchor: Sequence) -> bool:
    by_edges, by_frame = integral_simplex_routes(vertices, anchor)
    if by_edges != by_frame:
        raise AssertionError(f"integrality routes disagree on {vertices}")
    return by_edges


def symplectic_volume(p: Polytope) -> SymplecticVolume:
    return SymplecticVolume(math.factorial(p.dim) * p.volume(), p.dim)


def _independent_edges(edges: list[tuple], n: int) -> list[tuple]:
    for combo in combinations(edges, n):
        if rank(combo) == n:
            return list(combo)
    return []


def agl_equivalent(p: Polytope, q: Polytope, strict_sl: bool = False) -> AffineMap | None:
    """Find ``(A, w)`` with ``A p + w = q``, ``A`` in GL(n,Z) (SL with ``strict_sl``).

    Among all such maps the one with the smallest translation (in l1 norm) is
    returned, then the one closest to the identity, then lexicographically.
    """
    if p.dim != q.dim:
        raise DimensionMismatch("polytopes of different dimension")
    n = p.dim
    if len(p.vertices) != len(q.vertices) or p.f_vector() != q.f_vector() or p.volume() != q.volume():
        return None
    p0 = p.vertices[0]
    ep = _independent_edges([vsub(p.vertices[j], p0) for j in p.neighbors(0)], n)
    deg = len(p.neighbors(0))
    mp_inv = inverse(transpose(ep))
    found: list[AffineMap] = []
    for qi, q0 in enumerate(q.vertices):
        if len(q.neighbors(qi)) != deg:
            continue
        eq = [vsub(q.vertices[j], q0) for j in q.neighbors(qi)]
        for perm in permutations(eq, n):
            a = matmul(transpose(perm), mp_inv)
            if any(x.denominator != 1 for row in a for x in row):
                continue
            a = tuple(tuple(int(x) for x in row) for row in a)
            d = det(a)
            if d != 1 and (strict_sl or d != -1):
                continue
            w = vsub(q0, matvec(a, p0))
            if sorted(vadd(matvec(a, v), w) for v in p.vertices) == list(q.vertices):
                found.append(AffineMap(a, w))
    # canonical choice: smallest translation, then closest to the identity, then lexicographic
    def key(m: AffineMap):
        off = sum(abs(x - (r == c)) for r, row in enumerate(m.A) for c, x in enumerate(row))
        return sum(abs(x) for x in m.w), off, m.w, m.A

    return min(found, key=key, default=None)


def classify(p: Polytope, strict_sl: bool = False) -> ClassificationResult:
    require_delzant(p)
    n = p.dim
    i, j = p.edges()[0]
    lam = lattice_length(p.vertices[i], p.vertices[j])
    candidates: list[Model] = []
    if len(p.vertices) == n + 1:
        candidates.append(ProjectiveSpace(n, lam))
    if n == 2 and len(p.vertices) == 4:
        candidates.append(ProductCP1xCP1(lam))
    for model in candidates:
        t = agl_equivalent(model.polytope(), p, strict_sl)
        if t is not None:
            return ClassificationResult(model, t)
    return ClassificationResult(Other())


def corner_cut(p: Polytope, v, t) -> HalfSpace:
    """Half-space keeping everything at level >= t from vertex ``v``."""
    frame = vertex_frame(p, v)
    eta = solve(frame.directions, [Fraction(1)] * p.dim)
    eta = tuple(int(x) for x in eta)
    return HalfSpace(eta, dot(eta, frame.vertex) + Fraction(t))


def blow_up(p: Polytope, v, t) -> Polytope:
    """Equivariant blow-up of size ``t``: chop the corner simplex at ``v``."""
    require_delzant(p)
    t = Fraction(t)
    if t <= 0:
        raise InputError("blow-up size must be positive")
    frame = vertex_frame(p, v)
    for length, j in zip(frame.edge_lengths, frame.neighbors):
        if t >= length:
            raise ChopTooDeep(
                f"t = {format_rational(t)} reaches the far end of the edge from {fmt_point(frame.vertex)} "
                f"to {fmt_point(p.vertices[j])} (lattice length {format_rational(length)})",
                edge=(frame.vertex, p.vertices[j]),
            )
    out = Polytope.from_halfspaces(p.facets + (corner_cut(p, v, t),))
    if out.volume() != p.volume() - t ** p.dim / math.factorial(p.dim):
        raise ChopTooDeep(f"cut at depth {t} removes more than the corner simplex at {frame.vertex}")
    report = check_delzant(out)
    if not report.is_delzant:
        raise NotDelzantResult("blown-up polytope is not Delzant", report=report)
    return out


def identity_map(n: int) -> AffineMap:
    return AffineMap(identity(n), (Fraction(0),) * n)
