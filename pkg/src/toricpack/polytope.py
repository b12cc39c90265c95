"""Exact rational convex polytopes in small dimension.

A :class:`Polytope` is always full-dimensional and bounded and stores both
representations: a lexicographically sorted vertex list and a sorted list of
facet half-spaces with primitive inward integer normals.  Facets are found
by exhaustive search over affinely independent vertex subsets, which is fine
for the tiny polytopes this package deals with (dimension capped at 6).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import DegenerateHull, DimensionMismatch, InputError, Unbounded
from .lattice import (
    QVector,
    cofactor_normal,
    det,
    dot,
    nullspace,
    primitive,
    qvec,
    rank,
    vsub,
)
from .vertex_enum import basic_solutions

MAX_DIM = 6


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The constraint ``<normal, x> >= offset``."""

    normal: tuple[int, ...]
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(int(x) for x in self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if not any(self.normal):
            raise InputError("half-space with zero normal")
        if math.gcd(*self.normal) != 1:
            raise InputError(f"half-space normal {self.normal} is not primitive")

    @classmethod
    def normalized(cls, normal: Sequence, offset) -> "HalfSpace":
        """Build from any rational normal, rescaling to a primitive one."""
        normal = [Fraction(x) for x in normal]
        denom = math.lcm(*(x.denominator for x in normal))
        ints = [int(x * denom) for x in normal]
        g = math.gcd(*ints)
        if g == 0:
            raise InputError("half-space with zero normal")
        return cls(tuple(x // g for x in ints), Fraction(offset) * denom / g)

    def slack(self, x: Sequence) -> Fraction:
        return dot(self.normal, x) - self.offset

    def contains(self, x: Sequence) -> bool:
        return self.slack(x) >= 0


@dataclass(frozen=True)
class Face:
    dim: int
    vertices: tuple[QVector, ...]
    vertex_indices: tuple[int, ...]
    facet_indices: tuple[int, ...]


class Position(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Location:
    position: Position
    face: Face | None = None


@dataclass(frozen=True)
class Empty:
    """Empty intersection."""

    dim: int = -1


@dataclass(frozen=True)
class LowerDim:
    """A non-full-dimensional intersection given by its extreme points."""

    vertices: tuple[QVector, ...]
    dim: int


def affine_dim(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank([vsub(p, p0) for p in points[1:]]) if len(points) > 1 else 0


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple[QVector, ...]
    facets: tuple[HalfSpace, ...]
    incidence: tuple[frozenset[int], ...] = field(compare=False, repr=False)

    def __post_init__(self):
        for v, inc in zip(self.vertices, self.incidence):
            for j, f in enumerate(self.facets):
                s = f.slack(v)
                if s < 0 or (s == 0) != (j in inc):
                    raise ValueError("inconsistent V/H representation")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_vertices(cls, points: Iterable[Sequence]) -> "Polytope":
        pts = sorted(set(qvec(p) for p in points))
        if not pts:
            raise DegenerateHull(-1, "no points given")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionMismatch("points of mixed dimension")
        if n > MAX_DIM:
            raise InputError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")
        k = affine_dim(pts)
        if k < n:
            raise DegenerateHull(k)

        scale = math.lcm(*(x.denominator for p in pts for x in p))
        ipts = [tuple(int(x * scale) for x in p) for p in pts]
        found: set[tuple[tuple[int, ...], Fraction]] = set()
        for combo in combinations(range(len(ipts)), n):
            base = ipts[combo[0]]
            normal = cofactor_normal([vsub(ipts[i], base) for i in combo[1:]])
            if not any(normal):
                continue
            normal, _ = primitive(normal)
            c = dot(normal, base)
            vals = [dot(normal, p) for p in ipts]
            if all(v >= c for v in vals):
                found.add((normal, Fraction(c, scale)))
            elif all(v <= c for v in vals):
                found.add((tuple(-x for x in normal), Fraction(-c, scale)))
        facets = tuple(HalfSpace(nrm, off) for nrm, off in sorted(found))

        vertices, incidence = [], []
        for p in pts:
            tight = frozenset(j for j, f in enumerate(facets) if f.slack(p) == 0)
            if tight and rank([facets[j].normal for j in tight]) == n:
                vertices.append(p)
                incidence.append(tight)
        return cls(n, tuple(vertices), facets, tuple(incidence))

    @classmethod
    def from_halfspaces(cls, constraints: Iterable[HalfSpace]) -> "Polytope":
        hs = sorted(set(constraints))
        if not hs:
            raise Unbounded("no constraints")
        n = len(hs[0].normal)
        if any(len(h.normal) != n for h in hs):
            raise DimensionMismatch("constraints of mixed dimension")
        a = [[-Fraction(x) for x in h.normal] for h in hs]
        b = [-h.offset for h in hs]
        normals = [h.normal for h in hs]
        r = rank(normals)
        if r < n:
            # lineality: feasible iff feasible on the orthogonal complement
            extra_a, extra_b = [], []
            for l in nullspace(normals, n):
                extra_a += [list(l), [-x for x in l]]
                extra_b += [Fraction(0), Fraction(0)]
            if basic_solutions(a + extra_a, b + extra_b):
                raise Unbounded("constraint normals do not span; the region contains a line")
            raise DegenerateHull(-1, "constraints are infeasible")
        pts = basic_solutions(a, b)
        if not pts:
            raise DegenerateHull(-1, "constraints are infeasible")
        # pointed and nonempty: bounded iff no extreme ray
        for combo in combinations(range(len(hs)), n - 1):
            ray = cofactor_normal([normals[i] for i in combo]) if n > 1 else (1,)
            if not any(ray):
                continue
            for sgn in (1, -1):
                d = tuple(sgn * x for x in ray)
                if all(dot(nrm, d) >= 0 for nrm in normals):
                    raise Unbounded(f"recession direction {d}")
        k = affine_dim(pts)
        if k < n:
            raise DegenerateHull(k)
        return cls.from_vertices(pts)

    # -- structure --------------------------------------------------------

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v: Sequence) -> int:
        try:
            return self.vertices.index(qvec(v))
        except ValueError:
            raise InputError(f"{tuple(v)} is not a vertex") from None

    @cached_property
    def _face_sets(self) -> dict[int, list[frozenset[int]]]:
        facet_sets = [
            frozenset(i for i, inc in enumerate(self.incidence) if j in inc)
            for j in range(len(self.facets))
        ]
        seen = set(facet_sets)
        frontier = list(facet_sets)
        while frontier:
            nxt = []
            for s in frontier:
                for f in facet_sets:
                    t = s & f
                    if t and t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        by_dim: dict[int, list[frozenset[int]]] = {k: [] for k in range(self.dim)}
        for s in seen:
            by_dim[affine_dim([self.vertices[i] for i in sorted(s)])].append(s)
        for k in by_dim:
            by_dim[k].sort(key=lambda s: sorted(s))
        return by_dim

    def _face(self, s: frozenset[int], k: int) -> Face:
        idx = tuple(sorted(s))
        sup = tuple(j for j in range(len(self.facets)) if all(j in self.incidence[i] for i in idx))
        return Face(k, tuple(self.vertices[i] for i in idx), idx, sup)

    def faces(self, k: int) -> list[Face]:
        if not 0 <= k <= self.dim - 1:
            raise InputError(f"face dimension {k} outside 0..{self.dim - 1}")
        return [self._face(s, k) for s in self._face_sets[k]]

    def edges(self) -> list[tuple[int, int]]:
        """Vertex index pairs of the 1-faces."""
        if self.dim == 1:
            return [(0, 1)]
        return [tuple(sorted(s)) for s in self._face_sets[1]]

    def neighbors(self, i: int) -> list[int]:
        return sorted(j for e in self.edges() if i in e for j in e if j != i)

    def f_vector(self) -> list[int]:
        return [len(self._face_sets[k]) for k in range(self.dim)]

    # -- measures -----------------------------------------------------------

    def triangulate(self, order: Sequence[int] | None = None) -> list[tuple[int, ...]]:
        """Fan triangulation built recursively over the face lattice.

        At every face the apex is its first vertex according to ``order``
        (default: canonical order).
        """
        rankof = {v: r for r, v in enumerate(order)} if order is not None else None
        key = (lambda i: rankof[i]) if rankof is not None else (lambda i: i)
        sets = dict(self._face_sets)
        sets[self.dim] = [frozenset(range(len(self.vertices)))]
        memo: dict[frozenset[int], list[tuple[int, ...]]] = {}

        def tri(s: frozenset[int], k: int) -> list[tuple[int, ...]]:
            if k == 0:
                return [tuple(s)]
            if s in memo:
                return memo[s]
            apex = min(s, key=key)
            out = []
            for g in sets[k - 1]:
                if apex not in g and g <= s:
                    out += [(apex,) + t for t in tri(g, k - 1)]
            memo[s] = out
            return out

        return tri(sets[self.dim][0], self.dim)

    def volume(self) -> Fraction:
        total = Fraction(0)
        for simplex in self.triangulate():
            p0 = self.vertices[simplex[0]]
            total += abs(det([vsub(self.vertices[i], p0) for i in simplex[1:]]))
        return total / math.factorial(self.dim)

    def contains(self, x: Sequence) -> Location:
        x = qvec(x)
        if len(x) != self.dim:
            raise DimensionMismatch("point and polytope differ in dimension")
        slacks = [f.slack(x) for f in self.facets]
        if any(s < 0 for s in slacks):
            return Location(Position.OUTSIDE)
        tight = {j for j, s in enumerate(slacks) if s == 0}
        if not tight:
            return Location(Position.INTERIOR)
        idx = frozenset(i for i, inc in enumerate(self.incidence) if tight <= inc)
        return Location(Position.BOUNDARY, self._face(idx, affine_dim([self.vertices[i] for i in sorted(idx)])))

    def __contains__(self, x) -> bool:
        return all(f.contains(qvec(x)) for f in self.facets)

    # -- transforms ---------------------------------------------------------

    def transform(self, a: Sequence[Sequence[int]], w: Sequence | None = None) -> "Polytope":
        w = qvec(w) if w is not None else (Fraction(0),) * self.dim
        return Polytope.from_vertices(
            [tuple(dot(r, v) + wi for r, wi in zip(a, w)) for v in self.vertices]
        )

    def scaled(self, s) -> "Polytope":
        s = Fraction(s)
        return Polytope.from_vertices([tuple(s * x for x in v) for v in self.vertices])

    def product(self, other: "Polytope") -> "Polytope":
        return Polytope.from_vertices([u + v for u in self.vertices for v in other.vertices])


def from_vertices(points: Iterable[Sequence]) -> Polytope:
    return Polytope.from_vertices(points)


def from_halfspaces(constraints: Iterable[HalfSpace]) -> Polytope:
    return Polytope.from_halfspaces(constraints)


def faces(p: Polytope, k: int) -> list[Face]:
    return p.faces(k)


def volume(p: Polytope) -> Fraction:
    return p.volume()


def contains(p: Polytope, x: Sequence) -> Location:
    return p.contains(x)


Intersection = Union[Empty, LowerDim, Polytope]


def intersect_halfspaces(constraints: Sequence[HalfSpace], n: int) -> Intersection:
    """Intersection of a bounded set of half-spaces, of any dimension."""
    hs = sorted(set(constraints))
    pts = basic_solutions([[-Fraction(x) for x in h.normal] for h in hs], [-h.offset for h in hs])
    if not pts:
        return Empty()
    k = affine_dim(pts)
    if k == n:
        return Polytope.from_vertices(pts)
    return LowerDim(tuple(pts), k)


def intersect(p: Polytope, q: Polytope) -> Intersection:
    if p.dim != q.dim:
        raise DimensionMismatch("polytopes of different dimension")
    return intersect_halfspaces(p.facets + q.facets, p.dim)
