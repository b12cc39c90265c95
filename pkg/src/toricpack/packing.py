"""Coherent families of open simplices and the packing density.

The density of a Delzant polytope is the supremum, over coherent families of
pairwise disjoint open simplices anchored at its vertices, of their total
volume divided by the polytope's volume.  :func:`omega` computes it through
a linear relaxation over the anchor radii followed by exact validation, with
branch-and-bound refinement whenever a relaxation optimum is not realisable.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .delzant import (
    ProductCP1xCP1,
    ProjectiveSpace,
    ball_momentum_image,
    classify,
    check_delzant,
    integral_simplex_routes,
    require_delzant,
    vertex_frame,
    symplectic_volume,
    SymplecticVolume,
)
from .errors import DimensionMismatch, InvalidFamily
from .lattice import QVector, lattice_length, qvec, vadd, vscale
from .opensimplex import OpenSimplex
from .polytope import Empty, LowerDim, Polytope, intersect_halfspaces
from .vertex_enum import double_description

__all__ = [
    "OpenSimplex",
    "CoherentFamily",
    "FamilyVerdict",
    "PackingReport",
    "OmegaConfig",
    "max_radius",
    "open_disjoint",
    "validate_family",
    "family_density",
    "omega",
    "decide_perfect_packing",
    "check_two_simplex_gluing",
]


@dataclass(frozen=True)
class CoherentFamily:
    host: Polytope
    simplices: tuple[OpenSimplex, ...]

    def __post_init__(self):
        object.__setattr__(self, "simplices", tuple(self.simplices))

    @classmethod
    def from_radii(cls, host: Polytope, radii: dict) -> "CoherentFamily":
        """Family with one ball per ``{vertex (index or point): t}`` entry with ``t > 0``."""
        sims = [ball_momentum_image(host, v, t) for v, t in radii.items() if Fraction(t) > 0]
        return cls(host, tuple(sorted(sims, key=lambda s: (s.anchor, s.t))))

    def packed_volume(self) -> Fraction:
        return sum((s.volume() for s in self.simplices), Fraction(0))


@dataclass(frozen=True)
class SimplexVerdict:
    anchor_is_vertex: bool
    faces_in_boundary: bool
    integral: bool
    contained: bool

    @property
    def ok(self) -> bool:
        return self.anchor_is_vertex and self.faces_in_boundary and self.integral and self.contained


@dataclass(frozen=True)
class FamilyVerdict:
    simplices: tuple[SimplexVerdict, ...]
    disjoint: tuple[tuple[bool, ...], ...]
    size: int
    chi: int

    @property
    def size_ok(self) -> bool:
        return self.size <= self.chi

    @property
    def valid(self) -> bool:
        return self.size_ok and all(s.ok for s in self.simplices) and all(all(r) for r in self.disjoint)

    def summary(self) -> str:
        bad = [i for i, s in enumerate(self.simplices) if not s.ok]
        pairs = [
            (i, j) for i in range(self.size) for j in range(i + 1, self.size) if not self.disjoint[i][j]
        ]
        parts = []
        if not self.size_ok:
            parts.append(f"{self.size} simplices exceed chi = {self.chi}")
        if bad:
            parts.append(f"incoherent members {bad}")
        if pairs:
            parts.append(f"overlapping pairs {pairs}")
        return "; ".join(parts) or "valid"


@dataclass(frozen=True)
class PackingReport:
    lower: Fraction
    upper: Fraction
    exact: bool
    witness: CoherentFamily
    perfect: bool
    nodes: int = 0


@dataclass(frozen=True)
class OmegaConfig:
    budget: int = 64
    """Maximum number of branch-and-bound nodes expanded."""


# -- geometry of pairs ---------------------------------------------------------


def max_radius(p: Polytope, v) -> Fraction:
    """Largest admissible radius parameter of a ball anchored at vertex ``v``."""
    return min(vertex_frame(p, v).edge_lengths)


def _strictly_separated(s: OpenSimplex, t: OpenSimplex) -> bool:
    for a, b in ((s, t), (t, s)):
        for h in a.halfspaces():
            if all(h.slack(x) < 0 for x in b.closure_vertices):
                return True
    return False


def overlap_witness(s: OpenSimplex, t: OpenSimplex) -> QVector | None:
    """A point in both open simplices, or ``None`` if they are disjoint.

    The closures meet in a convex set ``I``; the open sets are disjoint iff
    ``I`` lies in the removed-face hyperplane of one of the two.  Otherwise
    the vertex centroid of ``I`` is off both hyperplanes and lies in both.
    """
    if s.dim != t.dim:
        raise DimensionMismatch("simplices of different dimension")
    if _strictly_separated(s, t):
        return None
    inter = intersect_halfspaces(s.halfspaces() + t.halfspaces(), s.dim)
    if isinstance(inter, Empty):
        return None
    verts = inter.vertices
    if all(s.level(x) == s.t for x in verts) or all(t.level(x) == t.t for x in verts):
        return None
    k = len(verts)
    return tuple(sum(c) / k for c in zip(*verts))


def open_disjoint(s: OpenSimplex, t: OpenSimplex) -> bool:
    return overlap_witness(s, t) is None


# -- family validation ---------------------------------------------------------


def _simplex_verdict(host: Polytope, s: OpenSimplex) -> SimplexVerdict:
    anchor_ok = s.anchor in host.vertices
    contained = all(x in host for x in s.closure_vertices)
    in_boundary = True
    far = s.removed_face
    for i in range(s.dim):
        face = [s.anchor] + [far[j] for j in range(s.dim) if j != i]
        if not any(all(f.slack(x) == 0 for x in face) for f in host.facets):
            in_boundary = False
            break
    by_edges, by_frame = integral_simplex_routes(s.closure_vertices, s.anchor)
    if by_edges != by_frame:
        raise AssertionError("integrality routes disagree")
    return SimplexVerdict(anchor_ok, in_boundary, by_edges, contained)


def validate_family(family: CoherentFamily) -> FamilyVerdict:
    sims = family.simplices
    verdicts = tuple(_simplex_verdict(family.host, s) for s in sims)
    k = len(sims)
    matrix = [[True] * k for _ in range(k)]
    for i, j in itertools.combinations(range(k), 2):
        matrix[i][j] = matrix[j][i] = open_disjoint(sims[i], sims[j])
    return FamilyVerdict(verdicts, tuple(map(tuple, matrix)), k, family.host.euler_characteristic)


def family_density(family: CoherentFamily) -> Fraction:
    verdict = validate_family(family)
    if not verdict.valid:
        raise InvalidFamily(verdict)
    return family.packed_volume() / family.host.volume()


def family_symplectic_ratio(family: CoherentFamily) -> Fraction:
    """Packed over total volume, both measured symplectically."""
    n = family.host.dim
    packed = SymplecticVolume(sum((s.t ** n for s in family.simplices), Fraction(0)), n)
    return packed / symplectic_volume(family.host)


# -- density -------------------------------------------------------------------


@dataclass
class _Problem:
    host: Polytope
    edges: list[tuple[int, int, Fraction]]
    frames: list
    n: int
    cache: dict = field(default_factory=dict)

    def relaxation_vertices(self, caps: tuple[Fraction, ...]) -> list[tuple[Fraction, ...]]:
        m = len(caps)
        a, b = [], []
        for i in range(m):
            e = [Fraction(0)] * m
            e[i] = Fraction(-1)
            a.append(e)
            b.append(Fraction(0))
            e = [Fraction(0)] * m
            e[i] = Fraction(1)
            a.append(e)
            b.append(caps[i])
        for i, j, length in self.edges:
            e = [Fraction(0)] * m
            e[i] = e[j] = Fraction(1)
            a.append(e)
            b.append(length)
        return double_description(a, b)

    def value(self, radii: Sequence[Fraction]) -> Fraction:
        return sum((r ** self.n for r in radii), Fraction(0)) / math.factorial(self.n)

    def simplex(self, i: int, t: Fraction) -> OpenSimplex:
        key = (i, t)
        if key not in self.cache:
            frame = self.frames[i]
            self.cache[key] = OpenSimplex(frame.vertex, frame.directions, t)
        return self.cache[key]

    def first_overlap(self, radii: Sequence[Fraction]):
        active = [i for i, r in enumerate(radii) if r > 0]
        for i, j in itertools.combinations(active, 2):
            x = overlap_witness(self.simplex(i, radii[i]), self.simplex(j, radii[j]))
            if x is not None:
                return i, j, x
        return None

    def family(self, radii: Sequence[Fraction]) -> CoherentFamily:
        sims = [self.simplex(i, r) for i, r in enumerate(radii) if r > 0]
        return CoherentFamily(self.host, tuple(sims))


def omega(p: Polytope, config: OmegaConfig | None = None) -> PackingReport:
    """Certified packing density interval with a validated witness family."""
    config = config or OmegaConfig()
    require_delzant(p)
    n = p.dim
    m = len(p.vertices)
    frames = [vertex_frame(p, i) for i in range(m)]
    edges = [(i, j, lattice_length(p.vertices[i], p.vertices[j])) for i, j in p.edges()]
    prob = _Problem(p, edges, frames, n)
    total = p.volume()

    def key(radii):
        # ties go to the lexicographically smallest radii vector (canonical vertex order)
        return tuple(radii)

    # single balls are always coherent: a valid starting incumbent
    best_val, best_radii = Fraction(-1), None
    for i in range(m):
        radii = tuple(min(frames[i].edge_lengths) if k == i else Fraction(0) for k in range(m))
        val = prob.value(radii)
        if val > best_val or (val == best_val and key(radii) < key(best_radii)):
            best_val, best_radii = val, radii

    root = tuple(min(f.edge_lengths) for f in frames)
    counter = itertools.count()
    root_verts = prob.relaxation_vertices(root)
    heap = [(-max(prob.value(v) for v in root_verts), next(counter), root, root_verts)]
    nodes = 0
    while heap:
        neg_ub, _, caps, verts = heap[0]
        # nodes whose bound ties the incumbent are still expanded: they may
        # hold a lexicographically smaller optimal assignment
        if -neg_ub < best_val or nodes >= config.budget:
            break
        heapq.heappop(heap)
        nodes += 1
        ub = -neg_ub
        by_value: dict[Fraction, list] = {}
        for v in verts:
            by_value.setdefault(prob.value(v), []).append(v)
        failed_top = None
        for val in sorted(by_value, reverse=True):
            if val < best_val:
                break
            candidates = sorted(by_value[val], key=key)
            ok = [r for r in candidates if prob.first_overlap(r) is None]
            if ok:
                if val > best_val or key(ok[0]) < key(best_radii):
                    best_val, best_radii = val, ok[0]
                break
            if val == ub:
                failed_top = candidates[0]
        if failed_top is None:
            continue
        # every disjoint assignment has t_i <= level_i(x) or t_j <= level_j(x)
        i, j, x = prob.first_overlap(failed_top)
        for k in (i, j):
            child = list(caps)
            child[k] = min(child[k], prob.simplex(k, failed_top[k]).level(x))
            child = tuple(child)
            cverts = prob.relaxation_vertices(child)
            cub = max(prob.value(v) for v in cverts)
            if cub >= best_val:
                heapq.heappush(heap, (-cub, next(counter), child, cverts))

    open_ub = max((-h[0] for h in heap), default=Fraction(0))
    lower = best_val / total
    upper = max(best_val, open_ub) / total
    witness = prob.family(best_radii)
    verdict = validate_family(witness)
    if not verdict.valid:
        raise AssertionError(f"witness failed validation: {verdict.summary()}")
    exact = lower == upper
    return PackingReport(lower, upper, exact, witness, exact and lower == 1, nodes)


# -- perfect packings ----------------------------------------------------------


@dataclass(frozen=True)
class OneParameterFamily:
    """Two balls splitting an interval at ``left + a`` for ``0 < a < lam``."""

    host: Polytope
    lam: Fraction
    parameter: str = "a"

    def at(self, a) -> CoherentFamily:
        a = Fraction(a)
        if not 0 < a < self.lam:
            raise ValueError(f"split parameter must lie in (0, {self.lam})")
        return CoherentFamily.from_radii(self.host, {0: a, 1: self.lam - a})


@dataclass(frozen=True)
class PerfectPackingDecision:
    perfect: bool
    packings: tuple
    model: object
    omega_check: PackingReport | None = None


def decide_perfect_packing(p: Polytope, config: OmegaConfig | None = None, strict_sl: bool = False) -> PerfectPackingDecision:
    require_delzant(p)
    result = classify(p, strict_sl)
    model = result.model
    packings: list = []
    if isinstance(model, ProjectiveSpace):
        if p.dim == 1:
            packings += [
                OneParameterFamily(p, model.lam),
                CoherentFamily.from_radii(p, {0: model.lam}),
                CoherentFamily.from_radii(p, {1: model.lam}),
            ]
        else:
            packings.append(CoherentFamily.from_radii(p, {0: model.lam}))
    elif isinstance(model, ProductCP1xCP1):
        edges = set(p.edges())
        for i, j in itertools.combinations(range(4), 2):
            if (i, j) not in edges:
                packings.append(CoherentFamily.from_radii(p, {i: model.lam, j: model.lam}))
    for fam in packings:
        if isinstance(fam, CoherentFamily) and family_density(fam) != 1:
            raise AssertionError("enumerated packing is not perfect")
    perfect = bool(packings)
    check = None
    if p.dim <= 2:
        check = omega(p, config)
        if check.perfect != perfect:
            raise AssertionError(f"classification says perfect={perfect}, density solver disagrees")
    return PerfectPackingDecision(perfect, tuple(packings), model, check)


def glued_simplices(n: int) -> Polytope:
    """Two unit simplices glued along ``conv{e_1..e_n}``: the origin and the far apex."""
    zero = (Fraction(0),) * n
    basis = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    apex = (Fraction(2),) if n == 1 else (Fraction(1),) * n
    return Polytope.from_vertices([zero, apex] + basis)


def check_two_simplex_gluing(n: int) -> bool:
    if n < 1:
        raise ValueError("dimension must be positive")
    return check_delzant(glued_simplices(n)).is_delzant
