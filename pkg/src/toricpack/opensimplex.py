"""Half-open unimodular simplices: momentum images of equivariant balls."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DimensionMismatch, InputError
from .lattice import QVector, dot, inverse, is_unimodular_frame, qvec, transpose, vadd, vscale, vsub
from .polytope import HalfSpace, Polytope


@dataclass(frozen=True)
class OpenSimplex:
    """``conv{x, x + t u_1, ..., x + t u_n}`` minus the facet opposite ``x``.

    ``anchor`` is ``x``, ``directions`` the unimodular frame ``u_i`` and ``t``
    the radius parameter (the squared ball radius in momentum coordinates).
    """

    anchor: QVector
    directions: tuple[tuple[int, ...], ...]
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "anchor", qvec(self.anchor))
        object.__setattr__(self, "directions", tuple(tuple(int(c) for c in u) for u in self.directions))
        object.__setattr__(self, "t", Fraction(self.t))
        n = len(self.anchor)
        if len(self.directions) != n or any(len(u) != n for u in self.directions):
            raise DimensionMismatch("need n directions of dimension n")
        if self.t <= 0:
            raise InputError("radius parameter must be positive")
        if not is_unimodular_frame(self.directions):
            raise InputError(f"directions {self.directions} are not a lattice basis")

    @property
    def dim(self) -> int:
        return len(self.anchor)

    @property
    def removed_face(self) -> tuple[QVector, ...]:
        return tuple(vadd(self.anchor, vscale(self.t, u)) for u in self.directions)

    @property
    def closure_vertices(self) -> tuple[QVector, ...]:
        return (self.anchor,) + self.removed_face

    @cached_property
    def _coframe(self) -> tuple[tuple[int, ...], ...]:
        # rows are the dual basis: coframe[i] . directions[j] = delta_ij
        inv = inverse(transpose(self.directions))
        return tuple(tuple(int(x) for x in row) for row in inv)

    @cached_property
    def level_normal(self) -> tuple[int, ...]:
        """Integer covector taking the value 1 on every direction."""
        return tuple(sum(col) for col in zip(*self._coframe))

    def coordinates(self, x: Sequence) -> tuple[Fraction, ...]:
        d = vsub(qvec(x), self.anchor)
        return tuple(dot(row, d) for row in self._coframe)

    def level(self, x: Sequence) -> Fraction:
        """``sum_i lambda_i`` for ``x = anchor + sum_i lambda_i u_i``."""
        return dot(self.level_normal, vsub(qvec(x), self.anchor))

    def __contains__(self, x) -> bool:
        lam = self.coordinates(x)
        return all(c >= 0 for c in lam) and sum(lam) < self.t

    def halfspaces(self) -> tuple[HalfSpace, ...]:
        """H-representation of the closure."""
        hs = [HalfSpace(row, dot(row, self.anchor)) for row in self._coframe]
        eta = self.level_normal
        hs.append(HalfSpace(tuple(-c for c in eta), -(dot(eta, self.anchor) + self.t)))
        return tuple(hs)

    def closure(self) -> Polytope:
        return Polytope.from_vertices(self.closure_vertices)

    def volume(self) -> Fraction:
        return self.t ** self.dim / math.factorial(self.dim)
