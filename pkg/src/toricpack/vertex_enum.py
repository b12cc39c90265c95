"""Exact vertex enumeration of bounded polyhedra ``{x : A x <= b}``.

Two independent routes:

* :func:`basic_solutions` tries every ``n``-subset of constraints.  It is
  simple and obviously correct but combinatorial in the number of rows, so
  it is used for the small systems behind hulls and intersections.
* :func:`double_description` is the incremental double description method
  (Motzkin et al.) on the homogenised cone, with the combinatorial adjacency
  test.  It handles the packing relaxations, which have one variable per
  polytope vertex.

The test-suite checks the two against each other.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import Unbounded
from .lattice import _rref, solve

Row = Sequence[Fraction]


def basic_solutions(a: Sequence[Row], b: Sequence[Fraction]) -> list[tuple[Fraction, ...]]:
    """All feasible points where ``n`` linearly independent constraints are tight."""
    if not a:
        return []
    n = len(a[0])
    rows = list(zip(map(tuple, a), b))
    found = set()
    for combo in combinations(range(len(rows)), n):
        x = solve([rows[i][0] for i in combo], [rows[i][1] for i in combo])
        if x is None or x in found:
            continue
        if all(sum(ai * xi for ai, xi in zip(row, x)) <= bi for row, bi in rows):
            found.add(x)
    return sorted(found)


def _int_row(row: Sequence[Fraction]) -> list[int]:
    denom = math.lcm(*(Fraction(x).denominator for x in row))
    ints = [int(Fraction(x) * denom) for x in row]
    g = math.gcd(*ints)
    return [x // g for x in ints] if g > 1 else ints


def _primitive_int(v: list[int]) -> tuple[int, ...]:
    g = math.gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def double_description(a: Sequence[Row], b: Sequence[Fraction]) -> list[tuple[Fraction, ...]]:
    """Vertices of the bounded polytope ``{x : A x <= b}``; ``[]`` when empty.

    Raises :class:`Unbounded` if the polyhedron has a recession direction.
    """
    if not a:
        return []
    m = len(a[0])
    d = m + 1
    # cone {y = (x, s) : h . y >= 0}
    hs = [_int_row([-Fraction(x) for x in row] + [Fraction(bi)]) for row, bi in zip(a, b)]
    hs.append([0] * m + [1])

    # initial: d linearly independent rows
    basis: list[int] = []
    for i in range(len(hs)):
        if len(_rref([hs[j] for j in basis + [i]])[1]) == len(basis) + 1:
            basis.append(i)
            if len(basis) == d:
                break
    if len(basis) < d:
        raise Unbounded("constraint normals do not span the space")

    inv = _rref([list(hs[i]) + [int(k == j) for j in range(d)] for k, i in enumerate(basis)])[0]
    inv = [row[d:] for row in inv]  # H_K^{-1}
    rays: list[tuple[int, ...]] = []
    zsets: list[int] = []
    basis_mask = sum(1 << i for i in basis)
    for j, i in enumerate(basis):
        col = [inv[r][j] for r in range(d)]
        rays.append(_primitive_int(_int_row(col) if any(col) else [0] * d))
        zsets.append(basis_mask & ~(1 << i))

    for i in range(len(hs)):
        if basis_mask >> i & 1:
            continue
        h = hs[i]
        vals = [sum(x * y for x, y in zip(h, r)) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        new_rays = [rays[k] for k in pos]
        new_z = [zsets[k] for k in pos]
        for k in zero:
            new_rays.append(rays[k])
            new_z.append(zsets[k] | (1 << i))
        for p in pos:
            for q in neg:
                common = zsets[p] & zsets[q]
                if common.bit_count() < d - 2:
                    continue
                if any(
                    r != p and r != q and zsets[r] & common == common for r in range(len(rays))
                ):
                    continue
                vp, vq = vals[p], -vals[q]
                ray = [vp * y + vq * x for x, y in zip(rays[p], rays[q])]
                new_rays.append(_primitive_int(ray))
                new_z.append(common | (1 << i))
        rays, zsets = new_rays, new_z

    vertices = set()
    for r in rays:
        if r[-1] == 0:
            if any(r):
                raise Unbounded("polyhedron has a recession direction")
            continue
        vertices.add(tuple(Fraction(x, r[-1]) for x in r[:-1]))
    return sorted(vertices)
