"""Independent reference computations used to freeze expected values.

Nothing here imports the library's linear algebra or hull code.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def det_cofactor(m) -> Fraction:
    m = [[Fraction(x) for x in row] for row in m]
    if len(m) == 1:
        return m[0][0]
    total = Fraction(0)
    for j, a in enumerate(m[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * a * det_cofactor(minor)
    return total


def lattice_length(a, b) -> Fraction:
    d = [Fraction(y) - Fraction(x) for x, y in zip(a, b)]
    den = math.lcm(*(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    return Fraction(math.gcd(*ints), den)


def cyclic_order(points):
    cx = sum(float(p[0]) for p in points) / len(points)
    cy = sum(float(p[1]) for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(float(p[1]) - cy, float(p[0]) - cx))


def shoelace(points) -> Fraction:
    pts = [tuple(map(Fraction, p)) for p in cyclic_order(list(points))]
    s = Fraction(0)
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        s += x1 * y2 - x2 * y1
    return abs(s) / 2


def scipy_volume(points) -> float:
    from scipy.spatial import ConvexHull

    return ConvexHull([[float(x) for x in p] for p in points]).volume


def simplex_closure(anchor, directions, t):
    anchor = tuple(Fraction(x) for x in anchor)
    return [anchor] + [tuple(a + t * u for a, u in zip(anchor, d)) for d in directions]


def _axes(poly):
    k = len(poly)
    for i in range(k):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % k]
        yield (y2 - y1, x1 - x2)


def interiors_disjoint(a, b) -> bool:
    """Separating-axis test for two closed convex polygons (or intervals) with nonempty interior."""
    if len(a[0]) == 1:
        return max(a)[0] <= min(b)[0] or max(b)[0] <= min(a)[0]
    a, b = cyclic_order(a), cyclic_order(b)
    for ax in itertools.chain(_axes(a), _axes(b)):
        pa = [ax[0] * p[0] + ax[1] * p[1] for p in a]
        pb = [ax[0] * p[0] + ax[1] * p[1] for p in b]
        if max(pa) <= min(pb) or max(pb) <= min(pa):
            return True
    return False


def grid(cap: Fraction, qmax: int = 8) -> list[Fraction]:
    vals = {Fraction(p, q) for q in range(1, qmax + 1) for p in range(1, int(cap * q) + 1)}
    return sorted(v for v in vals if v <= cap)


def grid_search_omega(vertices, frames, caps, volume, qmax: int = 8):
    """Best density over radii drawn from the rational grid (plus 0 = no ball).

    ``frames[i]`` is the list of primitive edge directions at ``vertices[i]``.
    Returns (density, radii).
    """
    n = len(vertices[0])
    m = len(vertices)
    options = [[Fraction(0)] + grid(caps[i], qmax) for i in range(m)]
    options = [sorted(o, reverse=True) for o in options]
    shapes = {}

    def shape(i, t):
        if (i, t) not in shapes:
            shapes[i, t] = simplex_closure(vertices[i], frames[i], t)
        return shapes[i, t]

    compat = {}

    def ok(i, ti, j, tj):
        key = (i, ti, j, tj)
        if key not in compat:
            compat[key] = interiors_disjoint(shape(i, ti), shape(j, tj))
        return compat[key]

    best = [Fraction(-1), None]
    tail = [sum(caps[k] ** n for k in range(i, m)) for i in range(m)] + [0]

    def dfs(i, chosen, value):
        if value + tail[i] <= best[0]:
            return
        if i == m:
            if value > best[0] or (value == best[0] and tuple(chosen) < best[1]):
                best[0], best[1] = value, tuple(chosen)
            return
        for t in options[i]:
            if t == 0 or all(chosen[j] == 0 or ok(j, chosen[j], i, t) for j in range(i)):
                chosen.append(t)
                dfs(i + 1, chosen, value + t ** n)
                chosen.pop()

    dfs(0, [], Fraction(0))
    return best[0] / math.factorial(n) / volume, best[1]
