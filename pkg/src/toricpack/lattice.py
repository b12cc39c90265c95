"""Exact scalars, rational vectors and integer linear algebra.

Rationals are :class:`fractions.Fraction`; points are tuples of Fractions and
integer matrices are tuples of integer row tuples.  Nothing in here rounds.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateSegment, DimensionMismatch, InputError, ZeroDirection

Rational = Fraction
QVector = tuple  # tuple[Fraction, ...]
ZMatrix = tuple  # tuple[tuple[int, ...], ...]


_RATIONAL = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def to_rational(x) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string.  Floats are rejected."""
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        m = _RATIONAL.fullmatch(x.strip())
        if not m or int(m.group(2) or 1) == 0:
            raise InputError(f"not a rational of the form p or p/q: {x!r}")
        return Fraction(int(m.group(1)), int(m.group(2) or 1))
    raise InputError(f"not an exact rational: {x!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def qvec(coords: Iterable) -> QVector:
    v = tuple(to_rational(c) for c in coords)
    if not v:
        raise InputError("empty vector")
    return v


def vsub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vadd(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def vscale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _gcd_all(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = math.gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Split a nonzero integer vector as ``c * u`` with ``u`` primitive, ``c > 0``."""
    v = tuple(int(x) for x in v)
    g = _gcd_all(abs(x) for x in v)
    if g == 0:
        raise ZeroDirection("cannot take the primitive direction of the zero vector")
    return tuple(x // g for x in v), g


def lattice_direction(d: Sequence[Fraction]) -> tuple[tuple[int, ...], Fraction]:
    """Rational version of :func:`primitive`: ``d = c * u``, ``u`` primitive integer, ``c > 0`` rational."""
    denom = math.lcm(*(Fraction(x).denominator for x in d))
    u, g = primitive([Fraction(x) * denom for x in d])
    return u, Fraction(g, denom)


def lattice_length(a: Sequence, b: Sequence) -> Fraction:
    """Lattice (unimodular-invariant) length of the segment ``[a, b]``."""
    if len(a) != len(b):
        raise DimensionMismatch("points of different dimension")
    d = vsub(b, a)
    if all(x == 0 for x in d):
        raise DegenerateSegment("segment endpoints coincide")
    return lattice_direction(d)[1]


# ---------------------------------------------------------------------------
# rational linear algebra (Gaussian elimination over Fraction)


def _rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(_rref(rows)[1]) if rows else 0


def det(rows: Sequence[Sequence]):
    """Exact determinant; returns an int for integer input."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    integral = all(isinstance(x, int) or Fraction(x).denominator == 1 for r in rows for x in r)
    if integral:
        return _bareiss([[int(x) for x in r] for r in rows])
    m = [[Fraction(x) for x in r] for r in rows]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        result *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * result


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Unique solution of a square system, or ``None`` when singular."""
    n = len(a)
    aug = [list(r) + [b[i]] for i, r in enumerate(a)]
    m, pivots = _rref(aug)
    if pivots != list(range(n)):
        return None
    return tuple(m[i][n] for i in range(n))


def inverse(a: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...] | None:
    n = len(a)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(a)]
    m, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return tuple(tuple(m[i][n:]) for i in range(n))


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : rows @ x = 0}``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -m[r][f]
        basis.append(tuple(x))
    return basis


def cofactor_normal(vectors: Sequence[Sequence]) -> tuple:
    """Generalised cross product of ``n-1`` vectors in dimension ``n``.

    The result is orthogonal to every input and is zero iff they are
    linearly dependent.
    """
    n = len(vectors) + 1
    out = []
    for i in range(n):
        minor = [[row[j] for j in range(n) if j != i] for row in vectors]
        out.append((-1) ** i * det(minor))
    return tuple(out)


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = transpose(b)
    return tuple(tuple(dot(r, c) for c in bt) for r in a)


def matvec(a: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(dot(r, x) for r in a)


def identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def is_unimodular_frame(vectors: Sequence[Sequence[int]], strict_sl: bool = False) -> bool:
    """Whether ``n`` integer vectors form a basis of ``Z^n``.

    ``strict_sl`` additionally requires the determinant (vectors as columns)
    to be ``+1``.
    """
    n = len(vectors)
    if n == 0 or any(len(v) != n for v in vectors):
        raise DimensionMismatch(f"need n vectors of dimension n, got {n} of lengths {[len(v) for v in vectors]}")
    if any(Fraction(x).denominator != 1 for v in vectors for x in v):
        return False
    d = det(transpose([[int(x) for x in v] for v in vectors]))
    return d == 1 if strict_sl else abs(d) == 1


def hnf(m: Sequence[Sequence[int]]) -> tuple[ZMatrix, ZMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H = U @ M`` and ``U`` unimodular.  ``H`` is in
    row echelon form with positive pivots, entries above each pivot reduced
    into ``[0, pivot)``, and zero rows at the bottom.
    """
    h = [[int(x) for x in r] for r in m]
    if not h or not h[0]:
        raise DimensionMismatch("empty matrix")
    ncols = len(h[0])
    if any(len(r) != ncols for r in h):
        raise DimensionMismatch("ragged matrix")
    nrows = len(h)
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    def addmul(i, j, q):  # row_i -= q * row_j
        h[i] = [x - q * y for x, y in zip(h[i], h[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    pr = 0
    for c in range(ncols):
        if pr == nrows:
            break
        while True:
            nz = [i for i in range(pr, nrows) if h[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(h[i][c]))
            swap(pr, best)
            done = True
            for i in range(pr + 1, nrows):
                if h[i][c]:
                    addmul(i, pr, h[i][c] // h[pr][c])
                    if h[i][c]:
                        done = False
            if done:
                break
        if h[pr][c] == 0:
            continue
        if h[pr][c] < 0:
            h[pr] = [-x for x in h[pr]]
            u[pr] = [-x for x in u[pr]]
        for i in range(pr):
            q = h[i][c] // h[pr][c]
            if q:
                addmul(i, pr, q)
        pr += 1
    return tuple(map(tuple, h)), tuple(map(tuple, u))


def random_unimodular(n: int, rng: random.Random, steps: int = 8, strict_sl: bool = False) -> ZMatrix:
    """Random element of GL(n, Z) (or SL) built from elementary row operations."""
    a = [list(r) for r in identity(n)]
    for _ in range(steps):
        if n > 1:
            i, j = rng.sample(range(n), 2)
            q = rng.choice([-2, -1, 1, 2])
            a[i] = [x + q * y for x, y in zip(a[i], a[j])]
            if rng.random() < 0.3:
                a[i], a[j] = a[j], a[i]
                if strict_sl:
                    a[i] = [-x for x in a[i]]
        if not strict_sl and rng.random() < 0.3:
            k = rng.randrange(n)
            a[k] = [-x for x in a[k]]
    return tuple(map(tuple, a))


def apply_affine(a: ZMatrix, w: Sequence, points: Iterable[Sequence]) -> list[tuple]:
    return [vadd(matvec(a, p), w) for p in points]
