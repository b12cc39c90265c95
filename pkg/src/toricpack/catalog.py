"""Built-in polytopes: the model spaces and the standard counterexamples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .delzant import check_delzant, simplex_model, square_model
from .errors import InputError
from .lattice import to_rational
from .packing import glued_simplices
from .polytope import Polytope


@dataclass(frozen=True)
class Param:
    name: str
    kind: type  # int or Fraction
    default: object


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[Param, ...]
    generator: Callable[..., Polytope]
    description: str
    negative: bool = False

    def build(self, *args) -> Polytope:
        if len(args) > len(self.params):
            raise InputError(f"{self.name} takes at most {len(self.params)} parameters")
        values = []
        for i, p in enumerate(self.params):
            raw = args[i] if i < len(args) else p.default
            if p.kind is int:
                try:
                    values.append(int(raw))
                except (TypeError, ValueError):
                    raise InputError(f"parameter {p.name} of {self.name} must be an integer") from None
            else:
                values.append(to_rational(raw) if not isinstance(raw, Fraction) else raw)
        p = self.generator(*values)
        if not self.negative and not check_delzant(p).is_delzant:
            raise InputError(f"{self.name}{tuple(map(str, values))} is not a Delzant polytope")
        return p


def cpn(n: int, lam) -> Polytope:
    if n < 1:
        raise InputError("cpn needs n >= 1")
    if Fraction(lam) <= 0:
        raise InputError("lambda must be positive")
    return simplex_model(n, lam)


def cp1xcp1(lam) -> Polytope:
    if Fraction(lam) <= 0:
        raise InputError("lambda must be positive")
    return square_model(lam)


def interval(lam) -> Polytope:
    return cpn(1, lam)


def sphere() -> Polytope:
    """``[-1, 1]``: the round unit sphere with half the standard area form."""
    return Polytope.from_vertices([(-1,), (1,)])


def hirzebruch(long=3, short=1, height=1) -> Polytope:
    """Trapezoid ``conv{(0,0), (long,0), (short,height), (0,height)}``.

    Delzant exactly when ``(long - short) / height`` is a non-negative integer.
    """
    long, short, height = Fraction(long), Fraction(short), Fraction(height)
    if not (0 < short <= long and height > 0):
        raise InputError("hirzebruch needs 0 < short <= long and height > 0")
    return Polytope.from_vertices([(0, 0), (long, 0), (short, height), (0, height)])


def cp1xcp2(lam=1) -> Polytope:
    return interval(lam).product(cpn(2, lam))


def ball_image(n: int, t) -> Polytope:
    """Closure of the momentum image of the ball with squared radius ``t``."""
    return cpn(n, t)


def glued(n: int) -> Polytope:
    if n < 1:
        raise InputError("glued-simplices needs n >= 1")
    return glued_simplices(n)


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("cpn", (Param("n", int, 2), Param("lambda", Fraction, 1)), cpn,
                     "projective space CP^n with lambda times the Fubini-Study form"),
        CatalogEntry("cp1xcp1", (Param("lambda", Fraction, 1),), cp1xcp1, "the square [0, lambda]^2"),
        CatalogEntry("interval", (Param("lambda", Fraction, 1),), interval, "CP^1 as the interval [0, lambda]"),
        CatalogEntry("sphere", (), sphere, "the interval [-1, 1]"),
        CatalogEntry("hirzebruch",
                     (Param("long", Fraction, 3), Param("short", Fraction, 1), Param("height", Fraction, 1)),
                     hirzebruch, "Hirzebruch trapezoid"),
        CatalogEntry("cp1xcp2", (Param("lambda", Fraction, 1),), cp1xcp2, "prism [0, lambda] x lambda*simplex"),
        CatalogEntry("ball-image", (Param("n", int, 2), Param("t", Fraction, 1)), ball_image,
                     "closed momentum image of a ball of squared radius t"),
        CatalogEntry("glued-simplices", (Param("n", int, 3),), glued,
                     "two unit simplices glued along a facet", negative=True),
    ]
}


# Short names used on the command line: cp1..cp6 fix n, the rest rename.
ALIASES: dict[str, tuple[str, tuple]] = {f"cp{n}": ("cpn", (n,)) for n in range(1, 7)}
ALIASES.update({"square": ("cp1xcp1", ()), "glued-tetrahedra": ("glued-simplices", (3,))})


def resolve(name: str, *args) -> tuple[CatalogEntry, tuple]:
    """Entry and positional arguments; ``key=value`` arguments are matched by parameter name."""
    fixed: tuple = ()
    if name in ALIASES:
        name, fixed = ALIASES[name]
    try:
        entry = CATALOG[name]
    except KeyError:
        known = ", ".join([*CATALOG, *ALIASES])
        raise InputError(f"unknown catalog entry {name!r}; known: {known}") from None
    names = [p.name for p in entry.params]
    values: dict[str, object] = dict(zip(names, fixed))
    free = [n for n in names if n not in values]
    for a in map(str, args):
        key, eq, val = a.partition("=")
        if eq:
            key = {"λ": "lambda", "lam": "lambda"}.get(key, key)
            if key not in names:
                raise InputError(f"{entry.name} has no parameter {key!r}")
            values[key] = val
            if key in free:
                free.remove(key)
        elif free:
            values[free.pop(0)] = a
        else:
            raise InputError(f"{entry.name} takes at most {len(names)} parameters")
    missing = [n for n in names if n not in values]
    for m in missing:
        values[m] = next(p.default for p in entry.params if p.name == m)
    return entry, tuple(values[n] for n in names)


def get(name: str, *args) -> Polytope:
    entry, values = resolve(name, *args)
    return entry.build(*values)
