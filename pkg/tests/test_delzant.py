import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricpack import catalog
from toricpack.delzant import (
    AffineMap,
    Other,
    ProductCP1xCP1,
    ProjectiveSpace,
    agl_equivalent,
    ball_momentum_image,
    blow_up,
    check_delzant,
    classify,
    integral_simplex_routes,
    is_integral_simplex,
    symplectic_volume,
    vertex_frame,
)
from toricpack.errors import (
    BallTooLarge,
    ChopTooDeep,
    DegenerateSimplex,
    NotDelzant,
    NotSimple,
)
from toricpack.lattice import random_unimodular
from toricpack.polytope import Polytope

TRAP = Polytope.from_vertices([(0, 0), (3, 0), (1, 1), (0, 1)])
TRI3 = catalog.get("cpn", 2, 3)
GLUED = catalog.get("glued-simplices", 3)


def test_check_examples():
    r = check_delzant(TRI3)
    assert r.is_delzant and r.chi == 3
    r = check_delzant(TRAP)
    assert r.is_delzant and r.chi == 4
    r = check_delzant(GLUED)
    assert not r.is_delzant
    bad = {d.vertex: d.edge_count for d in r.vertices if d.edge_count != 3}
    assert bad == {(1, 0, 0): 4, (0, 1, 0): 4, (0, 0, 1): 4}


def test_non_smooth_vertex():
    r = check_delzant(Polytope.from_vertices([(0, 0), (2, 0), (0, 1)]))
    assert not r.is_delzant
    # (2,0) has frame {(-1,0),(-2,1)} with det -1; (0,1) has det 2
    assert [d.vertex for d in r.vertices if not d.smooth] == [(0, 1)]


def test_vertex_frame_examples():
    f = vertex_frame(catalog.get("cp1xcp1", 1), (1, 1))
    assert set(f.directions) == {(-1, 0), (0, -1)} and f.edge_lengths == (1, 1)
    f = vertex_frame(TRAP, (3, 0))
    assert dict(zip(f.directions, f.edge_lengths)) == {(-1, 0): 3, (-2, 1): 1}
    f = vertex_frame(TRI3, 0)
    assert f.directions == ((0, 1), (1, 0)) and f.edge_lengths == (3, 3)
    with pytest.raises(NotSimple):
        vertex_frame(GLUED, (1, 0, 0))


def test_ball_images():
    s = ball_momentum_image(catalog.get("cp1xcp1", 2), 0, 2)
    assert set(s.closure_vertices) == {(0, 0), (2, 0), (0, 2)}
    assert (1, 1) not in s and (F(1, 2), F(1, 2)) in s and (0, 0) in s
    whole = ball_momentum_image(TRI3, 0, 3)
    assert whole.volume() == TRI3.volume()
    seg = ball_momentum_image(catalog.get("sphere"), (-1,), 1)
    assert (-1,) in seg and (F(-1, 2),) in seg and (0,) not in seg
    with pytest.raises(BallTooLarge) as err:
        ball_momentum_image(TRAP, 0, F(3, 2))
    assert err.value.edge == ((0, 0), (0, 1))


@pytest.mark.parametrize(
    "verts, anchor, expected",
    [
        ([(0, 0), (2, 0), (0, 2)], (0, 0), True),
        ([(3, 0), (2, 0), (1, 1)], (3, 0), True),
        ([(0, 0), (2, 0), (0, 1)], (0, 0), False),
        ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 1)], (0, 0, 0), True),
    ],
)
def test_integral_simplex(verts, anchor, expected):
    assert is_integral_simplex(verts, anchor) is expected


def test_integral_simplex_degenerate():
    with pytest.raises(DegenerateSimplex):
        is_integral_simplex([(0, 0), (1, 1), (2, 2)], (0, 0))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n + 1, max_size=n + 1))))
def test_integral_routes_agree(args):
    n, pts = args
    try:
        a, b = integral_simplex_routes(pts, pts[0])
    except DegenerateSimplex:
        return
    assert a == b


def test_symplectic_volume():
    v = symplectic_volume(catalog.get("sphere"))
    assert (v.coefficient, v.pi_power) == (2, 1) and str(v) == "2*pi^1"
    assert symplectic_volume(catalog.get("cpn", 2, 5)).coefficient == 25
    assert symplectic_volume(catalog.get("cp1xcp1", 1)).coefficient == 2


class TestEquivalence:
    def test_reflection(self):
        p = catalog.get("cpn", 2, 2)
        q = Polytope.from_vertices([(0, 0), (-2, 0), (0, -2)])
        t = agl_equivalent(p, q)
        assert t == AffineMap(((-1, 0), (0, -1)), (0, 0))
        # -I has det +1 in the plane, so strict SL also finds it
        assert agl_equivalent(p, q, strict_sl=True) is not None

    def test_orientation(self):
        # a chiral quadrilateral: its mirror image is reachable only with det -1
        p = Polytope.from_vertices([(0, 0), (4, 0), (1, 1), (0, 3)])
        q = p.transform([[0, 1], [1, 0]])
        assert agl_equivalent(p, q) is not None
        assert agl_equivalent(p, q, strict_sl=True) is None
        # the trapezoid's mirror image is also a rotated copy
        assert agl_equivalent(TRAP, TRAP.transform([[0, 1], [1, 0]]), strict_sl=True) is not None

    def test_different_sizes(self):
        assert agl_equivalent(TRI3, catalog.get("cpn", 2, 2)) is None

    def test_translation(self):
        t = agl_equivalent(TRAP, TRAP.transform([[1, 0], [0, 1]], (5, 7)))
        assert t == AffineMap(((1, 0), (0, 1)), (5, 7))


class TestClassify:
    def test_examples(self):
        assert classify(catalog.get("cpn", 3, 2)).model == ProjectiveSpace(3, F(2))
        assert classify(catalog.get("cp1xcp1", 1)).model == ProductCP1xCP1(F(1))
        r = classify(TRAP)
        assert r.model == Other() and r.transform is None
        assert classify(catalog.get("cp1xcp2")).model == Other()

    def test_rejects_non_delzant(self):
        with pytest.raises(NotDelzant):
            classify(GLUED)

    @given(st.sampled_from(["cpn", "cp1xcp1", "hirzebruch", "interval"]), st.integers(0, 10**6))
    def test_invariance(self, name, seed):
        p = catalog.get(name)
        rng = random.Random(seed)
        a = random_unimodular(p.dim, rng)
        w = tuple(F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(p.dim))
        q = p.transform(a, w)
        before, after = classify(p), classify(q)
        assert before.model == after.model
        if after.transform is not None:
            assert sorted(after.transform.apply(after.model.polytope().vertices)) == list(q.vertices)


class TestBlowUp:
    def test_examples(self):
        q = blow_up(TRI3, 0, 1)
        assert q.vertices == ((0, 1), (0, 3), (1, 0), (3, 0)) and q.volume() == 4
        pent = blow_up(catalog.get("cp1xcp1", 2), (0, 0), 1)
        assert len(pent.vertices) == 5 and pent.volume() == F(7, 2)
        assert check_delzant(pent).is_delzant
        assert blow_up(catalog.get("interval", 2), 0, 1).vertices == ((1,), (2,))

    def test_too_deep(self):
        with pytest.raises(ChopTooDeep) as err:
            blow_up(catalog.get("interval", 2), 0, 2)
        assert err.value.edge == ((0,), (2,))
        with pytest.raises(ChopTooDeep):
            blow_up(TRAP, 0, 1)

    @given(st.sampled_from(["cpn", "cp1xcp1", "hirzebruch", "cp1xcp2"]), st.data())
    def test_volume_bookkeeping(self, name, data):
        p = catalog.get(name, *(() if name == "hirzebruch" else (2,) if name != "cpn" else (3, 2)))
        v = data.draw(st.integers(0, len(p.vertices) - 1))
        cap = min(vertex_frame(p, v).edge_lengths)
        t = cap * data.draw(st.fractions(F(1, 16), F(15, 16), max_denominator=16))
        try:
            q = blow_up(p, v, t)
        except ChopTooDeep:
            return
        n = p.dim
        assert q.volume() == p.volume() - t ** n / math.factorial(n)
        assert symplectic_volume(q).coefficient == symplectic_volume(p).coefficient - t ** n
        assert len(q.vertices) == len(p.vertices) + n - 1
