from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from conftest import trees_with_points
from nmtree.bruteforce import CutGraph
from nmtree.metric import Parametrization, d_psi, epsilon_witness, psi
from nmtree.tangent import tangent_class
from nmtree.tree import TreeError, cut_basis, leq, meet, reroot, root_view, segment, point_on_segment


@pytest.fixture
def param(ytree):
    return Parametrization(root_view(ytree))


class TestPsi:
    @pytest.mark.parametrize("x, value", [("r", 1), ("b", 4), ("v-b@1/2", Fraction(5, 2)), ("v", 2), ("a", 3)])
    def test_values(self, param, P, x, value):
        assert psi(param, P(x)) == value

    def test_callable(self, param, P):
        assert param(P("b")) == 4

    def test_rerooted(self, ytree, P):
        assert psi(Parametrization(reroot(ytree, P("a"))), P("b")) == 4


class TestDistance:
    def test_a_b(self, param, P):
        assert d_psi(param, P("a"), P("b")) == (Fraction(1, 2) - Fraction(1, 3)) + (Fraction(1, 2) - Fraction(1, 4))
        assert d_psi(param, P("a"), P("b")) == Fraction(5, 12)

    @pytest.mark.parametrize("x", ["r", "v", "a", "v-b@1/3"])
    def test_zero_on_diagonal(self, param, P, x):
        assert d_psi(param, P(x), P(x)) == 0

    def test_r_v(self, param, P):
        assert d_psi(param, P("r"), P("v")) == Fraction(1, 2)


class TestEpsilonWitness:
    def test_leaf_class(self, ytree, param, P):
        atom = tangent_class(ytree, P("a"), P("v"))
        eps = epsilon_witness(param, P("a"), atom)
        assert eps == Fraction(1, 6)
        oracle = CutGraph(ytree, [P("a"), P("v")])
        near = [x for x in oracle.nodes if d_psi(param, P("a"), x) < eps]
        assert near and all(x in atom for x in near)

    def test_root_class(self, ytree, param, P):
        atom = tangent_class(ytree, P("r"), P("v"))
        eps = epsilon_witness(param, P("r"), atom)
        assert eps == Fraction(1, 2)
        oracle = CutGraph(ytree, [P("r"), P("v")])
        assert all(x in atom for x in oracle.nodes if d_psi(param, P("r"), x) < eps)

    def test_anchor_rejected(self, ytree, param, P):
        with pytest.raises(TreeError):
            epsilon_witness(param, P("v"), tangent_class(ytree, P("a"), P("v")))

    def test_outside_rejected(self, ytree, param, P):
        with pytest.raises(TreeError):
            epsilon_witness(param, P("b"), tangent_class(ytree, P("a"), P("v")))


@settings(max_examples=150, deadline=None)
@given(trees_with_points(4))
def test_metric_axioms(data):
    sk, (t, a, b, c) = data
    param = Parametrization(reroot(sk, t))
    assert (d_psi(param, a, b) == 0) == (a == b)
    assert d_psi(param, a, b) == d_psi(param, b, a)
    assert d_psi(param, a, c) <= d_psi(param, a, b) + d_psi(param, b, c)


@settings(max_examples=150, deadline=None)
@given(trees_with_points(3))
def test_meet_additivity(data):
    sk, (t, a, b) = data
    param = Parametrization(reroot(sk, t))
    m = meet(param.view, a, b)
    assert d_psi(param, a, b) == d_psi(param, a, m) + d_psi(param, m, b)


@settings(max_examples=100, deadline=None)
@given(trees_with_points(2))
def test_psi_is_affine_along_root_paths(data):
    sk, (t, c) = data
    view = reroot(sk, t)
    param = Parametrization(view)
    assert psi(param, t) == 1
    seg = segment(view, t, c)
    on = sorted((x for x in cut_basis(sk, [t, c]) if point_on_segment(x, seg)), key=lambda x: psi(param, x))
    for x, y in zip(on, on[1:]):
        assert leq(view, x, y) and psi(param, x) < psi(param, y)
        assert psi(param, y) - psi(param, x) == segment(view, x, y).length
    for x, y in zip(on, on[2:]):
        assert d_psi(param, on[0], y) >= d_psi(param, x, y)


@settings(max_examples=100, deadline=None)
@given(trees_with_points(4, min_vertices=2))
def test_ball_inside_class(data):
    sk, (base, t, a, _) = data
    assume(a != t)
    param = Parametrization(reroot(sk, base))
    atom = tangent_class(sk, a, t)
    oracle = CutGraph(sk, [base, t, a])
    for p in oracle.component(t, a):
        eps = epsilon_witness(param, p, atom)
        assert eps > 0
        assert all(x in atom for x in oracle.nodes if d_psi(param, p, x) < eps)
