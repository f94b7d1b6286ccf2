import pytest
from hypothesis import assume, given, settings

from conftest import trees_with_points
from nmtree.bruteforce import CutGraph
from nmtree.tangent import Direction, same_class, tangent_class, tangent_space
from nmtree.tree import TreeError, cut_basis, point_on_segment, reroot, segment


class TestSameClass:
    def test_separated_by_v(self, ytree, P):
        assert same_class(ytree, P("r"), P("a"), P("v")) is False

    def test_root_off_path(self, ytree, P):
        assert same_class(ytree, P("a"), P("b"), P("r")) is True

    def test_interior_anchor(self, ytree, P):
        b, x, t = P("b"), P("v-b@3/2"), P("v-b@1")
        assert same_class(ytree, b, x, t) is True
        assert x in CutGraph(ytree, [x, t]).component(t, b)

    def test_rejects_anchor(self, ytree, P):
        with pytest.raises(TreeError):
            same_class(ytree, P("v"), P("a"), P("v"))


class TestTangentClass:
    def test_toward_root(self, ytree, P):
        atom = tangent_class(ytree, P("r"), P("v"))
        assert atom.direction == Direction(("r", "v"), "r")
        assert str(atom.direction) == "v-r"

    def test_toward_b(self, ytree, P):
        assert tangent_class(ytree, P("b"), P("v")).direction == Direction(("v", "b"), "b")

    def test_interior_anchor_membership(self, ytree, P):
        t = P("v-a@1/2")
        atom = tangent_class(ytree, P("a"), t)
        assert atom.direction == Direction(("v", "a"), "a")
        members = {str(x) for x in cut_basis(ytree, [t]) if x in atom}
        # brute force: the component of the cut graph minus t that holds a
        oracle = {str(x) for x in CutGraph(ytree, [t]).component(t, P("a"))}
        assert members == oracle == {"a", "v-a@3/4"}
        for name in ("r", "v", "b"):
            assert P(name) not in atom

    def test_anchor_not_member(self, ytree, P):
        assert P("v") not in tangent_class(ytree, P("a"), P("v"))

    def test_rejects_anchor(self, ytree, P):
        with pytest.raises(TreeError):
            tangent_class(ytree, P("v"), P("v"))

    def test_equality_ignores_representative(self, ytree, P):
        assert tangent_class(ytree, P("b"), P("v")) == tangent_class(ytree, P("v-b@1"), P("v"))
        assert tangent_class(ytree, P("b"), P("v")) != tangent_class(ytree, P("a"), P("v"))


class TestTangentSpace:
    @pytest.mark.parametrize("t, n", [("v", 3), ("v-b@1", 2), ("a", 1), ("r", 1)])
    def test_class_counts(self, ytree, P, t, n):
        assert len(tangent_space(ytree, P(t))) == n

    def test_partition(self, ytree, P):
        t = P("v")
        space = tangent_space(ytree, t)
        for x in cut_basis(ytree, [t]):
            if x != t:
                assert sum(x in atom for atom in space.classes) == 1

    def test_single_vertex(self):
        from nmtree.tree import Point, parse_tree

        sk = parse_tree("vertex r root\n")
        assert len(tangent_space(sk, Point(vertex="r"))) == 0


@settings(max_examples=150, deadline=None)
@given(trees_with_points(4, min_vertices=2))
def test_equivalence_relation(data):
    sk, (t, a, b, c) = data
    assume(t not in (a, b, c))
    assert same_class(sk, a, a, t)
    assert same_class(sk, a, b, t) == same_class(sk, b, a, t)
    if same_class(sk, a, b, t) and same_class(sk, b, c, t):
        assert same_class(sk, a, c, t)
    assert same_class(sk, a, b, t) == (b in CutGraph(sk, [t, a, b]).component(t, a))


@settings(max_examples=150, deadline=None)
@given(trees_with_points(4, min_vertices=2))
def test_base_independent(data):
    sk, (t, a, b, s) = data
    assume(t not in (a, b))
    assert same_class(sk, a, b, t) == (not point_on_segment(t, segment(reroot(sk, s), a, b)))


@settings(max_examples=150, deadline=None)
@given(trees_with_points(3, min_vertices=2))
def test_class_equality_iff_same_class(data):
    sk, (t, a, b) = data
    assume(t not in (a, b))
    ca, cb = tangent_class(sk, a, t), tangent_class(sk, b, t)
    assert (ca == cb) == same_class(sk, a, b, t)
    assert all((x in ca) == (x in cb) for x in cut_basis(sk, [t, a, b])) == same_class(sk, a, b, t)


@settings(max_examples=100, deadline=None)
@given(trees_with_points(1, min_vertices=2))
def test_space_partitions_complement(data):
    sk, (t,) = data
    space = tangent_space(sk, t)
    assert len(space) == (sk.degree(t.vertex) if t.vertex else 2)
    for x in cut_basis(sk, [t]):
        if x != t:
            assert sum(x in atom for atom in space.classes) == 1
