from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import Y_TREE, trees_with_points
from nmtree.bruteforce import CutGraph
from nmtree.tree import (
    Point,
    PointError,
    TreeError,
    TreeFormatError,
    canonicalize,
    cut_basis,
    distance,
    format_tree,
    geodesic,
    infimum,
    leq,
    meet,
    parse_tree,
    point_along,
    point_on_segment,
    reroot,
    root_view,
    segment,
)


class TestParse:
    def test_y_tree(self, ytree):
        assert len(ytree.vertices) == 4
        assert len(ytree.edges) == 3
        assert ytree.root == "r"
        assert ytree.lengths[("v", "b")] == 2

    def test_single_vertex(self):
        sk = parse_tree("vertex r root\n")
        assert sk.vertices == ("r",)
        assert sk.edges == ()

    def test_line_order_irrelevant(self, ytree):
        lines = Y_TREE.strip().splitlines()
        assert parse_tree("\n".join(reversed(lines))) == ytree

    def test_newick(self, ytree):
        assert parse_tree("((a:1,b:2)v:1)r;") == ytree

    def test_newick_unlabelled_internal(self):
        sk = parse_tree("((a:1,b:1):3/2)r;")
        assert sk.lengths[("r", "_n1")] == Fraction(3, 2)

    def test_roundtrip(self, ytree):
        assert parse_tree(format_tree(ytree)) == ytree

    def test_rational_lengths(self):
        sk = parse_tree("vertex r root\nedge r x 3/4\n")
        assert sk.lengths[("r", "x")] == Fraction(3, 4)

    @pytest.mark.parametrize(
        "text, msg",
        [
            ("vertex r root\nedge r v 1\nedge v r 2\n", "duplicate"),
            ("vertex r root\nedge r v 1\nedge v w 1\nedge w r 1\n", "cycle"),
            ("vertex r root\nvertex x\nedge r v 1\n", "disconnected"),
            ("vertex r root\nedge r v 0\n", "non-positive"),
            ("vertex r root\nedge r v -1\n", "non-positive"),
            ("vertex r\nedge r v 1\n", "missing root"),
            ("vertex r root\nvertex v root\nedge r v 1\n", "several roots"),
            ("vertex r root\nedge r v x\n", "rational"),
            ("vertex r root\nbogus\n", "cannot parse"),
            ("((a:1,b)v:1)r;", "missing branch length"),
            ("((a:1,b:2)v:1;", "parentheses"),
        ],
    )
    def test_rejections(self, text, msg):
        with pytest.raises(TreeFormatError, match=msg):
            parse_tree(text)


class TestCanonicalize:
    def test_offset_zero_collapses(self, ytree):
        assert canonicalize(ytree, ("v", "b", 0)) == Point(vertex="v")

    def test_offset_length_collapses(self, ytree):
        assert canonicalize(ytree, ("v", "b", 2)) == Point(vertex="b")

    def test_reorientation(self, ytree):
        p = canonicalize(ytree, ("b", "v", 1))
        assert p == Point(edge=("v", "b"), offset=Fraction(1))
        assert canonicalize(ytree, "b-v@1/2") == Point(edge=("v", "b"), offset=Fraction(3, 2))

    def test_string_roundtrip(self, ytree):
        p = canonicalize(ytree, "b-v@1/2")
        assert canonicalize(ytree, str(p)) == p

    @pytest.mark.parametrize("raw", ["x", "v-x@1", "r-a@1/2", "v-b@3", "v-b@-1", "v-b@q"])
    def test_errors(self, ytree, raw):
        with pytest.raises(PointError):
            canonicalize(ytree, raw)


class TestOrder:
    def test_root_smallest(self, ytree, P):
        assert leq(root_view(ytree), P("r"), P("a"))

    def test_incomparable(self, ytree, P):
        assert not leq(root_view(ytree), P("a"), P("b"))

    def test_rerooted_at_leaf(self, ytree, P):
        # frozen from the brute-force path enumeration below
        view = reroot(ytree, P("a"))
        assert leq(view, P("v"), P("b")) is True
        oracle = CutGraph(ytree, [])
        assert oracle.leq(P("a"), P("v"), P("b")) is True

    def test_base_is_least_after_reroot(self, ytree, P):
        assert leq(reroot(ytree, P("a")), P("a"), P("r"))

    def test_reroot_back_agrees(self, ytree, P):
        there = reroot(ytree, P("v-b@1"))
        back = reroot(there.skeleton, P("r"))
        orig = root_view(ytree)
        verts = [P(v) for v in ytree.vertices]
        assert all(leq(back, x, y) == leq(orig, x, y) for x in verts for y in verts)
        assert there.skeleton is ytree


class TestMeet:
    def test_diverge_at_v(self, ytree, P):
        assert meet(root_view(ytree), P("a"), P("b")) == P("v")

    @pytest.mark.parametrize("x", ["r", "v", "a", "b", "v-b@1", "r-v@1/3"])
    def test_root_absorbs(self, ytree, P, x):
        assert meet(root_view(ytree), P("r"), P(x)) == P("r")

    def test_comparable_on_edge(self, ytree, P):
        assert meet(root_view(ytree), P("v-b@1"), P("v-b@3/2")) == P("v-b@1")

    def test_rerooted_at_leaf(self, ytree, P):
        view = reroot(ytree, P("a"))
        assert meet(view, P("r"), P("b")) == P("v")
        assert CutGraph(ytree, []).glb(P("a"), [P("r"), P("b")]) == P("v")

    def test_rerooted_at_edge_interior(self, ytree, P):
        t = P("v-b@1")
        assert meet(reroot(ytree, t), P("a"), P("r")) == P("v")
        assert CutGraph(ytree, [t]).glb(t, [P("a"), P("r")]) == P("v")

    def test_interior_base_splits_edge(self, ytree, P):
        # a and b sit on opposite sides of the base, which is therefore the meet
        t = P("v-b@1")
        assert meet(reroot(ytree, t), P("v-b@1/2"), P("v-b@3/2")) == t

    def test_index_route(self, ytree, P):
        view = reroot(ytree, P("v-b@1"))
        pts = [P(s) for s in ["r", "v", "a", "b", "v-b@1/2", "v-b@3/2", "r-v@1/2"]]
        for x in pts:
            for y in pts:
                assert meet(view, x, y) == meet(view, x, y, use_index=True)


class TestInfimum:
    def test_examples(self, ytree, P):
        view = root_view(ytree)
        assert infimum(view, [P("a"), P("b"), P("v")]) == P("v")
        assert infimum(view, [P("a")]) == P("a")
        assert infimum(view, [P("a"), P("b"), P("r")]) == P("r")

    def test_empty(self, ytree):
        with pytest.raises(TreeError):
            infimum(root_view(ytree), [])


class TestSegment:
    def test_a_to_b(self, ytree, P):
        seg = segment(root_view(ytree), P("a"), P("b"))
        assert [(a.edge, a.start, a.end) for a in seg.arcs] == [(("v", "a"), 1, 0), (("v", "b"), 0, 2)]
        assert seg.vertices == ("a", "v", "b")
        assert seg.length == 3

    def test_degenerate(self, ytree, P):
        seg = segment(root_view(ytree), P("r"), P("r"))
        assert seg.arcs == ()
        assert point_on_segment(P("r"), seg)
        assert not point_on_segment(P("v"), seg)

    def test_interior_start(self, ytree, P):
        seg = segment(root_view(ytree), P("v-b@1"), P("a"))
        assert [(a.edge, a.start, a.end) for a in seg.arcs] == [(("v", "b"), 1, 0), (("v", "a"), 0, 1)]

    @pytest.mark.parametrize("c, expected", [("v", True), ("r", False), ("v-b@1/2", True), ("v-b@2", True)])
    def test_membership(self, ytree, P, c, expected):
        seg = segment(root_view(ytree), P("a"), P("b"))
        assert point_on_segment(P(c), seg) is expected

    def test_half_open(self, ytree, P):
        seg = segment(root_view(ytree), P("a"), P("b"))
        assert not point_on_segment(P("a"), seg, include_start=False)
        assert point_on_segment(P("b"), seg, include_start=False)
        assert not point_on_segment(P("b"), seg, include_end=False)
        assert point_on_segment(P("v"), seg, include_start=False, include_end=False)

    def test_reverse_same_points(self, ytree, P):
        view = root_view(ytree)
        assert segment(view, P("a"), P("v-b@1")).same_points(segment(view, P("v-b@1"), P("a")))

    def test_base_on_segment_interior(self, ytree, P):
        # meet is the base itself; the two halves lie on one edge
        t = P("v-b@1")
        seg = segment(reroot(ytree, t), P("v-b@1/2"), P("v-b@3/2"))
        assert seg.same_points(segment(root_view(ytree), P("v-b@1/2"), P("v-b@3/2")))

    def test_point_along(self, ytree, P):
        seg = geodesic(ytree, P("a"), P("b"))
        assert point_along(ytree, seg, Fraction(3, 2)) == P("v-b@1/2")
        assert point_along(ytree, seg, 0) == P("a")
        assert point_along(ytree, seg, 3) == P("b")


def test_cut_basis_matches_oracle_nodes(ytree, P):
    pts = [P("v-b@1"), P("a")]
    assert set(cut_basis(ytree, pts)) == set(CutGraph(ytree, pts).nodes)


def test_cut_basis_y_tree(ytree):
    assert len(cut_basis(ytree, [])) == 4 + 3


# ---------------------------------------------------------------------------
# properties over random trees


@settings(max_examples=150, deadline=None)
@given(trees_with_points(4))
def test_meet_is_greatest_lower_bound(data):
    sk, (t, a, b, c) = data
    view = reroot(sk, t)
    m = meet(view, a, b)
    assert leq(view, m, a) and leq(view, m, b)
    if leq(view, c, a) and leq(view, c, b):
        assert leq(view, c, m)
    assert m == CutGraph(sk, [t, a, b, c]).glb(t, [a, b])


@settings(max_examples=150, deadline=None)
@given(trees_with_points(4))
def test_meet_commutative_associative(data):
    sk, (t, a, b, c) = data
    view = reroot(sk, t)
    assert meet(view, a, b) == meet(view, b, a)
    assert meet(view, meet(view, a, b), c) == meet(view, a, meet(view, b, c))
    assert infimum(view, [a, b, c]) == infimum(view, [c, a, b]) == infimum(view, [b, c, a])


@settings(max_examples=150, deadline=None)
@given(trees_with_points(3))
def test_segment_triangle(data):
    sk, (a, b, c) = data
    view = root_view(sk)
    ac, ab, bc = segment(view, a, c), segment(view, a, b), segment(view, b, c)
    for x in cut_basis(sk, [a, b, c]):
        if point_on_segment(x, ac):
            assert point_on_segment(x, ab) or point_on_segment(x, bc)


@settings(max_examples=150, deadline=None)
@given(trees_with_points(3))
def test_segment_base_invariance(data):
    sk, (a, b, t) = data
    ref = segment(root_view(sk), a, b)
    assert segment(reroot(sk, t), a, b).same_points(ref)
    assert ref.length == distance(sk, a, b)
    assert segment(reroot(sk, t), b, a).same_points(ref)


@settings(max_examples=150, deadline=None)
@given(trees_with_points(3))
def test_path_repr_invariants(data):
    sk, (a, b, t) = data
    seg = segment(reroot(sk, t), a, b)
    for x, y in zip(seg.arcs, seg.arcs[1:]):
        shared = set(x.edge) & set(y.edge)
        assert len(shared) == 1 or x.edge == y.edge
    assert seg.length == CutGraph(sk, [a, b]).dist(a, b)


@settings(max_examples=150, deadline=None)
@given(trees_with_points(2))
def test_base_is_least(data):
    sk, (t, x) = data
    assert leq(reroot(sk, t), t, x)


@settings(max_examples=100, deadline=None)
@given(trees_with_points(3))
def test_points_on_chain_segment_totally_ordered(data):
    sk, (t, a, b) = data
    view = reroot(sk, t)
    lo = meet(view, a, b)
    seg = segment(view, lo, b)
    on = [x for x in cut_basis(sk, [t, a, b]) if point_on_segment(x, seg)]
    for x in on:
        for y in on:
            assert leq(view, x, y) or leq(view, y, x)
