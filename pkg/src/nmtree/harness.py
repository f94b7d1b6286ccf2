"""Randomized, reproducible verification of the tree/topology properties.

Each registered :class:`Property` has a generator that draws one case (a plain
JSON-able dict: serialized tree, point strings, region expressions) and a
checker that returns ``None`` or a failure message.  Because cases are plain
data, a failure record can be fed back to :func:`replay` on its own.
"""
from __future__ import annotations

import itertools
import json
import os
import random
import time
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from typing import Callable, Iterable

from .bruteforce import CutGraph
from .metric import Parametrization, d_psi, epsilon_witness
from .regions import (
    Complement,
    Empty,
    Intersection,
    RegionDescriptor,
    Singleton,
    StrictUpSet,
    Union,
    UpSet,
    Whole,
    chain_family,
    cut_points,
    hausdorff_witness,
    inaccessibility_violation,
    is_inaccessible_by_directed_joins,
    is_scott_open,
    is_upper_set,
    member,
    parse_region,
    regions_disjoint,
    weak_open_witness,
)
from .tangent import TangentClassAtom, same_class, tangent_class, tangent_space
from .tree import (
    OrderView,
    Point,
    TreeError,
    TreeSkeleton,
    canonicalize,
    cut_basis,
    format_tree,
    geodesic,
    infimum,
    leq,
    lt,
    meet,
    parse_tree,
    point_on_segment,
    reroot,
    root_view,
    segment,
)

SEED_ENV = "NMTREE_SEED"

__all__ = [
    "SEED_ENV",
    "GeneratorConfig",
    "Failure",
    "PropertyReport",
    "Property",
    "PROPERTIES",
    "register",
    "generate_skeleton",
    "random_point",
    "run_property",
    "run_all",
    "replay",
]


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw, 0)
    except ValueError as exc:
        raise TreeError(f"{SEED_ENV} must be an integer, got {raw!r}") from exc


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = field(default_factory=default_seed)
    min_vertices: int = 4
    max_vertices: int = 12
    max_numerator: int = 16
    max_denominator: int = 16
    samples: int = 1000

    def __post_init__(self) -> None:
        if not 1 <= self.min_vertices <= self.max_vertices:
            raise TreeError(f"invalid vertex range {self.min_vertices}..{self.max_vertices}")
        if self.max_numerator < 1 or self.max_denominator < 1:
            raise TreeError("edge length bounds must be positive")
        if self.samples < 0:
            raise TreeError("samples must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise TreeError("seed must be a 64-bit unsigned integer")


def generate_skeleton(config: GeneratorConfig, rng: random.Random | None = None) -> TreeSkeleton:
    """Random attachment tree: vertex ``i`` hangs off a uniformly chosen earlier vertex."""
    rng = rng or random.Random(config.seed)
    n = rng.randint(config.min_vertices, config.max_vertices)
    names = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(1, n):
        length = Fraction(rng.randint(1, config.max_numerator), rng.randint(1, config.max_denominator))
        edges.append((names[rng.randrange(i)], names[i], length))
    return TreeSkeleton(names, edges, rng.choice(names))


def random_point(sk: TreeSkeleton, rng: random.Random) -> Point:
    """A vertex half of the time, otherwise a rational interior point of an edge."""
    if not sk.lengths or rng.random() < 0.5:
        return Point(vertex=rng.choice(sk.vertices))
    edge = rng.choice(sk.edges)
    d = rng.randint(2, 8)
    return Point(edge=edge, offset=sk.lengths[edge] * Fraction(rng.randint(1, d - 1), d))


def _other_point(sk: TreeSkeleton, rng: random.Random, avoid: Point) -> Point | None:
    if not sk.lengths:
        return None
    while True:
        p = random_point(sk, rng)
        if p != avoid:
            return p


# ---------------------------------------------------------------------------
# reports


@dataclass
class Failure:
    property: str
    index: int
    message: str
    case: dict

    def to_line(self) -> str:
        return json.dumps(
            {"property": self.property, "index": self.index, "message": self.message, "case": self.case}
        )

    @classmethod
    def from_line(cls, line: str) -> Failure:
        try:
            d = json.loads(line)
            return cls(d["property"], int(d["index"]), str(d["message"]), dict(d["case"]))
        except (ValueError, KeyError, TypeError) as exc:
            raise TreeError(f"malformed failure record: {exc}") from exc


@dataclass
class PropertyReport:
    property: str
    statement: str
    cases: int
    vacuous: int
    failures: list[Failure]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"{status} {self.property}: {self.cases} cases, {self.vacuous} vacuous, "
            f"{len(self.failures)} failures ({self.elapsed:.2f}s)"
        )

    def to_lines(self) -> list[str]:
        head = {
            "property": self.property,
            "statement": self.statement,
            "cases": self.cases,
            "vacuous": self.vacuous,
            "failures": len(self.failures),
            "elapsed": self.elapsed,
        }
        return [json.dumps(head)] + [f.to_line() for f in self.failures]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> PropertyReport:
        lines = [ln for ln in lines if ln.strip()]
        if not lines:
            raise TreeError("empty report")
        try:
            head = json.loads(lines[0])
            report = cls(
                head["property"], head["statement"], head["cases"], head["vacuous"], [], head["elapsed"]
            )
            expected = head["failures"]
        except (ValueError, KeyError) as exc:
            raise TreeError(f"malformed report header: {exc}") from exc
        report.failures = [Failure.from_line(ln) for ln in lines[1:]]
        if len(report.failures) != expected:
            raise TreeError(f"report announces {expected} failures but carries {len(report.failures)}")
        return report


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Property:
    name: str
    statement: str
    generate: Callable[[random.Random, GeneratorConfig], dict | None]
    check: Callable[[dict], str | None]


PROPERTIES: dict[str, Property] = {}


def register(name: str, statement: str, generate: Callable[[random.Random, GeneratorConfig], dict | None]):
    def deco(check: Callable[[dict], str | None]) -> Callable[[dict], str | None]:
        PROPERTIES[name] = Property(name, statement, generate, check)
        return check

    return deco


def _case_rng(config: GeneratorConfig, name: str, index: int) -> random.Random:
    return random.Random(f"{config.seed}:{name}:{index}")


def run_property(name: str, config: GeneratorConfig) -> PropertyReport:
    try:
        prop = PROPERTIES[name]
    except KeyError:
        raise TreeError(f"unknown property {name!r}") from None
    start = time.perf_counter()
    cases = vacuous = 0
    failures = []
    for i in range(config.samples):
        case = prop.generate(_case_rng(config, name, i), config)
        if case is None:
            vacuous += 1
            continue
        cases += 1
        msg = _run_check(prop, case)
        if msg is not None:
            failures.append(Failure(name, i, msg, case))
    return PropertyReport(name, prop.statement, cases, vacuous, failures, time.perf_counter() - start)


def _run_check(prop: Property, case: dict) -> str | None:
    try:
        return prop.check(case)
    except TreeError as exc:
        return f"{type(exc).__name__}: {exc}"


def run_all(config: GeneratorConfig, names: Iterable[str] | None = None) -> list[PropertyReport]:
    return [run_property(n, config) for n in (names or sorted(PROPERTIES))]


def replay(record: Failure | dict | str) -> PropertyReport:
    """Re-run exactly the one case stored in a failure record."""
    if isinstance(record, str):
        record = Failure.from_line(record)
    elif isinstance(record, dict):
        try:
            record = Failure(record["property"], int(record["index"]), record.get("message", ""), dict(record["case"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise TreeError(f"malformed failure record: {exc}") from exc
    prop = PROPERTIES.get(record.property)
    if prop is None:
        raise TreeError(f"unknown property {record.property!r}")
    start = time.perf_counter()
    try:
        msg = _run_check(prop, record.case)
    except (KeyError, TypeError, ValueError) as exc:
        raise TreeError(f"malformed case in failure record: {exc}") from exc
    failures = [] if msg is None else [Failure(record.property, record.index, msg, record.case)]
    return PropertyReport(record.property, prop.statement, 1, 0, failures, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# case plumbing


def _tree(rng: random.Random, config: GeneratorConfig) -> TreeSkeleton:
    return generate_skeleton(config, rng)


def _load(case: dict) -> tuple[TreeSkeleton, Callable[[str], Point]]:
    sk = parse_tree(case["tree"])
    return sk, lambda s: canonicalize(sk, s)


def _view(sk: TreeSkeleton, case: dict, key: str = "base") -> OrderView:
    return reroot(sk, case[key]) if key in case else root_view(sk)


def _maybe_base(sk: TreeSkeleton, rng: random.Random) -> Point:
    return Point(vertex=sk.root) if rng.random() < 0.3 else random_point(sk, rng)


def _gen_points(*names: str, base: bool = True):
    def gen(rng: random.Random, config: GeneratorConfig) -> dict:
        sk = _tree(rng, config)
        case = {"tree": format_tree(sk)}
        if base:
            case["base"] = str(_maybe_base(sk, rng))
        for n in names:
            case[n] = str(random_point(sk, rng))
        return case

    return gen


def _gen_class(*names: str, base: bool = True):
    """Case with an anchor ``t`` and a point ``a != t`` plus extra named points."""

    def gen(rng: random.Random, config: GeneratorConfig) -> dict | None:
        sk = _tree(rng, config)
        t = random_point(sk, rng)
        a = _other_point(sk, rng, t)
        if a is None:
            return None
        case = {"tree": format_tree(sk), "t": str(t), "a": str(a)}
        if base:
            case["base"] = str(_maybe_base(sk, rng))
        for n in names:
            case[n] = str(random_point(sk, rng))
        return case

    return gen


def _nodes_disagree(what: str, x: Point, lib: bool, oracle: bool) -> str:
    return f"{what} at {x}: library says {lib}, brute force says {oracle}"


# ---------------------------------------------------------------------------
# order axioms


@register("axiom-meet-glb", "meet(a,b) is the greatest common lower bound of a and b", _gen_points("a", "b", "c"))
def _check_meet_glb(case: dict) -> str | None:
    sk, P = _load(case)
    view = _view(sk, case)
    a, b, c = P(case["a"]), P(case["b"]), P(case["c"])
    oracle = CutGraph(sk, [view.base, a, b, c])
    m = meet(view, a, b)
    expected = oracle.glb(view.base, [a, b])
    if m != expected:
        return f"meet({a},{b}) = {m}, brute force greatest lower bound is {expected}"
    if not (leq(view, m, a) and leq(view, m, b)):
        return f"meet {m} is not below both {a} and {b}"
    if leq(view, c, a) and leq(view, c, b) and not leq(view, c, m):
        return f"{c} is a lower bound of {a},{b} but not below the meet {m}"
    for x in (a, b, c, m):
        for y in (a, b, c, m):
            if leq(view, x, y) != oracle.leq(view.base, x, y):
                return _nodes_disagree(f"{x} <= {y}", x, leq(view, x, y), oracle.leq(view.base, x, y))
    return None


def _gen_set(rng: random.Random, config: GeneratorConfig) -> dict:
    sk = _tree(rng, config)
    k = rng.randint(2, 5)
    return {
        "tree": format_tree(sk),
        "base": str(_maybe_base(sk, rng)),
        "set": [str(random_point(sk, rng)) for _ in range(k)],
        "shuffle": rng.randrange(2**32),
    }


@register(
    "axiom-infimum-folds",
    "infimum of a finite set is the folded meet, independent of order; meet is commutative and associative",
    _gen_set,
)
def _check_infimum(case: dict) -> str | None:
    sk, P = _load(case)
    view = _view(sk, case)
    pts = [P(s) for s in case["set"]]
    inf = infimum(view, pts)
    oracle = CutGraph(sk, [view.base, *pts])
    expected = oracle.glb(view.base, pts)
    if inf != expected:
        return f"infimum = {inf}, brute force greatest lower bound is {expected}"
    rng = random.Random(case["shuffle"])
    for _ in range(4):
        perm = pts[:]
        rng.shuffle(perm)
        if infimum(view, perm) != inf:
            return f"infimum depends on order: {[str(p) for p in perm]}"
    for x, y in itertools.combinations(pts, 2):
        if meet(view, x, y) != meet(view, y, x):
            return f"meet not commutative on {x}, {y}"
    x, y, z = pts[0], pts[1], pts[-1]
    if meet(view, meet(view, x, y), z) != meet(view, x, meet(view, y, z)):
        return f"meet not associative on {x}, {y}, {z}"
    return None


@register(
    "meet-index-agreement",
    "meets from the LCA index equal meets from path comparison",
    _gen_points("a", "b"),
)
def _check_index(case: dict) -> str | None:
    sk, P = _load(case)
    view = _view(sk, case)
    a, b = P(case["a"]), P(case["b"])
    slow, fast = meet(view, a, b), meet(view, a, b, use_index=True)
    if slow != fast:
        return f"meet({a},{b}) is {slow} by path walking but {fast} via the index"
    return None


# ---------------------------------------------------------------------------
# segments


@register(
    "lemma-segment-triangle",
    "[a,c] is contained in [a,b] u [b,c]",
    _gen_points("a", "b", "c", base=False),
)
def _check_triangle(case: dict) -> str | None:
    sk, P = _load(case)
    view = root_view(sk)
    a, b, c = P(case["a"]), P(case["b"]), P(case["c"])
    ac, ab, bc = segment(view, a, c), segment(view, a, b), segment(view, b, c)
    oracle = CutGraph(sk, [a, b, c])
    for x in cut_basis(sk, [a, b, c]):
        on_ac = point_on_segment(x, ac)
        if on_ac != oracle.on_path(x, a, c):
            return _nodes_disagree(f"membership in [{a},{c}]", x, on_ac, not on_ac)
        if on_ac and not (point_on_segment(x, ab) or point_on_segment(x, bc)):
            return f"{x} is on [{a},{c}] but on neither [{a},{b}] nor [{b},{c}]"
    return None


@register(
    "segment-base-invariance",
    "[a,b] is the same point set under every re-rooted order",
    _gen_points("a", "b", "t1", "t2", base=False),
)
def _check_segment_invariance(case: dict) -> str | None:
    sk, P = _load(case)
    a, b = P(case["a"]), P(case["b"])
    ref = segment(root_view(sk), a, b)
    if ref.length != geodesic(sk, a, b).length:
        return f"[{a},{b}] has length {ref.length}, distance is {geodesic(sk, a, b).length}"
    for key in ("t1", "t2"):
        t = P(case[key])
        seg = segment(reroot(sk, t), a, b)
        if not seg.same_points(ref):
            return f"[{a},{b}] under base {t} is {seg}, under the root it is {ref}"
    oracle = CutGraph(sk, [a, b, P(case["t1"]), P(case["t2"])])
    for x in oracle.nodes:
        if point_on_segment(x, ref) != oracle.on_path(x, a, b):
            return _nodes_disagree(f"membership in [{a},{b}]", x, point_on_segment(x, ref), oracle.on_path(x, a, b))
    return None


@register(
    "reroot-base-smallest",
    "t is the smallest element of the order based at t; rerooting leaves the skeleton intact",
    _gen_points("t", "x1", "x2", "x3", base=False),
)
def _check_reroot(case: dict) -> str | None:
    sk, P = _load(case)
    t = P(case["t"])
    view = reroot(sk, t)
    if view.skeleton != sk:
        return "rerooting changed the skeleton"
    for key in ("x1", "x2", "x3"):
        x = P(case[key])
        if not leq(view, t, x):
            return f"base {t} is not below {x}"
    back = reroot(view.skeleton, Point(vertex=sk.root))
    orig = root_view(sk)
    for u in sk.vertices:
        for w in sk.vertices:
            pu, pw = Point(vertex=u), Point(vertex=w)
            if leq(back, pu, pw) != leq(orig, pu, pw):
                return f"rerooting back to the root changed {u} <= {w}"
    return None


def _gen_comparable(rng: random.Random, config: GeneratorConfig) -> dict:
    sk = _tree(rng, config)
    base = _maybe_base(sk, rng)
    b = random_point(sk, rng)
    path = geodesic(sk, base, b)
    below = [c for c in cut_basis(sk, [base, b]) if point_on_segment(c, path)]
    a = rng.choice(below)
    return {"tree": format_tree(sk), "base": str(base), "a": str(a), "b": str(b)}


@register(
    "segment-total-order",
    "for a <= b the points of [a,b] are totally ordered",
    _gen_comparable,
)
def _check_total_order(case: dict) -> str | None:
    sk, P = _load(case)
    view = _view(sk, case)
    a, b = P(case["a"]), P(case["b"])
    if not leq(view, a, b):
        return f"{a} is not below {b}"
    seg = segment(view, a, b)
    on = [x for x in cut_basis(sk, [view.base, a, b]) if point_on_segment(x, seg)]
    for x, y in itertools.combinations(on, 2):
        if not (leq(view, x, y) or leq(view, y, x)):
            return f"{x} and {y} on [{a},{b}] are incomparable"
    return None


# ---------------------------------------------------------------------------
# tangent classes


@register(
    "tangent-equivalence",
    "~_t is an equivalence relation whose classes are the components of T minus t",
    _gen_class("b", "c", base=False),
)
def _check_equivalence(case: dict) -> str | None:
    sk, P = _load(case)
    t, a, b, c = (P(case[k]) for k in ("t", "a", "b", "c"))
    pts = [x for x in (a, b, c) if x != t]
    oracle = CutGraph(sk, [t, a, b, c])
    for x in pts:
        if not same_class(sk, x, x, t):
            return f"~_{t} not reflexive at {x}"
        for y in pts:
            s = same_class(sk, x, y, t)
            if s != same_class(sk, y, x, t):
                return f"~_{t} not symmetric on {x}, {y}"
            if s != (y in oracle.component(t, x)):
                return _nodes_disagree(f"{x} ~_{t} {y}", y, s, not s)
            for z in pts:
                if s and same_class(sk, y, z, t) and not same_class(sk, x, z, t):
                    return f"~_{t} not transitive on {x}, {y}, {z}"
    return None


@register(
    "tangent-partition",
    "the classes at t partition T minus t, one per direction",
    _gen_points("t", base=False),
)
def _check_partition(case: dict) -> str | None:
    sk, P = _load(case)
    t = P(case["t"])
    space = tangent_space(sk, t)
    expected = sk.degree(t.vertex) if t.vertex is not None else 2
    if len(space) != expected:
        return f"{len(space)} classes at {t}, expected {expected}"
    oracle = CutGraph(sk, [t])
    comps = [oracle.component(t, atom.representative) for atom in space.classes]
    for x in oracle.nodes:
        if x == t:
            continue
        hits = [atom for atom in space.classes if x in atom]
        if len(hits) != 1:
            return f"{x} lies in {len(hits)} classes at {t}"
        i = space.classes.index(hits[0])
        if x not in comps[i]:
            return f"{x} put in {hits[0]} but brute force puts it elsewhere"
    return None


@register(
    "tangent-reroot-invariance",
    "a ~_t b does not depend on the base of the order used to build [a,b]",
    _gen_class("b", "s1", "s2", base=False),
)
def _check_tangent_reroot(case: dict) -> str | None:
    sk, P = _load(case)
    t, a, b = P(case["t"]), P(case["a"]), P(case["b"])
    if b == t:
        return None
    ref = same_class(sk, a, b, t)
    for key in ("s1", "s2"):
        s = P(case[key])
        via = not point_on_segment(t, segment(reroot(sk, s), a, b))
        if via != ref:
            return f"{a} ~_{t} {b} is {ref}, but the segment under base {s} says {via}"
    return None


@register(
    "tangent-class-equality",
    "[a]_t = [b]_t as sets exactly when a ~_t b",
    _gen_class("b", base=False),
)
def _check_class_equality(case: dict) -> str | None:
    sk, P = _load(case)
    t, a, b = P(case["t"]), P(case["a"]), P(case["b"])
    if b == t:
        return None
    ca, cb = tangent_class(sk, a, t), tangent_class(sk, b, t)
    same = same_class(sk, a, b, t)
    if (ca == cb) != same:
        return f"atom equality {ca == cb} but {a} ~_{t} {b} is {same}"
    as_sets = all((x in ca) == (x in cb) for x in cut_basis(sk, [t, a, b]))
    if as_sets != same:
        return f"point sets equal: {as_sets}, but {a} ~_{t} {b} is {same}"
    return None


# ---------------------------------------------------------------------------
# metric


@register(
    "metric-axioms",
    "d_psi is a metric: identity of indiscernibles, symmetry, triangle inequality",
    _gen_points("a", "b", "c"),
)
def _check_metric(case: dict) -> str | None:
    sk, P = _load(case)
    param = Parametrization(_view(sk, case))
    a, b, c = P(case["a"]), P(case["b"]), P(case["c"])
    for x, y in ((a, b), (b, c), (a, c)):
        d = d_psi(param, x, y)
        if (d == 0) != (x == y) or d < 0:
            return f"d({x},{y}) = {d}"
        if d != d_psi(param, y, x):
            return f"d not symmetric on {x}, {y}"
    if d_psi(param, a, a) != 0:
        return f"d({a},{a}) != 0"
    if d_psi(param, a, c) > d_psi(param, a, b) + d_psi(param, b, c):
        return f"triangle inequality fails on {a}, {b}, {c}"
    return None


@register(
    "metric-meet-additivity",
    "d_psi(a,b) = d_psi(a, a^b) + d_psi(a^b, b)",
    _gen_points("a", "b"),
)
def _check_additivity(case: dict) -> str | None:
    sk, P = _load(case)
    param = Parametrization(_view(sk, case))
    a, b = P(case["a"]), P(case["b"])
    m = meet(param.view, a, b)
    lhs, rhs = d_psi(param, a, b), d_psi(param, a, m) + d_psi(param, m, b)
    if lhs != rhs:
        return f"d({a},{b}) = {lhs} but the split through {m} gives {rhs}"
    return None


def _gen_monotone(rng: random.Random, config: GeneratorConfig) -> dict:
    sk = _tree(rng, config)
    base = _maybe_base(sk, rng)
    c = random_point(sk, rng)
    path = geodesic(sk, base, c)
    on = [x for x in cut_basis(sk, [base, c]) if point_on_segment(x, path)]
    a, b = sorted((rng.choice(on), rng.choice(on)), key=lambda x: geodesic(sk, base, x).length)
    return {"tree": format_tree(sk), "base": str(base), "a": str(a), "b": str(b), "c": str(c)}


@register(
    "metric-monotone-shrinking",
    "a <= b <= c implies d_psi(b,c) <= d_psi(a,c)",
    _gen_monotone,
)
def _check_monotone(case: dict) -> str | None:
    sk, P = _load(case)
    param = Parametrization(_view(sk, case))
    a, b, c = P(case["a"]), P(case["b"]), P(case["c"])
    view = param.view
    if not (leq(view, a, b) and leq(view, b, c)):
        return f"generated points {a}, {b}, {c} are not increasing"
    if d_psi(param, b, c) > d_psi(param, a, c):
        return f"d({b},{c}) > d({a},{c})"
    return None


def _gen_witness(rng: random.Random, config: GeneratorConfig) -> dict | None:
    case = _gen_class()(rng, config)
    if case is None:
        return None
    sk, P = _load(case)
    atom = tangent_class(sk, P(case["a"]), P(case["t"]))
    inside = [x for x in cut_basis(sk, [P(case["t"]), P(case["a"]), P(case["base"])]) if x in atom]
    case["p"] = str(rng.choice(inside))
    return case


@register(
    "theorem-metric-coarser",
    "every point of [a]_t has a d_psi ball inside [a]_t",
    _gen_witness,
)
def _check_witness(case: dict) -> str | None:
    sk, P = _load(case)
    param = Parametrization(_view(sk, case))
    t, a, p = P(case["t"]), P(case["a"]), P(case["p"])
    atom = tangent_class(sk, a, t)
    eps = epsilon_witness(param, p, atom)
    if eps <= 0:
        return f"non-positive radius {eps}"
    oracle = CutGraph(sk, [t, a, p, param.view.base])
    comp = oracle.component(t, a)
    for x in oracle.nodes:
        if d_psi(param, p, x) < eps and x not in comp:
            return f"{x} within {d_psi(param, p, x)} < {eps} of {p} but outside [{a}]_{t}"
    return None


# ---------------------------------------------------------------------------
# regions and Scott topology


def _random_expr(sk: TreeSkeleton, rng: random.Random, depth: int = 2):
    if depth == 0 or rng.random() < 0.35:
        kind = rng.choice(["class", "class", "up", "strictup", "strictup", "point", "whole", "empty"])
        p = random_point(sk, rng)
        if kind == "class":
            q = _other_point(sk, rng, p)
            return Whole() if q is None else tangent_class(sk, q, p)
        if kind == "up":
            return UpSet(p)
        if kind == "strictup":
            return StrictUpSet(p)
        if kind == "point":
            return Singleton(p)
        return Whole() if kind == "whole" else Empty()
    op = rng.choice(["or", "or", "and", "not"])
    if op == "not":
        return Complement(_random_expr(sk, rng, depth - 1))
    parts = (_random_expr(sk, rng, depth - 1), _random_expr(sk, rng, depth - 1))
    return Union(parts) if op == "or" else Intersection(parts)


def _gen_region(rng: random.Random, config: GeneratorConfig) -> dict:
    sk = _tree(rng, config)
    base = _maybe_base(sk, rng)
    expr = _random_expr(sk, rng)
    return {"tree": format_tree(sk), "base": str(base), "region": str(expr)}


def _oracle_members(oracle: CutGraph, region: RegionDescriptor) -> set[Point]:
    base = region.view.base

    def ev(e, x: Point) -> bool:
        if isinstance(e, TangentClassAtom):
            return x != e.anchor and x in oracle.component(e.anchor, e.representative)
        if isinstance(e, UpSet):
            return oracle.leq(base, e.point, x)
        if isinstance(e, StrictUpSet):
            return oracle.lt(base, e.point, x)
        if isinstance(e, Singleton):
            return x == e.point
        if isinstance(e, Whole):
            return True
        if isinstance(e, Empty):
            return False
        if isinstance(e, Union):
            return any(ev(p, x) for p in e.parts)
        if isinstance(e, Intersection):
            return all(ev(p, x) for p in e.parts)
        return not ev(e.part, x)

    return {x for x in oracle.nodes if ev(region.expr, x)}


def _agreement(region: RegionDescriptor, view: OrderView) -> str | None:
    chains = chain_family(region, view)
    scott = is_scott_open(region, view)
    upper = is_upper_set(region, view)
    inacc = is_inaccessible_by_directed_joins(region, view, chains)
    if scott != (upper and inacc):
        return (
            f"{region} under {view}: predecessor test says scott-open={scott}, "
            f"definition gives upper={upper} inaccessible={inacc} over {len(chains)} chains"
        )
    return None


@register(
    "decider-agreement",
    "Scott-open by the predecessor test iff upper set and inaccessible over the chain family",
    _gen_region,
)
def _check_agreement(case: dict) -> str | None:
    sk, P = _load(case)
    view = _view(sk, case)
    region = parse_region(view, case["region"])
    bad = _agreement(region, view)
    if bad:
        return bad
    oracle = CutGraph(sk, cut_points(region, extra=[view.base]))
    members = _oracle_members(oracle, region)
    for x in oracle.nodes:
        if member(region, x) != (x in members):
            return _nodes_disagree(f"membership in {region}", x, member(region, x), x in members)
    if is_upper_set(region, view) != oracle.is_upper(view.base, members):
        return f"upper-set decider says {is_upper_set(region, view)} for {region}, brute force disagrees"
    return None


@register(
    "lemma-inaccessible",
    "every class [a]_t is inaccessible by directed joins under every base",
    _gen_class(),
)
def _check_inaccessible(case: dict) -> str | None:
    sk, P = _load(case)
    view = _view(sk, case)
    region = RegionDescriptor.tangent(view, P(case["a"]), P(case["t"]))
    chains = chain_family(region, view)
    bad = inaccessibility_violation(region, view, chains)
    if bad is not None:
        return f"{region} under {view}: chain {bad} reaches it only at its supremum"
    return None


@register(
    "lemma-upper-set",
    "[a]_t is an upper set of the order based at t",
    _gen_class(base=False),
)
def _check_upper_at_anchor(case: dict) -> str | None:
    sk, P = _load(case)
    t = P(case["t"])
    view = reroot(sk, t)
    region = RegionDescriptor.tangent(view, P(case["a"]), t)
    if not is_upper_set(region, view):
        return f"{region} is not an upper set under base {t}"
    return None


@register(
    "upper-set-characterization",
    "[a]_t is an upper set of the order based at r exactly when t < a in that order",
    _gen_class(),
)
def _check_upper_characterization(case: dict) -> str | None:
    sk, P = _load(case)
    view = _view(sk, case)
    t, a = P(case["t"]), P(case["a"])
    region = RegionDescriptor.tangent(view, a, t)
    oracle = CutGraph(sk, [t, a, view.base])
    below = oracle.lt(view.base, t, a)
    upper = is_upper_set(region, view)
    if upper != below:
        return f"upper-set decider says {upper} for {region} under {view}, but t < a is {below}"
    brute = oracle.is_upper(view.base, _oracle_members(oracle, region))
    if upper != brute:
        return f"upper-set decider says {upper} for {region}, brute force says {brute}"
    return None


def _gen_scott_open(rng: random.Random, config: GeneratorConfig) -> dict | None:
    sk = _tree(rng, config)
    base = _maybe_base(sk, rng)
    kind = rng.choice(["strictup", "upbase", "union", "meet", "class"])
    p, q = random_point(sk, rng), random_point(sk, rng)
    if kind == "strictup":
        expr = f"strictup({p})"
    elif kind == "upbase":
        expr = f"up({base})"
    elif kind == "union":
        expr = f"strictup({p}) | strictup({q}) | up({base}) & strictup({p})"
    elif kind == "meet":
        expr = f"strictup({p}) & (strictup({q}) | strictup({base}))"
    else:
        a = _other_point(sk, rng, p)
        if a is None:
            return None
        base, expr = p, f"class({a},{p})"
    return {"tree": format_tree(sk), "base": str(base), "region": expr}


@register(
    "proposition-scott-weak",
    "every point of a Scott-open set O has a class [a]_t inside O",
    _gen_scott_open,
)
def _check_scott_weak(case: dict) -> str | None:
    sk, P = _load(case)
    view = _view(sk, case)
    region = parse_region(view, case["region"])
    if not is_scott_open(region, view):
        return f"generated region {region} is not Scott-open under {view}"
    cuts = cut_points(region, extra=[view.base])
    witnesses = {
        a: weak_open_witness(region, a, view) for a in cuts if a != view.base and member(region, a)
    }
    oracle = CutGraph(sk, [*cuts, *witnesses.values()])
    for a, t in witnesses.items():
        if not oracle.lt(view.base, t, a) or not member(region, t):
            return f"witness {t} for {a} is not a region point strictly below it"
        for x in oracle.component(t, a):
            if not member(region, x):
                return f"[{a}]_{t} contains {x} outside {region}"
    return None


def _gen_tree_only(rng: random.Random, config: GeneratorConfig) -> dict | None:
    sk = _tree(rng, config)
    if not sk.lengths:
        return None
    return {"tree": format_tree(sk)}


@register(
    "theorem-strict-coarseness",
    "[root]_t is weak-tree open but not Scott-open for every non-root vertex t",
    _gen_tree_only,
)
def _check_strict(case: dict) -> str | None:
    sk, _ = _load(case)
    view = root_view(sk)
    for v in sk.vertices:
        if v == sk.root:
            continue
        region = RegionDescriptor.tangent(view, view.base, Point(vertex=v))
        if is_upper_set(region, view):
            return f"{region} is an upper set under the root order"
        if is_scott_open(region, view):
            return f"{region} is Scott-open under the root order"
    return None


@register(
    "theorem-generated",
    "[a]_t is Scott-open in the order based at t",
    _gen_class(base=False),
)
def _check_generated(case: dict) -> str | None:
    sk, P = _load(case)
    t = P(case["t"])
    view = reroot(sk, t)
    region = RegionDescriptor.tangent(view, P(case["a"]), t)
    if not is_scott_open(region, view):
        return f"{region} is not Scott-open under base {t}"
    return _agreement(region, view)


@register(
    "remark-hausdorff",
    "distinct points are separated by disjoint tangent classes",
    _gen_class(base=False),
)
def _check_hausdorff(case: dict) -> str | None:
    sk, P = _load(case)
    p, q = P(case["a"]), P(case["t"])
    first, second = hausdorff_witness(sk, p, q)
    if p not in first or q not in second:
        return f"{p} or {q} not inside its witness region"
    if not regions_disjoint(first, second):
        return f"{first} and {second} overlap"
    m = first.expr.anchor
    oracle = CutGraph(sk, [p, q, m])
    if oracle.component(m, p) & oracle.component(m, q):
        return f"brute force finds {first} and {second} overlapping"
    for region in (first, second):
        if not is_scott_open(region, reroot(sk, m)):
            return f"{region} is not open in the order based at {m}"
    return None


def _gen_two_points(rng: random.Random, config: GeneratorConfig) -> dict | None:
    sk = _tree(rng, config)
    t = random_point(sk, rng)
    s = _other_point(sk, rng, t)
    if s is None:
        return None
    return {"tree": format_tree(sk), "t": str(t), "s": str(s)}


@register(
    "remark-scott-views-differ",
    "for points t != s some [a]_t is Scott-open based at t but not an upper set based at s",
    _gen_two_points,
)
def _check_views_differ(case: dict) -> str | None:
    sk, P = _load(case)
    t, s = P(case["t"]), P(case["s"])
    vt, vs = reroot(sk, t), reroot(sk, s)
    for a in cut_basis(sk, [t, s]):
        if a == t or not same_class(sk, a, s, t):
            continue
        region = RegionDescriptor.tangent(vt, a, t)
        if is_scott_open(region, vt) and not is_upper_set(region, vs):
            return None
    return f"no class at {t} separates the Scott topologies based at {t} and {s}"
