"""Exhaustive law checking over small hypergraphs.

A :class:`Law` is a predicate over a tuple of inputs, each drawn from one of
three enumerated spaces: vertex subsets (``"v"``), edge subsets (``"e"``) or
subhypergraphs (``"hg"``). Checking a law evaluates it on the full product
space. Pairwise laws (adjunctions, monotonicity, distributivity) also carry
a vectorised finder, since the quadratic spaces get large on 8-vertex
instances.

Failing inputs are shrunk by greedy element removal before they are
reported.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import composed as C
from . import correspondence as K
from . import filters as F
from .hypergraph import EdgeSet, Hypergraph, SubHypergraph, VertexSet, induced_by_edges, induced_by_vertices, is_subhypergraph
from .oracle import ORACLE_OPS, check_enumerable, enumerate_edge_subsets, enumerate_subhypergraphs, enumerate_vertex_subsets, oracle_delta_e, oracle_delta_v, oracle_eps_e, oracle_eps_v

__all__ = [
    "Law",
    "LawReport",
    "LAWS",
    "GRANULOMETRY_MAX",
    "ASF_MAX",
    "check_law",
    "check_laws",
    "adjunction_law",
    "increasing_filter_law",
    "serialize_input",
    "UnknownLaw",
]

GRANULOMETRY_MAX = 6
ASF_MAX = 4
MAX_REPORTED = 5
_CHUNK = 256


class UnknownLaw(KeyError):
    pass


# (space size, some failing inputs, number of failures)
Finder = Callable[[Hypergraph], "tuple[int, list[tuple], int]"]


@dataclass(frozen=True)
class Law:
    name: str
    domains: tuple[str, ...]
    holds: Callable[..., bool]
    finder: Finder | None = None
    description: str = ""


@dataclass
class LawReport:
    """Outcome of one law on one instance.

    ``checked`` is the size of the enumerated input space; ``passed`` counts
    the inputs that satisfied the law.
    """

    law: str
    instance: str
    checked: int
    failures: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.checked - self.failures

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def lines(self) -> list[str]:
        if self.ok:
            return [f"LAW {self.law} INSTANCE {self.instance} PASS {self.passed}"]
        return [f"LAW {self.law} COUNTEREXAMPLE {c}" for c in self.counterexamples]

    def __str__(self) -> str:
        return "\n".join(self.lines())


# -- spaces and encodings ------------------------------------------------------


def _space(hg: Hypergraph, domain: str) -> list:
    if domain == "v":
        return list(enumerate_vertex_subsets(hg))
    if domain == "e":
        return list(enumerate_edge_subsets(hg))
    if domain == "hg":
        return list(enumerate_subhypergraphs(hg))
    raise ValueError(f"unknown domain {domain!r}")


def _enc(x, n: int) -> int:
    if isinstance(x, SubHypergraph):
        return x.vset.bits | x.eset.bits << n
    return x.bits


def _encode_all(xs: Sequence, n: int) -> np.ndarray:
    return np.fromiter((_enc(x, n) for x in xs), dtype=np.int64, count=len(xs))


def _ser(x) -> str:
    if isinstance(x, VertexSet):
        return "v{" + ",".join(x.labels()) + "}"
    if isinstance(x, EdgeSet):
        return "e{" + ",".join(x.labels()) + "}"
    if isinstance(x, SubHypergraph):
        return "hg{" + ",".join(x.vset.labels()) + "|" + ",".join(x.eset.labels()) + "}"
    raise TypeError(type(x).__name__)


def serialize_input(args: tuple) -> str:
    if not args:
        return "()"
    return ";".join(f"{name}={_ser(a)}" for name, a in zip("XYZW", args))


def _fail_pairs(fail: np.ndarray, row0: int, xs: Sequence, ys: Sequence, limit: int) -> list[tuple]:
    rows, cols = np.nonzero(fail)
    return [(xs[row0 + r], ys[c]) for r, c in zip(rows[:limit].tolist(), cols[:limit].tolist())]


# -- minimisation ----------------------------------------------------------------


def _shrink_candidates(x) -> Iterable:
    if isinstance(x, (VertexSet, EdgeSet)):
        for i in x:
            yield type(x)(x.hg, x.bits & ~(1 << i))
    elif isinstance(x, SubHypergraph):
        for i in x.eset:
            yield SubHypergraph(x.vset, EdgeSet(x.hg, x.eset.bits & ~(1 << i)))
        for i in x.vset:
            v = VertexSet(x.hg, x.vset.bits & ~(1 << i))
            if is_subhypergraph(v, x.eset):
                yield SubHypergraph(v, x.eset)


def _minimize(law: Law, args: tuple) -> tuple:
    args = list(args)
    changed = True
    while changed:
        changed = False
        for k in range(len(args)):
            for cand in _shrink_candidates(args[k]):
                trial = args[:k] + [cand] + args[k + 1 :]
                if not law.holds(*trial):
                    args = trial
                    changed = True
                    break
            if changed:
                break
    return tuple(args)


# -- checking ----------------------------------------------------------------------


def _default_finder(law: Law, hg: Hypergraph) -> tuple[int, list[tuple], int]:
    spaces = [_space(hg, d) for d in law.domains]
    checked = 0
    failing: list[tuple] = []
    failures = 0
    for args in itertools.product(*spaces):
        checked += 1
        if not law.holds(*args):
            failures += 1
            if len(failing) < 50:
                failing.append(args)
    return checked, failing, failures


def check_law(law: str | Law, hg: Hypergraph, instance: str = "H") -> LawReport:
    """Run ``law`` over its full input space on ``hg``."""
    if isinstance(law, str):
        try:
            law = LAWS[law]
        except KeyError:
            raise UnknownLaw(f"unknown law {law!r}; known: {', '.join(sorted(LAWS))}") from None
    check_enumerable(hg)
    if law.finder is not None:
        checked, failing, failures = law.finder(hg)
    else:
        checked, failing, failures = _default_finder(law, hg)
    shown: list[str] = []
    for args in failing:
        s = serialize_input(_minimize(law, args))
        if s not in shown:
            shown.append(s)
        if len(shown) >= MAX_REPORTED:
            break
    return LawReport(law.name, instance, checked, failures, sorted(shown))


def _check_named(args: tuple[str, Hypergraph, str]) -> LawReport:
    name, hg, instance = args
    return check_law(name, hg, instance)


def check_laws(
    hg: Hypergraph,
    names: Iterable[str] | None = None,
    instance: str = "H",
    jobs: int = 1,
) -> list[LawReport]:
    """Check several laws, optionally fanned out over worker processes.

    Reports come back sorted by law name whatever the scheduling.
    """
    names = sorted(LAWS) if names is None else list(names)
    for name in names:
        if name not in LAWS:
            raise UnknownLaw(f"unknown law {name!r}; known: {', '.join(sorted(LAWS))}")
    work = [(name, hg, instance) for name in names]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_check_named, work))
    else:
        reports = [_check_named(w) for w in work]
    return sorted(reports, key=lambda r: r.law)


# -- law factories ---------------------------------------------------------------------


def _le(a, b) -> bool:
    return a <= b


def adjunction_law(name: str, erosion: Callable, dilation: Callable, dil_domain: str, ero_domain: str) -> Law:
    """``dilation(X) <= Y  <=>  X <= erosion(Y)`` for all X, Y."""

    def holds(x, y) -> bool:
        return _le(dilation(x), y) == _le(x, erosion(y))

    def finder(hg: Hypergraph):
        n = hg.n_vertices
        xs, ys = _space(hg, dil_domain), _space(hg, ero_domain)
        X, Y = _encode_all(xs, n), _encode_all(ys, n)
        DX = _encode_all([dilation(x) for x in xs], n)
        EY = _encode_all([erosion(y) for y in ys], n)
        failing: list[tuple] = []
        failures = 0
        for r in range(0, len(xs), _CHUNK):
            left = (DX[r : r + _CHUNK, None] & ~Y[None, :]) == 0
            right = (X[r : r + _CHUNK, None] & ~EY[None, :]) == 0
            fail = left != right
            failures += int(fail.sum())
            if len(failing) < 50:
                failing += _fail_pairs(fail, r, xs, ys, 50 - len(failing))
        return len(xs) * len(ys), failing, failures

    return Law(name, (dil_domain, ero_domain), holds, finder, f"adjunction ({erosion.__name__}, {dilation.__name__})")


def increasing_filter_law(name: str, op: Callable, domain: str, extensive: bool) -> Law:
    """Idempotent, increasing, and extensive (closing) or anti-extensive (opening)."""

    def unary_ok(x) -> bool:
        y = op(x)
        return op(y) == y and (x <= y if extensive else y <= x)

    def holds(x, y) -> bool:
        if not (unary_ok(x) and unary_ok(y)):
            return False
        return not (x <= y) or op(x) <= op(y)

    def finder(hg: Hypergraph):
        n = hg.n_vertices
        xs = _space(hg, domain)
        X = _encode_all(xs, n)
        FX = _encode_all([op(x) for x in xs], n)
        bad_unary = np.fromiter((not unary_ok(x) for x in xs), dtype=bool, count=len(xs))
        failing: list[tuple] = []
        failures = 0
        for r in range(0, len(xs), _CHUNK):
            le_in = (X[r : r + _CHUNK, None] & ~X[None, :]) == 0
            le_out = (FX[r : r + _CHUNK, None] & ~FX[None, :]) == 0
            fail = (le_in & ~le_out) | bad_unary[r : r + _CHUNK, None] | bad_unary[None, :]
            failures += int(fail.sum())
            if len(failing) < 50:
                failing += _fail_pairs(fail, r, xs, xs, 50 - len(failing))
        return len(xs) ** 2, failing, failures

    kind = "closing" if extensive else "opening"
    return Law(name, (domain, domain), holds, finder, f"{op.__name__} is a {kind}")


def _distributivity_law(name: str, domain: str, dilations: Sequence[Callable], erosions: Sequence[Callable]) -> Law:
    """Dilations commute with binary unions, erosions with binary intersections."""

    def holds(x, y) -> bool:
        return all(d(x | y) == (d(x) | d(y)) for d in dilations) and all(
            e(x & y) == (e(x) & e(y)) for e in erosions
        )

    def finder(hg: Hypergraph):
        xs = _space(hg, domain)
        bits = np.arange(len(xs), dtype=np.int64)  # full powerset: index == bitmask
        failing: list[tuple] = []
        fail_total = np.zeros((len(xs), len(xs)), dtype=bool)
        for op, combine in [(d, np.bitwise_or) for d in dilations] + [(e, np.bitwise_and) for e in erosions]:
            img = _encode_all([op(x) for x in xs], hg.n_vertices)
            joined = combine(bits[:, None], bits[None, :])
            fail_total |= img[joined] != combine(img[:, None], img[None, :])
        failures = int(fail_total.sum())
        failing = _fail_pairs(fail_total, 0, xs, xs, 50)
        return len(xs) ** 2, failing, failures

    return Law(name, (domain, domain), holds, finder, "distributivity")


def _unary_law(name: str, domain: str, holds: Callable[[object], bool], description: str = "") -> Law:
    return Law(name, (domain,), holds, None, description)


# -- concrete laws ---------------------------------------------------------------------


def _duality(erosion, dilation):
    return lambda x: erosion(x) == ~dilation(~x)


def _oracle_from_vertices(x: VertexSet) -> bool:
    induced = induced_by_vertices(x)
    return (
        K.edge_erode_from_vertices(x) == oracle_eps_e(x)
        and K.edge_dilate_from_vertices(x) == oracle_delta_e(x)
        and induced.eset == oracle_eps_e(x)
        and induced.vset == x
    )


def _oracle_from_edges(x: EdgeSet) -> bool:
    induced = induced_by_edges(x)
    return (
        K.vertex_dilate_from_edges(x) == oracle_delta_v(x)
        and K.vertex_erode_from_edges(x) == oracle_eps_v(x)
        and induced.vset == oracle_delta_v(x)
        and induced.eset == x
    )


_VERTEX_OPS = ["vertex_dilate", "vertex_erode", "open1_v", "close1_v", "open_half_v", "close_half_v"]
_EDGE_OPS = ["edge_dilate", "edge_erode", "open1_e", "close1_e", "open_half_e", "close_half_e"]
_HG_OPS = ["hg_dilate", "hg_erode", "hg_open_1", "hg_close_1", "hg_open_half", "hg_close_half"]


def _fast(name: str) -> Callable:
    for mod in (C, F):
        if hasattr(mod, name):
            return getattr(mod, name)
    raise KeyError(name)


def _oracle_ops_agree(names: Sequence[str]):
    return lambda x: all(_fast(n)(x) == ORACLE_OPS[n](x) for n in names)


def _oracle_hg(x: SubHypergraph) -> bool:
    if not _oracle_ops_agree(_HG_OPS)(x):
        return False
    for lam in range(GRANULOMETRY_MAX + 1):
        if F.granule_open(x, lam) != ORACLE_OPS["granule_open"](x, lam):
            return False
        if F.granule_close(x, lam) != ORACLE_OPS["granule_close"](x, lam):
            return False
    return all(F.asf(x, lam) == ORACLE_OPS["asf"](x, lam) for lam in range(ASF_MAX + 1))


def _closed_forms_vertex(x: VertexSet) -> bool:
    return C.vertex_dilate(x) == C.vertex_dilate_local(x) and C.vertex_erode(x) == C.vertex_erode_local(x)


def _closed_forms_edge(x: EdgeSet) -> bool:
    return C.edge_dilate(x) == C.edge_dilate_local(x) and C.edge_erode(x) == C.edge_erode_local(x)


def _half_closed_forms_v(x: VertexSet) -> bool:
    hg = x.hg
    union_of_contained = 0
    for i, mask in enumerate(hg.edge_masks):
        if mask & ~x.bits == 0:
            union_of_contained |= mask
    # X minus the vertices none of whose edges fit inside X
    stripped = x - hg.vertices(
        v for v in x if all(hg.edge_masks[i] & ~x.bits for i in hg.incidence(v))
    )
    g = F.open_half_v(x)
    return g == F.open_half_v_local(x) and g.bits == union_of_contained and g == stripped


def _half_closed_forms_e(x: EdgeSet) -> bool:
    return F.close_half_e(x) == F.close_half_e_local(x)


def _chain(o1, oh, ch, c1):
    return lambda x: o1(x) <= oh(x) <= x <= ch(x) <= c1(x)


def _closedness(x: SubHypergraph) -> bool:
    outs = [_fast(n)(x) for n in _HG_OPS]
    outs += [F.granule_open(x, lam) for lam in range(GRANULOMETRY_MAX + 1)]
    outs += [F.granule_close(x, lam) for lam in range(GRANULOMETRY_MAX + 1)]
    outs += [F.asf(x, lam) for lam in range(ASF_MAX + 1)]
    return all(is_subhypergraph(y.vset, y.eset) for y in outs)


def _granulometry(op, opening: bool):
    def holds(x: SubHypergraph) -> bool:
        results = [op(x, lam) for lam in range(GRANULOMETRY_MAX + 1)]
        if results[0] != x:
            return False
        for lam, y in enumerate(results):
            if op(y, lam) != y:
                return False
            if not (y <= x if opening else x <= y):
                return False
        for a, b in zip(results, results[1:]):
            if not (b <= a if opening else a <= b):
                return False
        return True

    return holds


def _fixed_lambda(op, lam):
    def run(x):
        return op(x, lam)

    run.__name__ = f"{op.__name__}[{lam}]"
    return run


def _family_increasing(name: str, op, top: int) -> Law:
    """Every member ``op(., lam)``, ``lam <= top``, is increasing."""
    members = [_fixed_lambda(op, lam) for lam in range(top + 1)]

    def holds(x, y) -> bool:
        return not (x <= y) or all(m(x) <= m(y) for m in members)

    def finder(hg: Hypergraph):
        n = hg.n_vertices
        xs = _space(hg, "hg")
        X = _encode_all(xs, n)
        le_in = (X[:, None] & ~X[None, :]) == 0
        fail = np.zeros_like(le_in)
        for m in members:
            FX = _encode_all([m(x) for x in xs], n)
            fail |= le_in & ((FX[:, None] & ~FX[None, :]) != 0)
        return len(xs) ** 2, _fail_pairs(fail, 0, xs, xs, 50), int(fail.sum())

    return Law(name, ("hg", "hg"), holds, finder, f"members of {op.__name__} up to {top} are increasing")


def _asf_filter(x: SubHypergraph) -> bool:
    if F.asf(x, 0) != x:
        return False
    for lam in range(ASF_MAX + 1):
        y = F.asf(x, lam)
        if not is_subhypergraph(y.vset, y.eset) or F.asf(y, lam) != y:
            return False
    return True


def _extremes(hg: Hypergraph) -> bool:
    v0, vf, e0, ef = hg.vertices(), hg.all_vertices(), hg.edges(), hg.all_edges()
    return (
        K.vertex_dilate_from_edges(e0) == v0
        and K.edge_dilate_from_vertices(v0) == e0
        and K.vertex_erode_from_edges(ef) == vf
        and K.edge_erode_from_vertices(vf) == ef
        and C.hg_dilate(hg.empty()) == hg.empty()
        and C.hg_erode(hg.whole()) == hg.whole()
    )


def _extremes_law() -> Law:
    def finder(hg: Hypergraph):
        ok = _extremes(hg)
        return 1, ([] if ok else [()]), int(not ok)

    return Law("extremes", (), lambda: False, finder, "dilations keep the least element, erosions the greatest")


def _build_registry() -> dict[str, Law]:
    laws = [
        adjunction_law("adjunction-ex-dv", K.edge_erode_from_vertices, K.vertex_dilate_from_edges, "e", "v"),
        adjunction_law("adjunction-ev-dx", K.vertex_erode_from_edges, K.edge_dilate_from_vertices, "v", "e"),
        adjunction_law("adjunction-vertex", C.vertex_erode, C.vertex_dilate, "v", "v"),
        adjunction_law("adjunction-edge", C.edge_erode, C.edge_dilate, "e", "e"),
        adjunction_law("adjunction-hg", C.hg_erode, C.hg_dilate, "hg", "hg"),
        _unary_law("duality-ex-dx", "v", _duality(K.edge_erode_from_vertices, K.edge_dilate_from_vertices)),
        _unary_law("duality-ev-dv", "e", _duality(K.vertex_erode_from_edges, K.vertex_dilate_from_edges)),
        _unary_law("duality-vertex", "v", _duality(C.vertex_erode, C.vertex_dilate)),
        _unary_law("duality-edge", "e", _duality(C.edge_erode, C.edge_dilate)),
        _distributivity_law(
            "distributivity-from-vertices", "v",
            [K.edge_dilate_from_vertices, C.vertex_dilate], [K.edge_erode_from_vertices, C.vertex_erode],
        ),
        _distributivity_law(
            "distributivity-from-edges", "e",
            [K.vertex_dilate_from_edges, C.edge_dilate], [K.vertex_erode_from_edges, C.edge_erode],
        ),
        _extremes_law(),
        _unary_law("oracle-from-vertices", "v", _oracle_from_vertices),
        _unary_law("oracle-from-edges", "e", _oracle_from_edges),
        _unary_law("oracle-vertex-ops", "v", _oracle_ops_agree(_VERTEX_OPS)),
        _unary_law("oracle-edge-ops", "e", _oracle_ops_agree(_EDGE_OPS)),
        _unary_law("oracle-hg-ops", "hg", _oracle_hg),
        _unary_law("closed-forms-vertex", "v", _closed_forms_vertex),
        _unary_law("closed-forms-edge", "e", _closed_forms_edge),
        _unary_law("half-closed-forms-vertex", "v", _half_closed_forms_v),
        _unary_law("half-closed-forms-edge", "e", _half_closed_forms_e),
        _unary_law("chain-property6-vertex", "v", _chain(F.open1_v, F.open_half_v, F.close_half_v, F.close1_v)),
        _unary_law("chain-property6-edge", "e", _chain(F.open1_e, F.open_half_e, F.close_half_e, F.close1_e)),
        _unary_law("chain-property6-hg", "hg", _chain(F.hg_open_1, F.hg_open_half, F.hg_close_half, F.hg_close_1)),
        _unary_law("closedness-hg", "hg", _closedness),
        _unary_law("granulometry-open-nesting", "hg", _granulometry(F.granule_open, opening=True)),
        _unary_law("granulometry-close-nesting", "hg", _granulometry(F.granule_close, opening=False)),
        _family_increasing("granulometry-open-increasing", F.granule_open, GRANULOMETRY_MAX),
        _family_increasing("granulometry-close-increasing", F.granule_close, GRANULOMETRY_MAX),
        _unary_law("asf-filter", "hg", _asf_filter),
        _family_increasing("asf-increasing", F.asf, ASF_MAX),
    ]
    for dom, prefix in (("v", "v"), ("e", "e"), ("hg", "hg")):
        for kind, extensive in (("open", False), ("close", True)):
            for size in ("1", "half"):
                op = FILTERS[(prefix, kind, size)]
                laws.append(increasing_filter_law(f"filter-{prefix}-{kind}-{size}", op, dom, extensive))
    return {law.name: law for law in laws}


FILTERS: dict[tuple[str, str, str], Callable] = {
    ("v", "open", "1"): F.open1_v,
    ("v", "close", "1"): F.close1_v,
    ("v", "open", "half"): F.open_half_v,
    ("v", "close", "half"): F.close_half_v,
    ("e", "open", "1"): F.open1_e,
    ("e", "close", "1"): F.close1_e,
    ("e", "open", "half"): F.open_half_e,
    ("e", "close", "half"): F.close_half_e,
    ("hg", "open", "1"): F.hg_open_1,
    ("hg", "close", "1"): F.hg_close_1,
    ("hg", "open", "half"): F.hg_open_half,
    ("hg", "close", "half"): F.hg_close_half,
}

LAWS: dict[str, Law] = _build_registry()
