"""Small-instance enumeration, witness search, two-isomorphism decisions and verification suites."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .chords import (
    MAX_VISITED,
    SearchBudgetExceeded,
    bouquet_to_word,
    intersection_graph,
    mutants_of_word,
    mutation_neighbours,
    mutation_orbit,
    mutation_path,
    word_canonical,
)
from .duality import (
    cycle_matroid_of,
    delta_matroid_of,
    partial_dual,
    partial_petrial,
)
from .graphs import graphs_isomorphic
from .polynomials import invariance_check
from .report import SuiteReport
from .ribbon import (
    ArrowEnd,
    ArrowPresentation,
    canonical_form,
    components,
    disjoint_union,
    is_connected,
    is_orientable,
    isomorphic,
    orientability_and_genus,
    serialize,
    subgraph_stats,
    vertex_cuts,
    vertex_join,
)
from .setsystem import (
    SetSystem,
    all_subsets,
    classify,
    isomorphic_dm,
    loop_complement,
    reconstruct_binary,
    symmetric_exchange_holds,
    twist,
)

MAX_EDGES = 6


@dataclass(frozen=True)
class PopulationSpec:
    max_edges: int
    max_vertices: int = 1
    orientable_only: bool = False
    connected_only: bool = False
    min_edges: int = 0

    def __post_init__(self):
        if self.max_edges > MAX_EDGES:
            raise ValueError(f"max_edges {self.max_edges} exceeds the exhaustive cap of {MAX_EDGES}")
        if self.max_edges < 0 or self.max_vertices < 1 or self.min_edges < 0:
            raise ValueError("population bounds must be non-negative with at least one vertex")


# ---------------------------------------------------------------------------
# enumeration


def _matchings(pos: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not pos:
        yield []
        return
    first = pos[0]
    for i in range(1, len(pos)):
        rest = pos[1:i] + pos[i + 1 :]
        for m in _matchings(rest):
            yield [(first, pos[i])] + m


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing curve lengths; curve order is a symmetry anyway."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            if tail[0] <= head:
                yield (head,) + tail


def raw_presentations(n_edges: int, n_vertices: int, orientable_only: bool = False) -> Iterator[ArrowPresentation]:
    """Every presentation with the given counts, many times over."""
    slots = 2 * n_edges
    for lengths in _compositions(slots, n_vertices):
        for matching in _matchings(list(range(slots))):
            sign_choices = [(1,)] * n_edges if orientable_only else [(1, -1)] * n_edges
            for signs in itertools.product(*sign_choices):
                seq: list = [None] * slots
                for k, (x, y) in enumerate(matching):
                    seq[x] = ArrowEnd(str(k + 1), 1)
                    seq[y] = ArrowEnd(str(k + 1), signs[k])
                curves, i = [], 0
                for n in lengths:
                    curves.append(tuple(seq[i : i + n]))
                    i += n
                ap = ArrowPresentation(tuple(curves))
                if orientable_only and not is_orientable(ap):
                    continue
                yield ap


def _sort_key(ap: ArrowPresentation):
    return (ap.num_edges, ap.num_vertices, serialize(ap))


def enumerate_bouquets(n: int, orientable_only: bool = False) -> list[ArrowPresentation]:
    """Bouquets with exactly ``n`` edges, one per isomorphism class."""
    if n > MAX_EDGES:
        raise ValueError(f"{n} edges exceeds the exhaustive cap of {MAX_EDGES}")
    seen = {canonical_form(ap) for ap in raw_presentations(n, 1, orientable_only)}
    return sorted(seen, key=_sort_key)


def enumerate_ribbon_graphs(spec: PopulationSpec) -> list[ArrowPresentation]:
    seen = set()
    for n in range(spec.min_edges, spec.max_edges + 1):
        for v in range(1, spec.max_vertices + 1):
            for ap in raw_presentations(n, v, spec.orientable_only):
                if spec.connected_only and not is_connected(ap):
                    continue
                seen.add(canonical_form(ap))
    return sorted(seen, key=_sort_key)


def find_witness(target: SetSystem, spec: PopulationSpec) -> ArrowPresentation | None:
    """First presentation (in enumeration order) whose delta-matroid is
    isomorphic to ``target``, relabelled so that its delta-matroid equals
    ``target`` exactly."""
    n = len(target.ground)
    if n > spec.max_edges or n < spec.min_edges:
        return None
    sizes = sorted(bin(m).count("1") for m in target.masks)
    tried = set()
    for v in range(1, spec.max_vertices + 1):
        for ap in raw_presentations(n, v, spec.orientable_only):
            if spec.connected_only and not is_connected(ap):
                continue
            d = delta_matroid_of(ap)
            if sorted(bin(m).count("1") for m in d.masks) != sizes:
                continue
            key = canonical_form(ap)
            if key in tried:
                continue
            tried.add(key)
            bij = isomorphic_dm(d, target)
            if bij is not None:
                witness = ap.relabel(bij)
                assert delta_matroid_of(witness) == target
                return witness
    return None


# ---------------------------------------------------------------------------
# the 2-isomorphism decision


@dataclass(frozen=True)
class MoveStep:
    kind: str  # "join", "mutate" or "cut"
    result: ArrowPresentation

    def __str__(self) -> str:
        return f"{self.kind} -> {self.result}"


@dataclass
class TwoIsoResult:
    equivalent: bool | None
    status: str  # equivalent | not_equivalent | inconclusive | counterexample
    certificate: list = field(default_factory=list)
    witness: str | None = None


def _connect(ap: ArrowPresentation) -> list[ArrowPresentation]:
    """Chain of vertex joins merging all components; first entry is ``ap``."""
    chain = [ap]
    while True:
        comps = components(chain[-1])
        if len(comps) <= 1:
            return chain
        merged = vertex_join(comps[0], (0, 0), comps[1], (0, 0))
        for rest in comps[2:]:
            merged = disjoint_union(merged, rest)
        chain.append(merged)


def _non_isomorphism_witness(d1: SetSystem, d2: SetSystem) -> str:
    c1, c2 = classify(d1), classify(d2)
    if c1.even != c2.even:
        return f"evenness differs ({'even' if c1.even else 'odd'} vs {'even' if c2.even else 'odd'}); orientability differs"
    if len(d1.ground) != len(d2.ground):
        return f"ground sizes differ ({len(d1.ground)} vs {len(d2.ground)})"
    p1 = sorted(bin(m).count("1") for m in d1.masks)
    p2 = sorted(bin(m).count("1") for m in d2.masks)
    if p1 != p2:
        return f"feasible-set size profiles differ ({p1} vs {p2})"
    return "no bijection of ground sets carries feasible sets to feasible sets"


def two_isomorphism_decide(ap1: ArrowPresentation, ap2: ArrowPresentation, budget: int = MAX_VISITED) -> TwoIsoResult:
    """Decide whether two ribbon graphs have isomorphic delta-matroids and,
    if so, produce a script of joins, mutations and cuts from one to the other."""
    for ap in (ap1, ap2):
        if ap.num_edges > MAX_EDGES:
            raise ValueError(f"{ap.num_edges} edges exceeds the cap of {MAX_EDGES}")
    d1, d2 = delta_matroid_of(ap1), delta_matroid_of(ap2)
    if isomorphic_dm(d1, d2) is None:
        return TwoIsoResult(False, "not_equivalent", witness=_non_isomorphism_witness(d1, d2))
    if isomorphic(ap1, ap2):
        return TwoIsoResult(True, "equivalent")
    left, right = _connect(ap1), _connect(ap2)
    try:
        path = mutation_path(left[-1], right[-1], budget)
    except SearchBudgetExceeded as exc:
        return TwoIsoResult(None, "inconclusive", witness=str(exc))
    if path is None:
        return TwoIsoResult(True, "counterexample", witness="delta-matroids isomorphic but no mutation path found")
    script = [MoveStep("join", g) for g in left[1:]]
    script += [MoveStep("mutate", g) for g in path[1:]]
    script += [MoveStep("cut", g) for g in reversed(right[:-1])]
    return TwoIsoResult(True, "equivalent", script)


def replay_certificate(ap1: ArrowPresentation, ap2: ArrowPresentation, script: list) -> bool:
    """Check every step of a move script, and that it ends at ``ap2``."""
    cur = ap1
    for step in script:
        if step.kind == "join":
            comps = components(cur)
            ok = any(
                isomorphic(step.result, _join_pair(comps, i, j, g1, g2))
                for i, j in itertools.combinations(range(len(comps)), 2)
                for g1 in _gaps(comps[i])
                for g2 in _gaps(comps[j])
            )
        elif step.kind == "mutate":
            ok = is_connected(cur) and canonical_form(step.result) in set(mutation_neighbours(cur))
        elif step.kind == "cut":
            ok = any(isomorphic(step.result, disjoint_union(a, b)) for a, b in vertex_cuts(cur, include_trivial=True))
        else:
            ok = False
        if not ok:
            return False
        cur = step.result
    return isomorphic(cur, ap2)


def _gaps(ap: ArrowPresentation):
    return [(ci, g) for ci, c in enumerate(ap.curves) for g in range(max(1, len(c)))]


def _join_pair(comps, i, j, g1, g2) -> ArrowPresentation:
    merged = vertex_join(comps[i], g1, comps[j], g2)
    for k, rest in enumerate(comps):
        if k not in (i, j):
            merged = disjoint_union(merged, rest)
    return merged


# ---------------------------------------------------------------------------
# suites


def _each(items, fn: Callable, threads: int) -> list:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _subset_str(a) -> str:
    return " ".join(a) if a else "-"


def _check_dual(ap):
    d = delta_matroid_of(ap)
    return [
        (delta_matroid_of(partial_dual(ap, a)) == twist(d, a), str(ap), {"subset": _subset_str(a)})
        for a in all_subsets(ap.edges)
    ]


def _check_petrial(ap):
    d = delta_matroid_of(ap)
    return [
        (delta_matroid_of(partial_petrial(ap, a)) == loop_complement(d, a), str(ap), {"subset": _subset_str(a)})
        for a in all_subsets(ap.edges)
    ]


def _check_even(ap):
    even = classify(delta_matroid_of(ap)).even
    orientable = orientability_and_genus(ap).orientable
    return [(even == orientable, str(ap), {"even": int(even), "orientable": int(orientable)})]


def _check_binary(ap):
    d = delta_matroid_of(ap)
    out = []
    for x in d.feasible:
        t = twist(d, x)
        out.append((reconstruct_binary(t.restrict_small()) == t, str(ap), {"twist": _subset_str(sorted(x))}))
    return out


def _check_exchange(ap):
    ex = symmetric_exchange_holds(delta_matroid_of(ap))
    return [(ex.holds, str(ap), {"witness": ex.witness})]


def _check_plane(ap):
    if not orientability_and_genus(ap).is_plane:
        return []
    return [(delta_matroid_of(ap) == cycle_matroid_of(ap), str(ap), {})]


def _check_involutions(ap):
    d = delta_matroid_of(ap)
    out = []
    for e in ap.edges:
        out.append((twist(twist(d, [e]), [e]) == d, str(ap), {"op": "twist", "edge": e}))
        out.append((loop_complement(loop_complement(d, [e]), [e]) == d, str(ap), {"op": "loop_complement", "edge": e}))
        out.append((isomorphic(partial_dual(partial_dual(ap, [e]), [e]), ap), str(ap), {"op": "partial_dual", "edge": e}))
        out.append((isomorphic(partial_petrial(partial_petrial(ap, [e]), [e]), ap), str(ap), {"op": "partial_petrial", "edge": e}))
    for a in all_subsets(ap.edges):
        nv = partial_dual(ap, a).num_vertices
        b = subgraph_stats(ap, a).b
        out.append((nv == b, str(ap), {"op": "dual_vertex_count", "subset": _subset_str(a)}))
    return out


_PER_ITEM = {
    "dual-twist": _check_dual,
    "petrial-loop-complement": _check_petrial,
    "even-orientable": _check_even,
    "binary-reconstruction": _check_binary,
    "exchange": _check_exchange,
    "plane-cycle-matroid": _check_plane,
    "involutions": _check_involutions,
}

SUITES = {
    **{k: "ribbon graphs" for k in _PER_ITEM},
    "bouquet-partition": "bouquets: delta-matroid classes equal mutation classes",
    "chord-partition": "unsigned chord diagrams: intersection-graph classes equal mutation classes",
    "two-isomorphism": "delta-matroid isomorphism equals joins/cuts/mutation reachability",
    "polynomial-invariance": "Bollobas-Riordan polynomial is constant on mutation classes of bouquets",
}


def _partition_check(report: SuiteReport, items: list, by_invariant: Callable, by_moves: Callable):
    """Compare two partitions of ``items`` pair by pair."""
    inv = by_invariant(items)
    mov = by_moves(items)
    report.notes.append(f"{len(set(inv.values()))} invariant classes, {len(set(mov.values()))} move classes")
    for i, a in enumerate(items):
        for b in items[i:]:
            same_inv = inv[a] == inv[b]
            same_mov = mov[a] == mov[b]
            report.add(same_inv == same_mov, f"{a} | {b}", invariant=int(same_inv), moves=int(same_mov))


def _classes(items, equal: Callable) -> dict:
    reps: list = []
    cls = {}
    for x in items:
        for i, r in enumerate(reps):
            if equal(x, r):
                cls[x] = i
                break
        else:
            cls[x] = len(reps)
            reps.append(x)
    return cls


def _dm_classes(items) -> dict:
    return _classes(items, lambda a, b: isomorphic_dm(delta_matroid_of(a), delta_matroid_of(b)) is not None)


def _orbit_classes(items, orbit: Callable) -> dict:
    cls = {}
    for x in items:
        if x not in cls:
            for y in orbit(x):
                cls.setdefault(y, x)
    return {x: cls[x] for x in items}


def word_mutation_orbit(ap: ArrowPresentation) -> set:
    """Orbit of a bouquet under word mutation and word equivalence."""
    start = canonical_form(ap)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for m in mutants_of_word(bouquet_to_word(cur)):
            key = word_canonical(m)
            if key not in seen:
                if len(seen) >= MAX_VISITED:
                    raise SearchBudgetExceeded(f"more than {MAX_VISITED} states visited")
                seen.add(key)
                stack.append(key)
    return seen


def _bouquets_upto(n: int, orientable_only: bool) -> list:
    return [b for k in range(1, n + 1) for b in enumerate_bouquets(k, orientable_only)]


def _run_bouquets(report, spec, threads):
    items = _bouquets_upto(spec.max_edges, spec.orientable_only)
    report.population = len(items)
    _partition_check(report, items, _dm_classes, lambda xs: _orbit_classes(xs, mutation_orbit))


def _run_chords(report, spec, threads):
    items = _bouquets_upto(spec.max_edges, orientable_only=True)
    report.population = len(items)
    graphs = {x: intersection_graph(bouquet_to_word(x)) for x in items}
    _partition_check(
        report,
        items,
        lambda xs: _classes(xs, lambda a, b: graphs_isomorphic(graphs[a], graphs[b])),
        lambda xs: _orbit_classes(xs, word_mutation_orbit),
    )


def _run_two_iso(report, spec, threads):
    items = enumerate_ribbon_graphs(spec)
    report.population = len(items)
    dm = _dm_classes(items)
    pairs = [(a, b) for i, a in enumerate(items) for b in items[i:]]

    def check(pair):
        a, b = pair
        res = two_isomorphism_decide(a, b)
        expected = dm[a] == dm[b]
        ok = res.status in ("equivalent", "not_equivalent") and res.equivalent == expected
        if ok and res.equivalent:
            ok = replay_certificate(a, b, res.certificate)
        return ok, f"{a} | {b}", {"status": res.status, "moves": len(res.certificate)}

    for ok, item, detail in _each(pairs, check, threads):
        report.add(ok, item, **detail)
    if spec.connected_only:
        _partition_check(report, items, lambda xs: dm, lambda xs: _orbit_classes(xs, mutation_orbit))


def _run_polynomial(report, spec, threads):
    items = _bouquets_upto(spec.max_edges, spec.orientable_only)
    sub = invariance_check(items)
    report.population = len(items)
    report.notes.extend(sub.notes)
    for r in sub.records:
        r = dict(r)
        report.add(bool(r.pop("ok")), r.pop("item"), **r)


_WHOLE = {
    "bouquet-partition": _run_bouquets,
    "chord-partition": _run_chords,
    "two-isomorphism": _run_two_iso,
    "polynomial-invariance": _run_polynomial,
}


def run_suite(suite: str, spec: PopulationSpec, threads: int = 1) -> SuiteReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    started = time.perf_counter()
    report = SuiteReport(suite, 0)
    if suite in _PER_ITEM:
        items = enumerate_ribbon_graphs(spec)
        report.population = len(items)
        for rows in _each(items, _PER_ITEM[suite], threads):
            for ok, item, detail in rows:
                report.add(ok, item, **detail)
    else:
        _WHOLE[suite](report, spec, threads)
    report.wall_time = time.perf_counter() - started
    return report
