"""Delta-matroids of ribbon graphs, partial duals and partial petrials."""

from __future__ import annotations

from functools import lru_cache

from .ribbon import (
    ArrowEnd,
    ArrowPresentation,
    _check_subset,
    _trace,
    num_components,
    subgraph_stats,
    sorted_labels,
)
from .setsystem import MAX_GROUND, SetSystem, _bits, classify, symmetric_exchange_holds


def _subset_labels(ap: ArrowPresentation, mask: int) -> list[str]:
    return [ap.edges[i] for i in _bits(mask)]


def _check_cap(ap: ArrowPresentation):
    if ap.num_edges > MAX_GROUND:
        raise ValueError(f"{ap.num_edges} edges exceeds the subset enumeration cap of {MAX_GROUND}")


@lru_cache(maxsize=None)
def delta_matroid_of(ap: ArrowPresentation) -> SetSystem:
    """Feasible sets: edge subsets A with b(A) equal to the number of components."""
    _check_cap(ap)
    k = num_components(ap)
    masks = tuple(
        m for m in range(1 << ap.num_edges) if subgraph_stats(ap, _subset_labels(ap, m)).b == k
    )
    d = SetSystem(ap.edges, masks)
    assert symmetric_exchange_holds(d).holds, f"not a delta-matroid: {ap}"
    return d


@lru_cache(maxsize=None)
def cycle_matroid_of(ap: ArrowPresentation) -> SetSystem:
    """Bases: the feasible sets of ``delta_matroid_of`` whose subgraph is plane."""
    _check_cap(ap)
    k = num_components(ap)
    nv = ap.num_vertices
    masks = []
    for m in range(1 << ap.num_edges):
        a = _subset_labels(ap, m)
        st = subgraph_stats(ap, a)
        if st.b == k and 2 * st.k - (nv - len(a) + st.b) == 0:
            masks.append(m)
    d = SetSystem(ap.edges, tuple(masks))
    assert classify(d).is_matroid
    return d


def spanning_quasi_trees(ap: ArrowPresentation) -> list[frozenset]:
    if num_components(ap) > 1:
        raise ValueError("spanning quasi-trees need a connected ribbon graph")
    _check_cap(ap)
    out = []
    for m in range(1 << ap.num_edges):
        a = _subset_labels(ap, m)
        if subgraph_stats(ap, a).b == 1:
            out.append(frozenset(a))
    return sorted(out, key=lambda s: (len(s), sorted_labels(s)))


def partial_petrial(ap: ArrowPresentation, a) -> ArrowPresentation:
    """Reverse the second mark of every edge in ``a``."""
    a = _check_subset(ap, a)
    curves = [list(c) for c in ap.curves]
    for lab in a:
        ci, p = ap.occurrences[lab][1]
        curves[ci][p] = curves[ci][p].flipped()
    return ArrowPresentation(tuple(tuple(c) for c in curves))


def partial_dual(ap: ArrowPresentation, a) -> ArrowPresentation:
    """Splice the presentation at the marks of every edge in ``a``.

    The new curves are the boundary components of (V, a).  Along each one,
    marks of edges outside ``a`` are carried over (sign flipped when the
    boundary runs against the old curve), and every free side of an edge in
    ``a`` becomes a new mark of that edge.  The edge disc keeps its boundary
    orientation, so the side running head(first mark) -> tail(second mark)
    carries a mark pointing the same way; a boundary running along it reads
    that mark as +1 and one running the other way as -1.
    """
    a = _check_subset(ap, a)
    if not a:
        return ap
    curves = []
    for trace in _trace(ap, a, with_content=True):
        curves.append(tuple(end for step in trace for end in step.ends))
    return ArrowPresentation(tuple(curves))


def partial_dual_edgewise(ap: ArrowPresentation, a) -> ArrowPresentation:
    """Same as :func:`partial_dual`, one edge at a time in the given order."""
    for e in a:
        ap = partial_dual(ap, [e])
    return ap


def is_bouquet(ap: ArrowPresentation) -> bool:
    return ap.num_vertices == 1


__all__ = [
    "ArrowEnd",
    "cycle_matroid_of",
    "delta_matroid_of",
    "is_bouquet",
    "partial_dual",
    "partial_dual_edgewise",
    "partial_petrial",
    "spanning_quasi_trees",
]
