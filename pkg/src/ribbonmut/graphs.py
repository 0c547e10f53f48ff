"""Simple graphs on labelled vertex sets, with brute-force isomorphism."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .ribbon import sorted_labels


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple
    edges: frozenset  # of frozenset pairs

    def __post_init__(self):
        verts = tuple(sorted_labels(str(v) for v in self.vertices))
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex labels")
        edges = set()
        for e in self.edges:
            pair = frozenset(str(v) for v in e)
            if len(pair) != 2:
                raise ValueError(f"loops are not allowed: {sorted(pair)}")
            if not pair <= set(verts):
                raise ValueError(f"edge {sorted(pair)} uses an unknown vertex")
            edges.add(pair)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_pairs(cls, vertices, pairs) -> "SimpleGraph":
        return cls(tuple(vertices), frozenset(frozenset(p) for p in pairs))

    def neighbours(self, v) -> set:
        return {u for e in self.edges if v in e for u in e if u != v}

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted((tuple(sorted_labels(e)) for e in self.edges), key=lambda p: [sorted_labels([x]) for x in p])

    def __str__(self) -> str:
        return "graph " + " ".join(self.vertices) + " | " + " ".join(f"{u}{v}" for u, v in self.sorted_edges())


def graph_isomorphism(g1: SimpleGraph, g2: SimpleGraph) -> dict | None:
    """A vertex bijection mapping edges onto edges, or None.

    Exhaustive over bijections that respect degrees.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    deg1 = {v: g1.degree(v) for v in g1.vertices}
    deg2 = {v: g2.degree(v) for v in g2.vertices}
    if Counter(deg1.values()) != Counter(deg2.values()):
        return None
    order = sorted(g1.vertices, key=lambda v: -deg1[v])
    adj1 = {v: g1.neighbours(v) for v in g1.vertices}
    adj2 = {v: g2.neighbours(v) for v in g2.vertices}
    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in g2.vertices:
            if w in used or deg2[w] != deg1[v]:
                continue
            if any((u in adj1[v]) != (mapping[u] in adj2[w]) for u in order[:i]):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def graphs_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    return graph_isomorphism(g1, g2) is not None


def graph_isomorphic_bruteforce(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    """Plain permutation search; kept as an independent check."""
    if len(g1.vertices) != len(g2.vertices):
        return False
    for perm in itertools.permutations(g2.vertices):
        m = dict(zip(g1.vertices, perm))
        if {frozenset(m[x] for x in e) for e in g1.edges} == set(g2.edges):
            return True
    return False
