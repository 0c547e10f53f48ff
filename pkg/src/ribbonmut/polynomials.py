"""Bollobas-Riordan and Tutte polynomials by state sums.

Convention used throughout::

    BR(G; x, y, z) = sum over A of
        (x-1)^(r(E)-r(A)) * (y-1)^n(A) * z^(k(A)-b(A)+n(A))

with r(A) = |V| - k(A) and n(A) = |A| - r(A).  The z exponent is the Euler
genus of (V, A), so on plane ribbon graphs BR is the Tutte polynomial of the
underlying graph; at z = 1 that holds for every ribbon graph.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import time

from .chords import mutation_orbit
from .duality import _check_cap, delta_matroid_of
from .report import SuiteReport
from .ribbon import ArrowPresentation, canonical_form, is_connected, subgraph_stats
from .setsystem import SetSystem, all_subsets, classify, isomorphic_dm

VARS = ("x", "y", "z")


@dataclass(frozen=True)
class MultiPoly:
    """Sparse integer polynomial in x, y, z: exponent triple -> coefficient."""

    terms: tuple = field(default=())

    def __post_init__(self):
        acc: dict[tuple, int] = defaultdict(int)
        items = self.terms.items() if isinstance(self.terms, dict) else self.terms
        for exp, c in items:
            acc[tuple(exp)] += c
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls((((0, 0, 0), c),))

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        exp = [0, 0, 0]
        exp[VARS.index(name)] = 1
        return cls(((tuple(exp), 1),))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        return MultiPoly(self.terms + other.terms)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return MultiPoly(self.terms + tuple((e, -c) for e, c in other.terms))

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return MultiPoly(tuple(out))

    def __pow__(self, n: int) -> "MultiPoly":
        out = MultiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, name: str, value: int) -> "MultiPoly":
        i = VARS.index(name)
        out = []
        for e, c in self.terms:
            e2 = list(e)
            e2[i] = 0
            out.append((tuple(e2), c * value ** e[i]))
        return MultiPoly(tuple(out))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))
        parts = []
        for exp, c in ordered:
            mono = "*".join(
                v if p == 1 else f"{v}^{p}" for v, p in zip(VARS, exp) if p
            )
            body = f"{abs(c)}*{mono}" if mono else str(abs(c))
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


X, Y, Z = (MultiPoly.var(v) for v in VARS)
ONE = MultiPoly.const(1)


def bollobas_riordan(ap: ArrowPresentation) -> MultiPoly:
    _check_cap(ap)
    nv = ap.num_vertices
    full = subgraph_stats(ap, ap.edges)
    r_full = nv - full.k
    acc: dict[tuple, int] = defaultdict(int)
    for a in all_subsets(ap.edges):
        st = subgraph_stats(ap, a)
        r = nv - st.k
        n = len(a) - r
        acc[(r_full - r, n, st.k - st.b + n)] += 1
    return _expand(acc)


def _expand(acc: dict) -> MultiPoly:
    # (x-1)^i (y-1)^j z^l summed with multiplicities
    out = MultiPoly()
    for (i, j, l), mult in acc.items():
        out = out + MultiPoly.const(mult) * (X - ONE) ** i * (Y - ONE) ** j * Z ** l
    return out


def matroid_rank(m: SetSystem, mask: int) -> int:
    return max(bin(mask & b).count("1") for b in m.masks)


def tutte(m: SetSystem) -> MultiPoly:
    """Corank-nullity expansion with the rank function read off the bases."""
    if not classify(m).is_matroid:
        raise ValueError("tutte needs a matroid")
    n = len(m.ground)
    full = matroid_rank(m, (1 << n) - 1)
    acc: dict[tuple, int] = defaultdict(int)
    for mask in range(1 << n):
        r = matroid_rank(m, mask)
        acc[(full - r, bin(mask).count("1") - r, 0)] += 1
    return _expand(acc)


def invariance_check(population) -> SuiteReport:
    """Mutation-equivalent members of ``population`` must share BR.

    Also records whether some pair with non-isomorphic delta-matroids is
    told apart by BR, so that the check is not vacuous.
    """
    started = time.perf_counter()
    population = [canonical_form(ap) for ap in population]
    if not all(is_connected(ap) for ap in population):
        raise ValueError("invariance check needs connected ribbon graphs")
    report = SuiteReport("br-mutation-invariance", len(population))
    members = set(population)
    orbit_rep: dict = {}
    for ap in population:
        if ap not in orbit_rep:
            for other in mutation_orbit(ap):
                orbit_rep[other] = ap
    polys = {ap: bollobas_riordan(ap) for ap in population}
    for ap in population:
        rep = orbit_rep[ap]
        if rep in members and rep != ap:
            same = polys[ap] == polys[rep]
            report.add(same, str(ap), partner=str(rep), poly=str(polys[ap]))
    separated = None
    for i, a in enumerate(population):
        for b in population[i + 1 :]:
            if polys[a] != polys[b] and isomorphic_dm(delta_matroid_of(a), delta_matroid_of(b)) is None:
                separated = (a, b)
                break
        if separated:
            break
    report.add(separated is not None or len(population) < 2, "non-vacuity",
               pair=" | ".join(map(str, separated)) if separated else "none")
    report.wall_time = time.perf_counter() - started
    return report


__all__ = ["MultiPoly", "bollobas_riordan", "invariance_check", "matroid_rank", "tutte", "X", "Y", "Z", "ONE"]
