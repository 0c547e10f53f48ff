"""Double occurrence words, shares and mutation.

Mutation of a general connected ribbon graph is reduced to mutation of an
unsigned chord diagram: take the partial dual along a spanning quasi-tree
(a bouquet), add half-twists to its non-orientable loops, mutate the
resulting word, then undo both steps with the same edge sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .duality import partial_dual, partial_petrial, spanning_quasi_trees
from .graphs import SimpleGraph
from .ribbon import ArrowEnd, ArrowPresentation, canonical_form, is_connected

MAX_VISITED = 10**6


class SearchBudgetExceeded(RuntimeError):
    """Orbit search hit the visited-state budget; the answer is unknown."""


@dataclass(frozen=True)
class SignedWord:
    """Cyclic double occurrence word; the first letter is an arbitrary anchor."""

    letters: tuple

    def __post_init__(self):
        # validation piggybacks on the presentation invariants
        ap = ArrowPresentation((self.letters,))
        object.__setattr__(self, "letters", ap.curves[0])

    @classmethod
    def parse(cls, text: str) -> "SignedWord":
        return cls(tuple(text.split()))

    @property
    def is_unsigned(self) -> bool:
        return all(e.sign > 0 for e in self.letters)

    def normalized(self) -> "SignedWord":
        """Flip both occurrences of any letter whose first occurrence is -."""
        first: dict[str, int] = {}
        out = []
        for lab, sign in self.letters:
            first.setdefault(lab, sign)
            out.append(ArrowEnd(lab, sign * first[lab]))
        return SignedWord(tuple(out))

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def bouquet_to_word(ap: ArrowPresentation) -> SignedWord:
    if ap.num_vertices != 1:
        raise ValueError(f"not a bouquet: {ap.num_vertices} vertices")
    return SignedWord(ap.curves[0])


def word_to_bouquet(w: SignedWord) -> ArrowPresentation:
    return ArrowPresentation((w.letters,))


def word_canonical(w: SignedWord) -> ArrowPresentation:
    """Equivalence under rotation, reversal and relabelling."""
    return canonical_form(word_to_bouquet(w))


def intersection_graph(w: SignedWord) -> SimpleGraph:
    if not w.is_unsigned:
        raise ValueError("intersection graphs are defined for unsigned words")
    pos: dict[str, list[int]] = {}
    for i, e in enumerate(w.letters):
        pos.setdefault(e.label, []).append(i)
    labels = list(pos)
    pairs = []
    for i, u in enumerate(labels):
        a0, a1 = pos[u]
        for v in labels[i + 1 :]:
            inside = sum(a0 < p < a1 for p in pos[v])
            if inside == 1:
                pairs.append((u, v))
    return SimpleGraph.from_pairs(labels, pairs)


# ---------------------------------------------------------------------------
# shares


class Share(NamedTuple):
    """Two disjoint arcs, each a tuple of consecutive word positions."""

    first: tuple
    second: tuple


class _Cut(NamedTuple):
    start: int  # position where the second subword begins
    n2: int
    n3: int
    n4: int


def _decompositions(w: SignedWord):
    """Every cyclic split w = w1 w2 w3 w4 where w2, w4 form a share."""
    n = len(w)
    labels = [e.label for e in w.letters]
    for start in range(max(n, 1)):
        for n2 in range(n + 1):
            for n3 in range(n - n2 + 1):
                for n4 in range(n - n2 - n3 + 1):
                    inside: dict[str, int] = {}
                    for off in (*range(n2), *range(n2 + n3, n2 + n3 + n4)):
                        lab = labels[(start + off) % n]
                        inside[lab] = inside.get(lab, 0) + 1
                    if all(c == 2 for c in inside.values()):
                        yield _Cut(start, n2, n3, n4)


def find_shares(w: SignedWord) -> list[Share]:
    """All shares, identified by their two position sets (empty arcs included)."""
    seen = set()
    out = []
    n = len(w)
    for cut in _decompositions(w):
        a = tuple((cut.start + i) % n for i in range(cut.n2))
        b = tuple((cut.start + cut.n2 + cut.n3 + i) % n for i in range(cut.n4))
        key = frozenset([frozenset(a), frozenset(b)]) if a or b else frozenset([frozenset()])
        if key in seen:
            continue
        seen.add(key)
        a_s, b_s = sorted([a, b], key=lambda t: (min(t) if t else -1, len(t)))
        out.append(Share(a_s, b_s))
    return out


def _reverse(seg) -> tuple:
    return tuple(e.flipped() for e in reversed(seg))


def mutant_words_raw(w: SignedWord) -> list[SignedWord]:
    """The three mutants of every share decomposition, before deduplication."""
    letters = w.letters
    out = []
    for start, n2, n3, n4 in _decompositions(w):
        r = letters[start:] + letters[:start]
        w2, w3, w4, w1 = r[:n2], r[n2 : n2 + n3], r[n2 + n3 : n2 + n3 + n4], r[n2 + n3 + n4 :]
        for m in (
            w1 + _reverse(w2) + w3 + _reverse(w4),
            w1 + w4 + w3 + w2,
            w1 + _reverse(w4) + w3 + _reverse(w2),
        ):
            out.append(SignedWord(m).normalized())
    return out


def mutants_of_word(w: SignedWord) -> list[SignedWord]:
    """Mutants of ``w`` up to word equivalence; reversed segments flip signs."""
    seen = set()
    out = []
    for m in dict.fromkeys(mutant_words_raw(w)):
        key = word_canonical(m)
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# ribbon graphs


def _require_connected(ap: ArrowPresentation):
    if not is_connected(ap):
        raise ValueError("mutation search needs a connected ribbon graph")


def mutants_of_ribbon_graph(ap: ArrowPresentation) -> list[ArrowPresentation]:
    """One-move mutation neighbours of ``ap``, one per isomorphism class."""
    _require_connected(ap)
    return list(_neighbours(ap).values())


def _reduce(ap: ArrowPresentation):
    q = spanning_quasi_trees(ap)[0]
    bouquet = partial_dual(ap, q)
    assert bouquet.num_vertices == 1
    signs: dict[str, list[int]] = {}
    for e in bouquet.curves[0]:
        signs.setdefault(e.label, []).append(e.sign)
    nonorientable = [lab for lab, (s1, s2) in signs.items() if s1 != s2]
    flat = bouquet_to_word(partial_petrial(bouquet, nonorientable)).normalized()
    assert flat.is_unsigned
    return q, nonorientable, flat


def _neighbours(ap: ArrowPresentation) -> dict:
    q, nonorientable, flat = _reduce(ap)
    out: dict[ArrowPresentation, ArrowPresentation] = {}
    # the undo steps depend on labels, so only exact duplicates may be dropped
    for m in dict.fromkeys(mutant_words_raw(flat)):
        g = partial_dual(partial_petrial(word_to_bouquet(m), nonorientable), q)
        out.setdefault(canonical_form(g), g)
    return out


@lru_cache(maxsize=None)
def _cached_neighbours(key: ArrowPresentation) -> dict:
    return _neighbours(key)


def mutation_neighbours(ap: ArrowPresentation) -> list[ArrowPresentation]:
    """Canonical forms of the one-move mutants of ``ap``."""
    _require_connected(ap)
    return list(_cached_neighbours(canonical_form(ap)))


def mutation_orbit(ap: ArrowPresentation, budget: int = MAX_VISITED) -> set:
    """Canonical forms reachable by mutation and isomorphism."""
    _require_connected(ap)
    start = canonical_form(ap)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _cached_neighbours(cur):
            if nxt not in seen:
                if len(seen) >= budget:
                    raise SearchBudgetExceeded(f"more than {budget} states visited")
                seen.add(nxt)
                queue.append(nxt)
    return seen


def mutation_path(ap1: ArrowPresentation, ap2: ArrowPresentation, budget: int = MAX_VISITED):
    """Canonical forms from ap1 to ap2, each a one-move mutant of the last.

    Returns None when the orbit of ap1 is exhausted without meeting ap2.
    Bidirectional BFS; the neighbour relation is symmetric.
    """
    _require_connected(ap1)
    _require_connected(ap2)
    a, b = canonical_form(ap1), canonical_form(ap2)
    if a == b:
        return [a]
    parents = [{a: None}, {b: None}]
    frontiers = [deque([a]), deque([b])]
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        for _ in range(len(frontiers[side])):
            cur = frontiers[side].popleft()
            for nxt in _cached_neighbours(cur):
                if nxt in parents[side]:
                    continue
                parents[side][nxt] = cur
                if nxt in parents[1 - side]:
                    return _join_paths(parents, nxt)
                if len(parents[0]) + len(parents[1]) >= budget:
                    raise SearchBudgetExceeded(f"more than {budget} states visited")
                frontiers[side].append(nxt)
    return None


def _join_paths(parents, meet):
    left = []
    cur = meet
    while cur is not None:
        left.append(cur)
        cur = parents[0][cur]
    left.reverse()
    cur = parents[1][meet]
    while cur is not None:
        left.append(cur)
        cur = parents[1][cur]
    return left


def mutation_equivalent(ap1: ArrowPresentation, ap2: ArrowPresentation, budget: int = MAX_VISITED) -> bool:
    """Related by mutation and isomorphism.  Raises ``SearchBudgetExceeded``
    instead of answering when the search is cut short."""
    _require_connected(ap1)
    _require_connected(ap2)
    if ap1.num_edges != ap2.num_edges:
        raise ValueError("edge counts differ")
    return mutation_path(ap1, ap2, budget) is not None
