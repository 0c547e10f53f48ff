"""Set systems, delta-matroids and their binary (GF(2)) representations.

Feasible families are stored as sorted tuples of bitmasks over the ground
tuple, so equality of two ``SetSystem`` values is equality of labelled set
systems.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .graphs import SimpleGraph
from .ribbon import sorted_labels

MAX_GROUND = 16


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class SetSystem:
    ground: tuple
    masks: tuple

    def __post_init__(self):
        ground = tuple(str(g) for g in self.ground)
        if len(set(ground)) != len(ground):
            raise ValueError("duplicate ground elements")
        if len(ground) > MAX_GROUND:
            raise ValueError(f"ground set larger than {MAX_GROUND}")
        if list(ground) != sorted_labels(ground):
            # keep a canonical element order so that equality is structural
            order = sorted_labels(ground)
            pos = {g: i for i, g in enumerate(order)}
            masks = {sum(1 << pos[ground[i]] for i in _bits(m)) for m in self.masks}
            ground = tuple(order)
        else:
            masks = set(self.masks)
        full = (1 << len(ground)) - 1
        if any(m & ~full or m < 0 for m in masks):
            raise ValueError("feasible set outside the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "masks", tuple(sorted(masks, key=lambda m: (bin(m).count("1"), _rev(m, len(ground))))))

    @classmethod
    def from_sets(cls, ground: Iterable, feasible: Iterable[Iterable]) -> "SetSystem":
        ground = tuple(str(g) for g in ground)
        pos = {g: i for i, g in enumerate(ground)}
        masks = []
        for f in feasible:
            m = 0
            for x in f:
                x = str(x)
                if x not in pos:
                    raise ValueError(f"feasible set element {x} not in ground set")
                m |= 1 << pos[x]
            masks.append(m)
        return cls(ground, tuple(masks))

    @cached_property
    def index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.ground)}

    @cached_property
    def mask_set(self) -> frozenset:
        return frozenset(self.masks)

    def mask_of(self, subset: Iterable) -> int:
        m = 0
        for x in subset:
            x = str(x)
            if x not in self.index:
                raise ValueError(f"{x} is not in the ground set")
            m |= 1 << self.index[x]
        return m

    def set_of(self, mask: int) -> frozenset:
        return frozenset(self.ground[i] for i in _bits(mask))

    @property
    def feasible(self) -> list[frozenset]:
        return [self.set_of(m) for m in self.masks]

    def __contains__(self, subset) -> bool:
        return self.mask_of(subset) in self.mask_set

    def __len__(self) -> int:
        return len(self.masks)

    def restrict_small(self, size: int = 2) -> "SetSystem":
        return SetSystem(self.ground, tuple(m for m in self.masks if bin(m).count("1") <= size))

    def relabel(self, mapping: dict) -> "SetSystem":
        return SetSystem.from_sets([mapping[g] for g in self.ground], [[mapping[x] for x in f] for f in self.feasible])

    def __str__(self) -> str:
        return to_text(self).replace("\n", " / ").rstrip(" /")


def _rev(m: int, n: int) -> int:
    # lexicographic order on sorted element lists
    return sum(1 << (n - 1 - i) for i in _bits(m))


# ---------------------------------------------------------------------------
# text format


def to_text(d: SetSystem) -> str:
    lines = ["ground" + "".join(" " + g for g in d.ground)]
    for f in d.masks:
        elems = [d.ground[i] for i in _bits(f)]
        lines.append("feasible " + (" ".join(elems) if elems else "-"))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> SetSystem:
    ground = None
    feasible = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "ground":
            if ground is not None:
                raise ValueError(f"line {lineno}: duplicate ground line")
            ground = rest
        elif head == "feasible":
            if ground is None:
                raise ValueError(f"line {lineno}: feasible line before ground line")
            if rest == ["-"]:
                rest = []
            missing = set(rest) - set(ground)
            if missing:
                raise ValueError(f"line {lineno}: {' '.join(sorted(missing))} not in ground set")
            feasible.append(rest)
        else:
            raise ValueError(f"line {lineno}: unexpected keyword {head!r}")
    if ground is None:
        raise ValueError("missing ground line")
    return SetSystem.from_sets(ground, feasible)


# ---------------------------------------------------------------------------
# classification and the exchange axiom


class Exchange(NamedTuple):
    holds: bool
    witness: tuple | None  # (X, Y, u) as frozensets / element


class Classification(NamedTuple):
    proper: bool
    normal: bool
    even: bool
    is_matroid: bool
    is_delta_matroid: bool


def symmetric_exchange_holds(d: SetSystem) -> Exchange:
    """Exhaustive check; ``v`` may equal ``u``."""
    fam = d.mask_set
    for x in d.masks:
        for y in d.masks:
            diff = x ^ y
            for u in _bits(diff):
                xu = x ^ (1 << u)
                if not any(xu ^ (1 << v) in fam if v != u else xu in fam for v in _bits(diff)):
                    return Exchange(False, (d.set_of(x), d.set_of(y), d.ground[u]))
    return Exchange(True, None)


def classify(d: SetSystem) -> Classification:
    proper = bool(d.masks)
    normal = 0 in d.mask_set
    even = len({bin(m).count("1") % 2 for m in d.masks}) <= 1
    dm = proper and symmetric_exchange_holds(d).holds
    matroid = dm and len({bin(m).count("1") for m in d.masks}) == 1
    return Classification(proper, normal, even, matroid, dm)


# ---------------------------------------------------------------------------
# twist, loop complementation, direct sums


def twist(d: SetSystem, a: Iterable) -> SetSystem:
    am = d.mask_of(a)
    return SetSystem(d.ground, tuple(m ^ am for m in d.masks))


def loop_complement(d: SetSystem, a: Iterable) -> SetSystem:
    fam = set(d.masks)
    for i in _bits(d.mask_of(a)):
        bit = 1 << i
        fam ^= {m | bit for m in fam if not m & bit}
    return SetSystem(d.ground, tuple(fam))


def direct_sum(d1: SetSystem, d2: SetSystem) -> SetSystem:
    clash = set(d1.ground) & set(d2.ground)
    if clash:
        raise ValueError(f"ground sets overlap: {' '.join(sorted_labels(clash))}")
    ground = d1.ground + d2.ground
    shift = len(d1.ground)
    return SetSystem(ground, tuple(f1 | (f2 << shift) for f1 in d1.masks for f2 in d2.masks))


# ---------------------------------------------------------------------------
# GF(2) matrices


@dataclass(frozen=True)
class Gf2Matrix:
    """Square symmetric 0/1 matrix; row ``i`` is stored as an int bitset."""

    index: tuple
    rows: tuple

    def __post_init__(self):
        index = tuple(str(x) for x in self.index)
        if len(set(index)) != len(index):
            raise ValueError("duplicate index labels")
        if len(self.rows) != len(index):
            raise ValueError("matrix is not square")
        n = len(index)
        for i, r in enumerate(self.rows):
            if r >> n:
                raise ValueError("row wider than the index")
            for j in range(n):
                if (r >> j) & 1 != (self.rows[j] >> i) & 1:
                    raise ValueError("matrix is not symmetric")
        object.__setattr__(self, "index", index)

    @classmethod
    def from_lists(cls, index, entries) -> "Gf2Matrix":
        rows = tuple(sum((int(v) & 1) << j for j, v in enumerate(row)) for row in entries)
        return cls(tuple(index), rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def principal(self, mask: int) -> list[int]:
        """Rows of the principal submatrix on ``mask``, re-packed densely."""
        idx = list(_bits(mask))
        return [sum(((self.rows[i] >> j) & 1) << k for k, j in enumerate(idx)) for i in idx]


def gf2_rank(rows: list[int]) -> int:
    work = list(rows)
    rank = 0
    for col in range(max((r.bit_length() for r in work), default=0)):
        pivot = next((i for i in range(rank, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and (work[i] >> col) & 1:
                work[i] ^= work[rank]
        rank += 1
    return rank


def gf2_nonsingular(rows: list[int]) -> bool:
    return gf2_rank(rows) == len(rows)


def from_gf2_matrix(m: Gf2Matrix) -> SetSystem:
    """Feasible sets are the index subsets with a nonsingular principal submatrix."""
    n = len(m.index)
    masks = tuple(x for x in range(1 << n) if x == 0 or gf2_nonsingular(m.principal(x)))
    d = SetSystem(m.index, masks)
    assert symmetric_exchange_holds(d).holds
    return d


def reconstruct_binary(small: SetSystem) -> SetSystem:
    """The unique binary delta-matroid whose feasible sets of size <= 2 are
    those of ``small``.

    Singletons give the diagonal.  A 2x2 principal minor over GF(2) is
    ``m_xx * m_yy + m_xy``, so the off-diagonal entry is the pair's
    feasibility XOR the product of the two diagonal entries.
    """
    if 0 not in small.mask_set:
        raise ValueError("set system is not normal")
    n = len(small.ground)
    fam = small.mask_set
    diag = [int((1 << i) in fam) for i in range(n)]
    rows = [diag[i] << i for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if (((1 << i) | (1 << j)) in fam) ^ (diag[i] & diag[j]):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    d = from_gf2_matrix(Gf2Matrix(small.ground, tuple(rows)))
    assert d.restrict_small() == small.restrict_small()
    assert classify(d).even == all(not (rows[i] >> i) & 1 for i in range(n))
    return d


def fundamental_graph(d: SetSystem) -> SimpleGraph:
    c = classify(d)
    if not c.normal or not c.even:
        raise ValueError("fundamental graph needs a normal, even set system")
    pairs = [d.set_of(m) for m in d.masks if bin(m).count("1") == 2]
    return SimpleGraph(d.ground, frozenset(pairs))


def graph_delta_matroid(g: SimpleGraph) -> SetSystem:
    """Normal even binary delta-matroid with fundamental graph ``g``."""
    d = SetSystem.from_sets(g.vertices, [[]] + [sorted(e) for e in g.edges])
    return reconstruct_binary(d)


# ---------------------------------------------------------------------------
# isomorphism


def _signatures(d: SetSystem) -> list[tuple]:
    n = len(d.ground)
    sig = []
    for i in range(n):
        counts = [0] * (n + 1)
        for m in d.masks:
            if (m >> i) & 1:
                counts[bin(m).count("1")] += 1
        sig.append(tuple(counts))
    return sig


def isomorphic_dm(d1: SetSystem, d2: SetSystem) -> dict | None:
    """A ground bijection carrying feasible sets onto feasible sets, or None."""
    n = len(d1.ground)
    if n != len(d2.ground) or len(d1.masks) != len(d2.masks):
        return None
    if Counter(bin(m).count("1") for m in d1.masks) != Counter(bin(m).count("1") for m in d2.masks):
        return None
    s1, s2 = _signatures(d1), _signatures(d2)
    if Counter(s1) != Counter(s2):
        return None
    fam2 = d2.mask_set
    order = sorted(range(n), key=lambda i: (Counter(s1)[s1[i]], i))
    image = [0] * n
    used = [False] * n

    def check() -> bool:
        for m in d1.masks:
            t = 0
            for i in _bits(m):
                t |= 1 << image[i]
            if t not in fam2:
                return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return check()
        i = order[k]
        for j in range(n):
            if not used[j] and s2[j] == s1[i]:
                image[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                used[j] = False
        return False

    if not extend(0):
        return None
    return {d1.ground[i]: d2.ground[image[i]] for i in range(n)}


def all_subsets(items):
    items = list(items)
    return itertools.chain.from_iterable(itertools.combinations(items, r) for r in range(len(items) + 1))
