"""Arrow presentations of ribbon graphs.

A ribbon graph is stored as a tuple of closed curves (one per vertex).  Each
curve is a cyclic sequence of :class:`ArrowEnd` marks; every edge label occurs
on exactly two marks.  The sign of a mark records whether its arrow points
along (+1) or against (-1) the direction in which the curve is read.

Two marks of an edge with equal signs on the same curve give an untwisted
(annular) loop; unequal signs give a Moebius loop.
"""

from __future__ import annotations

import itertools
import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple, Sequence

HEADER = "ribbon v1"
_TOKEN = re.compile(r"^([A-Za-z0-9_]+)([+-])$")


class ParseError(ValueError):
    """Malformed presentation text; ``lineno`` is 1-based (0 if global)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class ArrowEnd(NamedTuple):
    label: str
    sign: int  # +1 forward, -1 backward

    def __str__(self) -> str:
        return f"{self.label}{'+' if self.sign > 0 else '-'}"

    def flipped(self) -> "ArrowEnd":
        return ArrowEnd(self.label, -self.sign)


def label_key(label: str):
    """Sort key putting numeric labels in numeric order ahead of the rest."""
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


def sorted_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


Curve = tuple  # tuple[ArrowEnd, ...]


def _as_curve(curve) -> Curve:
    out = []
    for end in curve:
        if isinstance(end, str):
            m = _TOKEN.match(end)
            if not m:
                raise ValueError(f"malformed arrow token {end!r}")
            end = ArrowEnd(m.group(1), 1 if m.group(2) == "+" else -1)
        else:
            label, sign = end
            if sign not in (1, -1):
                raise ValueError(f"arrow sign must be +1 or -1, got {sign!r}")
            end = ArrowEnd(str(label), sign)
        out.append(end)
    return tuple(out)


@dataclass(frozen=True)
class ArrowPresentation:
    """Immutable arrow presentation.

    ``curves`` may be given as nested sequences of ``ArrowEnd``, ``(label, sign)``
    pairs or tokens such as ``"a+"``.  Empty curves are isolated vertices.
    """

    curves: tuple = field(default=())

    def __post_init__(self):
        curves = tuple(_as_curve(c) for c in self.curves)
        object.__setattr__(self, "curves", curves)
        counts: dict[str, int] = defaultdict(int)
        for curve in curves:
            for end in curve:
                counts[end.label] += 1
        bad = {lab: n for lab, n in counts.items() if n != 2}
        if bad:
            lab = sorted_labels(bad)[0]
            raise ValueError(f"label {lab} occurs {bad[lab]} times (expected 2)")

    @classmethod
    def from_words(cls, *words: str) -> "ArrowPresentation":
        """``ArrowPresentation.from_words("a+ b- a+ c+", "b+ c-")``."""
        return cls(tuple(tuple(w.split()) for w in words))

    @cached_property
    def edges(self) -> tuple[str, ...]:
        return tuple(sorted_labels({e.label for c in self.curves for e in c}))

    @cached_property
    def occurrences(self) -> dict[str, tuple[tuple[int, int], tuple[int, int]]]:
        """label -> ((curve, position), (curve, position)) in reading order."""
        occ: dict[str, list] = defaultdict(list)
        for ci, curve in enumerate(self.curves):
            for p, end in enumerate(curve):
                occ[end.label].append((ci, p))
        return {lab: (v[0], v[1]) for lab, v in occ.items()}

    @property
    def num_vertices(self) -> int:
        return len(self.curves)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def end(self, ci: int, p: int) -> ArrowEnd:
        return self.curves[ci][p]

    def relabel(self, mapping: dict[str, str]) -> "ArrowPresentation":
        return ArrowPresentation(
            tuple(tuple(ArrowEnd(mapping[e.label], e.sign) for e in c) for c in self.curves)
        )

    def __str__(self) -> str:
        return " / ".join(
            "vertex" + "".join(" " + str(e) for e in c) for c in self.curves
        ) or "(empty)"


# ---------------------------------------------------------------------------
# text format


def parse(text: str) -> ArrowPresentation:
    """Read the line-oriented ``ribbon v1`` format.

    The header line is optional but may appear at most once, before any
    ``vertex`` line.  ``#`` starts a comment.
    """
    curves: list[tuple[ArrowEnd, ...]] = []
    seen: dict[str, list[int]] = defaultdict(list)
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == HEADER:
            if header_seen:
                raise ParseError("duplicate header", lineno)
            if curves:
                raise ParseError("header after vertex lines", lineno)
            header_seen = True
            continue
        tokens = line.split()
        if tokens[0] != "vertex":
            raise ParseError(f"expected 'vertex', got {tokens[0]!r}", lineno)
        curve = []
        for tok in tokens[1:]:
            m = _TOKEN.match(tok)
            if not m:
                raise ParseError(f"malformed token {tok!r}", lineno)
            label = m.group(1)
            seen[label].append(lineno)
            if len(seen[label]) > 2:
                raise ParseError(f"label {label} occurs {len(seen[label])} times", lineno)
            curve.append(ArrowEnd(label, 1 if m.group(2) == "+" else -1))
        curves.append(tuple(curve))
    for label, lines in seen.items():
        if len(lines) == 1:
            raise ParseError(f"label {label} occurs once", lines[0])
    return ArrowPresentation(tuple(curves))


def serialize(ap: ArrowPresentation) -> str:
    lines = [HEADER]
    for curve in ap.curves:
        lines.append(" ".join(["vertex", *(str(e) for e in curve)]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# boundary tracing
#
# A mark at (curve ci, position p) has two flank points on its curve:
# (ci, p, 0) where the mark starts and (ci, p, 1) where it ends, in reading
# order.  Its tail is the start flank when the sign is +1, the end flank
# otherwise.  The edge disc meets the curve along the mark and has two free
# sides, joining head(o1)->tail(o2) and head(o2)->tail(o1).


class TopoStats(NamedTuple):
    k: int
    b: int
    boundary_traces: tuple


class _Step(NamedTuple):
    kind: str  # "vertex" or "side"
    ends: tuple  # marks met along the step, already oriented for the trace


def _components(ap: ArrowPresentation, labels) -> list[int]:
    parent = list(range(len(ap.curves)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lab in labels:
        (c1, _), (c2, _) = ap.occurrences[lab]
        r1, r2 = find(c1), find(c2)
        if r1 != r2:
            parent[max(r1, r2)] = min(r1, r2)
    return [find(i) for i in range(len(ap.curves))]


def _check_subset(ap: ArrowPresentation, a) -> frozenset:
    a = frozenset(str(x) for x in a)
    unknown = a - set(ap.edges)
    if unknown:
        raise ValueError(f"unknown edge label(s): {' '.join(sorted_labels(unknown))}")
    return a


def _trace(ap: ArrowPresentation, a: frozenset, with_content: bool) -> list:
    """Boundary components of the ribbon subgraph (V, a).

    Each trace is a list of flank points (content-free mode) or a list of
    ``_Step`` records whose marks spell out the new curve obtained by gluing
    a disc to that boundary component.
    """
    curves = ap.curves
    attached = [[p for p, e in enumerate(c) if e.label in a] for c in curves]
    nxt: dict[tuple[int, int], int] = {}
    prv: dict[tuple[int, int], int] = {}
    for ci, ps in enumerate(attached):
        for i, p in enumerate(ps):
            nxt[ci, p] = ps[(i + 1) % len(ps)]
            prv[ci, p] = ps[i - 1]

    def head(ci, p):
        return (ci, p, 1 if curves[ci][p].sign > 0 else 0)

    def tail(ci, p):
        return (ci, p, 0 if curves[ci][p].sign > 0 else 1)

    side: dict[tuple, tuple] = {}
    for lab in a:
        o1, o2 = ap.occurrences[lab]
        h1, t1, h2, t2 = head(*o1), tail(*o1), head(*o2), tail(*o2)
        side[h1], side[t2] = t2, h1
        side[h2], side[t1] = t1, h2

    def between(ci, p, q):
        c = curves[ci]
        n = len(c)
        out = []
        i = (p + 1) % n
        while i != q:
            out.append(c[i])
            i = (i + 1) % n
        return out

    traces: list = []
    for ci, ps in enumerate(attached):
        if not ps:
            traces.append([_Step("vertex", curves[ci])] if with_content else [])
    visited: set = set()
    for ci, ps in enumerate(attached):
        for p in ps:
            start = (ci, p, 1)
            if start in visited:
                continue
            trace: list = []
            cur = start
            while True:
                c, q, f = cur
                if f == 1:
                    mate = (c, nxt[c, q], 0)
                    if with_content:
                        trace.append(_Step("vertex", tuple(between(c, q, mate[1]))))
                else:
                    mate = (c, prv[c, q], 1)
                    if with_content:
                        seg = between(c, mate[1], q)
                        trace.append(_Step("vertex", tuple(e.flipped() for e in reversed(seg))))
                visited.add(cur)
                visited.add(mate)
                if not with_content:
                    trace.extend((cur, mate))
                jump = side[mate]
                if with_content:
                    mc, mq, mf = mate
                    sign = 1 if mate == head(mc, mq) else -1
                    trace.append(_Step("side", (ArrowEnd(curves[mc][mq].label, sign),)))
                cur = jump
                if cur == start:
                    break
            traces.append(trace)
    return traces


def subgraph_stats(ap: ArrowPresentation, a=()) -> TopoStats:
    """Components ``k`` and boundary components ``b`` of the subgraph (V, a)."""
    a = _check_subset(ap, a)
    traces = _trace(ap, a, with_content=False)
    k = len(set(_components(ap, a)))
    return TopoStats(k, len(traces), tuple(tuple(t) for t in traces))


def num_components(ap: ArrowPresentation) -> int:
    return len(set(_components(ap, ap.edges)))


def components(ap: ArrowPresentation) -> list[ArrowPresentation]:
    """Connected components, ordered by their first curve."""
    roots = _components(ap, ap.edges)
    groups: dict[int, list] = {}
    for ci, r in enumerate(roots):
        groups.setdefault(r, []).append(ap.curves[ci])
    return [ArrowPresentation(tuple(g)) for g in groups.values()]


def is_connected(ap: ArrowPresentation) -> bool:
    return num_components(ap) <= 1


class Topology(NamedTuple):
    orientable: bool
    euler_genus: int
    is_plane: bool


def is_orientable(ap: ArrowPresentation) -> bool:
    """Two-colour the curves so that every edge's marks agree after flipping."""
    adj: dict[int, list] = defaultdict(list)
    for lab, ((c1, p1), (c2, p2)) in ap.occurrences.items():
        parity = ap.curves[c1][p1].sign != ap.curves[c2][p2].sign
        adj[c1].append((c2, parity))
        adj[c2].append((c1, parity))
    colour: dict[int, bool] = {}
    for root in range(len(ap.curves)):
        if root in colour:
            continue
        colour[root] = False
        stack = [root]
        while stack:
            u = stack.pop()
            for v, parity in adj[u]:
                want = colour[u] ^ parity
                if v not in colour:
                    colour[v] = want
                    stack.append(v)
                elif colour[v] != want:
                    return False
    return True


def euler_genus(ap: ArrowPresentation, a=None) -> int:
    """Euler genus of (V, a); the whole presentation when ``a`` is None."""
    a = ap.edges if a is None else a
    st = subgraph_stats(ap, a)
    return 2 * st.k - (ap.num_vertices - len(a) + st.b)


def orientability_and_genus(ap: ArrowPresentation) -> Topology:
    g = euler_genus(ap)
    return Topology(is_orientable(ap), g, g == 0)


# ---------------------------------------------------------------------------
# canonical forms


def _variants(curve: Curve) -> list[Curve]:
    """All readings of a curve: every rotation, in both directions."""
    n = len(curve)
    if n == 0:
        return [curve]
    rev = tuple(e.flipped() for e in reversed(curve))
    out = []
    for c in (curve, rev):
        for r in range(n):
            out.append(c[r:] + c[:r])
    return out


def _encode(curves: Sequence[Curve]) -> tuple:
    ids: dict[str, int] = {}
    flip: dict[str, int] = {}
    out = []
    for curve in curves:
        enc = []
        for lab, sign in curve:
            if lab not in ids:
                ids[lab] = len(ids)
                flip[lab] = sign
            enc.append((ids[lab], sign * flip[lab]))
        out.append(tuple(enc))
    return tuple(out)


def _component_code(curves: Sequence[Curve]) -> tuple:
    curves = sorted(curves, key=len)
    groups = [list(g) for _, g in itertools.groupby(curves, key=len)]
    best = None
    for orders in itertools.product(*(itertools.permutations(g) for g in groups)):
        ordered = [c for grp in orders for c in grp]
        for choice in itertools.product(*(_variants(c) for c in ordered)):
            code = _encode(choice)
            if best is None or code < best:
                best = code
    return (tuple(len(c) for c in curves), best)


@lru_cache(maxsize=None)
def canonical_form(ap: ArrowPresentation) -> ArrowPresentation:
    """Least representative under rotation/reflection of curves, curve
    reordering, flipping both marks of an edge, and relabelling.

    Edges are relabelled ``1, 2, ...`` by first appearance.  Mirror images
    share a canonical form.
    """
    codes = sorted(_component_code(comp.curves) for comp in components(ap))
    curves = []
    offset = 0
    for _, code in codes:
        for enc in code:
            curves.append(tuple(ArrowEnd(str(i + offset + 1), s) for i, s in enc))
        offset += sum(len(enc) for enc in code) // 2
    return ArrowPresentation(tuple(curves))


def isomorphic(ap1: ArrowPresentation, ap2: ArrowPresentation) -> bool:
    if (ap1.num_edges, ap1.num_vertices) != (ap2.num_edges, ap2.num_vertices):
        return False
    return canonical_form(ap1) == canonical_form(ap2)


# ---------------------------------------------------------------------------
# joins, cuts, unions


def disjoint_union(ap1: ArrowPresentation, ap2: ArrowPresentation) -> ArrowPresentation:
    clash = set(ap1.edges) & set(ap2.edges)
    if clash:
        raise ValueError(f"edge labels shared by both presentations: {' '.join(sorted_labels(clash))}")
    return ArrowPresentation(ap1.curves + ap2.curves)


def _rotate(curve: Curve, gap: int) -> Curve:
    if not curve:
        return curve
    if not 0 <= gap < len(curve):
        raise ValueError(f"gap {gap} out of range for a curve of length {len(curve)}")
    return curve[gap:] + curve[:gap]


def vertex_join(
    ap1: ArrowPresentation,
    gap1: tuple[int, int],
    ap2: ArrowPresentation,
    gap2: tuple[int, int],
) -> ArrowPresentation:
    """Merge curve ``gap1[0]`` of ap1 with curve ``gap2[0]`` of ap2.

    A gap ``(ci, g)`` is the point just before mark ``g`` of curve ``ci``
    (any ``g`` is accepted as 0 on an empty curve).  The merged curve reads
    the first curve from its gap, then the second from its gap, so the two
    edge sets never interleave.  It takes the place of ap1's curve; ap2's
    other curves are appended.
    """
    disjoint_union(ap1, ap2)
    c1, g1 = gap1
    c2, g2 = gap2
    a = ap1.curves[c1]
    b = ap2.curves[c2]
    merged = _rotate(a, g1 if a else 0) + _rotate(b, g2 if b else 0)
    curves = list(ap1.curves)
    curves[c1] = merged
    curves.extend(c for i, c in enumerate(ap2.curves) if i != c2)
    return ArrowPresentation(tuple(curves))


def vertex_cuts(ap: ArrowPresentation, include_trivial: bool = False) -> list[tuple[ArrowPresentation, ArrowPresentation]]:
    """Every way to cut ``ap`` into two ribbon graphs.

    Curve cuts split one curve at two gaps so that the halves end up in
    different components; the left half is curve 0 of the left part, the
    right half curve 0 of the right part, and
    ``vertex_join(left, (0, 0), right, (0, 0))`` rebuilds ``ap``.

    With ``include_trivial``, cutting at a single gap to split off an
    isolated vertex is listed too, once per curve (all its gaps give the
    same result).

    When ``ap`` is disconnected, the component splits ``(component, rest)``
    are listed as well; ``disjoint_union`` rebuilds those.
    """
    cuts = []
    for ci, curve in enumerate(ap.curves):
        n = len(curve)
        others = [c for k, c in enumerate(ap.curves) if k != ci]
        if include_trivial:
            cuts.append((ArrowPresentation(((),)), ArrowPresentation((curve, *others))))
        for i in range(n):
            for j in range(i + 1, n):
                left_half = curve[i:j]
                right_half = curve[j:] + curve[:i]
                split = ArrowPresentation((left_half, right_half, *others))
                roots = _components(split, split.edges)
                if roots[0] == roots[1]:
                    continue
                left = [split.curves[k] for k in range(len(roots)) if roots[k] == roots[0]]
                right = [split.curves[k] for k in range(len(roots)) if roots[k] != roots[0]]
                cuts.append((ArrowPresentation(tuple(left)), ArrowPresentation(tuple(right))))
    comps = components(ap)
    if len(comps) > 1:
        for i, comp in enumerate(comps):
            rest = tuple(c for j, other in enumerate(comps) if j != i for c in other.curves)
            cuts.append((comp, ArrowPresentation(rest)))
    return cuts
