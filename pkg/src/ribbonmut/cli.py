"""Command-line front end.

Exit status: 0 on success or a true answer, 1 on a false answer or a failed
suite, 2 on usage, validation or cap errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import harness
from .chords import mutants_of_ribbon_graph
from .duality import cycle_matroid_of, delta_matroid_of, partial_dual, partial_petrial
from .polynomials import bollobas_riordan, tutte
from .report import record_line
from .ribbon import (
    ArrowPresentation,
    isomorphic,
    orientability_and_genus,
    parse,
    serialize,
    subgraph_stats,
)
from .setsystem import from_text, to_text


class _Out:
    def __init__(self, structured: bool):
        self.structured = structured
        self.lines: list[str] = []

    def text(self, s: str):
        if not self.structured:
            self.lines.append(s.rstrip("\n"))

    def record(self, **fields):
        if self.structured:
            self.lines.append(record_line(**fields))

    def flush(self):
        if self.lines:
            sys.stdout.write("\n".join(self.lines) + "\n")


def load_presentation(arg: str) -> ArrowPresentation:
    """A file path, ``-`` for stdin, or an inline literal such as
    ``"a+ b+ a+ b+"`` or ``"vertex a+ b- / vertex a+ b+"``."""
    if arg == "-":
        return parse(sys.stdin.read())
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse(fh.read())
    lines = []
    for part in arg.split("/"):
        part = part.strip()
        lines.append(part if part.startswith("vertex") else f"vertex {part}")
    return parse("\n".join(lines))


def load_set_system(arg: str):
    if arg == "-":
        return from_text(sys.stdin.read())
    with open(arg, encoding="utf-8") as fh:
        return from_text(fh.read())


def _emit_presentation(out: _Out, ap: ArrowPresentation, **extra):
    out.text(serialize(ap))
    out.record(**extra, presentation=str(ap))


def _emit_set_system(out: _Out, d):
    out.text(to_text(d))
    for f in d.feasible:
        out.record(record="feasible", set=" ".join(x for x in d.ground if x in f) or "-")


def _population(args) -> harness.PopulationSpec:
    return harness.PopulationSpec(
        max_edges=args.max_edges,
        max_vertices=args.max_vertices,
        orientable_only=args.orientable_only,
        connected_only=args.connected_only,
        min_edges=args.min_edges,
    )


def cmd_validate(args, out):
    ap = load_presentation(args.input)
    out.text(f"ok: {ap.num_vertices} vertices, {ap.num_edges} edges")
    out.record(valid=1, vertices=ap.num_vertices, edges=ap.num_edges)
    return 0


def cmd_info(args, out):
    ap = load_presentation(args.input)
    st = subgraph_stats(ap, ap.edges)
    topo = orientability_and_genus(ap)
    fields = dict(
        vertices=ap.num_vertices,
        edges=ap.num_edges,
        components=st.k,
        boundaries=st.b,
        orientable=int(topo.orientable),
        euler_genus=topo.euler_genus,
        plane=int(topo.is_plane),
    )
    out.text("\n".join(f"{k} {v}" for k, v in fields.items()))
    out.record(**fields)
    return 0


def cmd_dm(args, out):
    _emit_set_system(out, delta_matroid_of(load_presentation(args.input)))
    return 0


def cmd_cycle(args, out):
    _emit_set_system(out, cycle_matroid_of(load_presentation(args.input)))
    return 0


def cmd_dual(args, out):
    _emit_presentation(out, partial_dual(load_presentation(args.input), args.set.split()), record="dual")
    return 0


def cmd_petrial(args, out):
    _emit_presentation(out, partial_petrial(load_presentation(args.input), args.set.split()), record="petrial")
    return 0


def cmd_mutants(args, out):
    for i, m in enumerate(mutants_of_ribbon_graph(load_presentation(args.input))):
        out.text(f"# mutant {i + 1}")
        _emit_presentation(out, m, record="mutant", index=i + 1)
    return 0


def cmd_iso(args, out):
    same = isomorphic(load_presentation(args.first), load_presentation(args.second))
    out.text("isomorphic" if same else "not isomorphic")
    out.record(isomorphic=int(same))
    return 0 if same else 1


def cmd_two_iso(args, out):
    g, h = load_presentation(args.first), load_presentation(args.second)
    res = harness.two_isomorphism_decide(g, h)
    out.text(f"status {res.status}")
    out.record(record="decision", status=res.status, moves=len(res.certificate), witness=res.witness or "-")
    if res.witness:
        out.text(f"witness {res.witness}")
    for i, step in enumerate(res.certificate):
        out.text(f"move {i + 1} {step}")
        out.record(record="move", index=i + 1, kind=step.kind, presentation=str(step.result))
    return 0 if res.equivalent and res.status == "equivalent" else 1


def cmd_enumerate(args, out):
    for i, ap in enumerate(harness.enumerate_ribbon_graphs(_population(args))):
        out.text(f"# {i + 1}")
        _emit_presentation(out, ap, record="graph", index=i + 1)
    return 0


def cmd_witness(args, out):
    target = load_set_system(args.input)
    w = harness.find_witness(target, _population(args))
    if w is None:
        out.text("no witness in population")
        out.record(record="witness", found=0)
        return 1
    _emit_presentation(out, w, record="witness", found=1)
    return 0


def cmd_verify(args, out):
    report = harness.run_suite(args.suite, _population(args), threads=args.threads)
    out.text(report.to_text())
    if out.structured:
        out.lines.append(report.to_records().rstrip("\n"))
    return 0 if report.ok else 1


def cmd_poly(args, out):
    ap = load_presentation(args.input)
    br = bollobas_riordan(ap)
    out.text(f"bollobas_riordan {br}")
    out.record(record="poly", kind="bollobas_riordan", value=str(br))
    if args.tutte:
        t = tutte(cycle_matroid_of(ap))
        out.text(f"tutte {t}")
        out.record(record="poly", kind="tutte", value=str(t))
    return 0


def _add_population(p, max_edges=3, max_vertices=3):
    p.add_argument("--max-edges", type=int, default=max_edges)
    p.add_argument("--max-vertices", type=int, default=max_vertices)
    p.add_argument("--min-edges", type=int, default=0)
    p.add_argument("--orientable-only", action="store_true")
    p.add_argument("--connected-only", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbonmut", description="Ribbon graphs, delta-matroids and mutation.")
    parser.add_argument("--structured", action="store_true", help="tab-separated key=value records")
    sub = parser.add_subparsers(dest="verb", required=True)

    for name, fn, help_ in [
        ("validate", cmd_validate, "check a presentation file"),
        ("info", cmd_info, "components, boundaries, orientability, genus"),
        ("dm", cmd_dm, "delta-matroid"),
        ("cycle", cmd_cycle, "cycle matroid"),
        ("mutants", cmd_mutants, "one-move mutants"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("input")
        p.set_defaults(func=fn)

    for name, fn in [("dual", cmd_dual), ("petrial", cmd_petrial)]:
        p = sub.add_parser(name, help=f"partial {name}")
        p.add_argument("input")
        p.add_argument("--set", default="", help="space-separated edge labels")
        p.set_defaults(func=fn)

    for name, fn in [("iso", cmd_iso), ("two-iso", cmd_two_iso)]:
        p = sub.add_parser(name)
        p.add_argument("first")
        p.add_argument("second")
        p.set_defaults(func=fn)

    p = sub.add_parser("enumerate", help="list ribbon graphs up to isomorphism")
    _add_population(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("witness", help="find a ribbon graph with a given delta-matroid")
    p.add_argument("input")
    _add_population(p, max_edges=4, max_vertices=2)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(harness.SUITES))
    p.add_argument("--threads", type=int, default=1)
    _add_population(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("poly", help="Bollobas-Riordan polynomial")
    p.add_argument("input")
    p.add_argument("--tutte", action="store_true", help="also the Tutte polynomial of the cycle matroid")
    p.set_defaults(func=cmd_poly)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.structured)
    try:
        status = args.func(args, out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
