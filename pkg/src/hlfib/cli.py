"""Command line interface.

Exit codes: 0 for success or a positive decision, 1 for a negative
decision or failed validation, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import braid_kernel, chart as chart_mod, corpus, hurwitz
from .words import free_reduce


def _canonical(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(", ", ": "), indent=1)


def _load_monodromy(path: str) -> hurwitz.MonodromyData:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return hurwitz.from_json_dict(data)
    except (OSError, ValueError) as exc:
        raise SystemExit(_fail(f"cannot read monodromy file {path}: {exc}"))


def _load_chart(path: str) -> chart_mod.Chart:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return chart_from_json_dict(data)
    except (OSError, ValueError, KeyError) as exc:
        raise SystemExit(_fail(f"cannot read chart file {path}: {exc}"))


def _fail(message: str) -> int:
    print(json.dumps({"error": message}), file=sys.stderr)
    return 2


def _parse_word(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise SystemExit(_fail(f"malformed word {text!r}: {exc}"))


# ---------------------------------------------------------------------------
# chart file format


def chart_to_json_dict(c: chart_mod.Chart) -> dict:
    return {
        "genus_g": c.g,
        "surface_genus": c.genus,
        "presentation": c.presentation,
        "base_region": c.base_region,
        "vertices": [{"kind": v.kind, "rotation": list(v.rotation)} for v in c.vertices],
        "edges": [
            {"tail_vertex": e.tail_vertex, "head_vertex": e.head_vertex, "label": e.label}
            for e in c.edges
        ],
        "hoops": [{"label": h.label, "sign": h.sign, "region": h.region} for h in c.hoops],
    }


def chart_from_json_dict(data: dict) -> chart_mod.Chart:
    return chart_mod.Chart(
        g=int(data["genus_g"]),
        genus=int(data["surface_genus"]),
        vertices=tuple(
            chart_mod.Vertex(v["kind"], tuple(int(d) for d in v["rotation"]))
            for v in data["vertices"]
        ),
        edges=tuple(
            chart_mod.Edge(int(e["tail_vertex"]), int(e["head_vertex"]), int(e["label"]))
            for e in data["edges"]
        ),
        hoops=tuple(
            chart_mod.Hoop(int(h["label"]), int(h["sign"]), h.get("region", "base"))
            for h in data.get("hoops", [])
        ),
        presentation=data.get("presentation", "Chat"),
        base_region=int(data.get("base_region", 0)),
    )


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    m = _load_monodromy(args.file)
    report = hurwitz.validate(m)
    for name, passed, detail in report.checks:
        print(f"{name}: {'ok' if passed else 'FAILED'} ({detail})")
    return 0 if report.ok else 1


def cmd_invariants(args) -> int:
    m = _load_monodromy(args.file)
    report = hurwitz.invariant_report(m)
    data = asdict(report)
    data["nh_pos"] = list(report.nh_pos)
    data["nh_neg"] = list(report.nh_neg)
    if args.json:
        print(_canonical(data))
    else:
        print(f"n = {report.n} (I+: {report.n0_pos}, I-: {report.n0_neg}, "
              f"II+: {list(report.nh_pos)}, II-: {list(report.nh_neg)})")
        print(f"chi = {report.chi}")
        print(f"sigma = {report.sigma}")
        print(f"w = {report.w}" + ("" if report.w_is_invariant else "  (warning: not an invariant for even genus)"))
    return 0


def cmd_w(args) -> int:
    m = _load_monodromy(args.file)
    value = hurwitz.w_invariant(m)
    print(value)
    if m.g % 2 == 0:
        print("warning: w is an isomorphism invariant only for odd fiber genus", file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    if not args.stable:
        raise SystemExit(_fail("only --stable comparison is implemented"))
    m1, m2 = _load_monodromy(args.file1), _load_monodromy(args.file2)
    try:
        decision = hurwitz.stably_isomorphic(m1, m2)
    except ValueError as exc:
        raise SystemExit(_fail(str(exc)))
    if decision.isomorphic:
        print("stably isomorphic")
        return 0
    print("not stably isomorphic: " + "; ".join(decision.reasons))
    return 1


def cmd_move(args) -> int:
    m = _load_monodromy(args.file)
    if args.kind != "slide":
        raise SystemExit(_fail(f"unknown move {args.kind!r}"))
    try:
        out = hurwitz.elementary_transformation(m, args.at, args.dir)
    except (IndexError, ValueError) as exc:
        raise SystemExit(_fail(str(exc)))
    print(_canonical(hurwitz.to_json_dict(out)))
    return 0


def cmd_conjugate(args) -> int:
    m = _load_monodromy(args.file)
    out = hurwitz.simultaneous_conjugate(m, _parse_word(args.word))
    print(_canonical(hurwitz.to_json_dict(out)))
    return 0


def cmd_fibersum(args) -> int:
    m1, m2 = _load_monodromy(args.file1), _load_monodromy(args.file2)
    try:
        out = hurwitz.fiber_sum(m1, m2, _parse_word(args.twist))
    except ValueError as exc:
        raise SystemExit(_fail(str(exc)))
    print(_canonical(hurwitz.to_json_dict(out)))
    return 0


def cmd_stabilize(args) -> int:
    m = _load_monodromy(args.file)
    out = hurwitz.stabilize(m, args.n)
    print(_canonical(hurwitz.to_json_dict(out)))
    return 0


def cmd_comb(args) -> int:
    word = _parse_word(args.word)
    try:
        w = braid_kernel.BraidWord(args.strands, word)
        cls = braid_kernel.dirac_class(w)
        result = {"dirac_class": cls.value}
        if cls != braid_kernel.DiracClass.NOT_IN_KERNEL or args.force:
            pass
        perm = braid_kernel.permutation(w)
        if perm == tuple(range(1, args.strands + 1)):
            form = braid_kernel.comb(braid_kernel.to_pure_generators(w))
            result["combed_form"] = {
                "n": form.n,
                "coords": {str(k): list(form.coord(k)) for k in form.levels},
                "bit": form.bit,
            }
        else:
            result["combed_form"] = None
            result["note"] = "word is not pure; no combed form"
    except ValueError as exc:
        raise SystemExit(_fail(str(exc)))
    print(_canonical(result))
    return 0


def cmd_chart(args) -> int:
    c = _load_chart(args.file)
    if args.action == "validate":
        report = chart_mod.validate_chart(c)
        if report.ok:
            print("chart: ok")
            return 0
        for problem in report.problems:
            print(f"chart: {problem}")
        return 1
    counts = chart_mod.counts(c)
    data = {
        "m1": {f"{k}": v for k, v in sorted(counts.m1.items())},
        "m2": {str(k): v for k, v in sorted(counts.m2.items())},
        "m3": counts.m3,
        "m4": counts.m4,
        "m5": counts.m5,
        "n0_pos": {str(k): v for k, v in sorted(counts.n0_pos.items())},
        "n0_neg": {str(k): v for k, v in sorted(counts.n0_neg.items())},
        "nh_pos": {str(k): v for k, v in sorted(counts.nh_pos.items())},
        "nh_neg": {str(k): v for k, v in sorted(counts.nh_neg.items())},
        "w": counts.w,
        "degree_sum_check": chart_mod.degree_sum_check(c),
    }
    print(_canonical(data))
    return 0


def cmd_examples(args) -> int:
    if args.action == "list":
        for name in corpus.SYSTEM_NAMES:
            print(name)
        return 0
    try:
        m = corpus.system(args.name, args.genus, args.power)
    except (KeyError, ValueError) as exc:
        raise SystemExit(_fail(str(exc)))
    payload = hurwitz.to_json_dict(m)
    if args.manifest:
        try:
            entry = corpus.manifest_entry(args.name, args.genus)
            payload["manifest"] = asdict(entry)
        except KeyError:
            payload["manifest"] = None
    print(_canonical(payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hlfib",
        description="Hurwitz systems of hyperelliptic Lefschetz fibrations: "
        "validation, invariants, stable isomorphism, and chart calculus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the global relation of a monodromy file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="print the invariant report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("w", help="print the order-two twist count")
    p.add_argument("file")
    p.set_defaults(func=cmd_w)

    p = sub.add_parser("compare", help="compare two monodromy files")
    p.add_argument("--stable", action="store_true")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("move", help="apply an elementary transformation")
    p.add_argument("kind", choices=["slide"])
    p.add_argument("--at", type=int, required=True)
    p.add_argument("--dir", choices=["l", "r"], required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("conjugate", help="simultaneously conjugate a system")
    p.add_argument("--word", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("fibersum", help="fiber sum of two systems")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--twist", default="")
    p.set_defaults(func=cmd_fibersum)

    p = sub.add_parser("stabilize", help="fiber sum with reference copies")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("comb", help="normal form and kernel class of a braid word")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--force", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_comb)

    p = sub.add_parser("chart", help="validate a chart file or print its counts")
    p.add_argument("action", choices=["validate", "counts"])
    p.add_argument("file")
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("examples", help="export a corpus system")
    p.add_argument("action", choices=["export", "list"])
    p.add_argument("name", nargs="?")
    p.add_argument("--genus", type=int)
    p.add_argument("--power", type=int, help="power parameter for the I^k family")
    p.add_argument("--manifest", action="store_true", help="attach expected values")
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
