"""Command-line surface: batch operations on text-format ideals plus the
statement-verification suite.

Exit codes: 0 = success / all PASS or SKIP, 1 = any FAIL, 2 = usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .corpus import corpus
from .homology import (
    bass_numbers,
    canonical_module,
    equidimensional_hull,
    sliding_depth_check,
)
from .ideals import Ideal
from .resolutions import (
    betti_table,
    depth,
    free_resolution,
    projective_dimension,
    quotient_is_cohen_macaulay,
)
from .residual import analytic_spread, g_s_check, link, rees_equations, residual_intersection
from .ring import GF, QQ
from .suite import (
    STATEMENTS,
    exit_code,
    reports_json,
    reproduce_example,
    run_all,
    _json_safe,
)
from .textio import ParseError, order_from_name, parse_input


def _field_from_name(name: str):
    if name == "QQ":
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        return GF(int(name[3:-1]))
    raise ValueError(f"unknown field {name!r} (use QQ or GF(p))")


def _read_input(path: str):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(payload, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load(args, want_ideals=1):
    text = _read_input(args.input)
    order = order_from_name(args.order)
    parsed = parse_input(text, order=order)
    if len(parsed.ideals) < want_ideals:
        raise ParseError(f"{want_ideals} ideal statement(s) required", 1, 1)
    return parsed.ring, [Ideal(parsed.ring, gens) for gens in parsed.ideals]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="residua",
        description="Exact polynomial-ring algebra and the Betti-number statement suite.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for generic choices")
    common.add_argument("--field", default="QQ", help="coefficient field: QQ or GF(p)")
    common.add_argument("--order", default="grevlex", choices=["grevlex", "lex"], help="monomial order")
    common.add_argument(
        "--gs-convention",
        default="paper",
        choices=["paper", "strict"],
        help="G_s prime-height convention (see docs)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_input=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if needs_input:
            p.add_argument("input", help="input file, or - for stdin")
        return p

    add("gb", "reduced Groebner basis of the ideal")
    add("resolve", "minimal free resolution (ranks and twists)")
    add("betti", "graded Betti table of the ideal")
    add("colon", "first ideal : second ideal")
    add("rees", "Rees algebra equations, fiber ideal, analytic spread")
    add("spread", "analytic spread")
    p = add("gs", "G_s condition via Fitting-ideal heights")
    p.add_argument("--s", type=int, default=None, help="check G_{s+1}; default G_infinity")
    add("koszul", "Koszul homology and the sliding-depth report")
    add("depth", "depth/dimension/CM data of R/I")
    p = add("residual", "seeded s-residual intersection a : I")
    p.add_argument("--s", type=int, required=True)
    add("link", "(alpha) : I for the second statement's generators alpha")
    add("hull", "unmixed part (equidimensional hull)")
    p = add("bass", "Bass numbers of R/I")
    p.add_argument("--up-to", type=int, default=None)
    add("canonical", "canonical module of R/I: Betti numbers and annihilator")
    p = add("verify", "verify a statement (or all) over the corpus", needs_input=False)
    p.add_argument("statement", choices=list(STATEMENTS) + ["all", "example"])
    add("example", "reproduce the worked example end to end", needs_input=False)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "verify":
        if args.statement == "example":
            report = reproduce_example(_field_from_name(args.field), seed=args.seed)
            reports = [report]
        elif args.statement == "all":
            reports = run_all(seed=args.seed)
        else:
            reports = run_all(seed=args.seed, statements=(args.statement,))
        if args.json:
            print(json.dumps(reports_json(reports, args.seed), sort_keys=True, indent=2))
        else:
            for r in reports:
                print(r.text_line())
            counts = {}
            for r in reports:
                counts[r.status] = counts.get(r.status, 0) + 1
            print("summary:", " ".join(f"{k}={v}" for k, v in sorted(counts.items())))
        return exit_code(reports)

    if cmd == "example":
        report = reproduce_example(_field_from_name(args.field), seed=args.seed)
        if args.json:
            payload = {"schema": 1, "seed": args.seed, "reports": [report.to_json_dict()]}
            print(json.dumps(payload, sort_keys=True, indent=2))
        else:
            print(report.text_line())
            for n, ok in report.checks:
                print(f"  {'PASS' if ok else 'FAIL'}  {n}")
        return 0 if report.status != "FAIL" else 1

    if cmd == "gb":
        _ring, ideals = _load(args)
        gens = [str(g) for g in ideals[0].groebner_basis()]
        _emit({"groebner_basis": gens}, args.json, gens)
        return 0

    if cmd == "resolve":
        _ring, ideals = _load(args)
        res = free_resolution(ideals[0])
        ranks = res.ranks()
        twists = [list(res.twists(i) or ()) for i in range(len(ranks))]
        payload = {"ranks": ranks, "twists": twists}
        lines = [f"F{i}: rank {r}, twists {tw}" for i, (r, tw) in enumerate(zip(ranks, twists))]
        _emit(payload, args.json, lines)
        return 0

    if cmd == "betti":
        _ring, ideals = _load(args)
        table = betti_table(ideals[0])
        _emit(table.to_json_dict(), args.json, [table.text_triangle()])
        return 0

    if cmd == "colon":
        _ring, ideals = _load(args, want_ideals=2)
        out = ideals[0].quotient(ideals[1])
        gens = [str(g) for g in out.groebner_basis()]
        _emit({"colon": gens}, args.json, gens)
        return 0

    if cmd == "rees":
        _ring, ideals = _load(args)
        data = rees_equations(ideals[0])
        payload = {
            "presentation": [str(g) for g in data.presentation.generators],
            "fiber": [str(g) for g in data.fiber_ideal.generators],
            "spread": data.spread,
            "ring": repr(data.rees_ring),
        }
        lines = (
            [f"ring: {data.rees_ring!r}"]
            + [f"P: {g}" for g in payload["presentation"]]
            + [f"fiber: {g}" for g in payload["fiber"]]
            + [f"analytic spread: {data.spread}"]
        )
        _emit(payload, args.json, lines)
        return 0

    if cmd == "spread":
        _ring, ideals = _load(args)
        value = analytic_spread(ideals[0])
        _emit({"spread": value}, args.json, [str(value)])
        return 0

    if cmd == "gs":
        _ring, ideals = _load(args)
        s = args.s if args.s is not None else ideals[0].ring.n
        report = g_s_check(ideals[0], s, convention=args.gs_convention)
        label = "G_infinity" if args.s is None else f"G_{s + 1}"
        lines = [f"{label}: {'holds' if report['holds'] else 'fails at h = ' + str(report['failed_h'])}"]
        lines += [f"  h={h}: ht Fitt = {ht}" for h, ht in report["heights"]]
        _emit(_json_safe(report), args.json, lines)
        return 0

    if cmd == "koszul":
        _ring, ideals = _load(args)
        report = sliding_depth_check(ideals[0])
        lines = []
        for row in report["rows"]:
            if row["nonzero"]:
                lines.append(
                    f"H_{row['i']}: nonzero, depth {row['depth']} (bound {row['bound']}) "
                    f"{'ok' if row['ok'] else 'FAILS'}"
                )
            else:
                lines.append(f"H_{row['i']}: zero")
        lines.append(f"sliding depth: {'holds' if report['holds'] else 'fails'}")
        _emit(_json_safe(report), args.json, lines)
        return 0

    if cmd == "depth":
        _ring, ideals = _load(args)
        ideal = ideals[0]
        quotient = ideal.quotient_module()
        payload = {
            "depth": _json_safe(depth(quotient)),
            "dimension": _json_safe(ideal.dimension()),
            "pd": _json_safe(projective_dimension(quotient)),
            "cohen_macaulay": quotient_is_cohen_macaulay(ideal) if ideal.is_proper() else None,
        }
        lines = [f"{k}: {v}" for k, v in payload.items()]
        _emit(payload, args.json, lines)
        return 0

    if cmd == "residual":
        _ring, ideals = _load(args)
        data = residual_intersection(ideals[0], args.s, args.seed)
        payload = data.describe()
        lines = [f"{k}: {v}" for k, v in payload.items()]
        _emit(_json_safe(payload), args.json, lines)
        return 0

    if cmd == "link":
        _ring, ideals = _load(args, want_ideals=2)
        out = link(ideals[0], list(ideals[1].generators))
        gens = [str(g) for g in out.groebner_basis()]
        _emit({"link": gens}, args.json, gens)
        return 0

    if cmd == "hull":
        _ring, ideals = _load(args)
        out = equidimensional_hull(ideals[0])
        gens = [str(g) for g in out.groebner_basis()]
        _emit({"hull": gens}, args.json, gens)
        return 0

    if cmd == "bass":
        _ring, ideals = _load(args)
        table = bass_numbers(ideals[0].quotient_module(), args.up_to)
        payload = table.to_json_dict()
        _emit(payload, args.json, [f"mu^{i} = {v}" for i, v in sorted(payload.items(), key=lambda t: int(t[0]))])
        return 0

    if cmd == "canonical":
        _ring, ideals = _load(args)
        omega = canonical_module(ideals[0])
        table = betti_table(omega)
        ann = omega.annihilator()
        payload = {"betti": table.to_json_dict(), "annihilator": [str(g) for g in ann.groebner_basis()]}
        lines = [f"betti: {table.totals}", "ann: " + ", ".join(payload["annihilator"])]
        _emit(payload, args.json, lines)
        return 0

    raise ValueError(f"unhandled command {cmd!r}")


if __name__ == "__main__":
    sys.exit(main())
