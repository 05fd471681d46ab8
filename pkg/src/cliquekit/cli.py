"""Command-line frontend: compute polynomials, export incidence matrices,
verify identities, and run fuzz campaigns.

Exit codes: 0 success (conjecture-class failures are findings, not errors),
1 theorem-class regression, 2 usage or parse errors.  All randomness flows
through explicit --seed flags; stdout is byte-stable for fixed inputs and
seeds (timing goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cliques import clique_polynomial, poly_divided_derivative, poly_reverse
from .conjectures import (
    CHECKS,
    CampaignConfig,
    THEOREM,
    check_conjecture1,
    resolve_checks,
    run_campaign,
)
from .graphs import (
    Graph,
    GraphFormatError,
    RngSpec,
    parse_edge_list,
    parse_graph6,
    random_gnp,
    to_graph6,
)
from .identities import (
    INTERPRETATION_CLIQUES,
    INTERPRETATION_EDGE_SUBSETS,
    check_edge_recurrence,
    check_triangle_recurrence,
    check_vertex_recurrence,
    clique_deletion_expansion,
    triangle_identity,
)
from .incidence import (
    edge_deck_matrix,
    subclique_superclique_matrix,
    triangle_deck_matrix,
    vertex_deck_matrix,
)


def _load_graph(args) -> Graph:
    if getattr(args, "graph6", None) is not None:
        return parse_graph6(args.graph6)
    if getattr(args, "input", None) is not None:
        return parse_edge_list(Path(args.input).read_text())
    return parse_graph6(sys.stdin.readline())


def _coeff_line(poly) -> str:
    return " ".join(str(c) for c in poly) if poly else "0"


def _parse_vertex_tuple(text: str, expected: int | None = None) -> tuple[int, ...]:
    try:
        parts = tuple(int(tok) for tok in text.split("-"))
    except ValueError:
        raise ValueError(f"expected dash-separated vertex ids, got {text!r}") from None
    if expected is not None and len(parts) != expected:
        raise ValueError(f"expected {expected} vertex ids in {text!r}")
    return parts


def _parse_int_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    if not _:
        raise ValueError(f"expected a range like 4..10, got {text!r}")
    return int(lo), int(hi)


def _parse_float_range(text: str) -> tuple[float, float]:
    lo, _, hi = text.partition("..")
    if not _:
        raise ValueError(f"expected a range like 0.2..0.8, got {text!r}")
    return float(lo), float(hi)


# -- subcommands -------------------------------------------------------------

def cmd_poly(args) -> int:
    g = _load_graph(args)
    poly = clique_polynomial(g)
    if args.derivative is not None:
        if args.derivative < 1:
            raise ValueError("derivative order must be >= 1")
        print(_coeff_line(poly_divided_derivative(poly, args.derivative)))
    elif args.reversed:
        print(_coeff_line(poly_reverse(poly, g.n, args.with_unit)))
    else:
        print(_coeff_line(poly))
        print(f"omega {len(poly) - 1}")
    return 0


_MATRIX_BUILDERS = {
    "super": subclique_superclique_matrix,
    "vdeck": vertex_deck_matrix,
    "edeck": edge_deck_matrix,
    "tdeck": triangle_deck_matrix,
}


def cmd_matrix(args) -> int:
    g = _load_graph(args)
    matrix = _MATRIX_BUILDERS[args.kind](g, args.k)
    if args.format == "json":
        print(json.dumps(matrix.to_json_dict(), sort_keys=True, indent=2))
    else:
        sys.stdout.write(matrix.to_csv())
    return 0


def _verify_reports(g: Graph, name: str, args) -> list:
    """Reports for one identity: explicit parameters if given, else all valid ones."""
    if name == "vertex_recurrence" and args.v is not None:
        return [check_vertex_recurrence(g, args.v)]
    if name == "edge_recurrence" and args.e is not None:
        return [check_edge_recurrence(g, _parse_vertex_tuple(args.e, 2))]
    if name == "triangle_identity" and args.delta is not None:
        return [triangle_identity(g, _parse_vertex_tuple(args.delta, 3))[0]]
    if name == "triangle_recurrence" and args.delta is not None:
        return [check_triangle_recurrence(g, _parse_vertex_tuple(args.delta, 3))]
    if name in ("clique_deletion", "clique_deletion_edge_subsets") and args.clique is not None:
        vs = _parse_vertex_tuple(args.clique)
        edge_set = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]
        interp = (
            INTERPRETATION_EDGE_SUBSETS
            if name == "clique_deletion_edge_subsets"
            else args.interpretation
        )
        return [clique_deletion_expansion(g, edge_set, interp)]
    if name in ("conjecture1_first", "conjecture1_second"):
        first, second = check_conjecture1(g, include_unit=args.with_unit)
        return [first if name == "conjecture1_first" else second]
    k_range = (args.k, args.k) if args.k is not None else None
    return CHECKS[name].run(g, k_range)


def cmd_verify(args) -> int:
    g = _load_graph(args)
    names = []
    if args.all_theorems:
        names.append("all-theorems")
    for chunk in args.identity or []:
        names.extend(chunk.split(","))
    resolved = resolve_checks(names)
    reports = []
    theorem_failure = False
    for name in resolved:
        for report in _verify_reports(g, name, args):
            reports.append(report)
            if CHECKS[name].kind == THEOREM and report.holds is False:
                theorem_failure = True
    if args.format == "json":
        print(json.dumps([r.to_json_dict() for r in reports], sort_keys=True, indent=2))
    else:
        for r in reports:
            holds = "n/a" if r.holds is None else json.dumps(r.holds)
            print(
                f"{r.identity} params={json.dumps(r.params, sort_keys=True)} "
                f"lhs={json.dumps(r.lhs)} rhs={json.dumps(r.rhs)} holds={holds}"
            )
    return 1 if theorem_failure else 0


def cmd_fuzz(args) -> int:
    checks = []
    for chunk in args.check:
        checks.extend(chunk.split(","))
    cfg = CampaignConfig(
        n_range=_parse_int_range(args.n),
        p_range=_parse_float_range(args.p),
        samples=args.count,
        rng=RngSpec(args.seed),
        checks=tuple(checks),
        shrink=args.shrink,
        k_range=_parse_int_range(args.k) if args.k else None,
    )
    report = run_campaign(cfg)
    if args.json:
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    print(f"elapsed {report.elapsed_seconds:.2f}s", file=sys.stderr)
    return 1 if report.theorem_failures else 0


def cmd_gen(args) -> int:
    print(to_graph6(random_gnp(args.n, args.p, RngSpec(args.seed))))
    return 0


# -- parser -------------------------------------------------------------------

def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-g", "--graph6", metavar="G6", help="graph6-encoded input graph")
    parser.add_argument(
        "-i", "--input", metavar="FILE",
        help="edge-list file: first line n, then one 'u v' per line",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquekit",
        description="Exact clique polynomials, incidence matrices, identity "
                    "verification, and conjecture fuzzing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="clique polynomial of a graph")
    _add_input_options(p_poly)
    p_poly.add_argument("--derivative", type=int, metavar="K",
                        help="print the K-th derivative divided by K!")
    p_poly.add_argument("--reversed", action="store_true",
                        help="print the reversed polynomial at exponent base n")
    p_poly.add_argument("--with-unit", action="store_true",
                        help="reversed variant keeping an extra literal constant 1")
    p_poly.set_defaults(func=cmd_poly)

    p_matrix = sub.add_parser("matrix", help="clique incidence matrices")
    _add_input_options(p_matrix)
    p_matrix.add_argument("--kind", required=True,
                          choices=sorted(_MATRIX_BUILDERS),
                          help="super: k-cliques vs (k+1)-cliques; vdeck/edeck/tdeck: "
                               "k-cliques vs deleted vertices / edges / triangle edge sets")
    p_matrix.add_argument("--k", type=int, required=True, help="clique size for the rows")
    p_matrix.add_argument("--format", choices=["csv", "json"], default="csv")
    p_matrix.set_defaults(func=cmd_matrix)

    p_verify = sub.add_parser("verify", help="run identity checks on one graph")
    _add_input_options(p_verify)
    p_verify.add_argument("--identity", action="append", metavar="ID[,ID...]",
                          help="identity ids (see README for the catalog)")
    p_verify.add_argument("--all-theorems", action="store_true",
                          help="run every theorem-class identity")
    p_verify.add_argument("--k", type=int, help="restrict k-parameterized identities to one k")
    p_verify.add_argument("--v", type=int, help="vertex for vertex_recurrence")
    p_verify.add_argument("--e", metavar="U-V", help="edge for edge_recurrence")
    p_verify.add_argument("--delta", metavar="A-B-C",
                          help="triangle for triangle_identity / triangle_recurrence")
    p_verify.add_argument("--clique", metavar="V1-V2-...",
                          help="clique whose edges form M for clique_deletion")
    p_verify.add_argument("--interpretation",
                          choices=[INTERPRETATION_CLIQUES, INTERPRETATION_EDGE_SUBSETS],
                          default=INTERPRETATION_CLIQUES,
                          help="inner-sum reading for clique_deletion")
    p_verify.add_argument("--with-unit", action="store_true",
                          help="conjecture1 on the reversed polynomial with literal unit")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_fuzz = sub.add_parser("fuzz", help="run a seeded campaign over G(n, p) graphs")
    p_fuzz.add_argument("--n", required=True, metavar="A..B", help="vertex-count range")
    p_fuzz.add_argument("--p", default="0..1", metavar="X..Y",
                        help="edge-probability range (default 0..1)")
    p_fuzz.add_argument("--count", type=int, required=True, help="number of graphs")
    p_fuzz.add_argument("--seed", type=int, required=True, help="campaign seed")
    p_fuzz.add_argument("--check", action="append", required=True,
                        metavar="ID[,ID...]", help="check ids or all-theorems")
    p_fuzz.add_argument("--k", metavar="A..B", help="restrict k-parameterized checks")
    p_fuzz.add_argument("--shrink", action="store_true",
                        help="shrink counterexamples to local minima")
    p_fuzz.add_argument("--json", action="store_true", help="JSON report instead of text")
    p_fuzz.set_defaults(func=cmd_fuzz)

    p_gen = sub.add_parser("gen", help="print the graph6 of a seeded G(n, p) sample")
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("p", type=float)
    p_gen.add_argument("seed", type=int)
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
