"""Conjecture checks, seeded fuzz campaigns over G(n, p) corpora, and
counterexample shrinking.

The check catalog maps identity ids to runners that evaluate every valid
parameter of a check on one graph.  Checks are classed as 'theorem' (proved;
a campaign failure is a regression alarm) or 'conjecture' (open; failures are
findings, collected and optionally shrunk).  Campaigns are deterministic:
identical configs, including the seed, produce identical reports.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .cliques import (
    clique_count,
    clique_polynomial,
    enumerate_cliques,
    poly_derivative,
    poly_divided_derivative,
    poly_normalize,
    poly_reverse,
    poly_sum,
)
from .graphs import (
    Graph,
    RngSpec,
    Splitmix64,
    delete_edge,
    delete_edge_set,
    delete_vertex,
    parse_graph6,
    random_gnp,
    to_graph6,
    triangles,
)
from .identities import (
    IdentityReport,
    check_edge_deck_identity,
    check_edge_recurrence,
    check_first_derivative,
    check_handshake,
    check_kth_derivative_general,
    check_second_derivative,
    check_third_derivative_k5free,
    check_triangle_recurrence,
    check_vertex_deck_identity,
    check_vertex_recurrence,
    clique_deletion_expansion,
    triangle_deletion_counts,
    triangle_identity,
    INTERPRETATION_CLIQUES,
    INTERPRETATION_EDGE_SUBSETS,
)


# -- reversed-polynomial conjectures -------------------------------------------

def check_conjecture1(g: Graph, include_unit: bool = False) -> tuple[IdentityReport, IdentityReport]:
    """Derivative formulas for the reversed clique-counting polynomial c(G, x).

    c(G, x) reverses the clique polynomial at exponent base n.  First claim:
    d/dx c(G, x) == sum over v of c(G - v, x), each deck member reversed at
    base n-1 (a vertex-deleted subgraph keeps n-1 vertices).  Second claim:
    (1/2!) d^2/dx^2 c(G, x) == sum over e of c(G - e, x), deck members
    reversed at base n.  include_unit switches to the variant of c that keeps
    an extra literal constant 1.
    """
    n = g.n
    reversed_poly = poly_reverse(clique_polynomial(g), n, include_unit)
    g6 = to_graph6(g)
    params = {"include_unit": include_unit}

    lhs1 = poly_derivative(reversed_poly, 1)
    rhs1 = poly_sum(
        poly_reverse(clique_polynomial(delete_vertex(g, v)), n - 1, include_unit)
        for v in range(n)
    )
    first = IdentityReport(
        "conjecture1_first", g6, params, poly_normalize(lhs1), poly_normalize(rhs1),
        poly_normalize(lhs1) == poly_normalize(rhs1),
    )

    lhs2 = poly_divided_derivative(reversed_poly, 2)
    rhs2 = poly_sum(
        poly_reverse(clique_polynomial(delete_edge(g, e)), n, include_unit)
        for e in g.edges()
    )
    second = IdentityReport(
        "conjecture1_second", g6, params, poly_normalize(lhs2), poly_normalize(rhs2),
        poly_normalize(lhs2) == poly_normalize(rhs2),
    )
    return first, second


def check_triangle_deck_identity(g: Graph, k: int) -> IdentityReport:
    """(t - C(k, 3)) * c_k(G) against the sum of c_k(G - d) over triangles d,

    where t is the triangle count and G - d deletes the triangle's edges.
    Reported, never asserted globally: it fails already on the 4-clique.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    tris = triangles(g)
    lhs = (len(tris) - comb(k, 3)) * clique_count(g, k)
    rhs = sum(
        clique_count(delete_edge_set(g, itertools.combinations(d, 2)), k)
        for d in tris
    )
    return IdentityReport(
        "triangle_deck", to_graph6(g), {"k": k}, lhs, rhs, lhs == rhs
    )


def _triangle_graph_is_edgeless(g: Graph) -> bool:
    # Pairwise test, deliberately not via triangle_graph(): no 64-triangle cap.
    masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in triangles(g)]
    return all(
        (ma & mb).bit_count() < 2 for ma, mb in itertools.combinations(masks, 2)
    )


def check_conjecture2(g: Graph) -> IdentityReport:
    """If no two triangles of G share an edge, the triangle-deck identity
    should hold for every k up to the clique number.

    Applicable only on that class; otherwise the report carries holds=None.
    """
    g6 = to_graph6(g)
    if not _triangle_graph_is_edgeless(g):
        return IdentityReport("conjecture2", g6, {"applicable": False}, None, None, None)
    omega = enumerate_cliques(g).omega
    ks = list(range(3, omega + 1))
    lhs, rhs = [], []
    for k in ks:
        sub = check_triangle_deck_identity(g, k)
        lhs.append(sub.lhs)
        rhs.append(sub.rhs)
    return IdentityReport(
        "conjecture2", g6, {"applicable": True, "ks": ks}, lhs, rhs, lhs == rhs
    )


def check_conjecture3(g: Graph) -> IdentityReport:
    """(1/3!) d^3/dx^3 C(G, x) against the sum of C(G - d, x) over triangles d.

    Differs from the proved third-derivative formula by summing whole
    edge-deleted graphs instead of neighborhood subgraphs; fails on any graph
    containing a triangle.
    """
    lhs = poly_divided_derivative(clique_polynomial(g), 3)
    rhs = poly_sum(
        clique_polynomial(delete_edge_set(g, itertools.combinations(d, 2)))
        for d in triangles(g)
    )
    return IdentityReport(
        "conjecture3", to_graph6(g), {}, poly_normalize(lhs), poly_normalize(rhs),
        poly_normalize(lhs) == poly_normalize(rhs),
    )


# -- check catalog ---------------------------------------------------------------

THEOREM = "theorem"
CONJECTURE = "conjecture"

KRange = Optional[tuple[int, int]]


@dataclass(frozen=True)
class CheckDef:
    """A catalog entry: id, theorem/conjecture class, and an all-parameters runner."""

    name: str
    kind: str
    run: Callable[[Graph, KRange], list[IdentityReport]]


def _ks(lo: int, hi: int, k_range: KRange) -> range:
    if k_range is not None:
        lo, hi = max(lo, k_range[0]), min(hi, k_range[1])
    return range(lo, hi + 1)


def _run_handshake(g: Graph, k_range: KRange) -> list[IdentityReport]:
    omega = enumerate_cliques(g).omega
    return [check_handshake(g, k) for k in _ks(1, max(omega, 1), k_range)]


def _run_vertex_recurrence(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [check_vertex_recurrence(g, v) for v in range(g.n)]


def _run_edge_recurrence(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [check_edge_recurrence(g, e) for e in g.edges()]


def _run_vertex_deck(g: Graph, k_range: KRange) -> list[IdentityReport]:
    omega = enumerate_cliques(g).omega
    return [check_vertex_deck_identity(g, k) for k in _ks(1, max(omega, 1), k_range)]


def _run_edge_deck(g: Graph, k_range: KRange) -> list[IdentityReport]:
    omega = enumerate_cliques(g).omega
    return [check_edge_deck_identity(g, k) for k in _ks(2, max(omega, 2), k_range)]


def _run_first_derivative(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [check_first_derivative(g)]


def _run_second_derivative(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [check_second_derivative(g)]


def _run_triangle_identity(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [triangle_identity(g, d)[0] for d in triangles(g)]


def _run_clique_deletion(interpretation: str):
    def run(g: Graph, k_range: KRange) -> list[IdentityReport]:
        catalog = enumerate_cliques(g, k_max=4)
        reports = []
        for size in (2, 3, 4):
            for q in catalog.cliques(size):
                edge_set = list(itertools.combinations(q, 2))
                reports.append(clique_deletion_expansion(g, edge_set, interpretation))
        return reports

    return run


def _run_third_derivative(g: Graph, k_range: KRange) -> list[IdentityReport]:
    if enumerate_cliques(g, k_max=5).omega >= 5:
        return []
    return [check_third_derivative_k5free(g)]


def _run_triangle_deletion_counts(g: Graph, k_range: KRange) -> list[IdentityReport]:
    if enumerate_cliques(g, k_max=5).omega >= 5:
        return []
    reports = []
    for d in triangles(g):
        result = triangle_deletion_counts(g, d)
        reports.append(
            IdentityReport(
                "triangle_deletion_counts", to_graph6(g), {"delta": list(d)},
                list(result.formula), list(result.direct), result.matches,
            )
        )
    return reports


def _run_kth_derivative(g: Graph, k_range: KRange) -> list[IdentityReport]:
    omega = enumerate_cliques(g).omega
    return [check_kth_derivative_general(g, k) for k in _ks(1, max(omega, 1), k_range)]


def _run_triangle_recurrence(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [check_triangle_recurrence(g, d) for d in triangles(g)]


def _run_conjecture1_first(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [check_conjecture1(g, include_unit=False)[0]]


def _run_conjecture1_second(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [check_conjecture1(g, include_unit=False)[1]]


def _run_triangle_deck(g: Graph, k_range: KRange) -> list[IdentityReport]:
    omega = enumerate_cliques(g).omega
    return [check_triangle_deck_identity(g, k) for k in _ks(3, max(omega, 3), k_range)]


def _run_conjecture2(g: Graph, k_range: KRange) -> list[IdentityReport]:
    report = check_conjecture2(g)
    return [] if report.holds is None else [report]


def _run_conjecture3(g: Graph, k_range: KRange) -> list[IdentityReport]:
    return [check_conjecture3(g)]


CHECKS: dict[str, CheckDef] = {
    cd.name: cd
    for cd in [
        CheckDef("handshake", THEOREM, _run_handshake),
        CheckDef("vertex_recurrence", THEOREM, _run_vertex_recurrence),
        CheckDef("edge_recurrence", THEOREM, _run_edge_recurrence),
        CheckDef("vertex_deck", THEOREM, _run_vertex_deck),
        CheckDef("edge_deck", THEOREM, _run_edge_deck),
        CheckDef("first_derivative", THEOREM, _run_first_derivative),
        CheckDef("second_derivative", THEOREM, _run_second_derivative),
        CheckDef("triangle_identity", THEOREM, _run_triangle_identity),
        CheckDef("clique_deletion", THEOREM, _run_clique_deletion(INTERPRETATION_CLIQUES)),
        CheckDef("third_derivative_k5free", THEOREM, _run_third_derivative),
        CheckDef("triangle_deletion_counts", THEOREM, _run_triangle_deletion_counts),
        CheckDef("clique_deletion_edge_subsets", CONJECTURE,
                 _run_clique_deletion(INTERPRETATION_EDGE_SUBSETS)),
        CheckDef("kth_derivative", CONJECTURE, _run_kth_derivative),
        CheckDef("triangle_recurrence", CONJECTURE, _run_triangle_recurrence),
        CheckDef("conjecture1_first", CONJECTURE, _run_conjecture1_first),
        CheckDef("conjecture1_second", CONJECTURE, _run_conjecture1_second),
        CheckDef("triangle_deck", CONJECTURE, _run_triangle_deck),
        CheckDef("conjecture2", CONJECTURE, _run_conjecture2),
        CheckDef("conjecture3", CONJECTURE, _run_conjecture3),
    ]
}

ALL_THEOREMS = tuple(name for name, cd in CHECKS.items() if cd.kind == THEOREM)


def resolve_checks(names) -> tuple[str, ...]:
    """Expand 'all-theorems' and validate ids, preserving order without duplicates."""
    out: list[str] = []
    for name in names:
        expanded = ALL_THEOREMS if name == "all-theorems" else (name,)
        for item in expanded:
            if item not in CHECKS:
                raise ValueError(f"unknown check id {item!r}")
            if item not in out:
                out.append(item)
    if not out:
        raise ValueError("no checks selected")
    return tuple(out)


# -- shrinking ---------------------------------------------------------------------

def _failure_predicate(check: str, params: Optional[dict]) -> Callable[[Graph], bool]:
    cd = CHECKS[check]
    locked_k = (params or {}).get("k")
    k_range = (locked_k, locked_k) if locked_k is not None else None

    def fails(g: Graph) -> bool:
        return any(r.holds is False for r in cd.run(g, k_range))

    return fails


def shrink_counterexample(g: Graph, check: str, params: Optional[dict] = None) -> Graph:
    """Greedily delete vertices, then edges, while the check keeps failing.

    The result is a local minimum: every further single deletion makes the
    check pass or become inapplicable.  A k parameter in params stays locked
    during shrinking; vertex-indexed parameters cannot survive re-indexing,
    so failure means "some parameter instance fails".
    """
    if check not in CHECKS:
        raise ValueError(f"unknown check id {check!r}")
    fails = _failure_predicate(check, params)
    if not fails(g):
        raise ValueError("check does not fail on the input graph")
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            candidate = delete_vertex(g, v)
            if fails(candidate):
                g = candidate
                improved = True
                break
        if improved:
            continue
        for e in g.edges():
            candidate = delete_edge(g, e)
            if fails(candidate):
                g = candidate
                improved = True
                break
    return g


# -- campaigns ----------------------------------------------------------------------

@dataclass(frozen=True)
class CampaignConfig:
    """Everything a campaign needs; equal configs give byte-identical reports."""

    n_range: tuple[int, int]
    p_range: tuple[float, float]
    samples: int
    rng: RngSpec
    checks: tuple[str, ...]
    shrink: bool = False
    k_range: Optional[tuple[int, int]] = None

    def validate(self) -> None:
        if self.n_range[0] > self.n_range[1] or self.n_range[0] < 0 or self.n_range[1] > 64:
            raise ValueError(f"invalid vertex range {self.n_range}")
        if not 0.0 <= self.p_range[0] <= self.p_range[1] <= 1.0:
            raise ValueError(f"invalid probability range {self.p_range}")
        if self.samples < 1:
            raise ValueError("sample count must be >= 1")
        if self.k_range is not None and self.k_range[0] > self.k_range[1]:
            raise ValueError(f"invalid k range {self.k_range}")
        resolve_checks(self.checks)

    def to_json_dict(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "p_range": list(self.p_range),
            "samples": self.samples,
            "seed": self.rng.seed,
            "algorithm": self.rng.algorithm,
            "checks": list(resolve_checks(self.checks)),
            "shrink": self.shrink,
            "k_range": list(self.k_range) if self.k_range else None,
        }


@dataclass(frozen=True)
class ShrunkForm:
    graph6: str
    params: dict
    lhs: object
    rhs: object

    def to_json_dict(self) -> dict:
        return {"graph6": self.graph6, "params": self.params,
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class Counterexample:
    check: str
    graph6: str
    params: dict
    lhs: object
    rhs: object
    shrunk: Optional[ShrunkForm] = None

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "graph6": self.graph6,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "shrunk": self.shrunk.to_json_dict() if self.shrunk else None,
        }


@dataclass
class CheckTally:
    kind: str
    tested: int = 0
    holds: int = 0
    fails: int = 0
    not_applicable: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "tested": self.tested,
            "holds": self.holds,
            "fails": self.fails,
            "not_applicable": self.not_applicable,
            "counterexamples": [ce.to_json_dict() for ce in self.counterexamples],
        }


@dataclass
class CampaignReport:
    """Per-check tallies and counterexamples for one campaign run.

    elapsed_seconds is carried for display on stderr but excluded from the
    JSON and text renderings, which must be byte-identical across runs with
    equal seeds.
    """

    config: CampaignConfig
    tallies: dict[str, CheckTally]
    elapsed_seconds: float

    @property
    def theorem_failures(self) -> int:
        return sum(t.fails for t in self.tallies.values() if t.kind == THEOREM)

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "checks": {name: t.to_json_dict() for name, t in self.tallies.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    def to_text(self, max_listed: int = 10) -> str:
        cfg = self.config
        lines = [
            f"campaign: {cfg.samples} graphs, n in [{cfg.n_range[0]}, {cfg.n_range[1]}], "
            f"p in [{cfg.p_range[0]}, {cfg.p_range[1]}], seed {cfg.rng.seed}"
        ]
        for name, tally in self.tallies.items():
            lines.append(
                f"check {name} [{tally.kind}]: tested {tally.tested}, "
                f"holds {tally.holds}, fails {tally.fails}, n/a {tally.not_applicable}"
            )
            for ce in tally.counterexamples[:max_listed]:
                lines.append(
                    f"  counterexample graph6={ce.graph6} "
                    f"params={json.dumps(ce.params, sort_keys=True)} "
                    f"lhs={ce.lhs} rhs={ce.rhs}"
                )
                if ce.shrunk:
                    lines.append(
                        f"    shrunk graph6={ce.shrunk.graph6} "
                        f"params={json.dumps(ce.shrunk.params, sort_keys=True)} "
                        f"lhs={ce.shrunk.lhs} rhs={ce.shrunk.rhs}"
                    )
            hidden = len(tally.counterexamples) - max_listed
            if hidden > 0:
                lines.append(f"  ... and {hidden} more counterexamples")
        return "\n".join(lines) + "\n"


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    """Sweep seeded G(n, p) graphs through the configured checks.

    Graphs are evaluated one by one and tallies are accumulated in sample
    order, so the report content depends only on the config.
    """
    cfg.validate()
    names = resolve_checks(cfg.checks)
    start = time.perf_counter()
    tallies = {name: CheckTally(CHECKS[name].kind) for name in names}
    stream = Splitmix64(cfg.rng.seed)
    n_lo, n_hi = cfg.n_range
    p_lo, p_hi = cfg.p_range
    for _ in range(cfg.samples):
        n = n_lo + stream.next_u64() % (n_hi - n_lo + 1)
        p = p_lo + (stream.next_u64() / 2.0**64) * (p_hi - p_lo)
        g = random_gnp(n, p, RngSpec(stream.next_u64()))
        for name in names:
            tally = tallies[name]
            reports = CHECKS[name].run(g, cfg.k_range)
            tally.tested += 1
            if not reports:
                tally.not_applicable += 1
                continue
            bad = next((r for r in reports if r.holds is False), None)
            if bad is None:
                tally.holds += 1
                continue
            tally.fails += 1
            shrunk = None
            if cfg.shrink:
                small = shrink_counterexample(g, name, bad.params)
                small_bad = next(
                    r for r in CHECKS[name].run(small, cfg.k_range)
                    if r.holds is False
                )
                shrunk = ShrunkForm(
                    to_graph6(small), small_bad.params, small_bad.lhs, small_bad.rhs
                )
            tally.counterexamples.append(
                Counterexample(name, to_graph6(g), bad.params, bad.lhs, bad.rhs, shrunk)
            )
    elapsed = time.perf_counter() - start
    return CampaignReport(cfg, tallies, elapsed)


def replay_counterexample(ce: Counterexample, k_range: KRange = None) -> bool:
    """Re-parse a recorded counterexample and confirm it still fails the same way."""
    g = parse_graph6(ce.graph6)
    reports = CHECKS[ce.check].run(g, k_range)
    return any(
        r.holds is False and r.params == ce.params
        and r.lhs == ce.lhs and r.rhs == ce.rhs
        for r in reports
    )
