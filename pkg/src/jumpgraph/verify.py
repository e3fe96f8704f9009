"""Executable verification: every structural claim the library depends on,
run as a data-driven check suite over an exhaustive catalog.

Each check is (id, statement, runner). Runners return instance counts and
failure payloads; a failure payload always contains a replayable graph6
string. Unresolved classifications are tallied separately from failures,
since absence of evidence is not a counterexample. The machine rendering
is byte-identical across runs on the same catalog.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .graph_core import (
    Graph,
    INFINITE,
    complement,
    connected_components,
    diameter,
    edge_count_of_jump,
    is_connected,
    jump,
    line_graph,
    strip_isolated,
    to_graph6,
)
from .catalog import GraphCatalog
from .classify import (
    Classification,
    UnresolvedError,
    catalog_membership,
    classify,
    find_periodic,
    growth_check,
    growth_reference_graphs,
)
from .iso import canonical_form, find_subgraph, is_isomorphic, verify_subgraph
from .snipped import find_snipped, named_graphs, net_graph
from .graph_core import cycle_graph

RANDOM_SEED = 20240

DIAM2_FINITE_NAMES = {"C4", "diamond", "diamond-pendant-high", "bowtie"}
DIAM2_FINITE_FAMILIES = ("S", "K3+")


@dataclass
class CheckResult:
    check_id: str
    statement: str
    tested: int
    failures: list[str]
    unresolved: int
    elapsed: float


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    catalog_source: str
    max_k: int

    @property
    def overall_pass(self) -> bool:
        return all(not c.failures for c in self.checks)


@dataclass
class _Context:
    catalog: GraphCatalog
    max_k: int
    classifications: dict[bytes, Classification | None] = field(default_factory=dict)
    unresolved_count: int = 0

    def classify_cached(self, g: Graph) -> Classification | None:
        """Classification of g, or None when unresolved (tallied once)."""
        key = canonical_form(g)
        if key not in self.classifications:
            try:
                self.classifications[key] = classify(g, self.max_k)
            except UnresolvedError:
                self.classifications[key] = None
                self.unresolved_count += 1
        return self.classifications[key]


def _fail(g: Graph, detail: str) -> str:
    return f"{to_graph6(g)} {detail}"


def _check_jump_identity(ctx: _Context) -> tuple[int, list[str], int]:
    """jump = complement of line graph, same vertex order; edge-count formula."""
    tested = 0
    failures = []
    for g in ctx.catalog.all_graphs():
        tested += 1
        j = jump(g)
        if j != complement(line_graph(g)):
            failures.append(_fail(g, "jump differs from complement of line graph"))
        if j.edge_count != edge_count_of_jump(g):
            failures.append(_fail(g, "edge-count formula mismatch"))
    return tested, failures, 0


def _edge_subset(g: Graph, keep: list[int]) -> Graph:
    edges = g.edges()
    return Graph.from_edges(g.n, [edges[i] for i in keep])


def _check_subgraph_preserved(ctx: _Context) -> tuple[int, list[str], int]:
    """H subgraph of G implies J(H) induced subgraph of J(G)."""
    rng = random.Random(RANDOM_SEED)
    tested = 0
    failures = []
    for g in ctx.catalog.all_graphs():
        if g.m == 0:
            continue
        subsets = [list(range(g.m - 1))]  # drop the last edge
        for _ in range(2):
            subsets.append([i for i in range(g.m) if rng.random() < 0.6])
        for keep in subsets:
            h = _edge_subset(g, keep)
            tested += 1
            w = find_subgraph(jump(h), jump(g), induced=True)
            if w is None or not verify_subgraph(w, jump(h), jump(g)):
                failures.append(_fail(g, f"kept edges {keep}: no induced embedding of J(H)"))
    return tested, failures, 0


def _random_snipped(g: Graph, rng: random.Random) -> Graph:
    """A random quotient of a random subgraph of g (snipped by construction)."""
    keep = [i for i in range(g.m) if rng.random() < 0.7]
    sub = _edge_subset(g, keep)
    blocks = list(range(sub.n))
    for _ in range(rng.randrange(0, 3)):
        a, b = rng.randrange(sub.n), rng.randrange(sub.n)
        ra, rb = blocks[a], blocks[b]
        blocks = [ra if x == rb else x for x in blocks]
    edges = set()
    for u, v in sub.edges():
        if blocks[u] != blocks[v]:
            edges.add((min(blocks[u], blocks[v]), max(blocks[u], blocks[v])))
    labels = sorted({b for e in edges for b in e})
    remap = {b: i for i, b in enumerate(labels)}
    return Graph.from_edges(len(labels), [(remap[u], remap[v]) for u, v in edges])


def _check_snipped_preserved(ctx: _Context) -> tuple[int, list[str], int]:
    """H snipped subgraph of G implies J(H) subgraph of J(G)."""
    rng = random.Random(RANDOM_SEED + 1)
    tested = 0
    failures = []
    for g in ctx.catalog.all_graphs():
        if g.m == 0:
            continue
        for _ in range(2):
            h = _random_snipped(g, rng)
            if h.m == 0:
                continue
            tested += 1
            w = find_subgraph(jump(h), jump(g), induced=False)
            if w is None or not verify_subgraph(w, jump(h), jump(g)):
                failures.append(_fail(g, f"snipped {to_graph6(h)}: J(H) not found in J(G)"))
    return tested, failures, 0


def _dissipating(ctx: _Context) -> list[tuple[Graph, int]]:
    out = []
    for g in ctx.catalog.all_graphs():
        c = ctx.classify_cached(g)
        if c is not None and c.verdict == "dissipates":
            out.append((g, c.d_value))
    return out

def _check_d_monotone(ctx: _Context) -> tuple[int, list[str], int]:
    """H snipped in G implies d(H) <= d(G), over dissipating pairs."""
    finite = [(strip_isolated(g), d) for g, d in _dissipating(ctx)]
    seen: dict[bytes, tuple[Graph, int]] = {}
    for g, d in finite:
        seen.setdefault(canonical_form(g), (g, d))
    graphs = sorted(seen.values(), key=lambda t: (t[0].n, canonical_form(t[0])))
    tested = 0
    failures = []
    for h, dh in graphs:
        if h.m == 0:
            continue
        for g, dg in graphs:
            if h.m > g.m:
                continue
            if find_snipped(h, g) is not None:
                tested += 1
                if dh > dg:
                    failures.append(
                        _fail(g, f"snipped {to_graph6(h)} has d={dh} > d={dg}")
                    )
    return tested, failures, 0


def _check_fixed_points(ctx: _Context) -> tuple[int, list[str], int]:
    """J(G)=G only for the 5-cycle and the net; no 2- or 3-periodic points."""
    c5 = cycle_graph(5)
    net = net_graph()
    tested = 0
    failures = []
    for g in ctx.catalog.all_graphs():
        s = strip_isolated(g)
        if s.n == 0:
            continue
        tested += 1
        expected_fixed = is_isomorphic(s, c5) or is_isomorphic(s, net)
        j = strip_isolated(jump(s))
        fixed = j.n == s.n and j.m == s.m and is_isomorphic(j, s)
        if fixed != expected_fixed:
            failures.append(_fail(g, f"fixed={fixed} expected={expected_fixed}"))
        res = find_periodic(s, 3)
        if res.k is not None and res.k > 1:
            failures.append(_fail(g, f"period {res.k} found"))
        if expected_fixed and res.k != 1:
            failures.append(_fail(g, "fixed point not 1-periodic"))
    return tested, failures, 0


def _check_trichotomy(ctx: _Context) -> tuple[int, list[str], int]:
    """Every graph dissipates, converges, or diverges with a validated
    accumulation witness; dissipation agrees with the catalog."""
    c5 = cycle_graph(5)
    net = net_graph()
    tested = 0
    failures = []
    unresolved = 0
    for g in ctx.catalog.all_graphs():
        tested += 1
        c = ctx.classify_cached(g)
        if c is None:
            unresolved += 1
            continue
        member = catalog_membership(strip_isolated(g))
        if c.verdict == "dissipates":
            if member is None:
                failures.append(_fail(g, f"dissipates d={c.d_value} but not in catalog"))
            elif member.d_value != c.d_value:
                failures.append(
                    _fail(g, f"d={c.d_value} but catalog {member.name} says {member.d_value}")
                )
        else:
            if member is not None:
                failures.append(_fail(g, f"{c.verdict} but catalog hit {member.name}"))
        if c.verdict == "diverges":
            acc = c.accumulation
            target = c5 if acc.target == "C5" else net
            iterate = strip_isolated(g)
            for _ in range(acc.k):
                iterate = jump(iterate)
            if not verify_subgraph(acc.witness, target, iterate):
                failures.append(_fail(g, f"accumulation witness at k={acc.k} invalid"))
    return tested, failures, unresolved


def _check_diameter_casework(ctx: _Context) -> tuple[int, list[str], int]:
    """Diameter casework for connected graphs:
    diam>=5 diverges; diam 4 diverges iff >=6 edges; diam 3 with >=7 edges
    diverges unless a centre-with-pendants-and-one-length-2-leg; diam 2
    dissipates exactly for the known list."""
    tested = 0
    failures = []
    unresolved = 0
    for g in ctx.catalog.all_graphs():
        if g.n == 0 or not is_connected(g) or g.n == 1:
            continue
        dia = diameter(g)
        if dia == INFINITE or dia < 2:
            continue
        c = ctx.classify_cached(g)
        if c is None:
            unresolved += 1
            continue
        diverges = c.verdict == "diverges"
        dissipates = c.verdict == "dissipates"
        tested += 1
        if dia >= 5:
            if not diverges:
                failures.append(_fail(g, f"diam {dia} but verdict {c.verdict}"))
        elif dia == 4:
            if diverges != (g.m >= 6):
                failures.append(_fail(g, f"diam 4, m={g.m}, verdict {c.verdict}"))
        elif dia == 3:
            if g.m >= 7 and not diverges:
                member = catalog_membership(g)
                if member is None or not member.name.startswith("spider(1^"):
                    failures.append(_fail(g, f"diam 3, m={g.m}, verdict {c.verdict}"))
        elif dia == 2:
            member = catalog_membership(g)
            in_list = member is not None and (
                member.name in DIAM2_FINITE_NAMES
                or any(member.name.startswith(p) for p in DIAM2_FINITE_FAMILIES)
            )
            if dissipates != in_list:
                failures.append(
                    _fail(g, f"diam 2 dissipates={dissipates} but list membership={in_list}")
                )
    return tested, failures, unresolved


def _check_growth(ctx: _Context) -> tuple[int, list[str], int]:
    """Edge growth: 5-cycle+chord gains >=2 per jump from k=1 on; the net
    plus a pendant gains >=1 every jump; the fixed points stay constant."""
    refs = growth_reference_graphs()
    tested = 0
    failures = []
    rep = growth_check(refs["c5_chord"], 10)
    for step in rep.steps[2:]:  # deltas indexed k>=2 compare J^k to J^{k-1}, k-1>=1
        tested += 1
        if step.delta < 2:
            failures.append(_fail(refs["c5_chord"], f"k={step.k} delta={step.delta} < 2"))
    rep = growth_check(refs["net_pendant"], 10)
    for step in rep.steps[1:]:
        tested += 1
        if step.delta < 1:
            failures.append(_fail(refs["net_pendant"], f"k={step.k} delta={step.delta} < 1"))
    for g in (cycle_graph(5), net_graph()):
        rep = growth_check(g, 6)
        for step in rep.steps[1:]:
            tested += 1
            if step.delta != 0:
                failures.append(_fail(g, f"fixed point delta={step.delta}"))
    return tested, failures, 0


def _check_disconnected_jump_connected(ctx: _Context) -> tuple[int, list[str], int]:
    """>=2 components and no isolated vertices: the jump graph is connected."""
    tested = 0
    failures = []
    for g in ctx.catalog.all_graphs():
        if g.n == 0 or any(d == 0 for d in g.degrees()):
            continue
        if len(connected_components(g)) < 2:
            continue
        tested += 1
        if not is_connected(jump(g)):
            failures.append(_fail(g, "jump of disconnected graph not connected"))
    return tested, failures, 0


def _check_whitney(ctx: _Context) -> tuple[int, list[str], int]:
    """Distinct connected graphs share a line graph only for triangle/3-star."""
    groups: dict[tuple, list[Graph]] = {}
    tested = 0
    for g in ctx.catalog.all_graphs():
        if not is_connected(g) or g.n == 0:
            continue
        tested += 1
        lg = line_graph(g)
        key = (lg.n, lg.m, tuple(sorted(lg.degrees())))
        groups.setdefault(key, []).append(g)
    failures = []
    triangle_star = {canonical_form(Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])),
                     canonical_form(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))}
    for key, members in groups.items():
        if len(members) < 2:
            continue
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a, b = members[i], members[j]
                if is_isomorphic(a, b):
                    continue
                if not is_isomorphic(line_graph(a), line_graph(b)):
                    continue
                pair = {canonical_form(a), canonical_form(b)}
                if pair != triangle_star:
                    failures.append(
                        _fail(a, f"shares a line graph with {to_graph6(b)}")
                    )
    return tested, failures, 0


CHECKS: list[tuple[str, str, object]] = [
    ("V1", "jump equals complement of line graph; closed-form edge count", _check_jump_identity),
    ("V2", "subgraphs map to induced subgraphs under jump", _check_subgraph_preserved),
    ("V3", "snipped subgraphs map to subgraphs under jump", _check_snipped_preserved),
    ("V4", "snipped containment never increases the dissipation number", _check_d_monotone),
    ("V5", "the only fixed points are the 5-cycle and the net graph; no short periods", _check_fixed_points),
    ("V6", "trichotomy with validated certificates; dissipation matches the catalog", _check_trichotomy),
    ("V7", "diameter casework for connected graphs", _check_diameter_casework),
    ("V8", "edge growth bounds for the benchmark divergent graphs", _check_growth),
    ("V9", "jump of a disconnected isolated-free graph is connected", _check_disconnected_jump_connected),
    ("V10", "line graphs identify connected graphs, except triangle vs 3-star", _check_whitney),
]


def run_all(catalog: GraphCatalog, max_k: int = 12) -> VerificationReport:
    """Run V1-V10 over the catalog. Failures are data, not exceptions."""
    ctx = _Context(catalog=catalog, max_k=max_k)
    results = []
    for check_id, statement, fn in CHECKS:
        t0 = time.perf_counter()
        tested, failures, unresolved = fn(ctx)
        results.append(
            CheckResult(
                check_id=check_id,
                statement=statement,
                tested=tested,
                failures=sorted(failures),
                unresolved=unresolved,
                elapsed=time.perf_counter() - t0,
            )
        )
    return VerificationReport(checks=results, catalog_source=catalog.source, max_k=max_k)


def render_text(report: VerificationReport) -> str:
    lines = [f"verification over {report.catalog_source} (max_k={report.max_k})", ""]
    for c in report.checks:
        status = "PASS" if not c.failures else "FAIL"
        extra = f", {c.unresolved} unresolved" if c.unresolved else ""
        lines.append(
            f"{c.check_id:<4} {status}  tested={c.tested}{extra}  [{c.elapsed:.2f}s]  {c.statement}"
        )
        for f in c.failures[:20]:
            lines.append(f"      counterexample: {f}")
        if len(c.failures) > 20:
            lines.append(f"      ... {len(c.failures) - 20} more")
    lines.append("")
    lines.append("OVERALL " + ("PASS" if report.overall_pass else "FAIL"))
    return "\n".join(lines) + "\n"


def render_machine(report: VerificationReport) -> str:
    """check_id, tested, failures, status - byte-identical across runs."""
    lines = []
    for c in report.checks:
        status = "pass" if not c.failures else "fail"
        lines.append(f"{c.check_id}\t{c.tested}\t{len(c.failures)}\t{status}")
    return "\n".join(lines) + "\n"
