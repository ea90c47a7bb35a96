"""Characterization of connected bipartite graphs whose complement needs one more vertex.

For a connected bipartite graph with stable sides U, W (|U| = r <= s = |W|,
3 <= r < s) the complement's minimum LD size exceeds the graph's by one
exactly when: W has no twins, some w in W sees all of U, and every u in U
labels at least two edges of the U-associated graph.  The third condition has
an equivalent twin form: deleting u creates at least two twin pairs inside W.
Both forms are computed by independent routes and are defined (false) even
when U fails to distinguish W, i.e. when W has twins.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from typing import Iterator

from .associated import build_associated, label_multiplicity
from .graphs import (
    Bipartition,
    Graph,
    VertexSet,
    bipartition,
    build_graph,
    complement,
    is_connected,
    twin_pairs,
)
from .ld import ORACLE_CAP, is_ld_set, lambda_bounded, lambda_bruteforce, ld_codes


@dataclass(frozen=True)
class ConditionTriple:
    """The three characterization conditions plus the twin-form cross-check.

    c3 counts edge labels in the U-associated graph; c3_twin_form counts twin
    pairs of W in each vertex-deleted graph.  On the characterization domain
    the two are provably equal; both are false when W has twins (then U does
    not distinguish and neither count is meaningful).
    """

    c1: bool
    c2: bool
    c3: bool
    c3_twin_form: bool

    def all_hold(self) -> bool:
        return self.c1 and self.c2 and self.c3


@dataclass(frozen=True)
class ClassificationReport:
    r: int
    s: int
    lambda_g: int | None
    lambda_gbar: int | None
    relation: int | None
    conditions: ConditionTriple
    predicted_plus_one: bool
    witness_g: VertexSet | None
    witness_gbar: VertexSet | None
    partial: bool = False


def _validate_sides(g: Graph, bp: Bipartition) -> None:
    if (bp.U & bp.W) or (bp.U | bp.W) != g.vertices():
        raise ValueError("bipartition sides must partition the vertex set")
    for side in (bp.U, bp.W):
        for v in side:
            if g.adj[v].bits & side.bits:
                raise ValueError(f"side containing vertex {v} is not stable; input is not bipartite")


def condition_triple(g: Graph, bp: Bipartition) -> ConditionTriple:
    """Evaluate the characterization conditions for a connected bipartite graph."""
    _validate_sides(g, bp)
    u_side, w_side = bp.U, bp.W
    c1 = not twin_pairs(g, w_side)
    c2 = any(g.adj[w].bits == u_side.bits for w in w_side)
    if not c1:
        return ConditionTriple(c1, c2, False, False)
    counts = label_multiplicity(build_associated(g, u_side))
    c3 = all(counts[u] >= 2 for u in u_side)
    c3_twin = True
    w_verts = w_side.members()
    for u in u_side:
        drop = ~(1 << u)
        pairs = 0
        for a in range(len(w_verts)):
            for b in range(a + 1, len(w_verts)):
                if g.adj[w_verts[a]].bits & drop == g.adj[w_verts[b]].bits & drop:
                    pairs += 1
        if pairs < 2:
            c3_twin = False
            break
    return ConditionTriple(c1, c2, c3, c3_twin)


def classify(g: Graph, cap: int = ORACLE_CAP) -> ClassificationReport:
    """Full comparison of a connected bipartite graph against its complement.

    Exact values come from the exhaustive solver up to ``cap`` vertices; above
    that the bounded search tries to pin both values at r+1, and the report is
    marked partial when it cannot.
    """
    bp = bipartition(g)
    if bp is None:
        raise ValueError("graph is not bipartite")
    conds = condition_triple(g, bp)
    predicted = 3 <= bp.r < bp.s and conds.all_hold()
    gbar = complement(g)
    if g.n <= cap:
        rep_g = lambda_bruteforce(g, cap=cap)
        rep_gb = lambda_bruteforce(gbar, cap=cap)
        lam_g, wit_g = rep_g.lam, rep_g.witness
        lam_gb, wit_gb = rep_gb.lam, rep_gb.witness
    else:
        found_g = lambda_bounded(g, bp.r + 1)
        found_gb = lambda_bounded(gbar, bp.r + 1)
        if not (found_g.found and found_gb.found):
            return ClassificationReport(bp.r, bp.s, None, None, None, conds,
                                        predicted, None, None, partial=True)
        lam_g, wit_g = found_g.size, found_g.witness
        lam_gb, wit_gb = found_gb.size, found_gb.witness
    return ClassificationReport(bp.r, bp.s, lam_g, lam_gb, lam_gb - lam_g, conds,
                                predicted, wit_g, wit_gb)


def feasibility_window(r: int, s: int) -> bool:
    """True iff ceil(3r/2 + 1) <= s <= 2^r - 1; requires r >= 3."""
    if r < 3:
        raise ValueError(f"feasibility window is defined for r >= 3, got r={r}")
    return -(-3 * r // 2) + 1 <= s <= 2**r - 1


def corollary16_audit(g: Graph, cap: int = ORACLE_CAP) -> bool:
    """For a plus-one graph: 3 <= r < s <= 2^r - 1 and U is the unique minimum LD-set."""
    bp = bipartition(g)
    if bp is None:
        raise ValueError("graph is not bipartite")
    if not (3 <= bp.r < bp.s <= 2**bp.r - 1):
        return False
    return ld_codes(g, cap=cap) == [bp.U]


def lemma13_audit(g: Graph, code: VertexSet, cap: int = ORACLE_CAP) -> bool:
    """Mixed-side codes (and the other two triggers) force relation <= 0.

    Vacuously true when no trigger applies.  Raises when ``code`` is not a
    minimum LD-set of g.
    """
    bp = bipartition(g)
    if bp is None:
        raise ValueError("graph is not bipartite")
    rep = lambda_bruteforce(g, cap=cap)
    if len(code) != rep.lam or not is_ld_set(g, code):
        raise ValueError("code is not a minimum LD-set of the graph")
    triggers = (
        (code & bp.U and code & bp.W)
        or (bp.r < bp.s and code == bp.W)
        or 2**bp.r <= bp.s
    )
    if not triggers:
        return True
    lam_bar = lambda_bruteforce(complement(g), cap=cap).lam
    return lam_bar <= rep.lam


# --- census of connected bipartite graphs by trace multisets ---------------

@lru_cache(maxsize=8)
def _perm_tables(r: int) -> list[list[int]]:
    tables = []
    for perm in permutations(range(r)):
        table = [0] * (1 << r)
        for m in range(1 << r):
            t = 0
            x = m
            while x:
                low = x & -x
                t |= 1 << perm[low.bit_length() - 1]
                x ^= low
            table[m] = t
        tables.append(table)
    return tables


def canonical_traces(r: int, traces: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least relabeling of a trace multiset under permutations of U."""
    best = None
    for table in _perm_tables(r):
        cand = tuple(sorted(table[m] for m in traces))
        if best is None or cand < best:
            best = cand
    return best


def graph_from_traces(r: int, traces: tuple[int, ...]) -> Graph:
    """Bipartite graph with U = 0..r-1 and one s-side vertex per trace mask."""
    edges = []
    for wi, mask in enumerate(traces):
        v = r + wi
        while mask:
            low = mask & -mask
            edges.append((low.bit_length() - 1, v))
            mask ^= low
    return build_graph(r + len(traces), edges)


def connected_bipartite_graphs(r: int, s: int) -> Iterator[tuple[tuple[int, ...], Graph]]:
    """All connected bipartite graphs with stable sides r < s, one per isomorphism class.

    With the smaller side fixed, such a graph is determined by the multiset of
    s-side neighborhoods (nonempty subsets of U); isomorphism is exactly
    relabeling U plus permuting the multiset, so canonical multisets enumerate
    the class exactly.  Yields (canonical trace multiset, graph) pairs in
    canonical order.
    """
    if not r < s:
        raise ValueError(f"census enumeration requires r < s, got ({r}, {s})")
    for traces in combinations_with_replacement(range(1, 1 << r), s):
        if canonical_traces(r, traces) != traces:
            continue
        g = graph_from_traces(r, traces)
        if is_connected(g):
            yield traces, g


@dataclass(frozen=True)
class CensusEntry:
    r: int
    s: int
    traces: tuple[int, ...]
    report: ClassificationReport
    equivalence_ok: bool
    twin_form_ok: bool
    cor16_ok: bool
    window_ok: bool

    def ok(self) -> bool:
        return self.equivalence_ok and self.twin_form_ok and self.cor16_ok and self.window_ok


def census_pairs(max_n: int, min_r: int = 3) -> list[tuple[int, int]]:
    return [(r, s) for r in range(min_r, max_n) for s in range(r + 1, max_n - r + 1)]


def check_census_graph(r: int, s: int, traces: tuple[int, ...]) -> CensusEntry:
    """Verify the characterization and its corollaries on one census graph."""
    g = graph_from_traces(r, traces)
    report = classify(g)
    conds = report.conditions
    plus_one = report.relation == 1
    equivalence_ok = conds.all_hold() == plus_one
    twin_form_ok = conds.c3 == conds.c3_twin_form
    cor16_ok = corollary16_audit(g) if plus_one else True
    window_ok = feasibility_window(r, s) if plus_one else True
    return CensusEntry(r, s, traces, report, equivalence_ok, twin_form_ok,
                       cor16_ok, window_ok)


def run_census(max_n: int, jobs: int = 1) -> list[CensusEntry]:
    """Check every connected bipartite graph with 3 <= r < s and order <= max_n.

    Work may be spread over processes; entries always come back in canonical
    (r, s, trace multiset) order regardless of job count.
    """
    work = [
        (r, s, traces)
        for r, s in census_pairs(max_n)
        for traces, _ in connected_bipartite_graphs(r, s)
    ]
    if jobs > 1:
        import multiprocessing as mp

        with mp.Pool(jobs) as pool:
            entries = pool.starmap(check_census_graph, work, chunksize=16)
    else:
        entries = [check_census_graph(*item) for item in work]
    entries.sort(key=lambda e: (e.r, e.s, e.traces))
    return entries
