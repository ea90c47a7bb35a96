"""Reusable verification suites: closed-form regressions and randomized property runs.

Each suite returns (checked, violations); a violation is a human-readable
string pinpointing the failing instance.  Runs are deterministic for a fixed
seed and trial count.
"""

from __future__ import annotations

import random

from .associated import (
    AssociatedGraph,
    build_associated,
    cactus_stats,
    component_trace_check,
    edge_induced_subgraph,
    label_multiplicity,
    label_subgraph,
    parity_audit,
)
from .graphs import Graph, VertexSet, build_graph, complement
from .ld import is_distinguishing, lambda_bruteforce
from . import families

ATLAS_MAX_N = 7
_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def connected_atlas_graphs(max_n: int) -> list[Graph]:
    """Every connected graph with at most max_n <= 7 vertices, one per isomorphism class.

    Ingested from the networkx graph atlas; per-order counts are asserted
    against the known values so a damaged atlas cannot silently shrink the
    census.
    """
    if max_n > ATLAS_MAX_N:
        raise ValueError(f"atlas covers n <= {ATLAS_MAX_N}, requested {max_n}")
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    counts = {n: 0 for n in range(1, max_n + 1)}
    for G in graph_atlas_g()[1:]:
        n = G.number_of_nodes()
        if n > max_n or not nx.is_connected(G):
            continue
        out.append(build_graph(n, [tuple(e) for e in G.edges()]))
        counts[n] += 1
    for n in range(1, max_n + 1):
        if counts[n] != _CONNECTED_COUNTS[n]:
            raise RuntimeError(
                f"atlas anomaly: {counts[n]} connected graphs of order {n}, "
                f"expected {_CONNECTED_COUNTS[n]}"
            )
    return out


def table1_suite(max_pc: int = 14, max_star: int = 12, max_kb: int = 12,
                 max_bistar: int = 6) -> tuple[int, list[str]]:
    """Closed-form regression for paths, cycles, stars, complete bipartite, bistars."""
    checked = 0
    bad = []

    def check(name: str, g: Graph, expected: tuple[int, int]) -> None:
        nonlocal checked
        checked += 1
        got = (lambda_bruteforce(g).lam, lambda_bruteforce(complement(g)).lam)
        if got != expected:
            bad.append(f"{name}: got {got}, expected {expected}")

    for n in range(4, max_pc + 1):
        check(f"path n={n}", families.path(n), families.table1_expected("path", n=n))
        check(f"cycle n={n}", families.cycle(n), families.table1_expected("cycle", n=n))
    for n in range(4, max_star + 1):
        check(f"star n={n}", families.star(n), families.table1_expected("star", n=n))
    for r in range(2, max_kb):
        for s in range(r, max_kb - r + 1):
            check(
                f"complete_bipartite r={r} s={s}",
                families.complete_bipartite(r, s),
                families.table1_expected("complete_bipartite", r=r, s=s),
            )
    for r in range(3, max_bistar + 1):
        for s in range(r, max_bistar + 1):
            check(
                f"bistar r={r} s={s}",
                families.bistar(r, s),
                families.table1_expected("bistar", r=r, s=s),
            )
    return checked, bad


def thm3_suite(max_n: int = 7) -> tuple[int, list[str]]:
    """|lam(G) - lam(complement)| <= 1 over every connected graph with n <= max_n."""
    checked = 0
    bad = []
    from .graphio import to_graph6

    for g in connected_atlas_graphs(max_n):
        checked += 1
        a = lambda_bruteforce(g).lam
        b = lambda_bruteforce(complement(g)).lam
        if abs(a - b) > 1:
            bad.append(f"{to_graph6(g)}: lam={a}, complement lam={b}")
    return checked, bad


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_distinguishing_set(rng: random.Random, g: Graph,
                              attempts: int = 60) -> VertexSet:
    """A distinguishing set chosen reproducibly: random subsets first, greedy shrink fallback."""
    verts = list(range(g.n))
    for _ in range(attempts):
        k = rng.randint(1, max(1, g.n - 1))
        s = VertexSet.of(rng.sample(verts, k))
        if is_distinguishing(g, s):
            return s
    s = g.vertices()
    order = verts[:]
    rng.shuffle(order)
    for v in order:
        smaller = s.discard(v)
        if len(smaller) >= 1 and is_distinguishing(g, smaller):
            s = smaller
    return s


def _random_instance(rng: random.Random, max_n: int) -> tuple[Graph, VertexSet, AssociatedGraph]:
    while True:
        n = rng.randint(4, max_n)
        g = random_graph(rng, n, rng.uniform(0.15, 0.85))
        s = random_distinguishing_set(rng, g)
        if len(s) < g.n:
            return g, s, build_associated(g, s)


def parity_suite(seed: int = 2024, trials: int = 500,
                 max_n: int = 14) -> tuple[int, list[str]]:
    """Structural properties of associated graphs on random (G, S) instances.

    Order, level-parity bipartiteness, incident-label distinctness, cycle
    label parity, equality with the complement's associated graph under level
    reversal, and the component-trace property for a random label subset.
    """
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        g, s, ag = _random_instance(rng, max_n)
        tag = f"trial {t} (n={g.n}, s={s.members()})"
        if len(ag.vertices) != g.n - len(s):
            bad.append(f"{tag}: vertex count {len(ag.vertices)} != n - k")
        if any(abs(ag.level[x] - ag.level[y]) != 1 for x, y, _ in ag.edges):
            bad.append(f"{tag}: an edge does not step one level")
        incident: dict[int, set[int]] = {}
        for x, y, lab in ag.edges:
            for v in (x, y):
                if lab in incident.setdefault(v, set()):
                    bad.append(f"{tag}: vertex {v} has two incident edges labeled {lab}")
                incident[v].add(lab)
        if not parity_audit(ag):
            bad.append(f"{tag}: cycle with odd label count")
        agc = build_associated(complement(g), s)
        if agc.vertices != ag.vertices or agc.edges != ag.edges:
            bad.append(f"{tag}: complement associated graph differs")
        elif any(agc.level[v] != ag.k - ag.level[v] for v in ag.vertices):
            bad.append(f"{tag}: complement levels are not reversed")
        sub = VertexSet.of(v for v in s if rng.random() < 0.5)
        if not sub:
            sub = VertexSet.single(rng.choice(s.members()))
        if not component_trace_check(label_subgraph(ag, sub)):
            bad.append(f"{tag}: component traces disagree for labels {sub.members()}")
    return trials, bad


def _two_per_label_instance(rng: random.Random, max_n: int):
    """Random associated graph plus a subgraph with exactly two edges per chosen label."""
    while True:
        _, _, ag = _random_instance(rng, max_n)
        counts = label_multiplicity(ag)
        eligible = [u for u, c in counts.items() if c >= 2]
        if not eligible:
            continue
        chosen = [u for u in eligible if rng.random() < 0.6]
        if not chosen:
            chosen = [rng.choice(eligible)]
        picked = []
        for u in chosen:
            pool = [e for e in ag.edges if e[2] == u]
            picked.extend(rng.sample(pool, 2))
        return ag, chosen, edge_induced_subgraph(ag, picked)


def _cc_of(vertices: set[int], edges: list[tuple[int, int]]) -> int:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    cc = len(vertices)
    for x, y in edges:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx
            cc -= 1
    return cc


def cactus_suite(seed: int = 2024, trials: int = 500,
                 max_n: int = 14) -> tuple[int, list[str]]:
    """Cactus structure and order bounds of two-edges-per-label subgraphs.

    Also walks a random deletion chain from the full associated graph down
    through the subgraph, checking that |V| - cc never increases.
    """
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        ag, chosen, sub = _two_per_label_instance(rng, max_n)
        tag = f"trial {t} (labels {sorted(chosen)})"
        stats = cactus_stats(sub)
        verts = {v for x, y, _ in sub.edges for v in (x, y)}
        m = len(sub.edges)
        if not stats.is_cactus:
            bad.append(f"{tag}: component that is not a cactus")
        if 4 * len(verts) < 3 * m + 4 * stats.cc or stats.cc < 1:
            bad.append(f"{tag}: order bound |V| >= 3/4|E| + cc fails")
        if 2 * len(verts) < 3 * len(chosen) + 2:
            bad.append(f"{tag}: order bound |V| >= 3/2 r' + 1 fails")
        # deletion chain: associated graph -> label subgraph -> random erosions
        chain = [
            (set(ag.vertices), [(x, y) for x, y, _ in ag.edges]),
            (set(ag.vertices), [(x, y) for x, y, _ in sub.edges]),
            (verts, [(x, y) for x, y, _ in sub.edges]),
        ]
        cur_v, cur_e = set(verts), [(x, y) for x, y, _ in sub.edges]
        while cur_e or len(cur_v) > 1:
            if cur_e and rng.random() < 0.5:
                cur_e = cur_e[:]
                cur_e.pop(rng.randrange(len(cur_e)))
            elif cur_v:
                drop = rng.choice(sorted(cur_v))
                cur_v = cur_v - {drop}
                cur_e = [(x, y) for x, y in cur_e if drop not in (x, y)]
            chain.append((cur_v, cur_e))
        for (v1, e1), (v2, e2) in zip(chain, chain[1:]):
            if len(v1) - _cc_of(v1, e1) < len(v2) - _cc_of(v2, e2):
                bad.append(f"{tag}: |V| - cc increased along a deletion chain")
                break
    return trials, bad
