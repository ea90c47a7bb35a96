"""Locating-dominating predicates and exact minimum-size computation.

A set S is dominating when every vertex outside S has a neighbor in S, and
distinguishing when the traces N(v) & S are pairwise distinct over v outside
S.  An LD-set is both; the minimum LD-set size of a graph is computed here
either by a capped exhaustive scan (:func:`lambda_bruteforce`) or by a
size-bounded pruned search (:func:`lambda_bounded`) for larger instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .graphs import Graph, VertexSet, connected_components, induced_subgraph

ORACLE_CAP = 20


@dataclass(frozen=True)
class LDReport:
    """Result of an exact minimum LD-set computation.

    ``lam`` is the minimum LD-set size, ``witness`` the first minimum LD-set
    in (cardinality, lexicographic) scan order, and ``all_codes`` every
    minimum LD-set when enumeration was requested.
    """

    lam: int
    witness: VertexSet
    all_codes: tuple[VertexSet, ...] | None = None


class BoundedResult(NamedTuple):
    found: bool
    size: int | None
    witness: VertexSet | None


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff every vertex outside s has a neighbor in s."""
    rest = ((1 << g.n) - 1) & ~s.bits
    while rest:
        low = rest & -rest
        if g.adj[low.bit_length() - 1].bits & s.bits == 0:
            return False
        rest ^= low
    return True


def is_distinguishing(g: Graph, s: VertexSet) -> bool:
    """True iff the traces N(v) & s are pairwise distinct over v outside s.

    Two undominated outside vertices both carry the empty trace, so they are
    not distinguished.
    """
    seen = set()
    rest = ((1 << g.n) - 1) & ~s.bits
    while rest:
        low = rest & -rest
        t = g.adj[low.bit_length() - 1].bits & s.bits
        if t in seen:
            return False
        seen.add(t)
        rest ^= low
    return True


def is_ld_set(g: Graph, s: VertexSet) -> bool:
    return is_dominating(g, s) and is_distinguishing(g, s)


def undominated_vertex(g: Graph, s: VertexSet) -> int | None:
    """The unique vertex outside a distinguishing set with no neighbor in it.

    Raises ValueError when s is not distinguishing (a silent answer would mask
    a caller bug); with the precondition satisfied at most one such vertex can
    exist, and None is returned when every vertex is dominated.
    """
    if not is_distinguishing(g, s):
        raise ValueError("undominated_vertex requires a distinguishing set")
    hits = [v for v in range(g.n) if v not in s and g.adj[v].bits & s.bits == 0]
    if len(hits) > 1:
        raise ValueError(f"two undominated vertices {hits[:2]} under a distinguishing set")
    return hits[0] if hits else None


def _is_ld_mask(adj_bits: list[int], full: int, smask: int) -> bool:
    rest = full & ~smask
    seen = set()
    while rest:
        low = rest & -rest
        t = adj_bits[low.bit_length() - 1] & smask
        if t == 0 or t in seen:
            return False
        seen.add(t)
        rest ^= low
    return True


def _scan_component(g: Graph, enumerate_all: bool) -> tuple[int, int, list[int] | None]:
    """Exhaustive scan of one graph: (lam, witness mask, all code masks or None)."""
    adj_bits = [row.bits for row in g.adj]
    full = (1 << g.n) - 1
    for k in range(g.n + 1):
        first = None
        codes = [] if enumerate_all else None
        for comb in combinations(range(g.n), k):
            m = 0
            for c in comb:
                m |= 1 << c
            if _is_ld_mask(adj_bits, full, m):
                if first is None:
                    first = m
                    if not enumerate_all:
                        return k, first, None
                codes.append(m)
        if first is not None:
            return k, first, codes
    raise AssertionError("V itself is always an LD-set")  # pragma: no cover


def lambda_bruteforce(g: Graph, enumerate_all: bool = False, cap: int = ORACLE_CAP) -> LDReport:
    """Exact minimum LD-set size by scanning subsets in (size, lex) order.

    The witness is the first LD-set encountered; with ``enumerate_all`` every
    minimum LD-set is collected.  Disconnected graphs are solved per component
    (minimum LD-sets of a disconnected graph are exactly the unions of
    per-component minimum LD-sets), which cannot change any result.
    Refuses graphs with more than ``cap`` vertices; use :func:`lambda_bounded`
    for those.
    """
    if g.n > cap:
        raise ValueError(
            f"graph order {g.n} exceeds the oracle cap {cap}; use lambda_bounded instead"
        )
    comps = connected_components(g)
    if len(comps) <= 1:
        lam, wit, codes = _scan_component(g, enumerate_all)
        return LDReport(
            lam,
            VertexSet(wit),
            None if codes is None else tuple(VertexSet(c) for c in sorted_codes(codes)),
        )
    total = 0
    wit_mask = 0
    code_masks = [0]
    for comp in comps:
        sub, old = induced_subgraph(g, comp)
        lam, wit, codes = _scan_component(sub, enumerate_all)
        total += lam
        wit_mask |= _unmap(wit, old)
        if enumerate_all:
            code_masks = [
                prev | _unmap(c, old) for prev in code_masks for c in codes
            ]
    return LDReport(
        total,
        VertexSet(wit_mask),
        tuple(VertexSet(c) for c in sorted_codes(code_masks)) if enumerate_all else None,
    )


def _unmap(mask: int, old: list[int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << old[i]
        mask >>= 1
        i += 1
    return out


def sorted_codes(masks: list[int]) -> list[int]:
    """Sort set masks by their ascending member tuples (lexicographic)."""
    return sorted(masks, key=_mask_key)


def _mask_key(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def ld_codes(g: Graph, cap: int = ORACLE_CAP) -> list[VertexSet]:
    """All LD-sets of minimum size, lexicographically sorted."""
    return list(lambda_bruteforce(g, enumerate_all=True, cap=cap).all_codes)


def lambda_bounded(g: Graph, kmax: int) -> BoundedResult:
    """Decide whether an LD-set of size <= kmax exists, scanning sizes upward.

    The search walks the inclusion/exclusion tree in lexicographic candidate
    order, so the returned witness is identical to the one
    :func:`lambda_bruteforce` would report.  A branch is abandoned when two
    vertices fixed outside the set carry equal traces that no remaining
    candidate can separate, or when a fixed-outside vertex can no longer be
    dominated.
    """
    if not (0 <= kmax <= g.n):
        raise ValueError(f"kmax must be in [0, {g.n}], got {kmax}")
    n = g.n
    adj_bits = [row.bits for row in g.adj]
    full = (1 << n) - 1
    for k in range(kmax + 1):
        wit = _search_size(n, adj_bits, full, k)
        if wit is not None:
            return BoundedResult(True, k, VertexSet(wit))
    return BoundedResult(False, None, None)


def _search_size(n: int, adj_bits: list[int], full: int, k: int) -> int | None:
    if k == 0:
        return 0 if _is_ld_mask(adj_bits, full, 0) else None

    # suffix masks: rem[i] = vertices >= i, the candidates still undecided
    rem = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        rem[i] = rem[i + 1] | (1 << i)

    def dfs(i: int, chosen: int, size: int, outside: list[int]) -> int | None:
        if size == k:
            return chosen if _is_ld_mask(adj_bits, full, chosen) else None
        if n - i < k - size:
            return None
        bit = 1 << i
        # include i (first, to keep lexicographic witness order)
        got = dfs(i + 1, chosen | bit, size + 1, outside)
        if got is not None:
            return got
        # exclude i: vertex i is now fixed outside the set
        later = rem[i + 1]
        ai = adj_bits[i]
        ti = ai & chosen
        if ti == 0 and ai & later == 0:
            return None  # i can never be dominated on this branch
        # u and i are both fixed outside, so only a later candidate adjacent to
        # exactly one of them can still separate their traces
        for u in outside:
            au = adj_bits[u]
            if au & chosen == ti and (au ^ ai) & later == 0:
                return None
        outside.append(i)
        got = dfs(i + 1, chosen, size, outside)
        outside.pop()
        return got

    return dfs(0, 0, 0, [])
