"""Exact branch-and-bound oracles for tau and nu on small graphs.

These solvers are the independent ground truth that every certificate is
checked against, so they deliberately use no result from the constructive
modules: upper bounds for the packing search come from edge counts and the
degree bound sum_v floor(deg(v)/2) (each triangle at v consumes two edges at
v), and lower bounds for the hitting search come from greedily packed
edge-disjoint triangles plus exact hitting numbers of complete subgraphs,
which the solver bootstraps for itself on K_3, K_4, ... and memoizes.

Both searches are complete: nu branches on the lowest-index undecided edge
(use it in one of its remaining triangles, or never use it), tau branches on
an uncovered triangle with the fewest removable edges, keeping already-tried
edges to avoid symmetric duplicates.  A node budget caps the work; on
exhaustion the best feasible witness found so far is returned with
proven=False, never a false optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    GeneralGraph,
    HittingSet,
    TrianglePacking,
    enumerate_triangles,
)

DEFAULT_BUDGET = 10**8


@dataclass
class ExactResult:
    value: int
    witness: TrianglePacking | HittingSet
    explored: int
    proven: bool


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int) -> None:
        self.left = limit

    def tick(self) -> bool:
        self.left -= 1
        return self.left >= 0


def _edge_index(g: GeneralGraph) -> tuple[list[tuple[int, int]], dict[tuple[int, int], int]]:
    edges = sorted(g.edges)
    return edges, {e: i for i, e in enumerate(edges)}


def exact_nu(g: GeneralGraph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Maximum triangle packing size, with an optimal packing as witness."""
    tris = enumerate_triangles(g)
    if not tris:
        return ExactResult(0, TrianglePacking(frozenset()), 0, True)
    edges, eidx = _edge_index(g)
    n_edges = len(edges)
    full = (1 << n_edges) - 1
    tri_masks = []
    for a, b, c in tris:
        tri_masks.append(
            1 << eidx[(a, b)] | 1 << eidx[(a, c)] | 1 << eidx[(b, c)]
        )
    edge_tris: list[list[int]] = [[] for _ in range(n_edges)]
    for ti, mask in enumerate(tri_masks):
        m = mask
        while m:
            low = m & -m
            edge_tris[low.bit_length() - 1].append(ti)
            m ^= low
    vmask = [0] * g.n
    for i, (u, v) in enumerate(edges):
        vmask[u] |= 1 << i
        vmask[v] |= 1 << i

    # greedy incumbent: lexicographic first-fit
    best: list[int] = []
    used = 0
    for ti, mask in enumerate(tri_masks):
        if not mask & used:
            best.append(ti)
            used |= mask
    best_size = len(best)

    bgt = _Budget(budget)
    aborted = False

    def upper(dead: int, count: int) -> int:
        free = n_edges - (dead & full).bit_count()
        ub1 = count + free // 3
        degsum = sum((vmask[v] & ~dead).bit_count() // 2 for v in range(g.n))
        return min(ub1, count + degsum // 3)

    def dfs(used: int, excluded: int, chosen: list[int]) -> None:
        nonlocal best, best_size, aborted
        if aborted:
            return
        if not bgt.tick():
            aborted = True
            return
        dead = used | excluded
        # propagate: skip edges with no remaining triangle, find branch edge
        e = 0
        feasible: list[int] = []
        while e < n_edges:
            bit = 1 << e
            if not dead & bit:
                feasible = [
                    ti for ti in edge_tris[e] if not tri_masks[ti] & dead
                ]
                if feasible:
                    break
                excluded |= bit
                dead |= bit
            e += 1
        if e == n_edges:
            if len(chosen) > best_size:
                best = list(chosen)
                best_size = len(chosen)
            return
        if upper(dead, len(chosen)) <= best_size:
            return
        for ti in feasible:
            chosen.append(ti)
            dfs(used | tri_masks[ti], excluded, chosen)
            chosen.pop()
            if aborted:
                return
        dfs(used, excluded | (1 << e), chosen)

    dfs(0, 0, [])
    witness = TrianglePacking.of(tris[ti] for ti in best)
    return ExactResult(best_size, witness, budget - bgt.left, not aborted)


# -- exact tau --------------------------------------------------------------

_TAU_COMPLETE_CACHE: dict[int, int] = {0: 0, 1: 0, 2: 0, 3: 1}


def _tau_complete(r: int, budget: int) -> None:
    """Fill the exact tau(K_rr) cache up to r, best-effort under the budget."""
    for rr in range(3, r + 1):
        if rr not in _TAU_COMPLETE_CACHE:
            kg = GeneralGraph.from_edges(rr, combinations(range(rr), 2))
            res = _solve_tau(kg, budget, clique_cap=rr - 1)
            if not res.proven:
                return
            _TAU_COMPLETE_CACHE[rr] = res.value


def _tau_clique_lb(r: int) -> int:
    """Largest cached tau(K_rr) with rr <= r; sound since tau(K_r) is monotone."""
    while r >= 3:
        if r in _TAU_COMPLETE_CACHE:
            return _TAU_COMPLETE_CACHE[r]
        r -= 1
    return 0


def _greedy_cliques(adj: list[int], vertices: int, cap: int | None) -> list[int]:
    """Greedy vertex-disjoint cliques (sizes >= 3) in the graph given by adj."""
    sizes = []
    avail = vertices
    while avail:
        best_v, best_d = -1, -1
        m = avail
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = (adj[v] & avail).bit_count()
            if d > best_d:
                best_v, best_d = v, d
            m ^= low
        clique = 1 << best_v
        cand = adj[best_v] & avail
        size = 1
        while cand and (cap is None or size < cap):
            low = cand & -cand
            w = low.bit_length() - 1
            clique |= low
            size += 1
            cand &= adj[w]
        avail &= ~clique
        if cap is not None and size > cap:
            size = cap
        if size >= 3:
            sizes.append(size)
    return sizes


def _solve_tau(
    g: GeneralGraph, budget: int, clique_cap: int | None = None
) -> ExactResult:
    tris = enumerate_triangles(g)
    if not tris:
        return ExactResult(0, HittingSet(frozenset()), 0, True)
    edges, eidx = _edge_index(g)
    n_edges = len(edges)
    tri_edge_ids = []
    tri_masks = []
    for a, b, c in tris:
        ids = (eidx[(a, b)], eidx[(a, c)], eidx[(b, c)])
        tri_edge_ids.append(ids)
        tri_masks.append((1 << ids[0]) | (1 << ids[1]) | (1 << ids[2]))
    n_tris = len(tris)
    edge_cover_count = [0] * n_edges
    for ids in tri_edge_ids:
        for e in ids:
            edge_cover_count[e] += 1

    # make sure exact hitting numbers of complete subgraphs are available
    max_clique = max(
        _greedy_cliques(list(g.adj), (1 << g.n) - 1, clique_cap), default=0
    )
    if max_clique >= 3:
        _tau_complete(max_clique, budget)

    # greedy incumbent: repeatedly remove the edge in most uncovered triangles
    alive = list(range(n_tris))
    greedy: list[int] = []
    while alive:
        counts: dict[int, int] = {}
        for ti in alive:
            for e in tri_edge_ids[ti]:
                counts[e] = counts.get(e, 0) + 1
        e_best = max(sorted(counts), key=lambda e: counts[e])
        greedy.append(e_best)
        alive = [ti for ti in alive if e_best not in tri_edge_ids[ti]]
    best = list(greedy)
    best_size = len(best)

    bgt = _Budget(budget)
    aborted = False

    def lower_bound(removed_mask: int, uncovered: list[int]) -> int:
        # edge-disjoint greedy packing over uncovered triangles
        used = 0
        cnt = 0
        for ti in uncovered:
            if not tri_masks[ti] & used:
                used |= tri_masks[ti]
                cnt += 1
        # vertex-disjoint cliques in the remaining graph, scored by exact tau,
        # plus a greedy packing outside the clique vertices
        adj = list(g.adj)
        m = removed_mask
        while m:
            low = m & -m
            u, v = edges[low.bit_length() - 1]
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            m ^= low
        sizes = _greedy_cliques(adj, (1 << g.n) - 1, clique_cap)
        clique_lb = sum(_tau_clique_lb(r) for r in sizes)
        return max(cnt, clique_lb)

    def dfs(removed_mask: int, kept_mask: int, removed: list[int]) -> None:
        nonlocal best, best_size, aborted
        if aborted:
            return
        if not bgt.tick():
            aborted = True
            return
        uncovered = [ti for ti in range(n_tris) if not tri_masks[ti] & removed_mask]
        if not uncovered:
            if len(removed) < best_size:
                best = list(removed)
                best_size = len(removed)
            return
        if len(removed) + lower_bound(removed_mask, uncovered) >= best_size:
            return
        # fail-first: uncovered triangle with fewest removable edges
        pick, pick_free = -1, 4
        for ti in uncovered:
            free = 3 - (tri_masks[ti] & kept_mask).bit_count()
            if free < pick_free:
                pick, pick_free = ti, free
                if free == 0:
                    return  # all its edges are kept: infeasible branch
        branch_edges = [
            e for e in tri_edge_ids[pick] if not kept_mask & (1 << e)
        ]
        branch_edges.sort(key=lambda e: -edge_cover_count[e])
        kept_here = 0
        for e in branch_edges:
            removed.append(e)
            dfs(removed_mask | (1 << e), kept_mask | kept_here, removed)
            removed.pop()
            if aborted:
                return
            kept_here |= 1 << e

    dfs(0, 0, [])
    witness = HittingSet.of(edges[e] for e in best)
    return ExactResult(best_size, witness, budget - bgt.left, not aborted)


def exact_tau(g: GeneralGraph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Minimum triangle hitting size, with an optimal hitting set as witness."""
    return _solve_tau(g, budget)
