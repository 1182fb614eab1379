"""Constructive triangle-packing primitives.

Three building blocks recur in every certificate:

* ``one_factorization`` - the round-robin (circle method) partition of an
  even complete graph into perfect matchings, and its near-1-factorization
  variant for odd orders (one bye vertex per round);

* ``pack_side`` - packings of the join of a clique K with an apex set S in
  which every triangle takes one K-edge and one S-apex: whole matchings of a
  (near-)1-factorization of K are assigned to distinct apexes, which realizes
  the bounds |P| >= (|K|-1)/2 * min(|S|, |K|) and, for even |K|,
  |P| >= |K|/2 * min(|S|, |K|-1);

* ``pack_clique`` - maximum packings of complete graphs whose sizes hit the
  exact Feder-Subi counts (binom(n,2) - k)/3 with the deficiency k dictated
  by n mod 6.

For ``pack_clique`` the counts are the contract and the construction method
is free.  n = 1, 3 mod 6 use direct Steiner triple systems (the Bose
construction over an idempotent quasigroup for 3 mod 6, the Skolem
construction over a half-idempotent quasigroup for 1 mod 6); n = 0, 2 mod 6
delete one point from a Steiner system of order n + 1, which turns the
deleted point's triples into the perfect-matching leave; n = 4, 5 mod 6 use
a seeded Stinson-style hill climb to the known optimum (leave sizes n/2 + 1
and 4).  Every constructed packing is checked against the Feder count and
for edge-disjoint coverage before it is cached.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .graphs import Edge, GeneralGraph, Triangle, TrianglePacking, edge, triangle

N_MAX_DEFAULT = 20

#: seed base for the hill-climb engine; fixed so packings are reproducible
_HILL_SEED = 0x7C0C4A1


class UnsupportedCliqueSize(ValueError):
    """Raised when pack_clique is asked for an order beyond its cap."""


@dataclass(frozen=True)
class CliquePackingCount:
    """Exact maximum packing size of K_n: count = (binom(n,2) - k) / 3."""

    n: int
    k: int
    count: int


def feder_count(n: int) -> CliquePackingCount:
    """Deficiency k and maximum triangle-packing size of K_n (n mod 6 cases)."""
    if n < 1:
        raise ValueError("clique order must be positive")
    r = n % 6
    if r in (1, 3):
        k = 0
    elif r == 5:
        k = 4
    elif r in (0, 2):
        k = n // 2
    else:  # r == 4
        k = n // 2 + 1
    pairs = comb(n, 2)
    assert (pairs - k) % 3 == 0
    return CliquePackingCount(n, k, (pairs - k) // 3)


# ---------------------------------------------------------------------------
# 1-factorizations
# ---------------------------------------------------------------------------


def one_factorization(vertices: Sequence[int]) -> list[list[Edge]]:
    """Round-robin 1-factorization of the complete graph on an even vertex set.

    Returns n-1 perfect matchings of n/2 edges whose union is all pairs.
    """
    vs = sorted(vertices)
    n = len(vs)
    if n < 2 or n % 2:
        raise ValueError(f"even vertex count >= 2 required, got {n}")
    rounds = []
    hub = n - 1
    for r in range(n - 1):
        matching = [edge(vs[hub], vs[r])]
        for k in range(1, n // 2):
            a = (r + k) % (n - 1)
            b = (r - k) % (n - 1)
            matching.append(edge(vs[a], vs[b]))
        rounds.append(sorted(matching))
    return rounds


def near_one_factorization(vertices: Sequence[int]) -> list[tuple[list[Edge], int]]:
    """Near-1-factorization of an odd complete graph.

    Returns n rounds of (n-1)/2 edges; round r pairs {r+k, r-k} mod n and
    leaves vertex r as the bye.  Each edge occurs in exactly one round.
    """
    vs = sorted(vertices)
    n = len(vs)
    if n < 1 or n % 2 == 0:
        raise ValueError(f"odd vertex count required, got {n}")
    rounds = []
    for r in range(n):
        matching = [
            edge(vs[(r + k) % n], vs[(r - k) % n]) for k in range(1, n // 2 + 1)
        ]
        rounds.append((sorted(matching), vs[r]))
    return rounds


# ---------------------------------------------------------------------------
# Apex-over-matching packings (clique K complete to apex set S)
# ---------------------------------------------------------------------------


def pack_side(
    S: Iterable[int], K: Iterable[int], host: GeneralGraph
) -> TrianglePacking:
    """Pack triangles of the form (apex in S) + (edge of the clique K).

    Preconditions (checked): K induces a clique in host, S and K are
    disjoint, and S is complete to K.  Matching i of the (near-)
    1-factorization of K goes to the i-th smallest S-vertex; leftover
    matchings stay unused, which later constructions rely on.
    """
    s_sorted = sorted(set(S))
    k_sorted = sorted(set(K))
    if set(s_sorted) & set(k_sorted):
        raise ValueError("apex set and clique must be disjoint")
    if not host.is_clique(k_sorted):
        raise ValueError("K does not induce a clique in the host graph")
    if not host.complete_between(s_sorted, k_sorted):
        raise ValueError("S is not complete to K in the host graph")
    if len(k_sorted) < 2 or not s_sorted:
        return TrianglePacking(frozenset())
    if len(k_sorted) % 2 == 0:
        matchings = one_factorization(k_sorted)
    else:
        matchings = [m for m, _bye in near_one_factorization(k_sorted)]
    tris = [
        triangle(apex, *e)
        for apex, m in zip(s_sorted, matchings)
        for e in m
    ]
    return TrianglePacking.of(tris)


@dataclass(frozen=True)
class BetweenPacking:
    """pack_between result: the packing plus the apex restriction applied."""

    packing: TrianglePacking
    apexes: tuple[int, ...]
    skipped: tuple[int, ...]


def pack_between(
    S: Iterable[int], K: Iterable[int], host: GeneralGraph
) -> BetweenPacking:
    """pack_side restricted to the S-vertices actually complete to K.

    No triangle uses an edge inside S.  S-vertices missing some K-neighbor
    are skipped and reported in the result.
    """
    s_sorted = sorted(set(S))
    k_sorted = sorted(set(K))
    kept = [s for s in s_sorted if host.complete_between([s], k_sorted)]
    skipped = tuple(s for s in s_sorted if s not in set(kept))
    return BetweenPacking(
        packing=pack_side(kept, k_sorted, host),
        apexes=tuple(kept),
        skipped=skipped,
    )


# ---------------------------------------------------------------------------
# Maximum clique packings at the Feder-Subi counts
# ---------------------------------------------------------------------------


def _bose_sts(t: int) -> list[Triangle]:
    """Steiner triple system of order 6t+3 (points Z_{2t+1} x {0,1,2}).

    Uses the idempotent commutative quasigroup i*j = (i+j)(t+1) mod (2t+1).
    """
    q = 2 * t + 1
    inv2 = t + 1  # 2 * (t+1) = 1 mod q

    def pt(i: int, col: int) -> int:
        return col * q + i

    triples = [triangle(pt(i, 0), pt(i, 1), pt(i, 2)) for i in range(q)]
    for col in range(3):
        for i in range(q):
            for j in range(i + 1, q):
                k = (i + j) * inv2 % q
                triples.append(triangle(pt(i, col), pt(j, col), pt(k, (col + 1) % 3)))
    return triples


def _skolem_sts(t: int) -> list[Triangle]:
    """Steiner triple system of order 6t+1 (points Z_{2t} x {0,1,2} + one).

    Uses the half-idempotent commutative quasigroup obtained by relabeling
    the Z_{2t} addition table: i*j = s/2 if s = i+j mod 2t is even, else
    t + (s-1)/2.
    """
    if t == 0:
        return []
    q = 2 * t
    inf = 3 * q  # the extra point

    def star(i: int, j: int) -> int:
        s = (i + j) % q
        return s // 2 if s % 2 == 0 else t + (s - 1) // 2

    def pt(i: int, col: int) -> int:
        return col * q + i

    triples = [triangle(pt(i, 0), pt(i, 1), pt(i, 2)) for i in range(t)]
    for col in range(3):
        for i in range(t):
            triples.append(triangle(inf, pt(t + i, col), pt(i, (col + 1) % 3)))
    for col in range(3):
        for i in range(q):
            for j in range(i + 1, q):
                triples.append(
                    triangle(pt(i, col), pt(j, col), pt(star(i, j), (col + 1) % 3))
                )
    return triples


def _sts(n: int) -> list[Triangle]:
    """Steiner triple system on points 0..n-1 (n = 1 or 3 mod 6)."""
    if n % 6 == 3:
        return _bose_sts((n - 3) // 6)
    if n % 6 == 1:
        return _skolem_sts((n - 1) // 6)
    raise ValueError(f"no Steiner triple system of order {n}")


def _hill_climb_packing(n: int, target: int) -> list[Triangle]:
    """Stinson-style hill climb to a triangle packing of K_n of a given size.

    Seeded and restarted deterministically; raises if the walk stalls, which
    for achievable targets it does not in practice.
    """
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for restart in range(32):
        rng = random.Random(_HILL_SEED + 1_000_003 * n + restart)
        cover: dict[Edge, Triangle] = {}
        triples: set[Triangle] = set()
        uncovered = list(all_pairs)
        pos = {p: i for i, p in enumerate(uncovered)}

        def drop_uncovered(p: Edge) -> None:
            i = pos.pop(p)
            last = uncovered.pop()
            if last != p:
                uncovered[i] = last
                pos[last] = i

        def add_uncovered(p: Edge) -> None:
            pos[p] = len(uncovered)
            uncovered.append(p)

        def add_triple(t: Triangle) -> None:
            triples.add(t)
            a, b, c = t
            for p in ((a, b), (a, c), (b, c)):
                cover[p] = t
                drop_uncovered(p)

        def remove_triple(t: Triangle) -> None:
            triples.remove(t)
            a, b, c = t
            for p in ((a, b), (a, c), (b, c)):
                del cover[p]
                add_uncovered(p)

        steps_cap = 400_000 + 40_000 * n
        for _step in range(steps_cap):
            if len(triples) >= target:
                return sorted(triples)
            x, y = uncovered[rng.randrange(len(uncovered))]
            z = rng.randrange(n)
            if z == x or z == y:
                continue
            t1 = cover.get(edge(x, z))
            t2 = cover.get(edge(y, z))
            if t1 is not None and t2 is not None and t1 is not t2:
                continue
            blocker = t1 if t1 is not None else t2
            if blocker is not None:
                remove_triple(blocker)
            add_triple(triangle(x, y, z))
        if len(triples) >= target:
            return sorted(triples)
    raise RuntimeError(f"hill climb failed to pack K_{n} to size {target}")


_CLIQUE_PACK_CACHE: dict[int, tuple[Triangle, ...]] = {}


def _canonical_clique_packing(n: int) -> tuple[Triangle, ...]:
    """Feder-optimal packing of K_n on points 0..n-1, memoized and verified."""
    if n in _CLIQUE_PACK_CACHE:
        return _CLIQUE_PACK_CACHE[n]
    if n < 3:
        tris: list[Triangle] = []
    elif n % 6 in (1, 3):
        tris = _sts(n)
    elif n % 6 in (0, 2):
        # drop the triples through one point of STS(n+1); the partner pairs
        # of the deleted point become the perfect-matching leave
        tris = [t for t in _sts(n + 1) if n not in t]
    else:
        tris = _hill_climb_packing(n, feder_count(n).count)

    expected = feder_count(n).count if n >= 1 else 0
    if len(tris) != expected:
        raise RuntimeError(
            f"K_{n} packing has size {len(tris)}, expected {expected}"
        )
    seen: set[Edge] = set()
    for t in tris:
        for p in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            if p in seen or not (0 <= p[0] < p[1] < n):
                raise RuntimeError(f"K_{n} packing reuses or exceeds edge {p}")
            seen.add(p)
    packed = tuple(sorted(tris))
    _CLIQUE_PACK_CACHE[n] = packed
    return packed


def pack_clique(
    vertices: Sequence[int], max_n: int = N_MAX_DEFAULT
) -> TrianglePacking:
    """Edge-disjoint triangle packing of the clique on ``vertices`` whose size
    equals ``feder_count(len(vertices)).count`` exactly.

    Orders beyond ``max_n`` raise UnsupportedCliqueSize so callers can fall
    back explicitly rather than silently accept a non-optimal packing.
    """
    vs = sorted(set(vertices))
    n = len(vs)
    if n > max_n:
        raise UnsupportedCliqueSize(
            f"clique order {n} exceeds the supported bound {max_n}"
        )
    canon = _canonical_clique_packing(n)
    return TrianglePacking.of(
        (vs[a], vs[b], vs[c]) for a, b, c in canon
    )
