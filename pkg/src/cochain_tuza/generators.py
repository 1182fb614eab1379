"""Co-chain instance generators for the CLI, tests, and the fuzz harness.

Random instances draw the threshold sequence uniformly over all
nonincreasing sequences of the given length with values in [0, m_size]
(equivalently, uniformly over monotone lattice paths).  Sampling goes
through exact unranking of the C(l_size + m_size, l_size) sequences, so a
seed fully determines the instance stream with no floating-point or
platform dependence.
"""

from __future__ import annotations

import random
from math import comb
from typing import Iterator

from .graphs import CoChainGraph, build_cochain


def count_monotone_sequences(length: int, max_value: int) -> int:
    """Number of nonincreasing sequences of ``length`` over 0..max_value."""
    return comb(length + max_value, length)


def unrank_monotone_sequence(rank: int, length: int, max_value: int) -> tuple[int, ...]:
    """The rank-th nonincreasing sequence, ordered lexicographically
    descending by first element (rank 0 is the all-max sequence)."""
    total = count_monotone_sequences(length, max_value)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range [0, {total})")
    out: list[int] = []
    bound = max_value
    for pos in range(length):
        remaining = length - pos - 1
        for v in range(bound, -1, -1):
            block = count_monotone_sequences(remaining, v)
            if rank < block:
                out.append(v)
                bound = v
                break
            rank -= block
    return tuple(out)


def random_cochain(rng: random.Random, l_size: int, m_size: int) -> CoChainGraph:
    """Uniformly random co-chain graph with the given side sizes."""
    rank = rng.randrange(count_monotone_sequences(l_size, m_size))
    return build_cochain(l_size, m_size, unrank_monotone_sequence(rank, l_size, m_size))


def complete_join(l_size: int, m_size: int) -> CoChainGraph:
    """The complete join of the two side cliques (a complete graph)."""
    return build_cochain(l_size, m_size, (m_size,) * l_size)


def disjoint_cliques(l_size: int, m_size: int) -> CoChainGraph:
    """Two disjoint cliques (no cross edges)."""
    return build_cochain(l_size, m_size, (0,) * l_size)


def fuzz_instances(
    seed: int, count: int, max_half: int
) -> Iterator[CoChainGraph]:
    """Deterministic stream of random even-sided instances.

    Half sizes are drawn uniformly from 1..max_half, thresholds uniformly
    from the monotone sequences; the seed fully determines the stream.
    """
    rng = random.Random(seed)
    for _ in range(count):
        ell = rng.randint(1, max_half)
        m = rng.randint(1, max_half)
        yield random_cochain(rng, 2 * ell, 2 * m)
