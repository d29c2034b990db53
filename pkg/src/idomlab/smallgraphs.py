"""Exhaustive small-graph catalogues and random graphs for scan harnesses.

Enumeration yields one representative per isomorphism class by keeping only
edge masks that are minimal over all vertex permutations.  This is meant for
orders up to about 7; corpora of bigger graphs should come from external
graph6 files instead.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from random import Random
from typing import Iterator

from .graph import Graph, build_graph, is_connected


@lru_cache(maxsize=None)
def _pair_positions(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation, the bit-position remap table of the edge mask."""
    pairs = _pair_positions(n)
    index = {pair: k for k, pair in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        table = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            table.append(index[(a, b)])
        tables.append(tuple(table))
    return tuple(tables)


def _mask_is_canonical(mask: int, n: int) -> bool:
    if mask == 0:
        return True
    for table in _perm_tables(n):
        remapped = 0
        bits = mask
        while bits:
            low = bits & -bits
            remapped |= 1 << table[low.bit_length() - 1]
            bits ^= low
            if remapped.bit_length() > mask.bit_length():
                break
        if remapped < mask:
            return False
    return True


def _mask_to_graph(mask: int, n: int) -> Graph:
    pairs = _pair_positions(n)
    edges = []
    bits = mask
    while bits:
        low = bits & -bits
        edges.append(pairs[low.bit_length() - 1])
        bits ^= low
    return build_graph(n, edges)


def all_graphs(n: int) -> Iterator[Graph]:
    """All graphs of order ``n`` up to isomorphism, by ascending edge mask."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        yield Graph(0, ())
        return
    pair_count = n * (n - 1) // 2
    for mask in range(1 << pair_count):
        if _mask_is_canonical(mask, n):
            yield _mask_to_graph(mask, n)


def connected_graphs(n: int) -> Iterator[Graph]:
    """Connected graphs of order ``n`` up to isomorphism, deterministic order."""
    for graph in all_graphs(n):
        if is_connected(graph):
            yield graph


def connected_graphs_upto(n: int) -> Iterator[Graph]:
    """Connected graphs of every order ``1..n`` up to isomorphism."""
    for k in range(1, n + 1):
        yield from connected_graphs(k)


def random_graph(rng: Random, n: int, p: float) -> Graph:
    """A uniform random graph where each pair is an edge with probability ``p``."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_isolate_free_graph(rng: Random, n: int, p: float) -> Graph:
    """Resample until the random graph has minimum degree at least 1."""
    if n < 2:
        raise ValueError("isolate-free graphs need at least two vertices")
    while True:
        graph = random_graph(rng, n, p)
        if all(row for row in graph.adj):
            return graph


def random_connected_graph(rng: Random, n: int, p: float) -> Graph:
    """Resample until the random graph is connected."""
    if n < 1:
        raise ValueError("connected graphs need at least one vertex")
    while True:
        graph = random_graph(rng, n, p)
        if is_connected(graph):
            return graph
