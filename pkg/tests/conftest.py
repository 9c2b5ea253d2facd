"""Shared helpers for randomized tests."""

import random

import coverpebbling as cp


def random_connected_graph(rng: random.Random, max_vertices: int = 5) -> cp.Graph:
    """Random tree plus a few extra edges, so connectivity is guaranteed."""
    n = rng.randint(1, max_vertices)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randint(0, v - 1), v))
    for _ in range(rng.randint(0, n)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return cp.build_graph(n, edges)


def random_configuration(rng: random.Random, n: int, max_total: int = 10) -> cp.Configuration:
    counts = [0] * n
    for _ in range(rng.randint(0, max_total)):
        counts[rng.randrange(n)] += 1
    return cp.Configuration(counts)


def compositions(total: int, parts: int):
    """All ordered splits of `total` into `parts` non-negative integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def descending_part_vectors(max_total: int):
    """Non-increasing positive integer vectors with sum at most max_total."""
    def extend(prefix, remaining, cap):
        if prefix:
            yield tuple(prefix)
        for r in range(min(cap, remaining), 0, -1):
            yield from extend(prefix + [r], remaining - r, r)

    yield from extend([], max_total, max_total)
