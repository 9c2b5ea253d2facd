"""Undirected graphs, pebble configurations, and named graph families.

Vertices are dense 0-indexed integers.  Graphs are simple (no loops, no
parallel edges) and immutable once built; all-pairs hop distances are
computed eagerly at construction because every downstream computation
(stacking weights, solver pruning) reads them repeatedly.
"""

from __future__ import annotations

import heapq
from collections import deque
from itertools import combinations

import numpy as np

UNREACHABLE = -1


class DistanceMatrix:
    """All-pairs unweighted hop distances; UNREACHABLE (-1) marks disconnected pairs."""

    def __init__(self, dist: np.ndarray):
        self.dist = dist
        self.dist.flags.writeable = False

    def __getitem__(self, pair):
        return int(self.dist[pair])

    @property
    def vertex_count(self) -> int:
        return self.dist.shape[0]

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or not (self.dist == UNREACHABLE).any()

    def unreachable_pair(self):
        """Some (u, v) with no path between them, or None if connected."""
        bad = np.argwhere(self.dist == UNREACHABLE)
        if len(bad) == 0:
            return None
        u, v = bad[0]
        return int(u), int(v)

    def diameter(self) -> int:
        """Largest finite distance (0 for the empty and one-vertex graphs)."""
        if self.vertex_count == 0:
            return 0
        finite = self.dist[self.dist != UNREACHABLE]
        return int(finite.max()) if finite.size else 0


class Graph:
    """Immutable simple graph: vertex_count, sorted edge tuple, adjacency, distances."""

    def __init__(self, vertex_count: int, edges):
        if vertex_count < 0:
            raise ValueError(f"vertex count must be non-negative, got {vertex_count}")
        self.vertex_count = vertex_count
        canonical = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(
                    f"edge ({u},{v}) has an endpoint outside 0..{vertex_count - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            canonical.add((u, v) if u < v else (v, u))
        self.edges = tuple(sorted(canonical))
        nbrs = [[] for _ in range(vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adjacency = tuple(tuple(sorted(a)) for a in nbrs)
        self.distances = DistanceMatrix(_bfs_all_pairs(vertex_count, self.adjacency))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        return self.distances.is_connected()

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest member."""
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def _bfs_all_pairs(n: int, adjacency) -> np.ndarray:
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[s, u]
            for w in adjacency[u]:
                if dist[s, w] == UNREACHABLE:
                    dist[s, w] = du + 1
                    queue.append(w)
    return dist


def build_graph(vertex_count: int, edge_list) -> Graph:
    """Validate and deduplicate an edge list into a Graph.

    Rejects self-loops and out-of-range endpoints; duplicate edges and
    reversed duplicates collapse to a single undirected edge.
    """
    return Graph(vertex_count, edge_list)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """Breadth-first hop distances for all vertex pairs of g."""
    return g.distances


class Configuration:
    """Per-vertex pebble counts with the total cached."""

    __slots__ = ("pebbles", "total")

    def __init__(self, pebbles):
        counts = tuple(int(p) for p in pebbles)
        for i, p in enumerate(counts):
            if p < 0:
                raise ValueError(f"negative pebble count {p} at vertex {i}")
        self.pebbles = counts
        self.total = sum(counts)

    def __len__(self):
        return len(self.pebbles)

    def __getitem__(self, i):
        return self.pebbles[i]

    def __iter__(self):
        return iter(self.pebbles)

    def __eq__(self, other):
        return isinstance(other, Configuration) and self.pebbles == other.pebbles

    def __hash__(self):
        return hash(self.pebbles)

    def __repr__(self):
        return f"Configuration{self.pebbles}"


def check_pairing(g: Graph, c: Configuration) -> None:
    """Raise unless the configuration length matches the graph."""
    if len(c) != g.vertex_count:
        raise ValueError(
            f"configuration has {len(c)} entries for a graph on {g.vertex_count} vertices")


# ---------------------------------------------------------------------------
# named families


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("K_n requires n >= 1")
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("P_n requires n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("C_n requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def cube_graph(d: int) -> Graph:
    """Binary d-cube: vertices are bit strings, edges join Hamming distance 1."""
    if d < 0:
        raise ValueError("Q^d requires d >= 0")
    n = 1 << d
    edges = []
    for v in range(n):
        for bit in range(d):
            w = v ^ (1 << bit)
            if v < w:
                edges.append((v, w))
    return Graph(n, edges)


def complete_multipartite(parts) -> Graph:
    """K_{r1,...,rm} with parts listed in descending order."""
    parts = [int(r) for r in parts]
    if not parts or any(r < 1 for r in parts):
        raise ValueError("multipartite parts must be positive")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be sorted descending, got {parts}")
    starts = [0]
    for r in parts:
        starts.append(starts[-1] + r)
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(starts[i], starts[i + 1]):
                for v in range(starts[j], starts[j + 1]):
                    edges.append((u, v))
    return Graph(starts[-1], edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices via a Prufer sequence."""
    if n < 1:
        raise ValueError("random_tree requires n >= 1")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = _plumbing_rng(seed)
    prufer = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges)


def gnp_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p)."""
    if n < 0:
        raise ValueError("gnp requires n >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = _plumbing_rng(seed)
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph(n, (e for e, k in zip(pairs, keep) if k))


def _plumbing_rng(seed: int) -> np.random.Generator:
    # same counter-based generator family as the samplers, fixed substream
    return np.random.Generator(np.random.Philox(key=[seed & (2**64 - 1), 0]))


FAMILY_NAMES = ("kn", "pn", "cn", "qd", "kmulti", "tree", "gnp")


def generate_family(family: str, **params) -> Graph:
    """Build a named family; `family` is one of FAMILY_NAMES.

    kn/pn/cn/tree take n, qd takes d, kmulti takes parts (descending),
    gnp takes n and p; tree and gnp also require seed.
    """
    if family == "kn":
        return complete_graph(params["n"])
    if family == "pn":
        return path_graph(params["n"])
    if family == "cn":
        return cycle_graph(params["n"])
    if family == "qd":
        return cube_graph(params["d"])
    if family == "kmulti":
        return complete_multipartite(params["parts"])
    if family == "tree":
        return random_tree(params["n"], params["seed"])
    if family == "gnp":
        return gnp_random_graph(params["n"], params["p"], params["seed"])
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILY_NAMES}")


# ---------------------------------------------------------------------------
# JSON dict forms (the CLI file formats)


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.vertex_count, "edges": [[u, v] for u, v in g.edges]}


def graph_from_dict(d: dict) -> Graph:
    try:
        n = int(d["n"])
        edges = d["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"graph JSON needs integer 'n' and list 'edges': {exc}") from exc
    return build_graph(n, edges)


def configuration_to_dict(c: Configuration) -> dict:
    return {"pebbles": list(c.pebbles)}


def configuration_from_dict(d: dict) -> Configuration:
    try:
        pebbles = d["pebbles"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"configuration JSON needs a 'pebbles' list: {exc}") from exc
    return Configuration(pebbles)
