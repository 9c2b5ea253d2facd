"""Exact-cover-by-4-sets instances and their cover-pebbling gadget graphs.

The translation maps a ground set of size 4n and m four-element subsets to
a graph whose configuration is cover solvable exactly when n disjoint
subsets partition the ground set: element vertices T (empty), one
nine-pebble vertex per subset in B, buffer layers B' and B'' holding one
pebble each, a collector v with 2^(m-n) - (m-n) + 1 pebbles, and a drain
path of length m-n from v to an empty terminal w with one pebble on each
interior vertex.  Covering T spends eight pebbles of a chosen subset
vertex on its four elements; every unused subset vertex can push exactly
one pebble to v at cost eight, and only a full group of eight survives the
three-edge trip, which is what forces exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Configuration, Graph, build_graph
from .solvability import (
    DEFAULT_NODE_BUDGET,
    SOLVABLE,
    MoveCertificate,
    solve,
    verify_certificate,
)


@dataclass(frozen=True)
class X4CInstance:
    """Ground set {0, ..., ground_set_size-1} and a family of 4-element subsets."""

    ground_set_size: int
    sets: tuple

    def __init__(self, ground_set_size, sets):
        object.__setattr__(self, "ground_set_size", int(ground_set_size))
        object.__setattr__(
            self, "sets", tuple(tuple(sorted(int(e) for e in s)) for s in sets)
        )

    @property
    def n(self) -> int:
        return self.ground_set_size // 4

    @property
    def m(self) -> int:
        return len(self.sets)


def validate_instance(x: X4CInstance) -> list:
    """All invariant violations as messages; an empty list means valid."""
    errors = []
    if x.ground_set_size <= 0 or x.ground_set_size % 4 != 0:
        errors.append(f"ground set size {x.ground_set_size} is not a positive multiple of 4")
    for idx, s in enumerate(x.sets):
        if len(set(s)) != 4:
            errors.append(f"set #{idx} {s} does not have exactly 4 distinct elements")
        for e in s:
            if not 0 <= e < x.ground_set_size:
                errors.append(f"set #{idx} element {e} outside the ground set")
    if x.m < x.n:
        errors.append(f"need at least {x.n} sets, got {x.m}")
    return errors


def _require_valid(x: X4CInstance) -> None:
    errors = validate_instance(x)
    if errors:
        raise ValueError("invalid instance: " + "; ".join(errors))


@dataclass(frozen=True)
class ReductionOutput:
    """Gadget graph, its pebble configuration, and vertex role labels."""

    graph: Graph
    config: Configuration
    labels: dict


def build_reduction(x: X4CInstance) -> ReductionOutput:
    """Literal gadget construction; 3n + 4m + 1 vertices and 8m - n edges.

    Rejects m == n: the drain path would have length zero, identifying v
    and w with contradictory pebble assignments.
    """
    _require_valid(x)
    n, m = x.n, x.m
    if m <= n:
        raise ValueError(f"reduction needs m > n subsets, got m={m}, n={n}")
    span = m - n
    t_base = 0
    b_base = 4 * n
    b1_base = b_base + m
    b2_base = b1_base + m
    v_vertex = b2_base + m
    u_base = v_vertex + 1
    w_vertex = u_base + (span - 1)

    edges = []
    for i, subset in enumerate(x.sets):
        for element in subset:
            edges.append((b_base + i, t_base + element))
        edges.append((b_base + i, b1_base + i))
        edges.append((b1_base + i, b2_base + i))
        edges.append((b2_base + i, v_vertex))
    drain = [v_vertex] + [u_base + k for k in range(span - 1)] + [w_vertex]
    edges.extend(zip(drain, drain[1:]))
    graph = build_graph(w_vertex + 1, edges)

    pebbles = [0] * graph.vertex_count
    for i in range(m):
        pebbles[b_base + i] = 9
        pebbles[b1_base + i] = 1
        pebbles[b2_base + i] = 1
    pebbles[v_vertex] = 2**span - span + 1
    for k in range(span - 1):
        pebbles[u_base + k] = 1

    labels = {t_base + j: f"T{j}" for j in range(4 * n)}
    for i in range(m):
        labels[b_base + i] = f"B{i}"
        labels[b1_base + i] = f"B'{i}"
        labels[b2_base + i] = f"B''{i}"
    labels[v_vertex] = "v"
    for k in range(span - 1):
        labels[u_base + k] = f"u{k + 1}"
    labels[w_vertex] = "w"
    return ReductionOutput(graph, Configuration(pebbles), labels)


def exact_cover_bruteforce(x: X4CInstance):
    """Exhaustive witness search: n set indices partitioning S, or None."""
    _require_valid(x)
    full = x.ground_set_size
    for indices in combinations(range(x.m), x.n):
        union = set()
        for i in indices:
            union.update(x.sets[i])
        if len(union) == full:
            return list(indices)
    return None


def cover_witness_certificate(x: X4CInstance, cover) -> MoveCertificate:
    """The explicit solving strategy once a perfect cover is known.

    Cover subsets spend eight pebbles covering their elements; each unused
    subset vertex relays one pebble to the collector through its buffer
    chain; the collector halves its pile down the drain path.
    """
    _require_valid(x)
    n, m = x.n, x.m
    span = m - n
    cover = set(cover)
    b_base = 4 * n
    b1_base = b_base + m
    b2_base = b1_base + m
    v_vertex = b2_base + m
    u_base = v_vertex + 1
    w_vertex = u_base + (span - 1)

    moves = {}
    for i, subset in enumerate(x.sets):
        if i in cover:
            for element in subset:
                moves[(b_base + i, element)] = 1
        else:
            moves[(b_base + i, b1_base + i)] = 4
            moves[(b1_base + i, b2_base + i)] = 2
            moves[(b2_base + i, v_vertex)] = 1
    drain = [v_vertex] + [u_base + k for k in range(span - 1)] + [w_vertex]
    for k, (a, b) in enumerate(zip(drain, drain[1:])):
        moves[(a, b)] = 2 ** (span - 1 - k)
    return MoveCertificate(moves)


@dataclass(frozen=True)
class EquivalenceReport:
    """Side-by-side verdicts of the exact-cover oracle and the pebbling solver."""

    cover_exists: bool
    cover_witness: list | None
    pebbling_status: str
    pebbling_certificate: MoveCertificate | None
    agree: bool | None  # None when the pebbling side ran out of budget


def reduction_equivalence_check(
    x: X4CInstance, budget: int = DEFAULT_NODE_BUDGET
) -> EquivalenceReport:
    """Run both sides of the reduction and compare.

    Positive instances bypass search: the explicit witness certificate is
    built and verified.  Negative instances go through the general solver
    under the given node budget; an undecided outcome is reported as such,
    never as a disagreement.
    """
    _require_valid(x)
    built = build_reduction(x)
    witness = exact_cover_bruteforce(x)
    if witness is not None:
        certificate = cover_witness_certificate(x, witness)
        if not verify_certificate(built.graph, built.config, certificate):
            raise AssertionError("witness certificate failed verification")
        return EquivalenceReport(True, witness, SOLVABLE, certificate, True)
    result = solve(built.graph, built.config, budget)
    agree = None if result.undecided else (not result.solvable)
    return EquivalenceReport(False, None, result.status, result.certificate, agree)


def instance_to_dict(x: X4CInstance) -> dict:
    return {"ground_set_size": x.ground_set_size, "sets": [list(s) for s in x.sets]}


def instance_from_dict(d: dict) -> X4CInstance:
    try:
        return X4CInstance(d["ground_set_size"], d["sets"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(
            f"instance JSON needs 'ground_set_size' and 'sets': {exc}") from exc
