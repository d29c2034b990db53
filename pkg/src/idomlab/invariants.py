"""Exact computation of domination-type invariants with verifiable witnesses.

All solvers are exact branch-and-bound searches on bitset adjacency rows,
meant for desk-scale graphs (the default cap is 40 vertices).  Every result
carries a witness set that re-verifies under the matching predicate, and the
reported witness is always the lexicographically smallest optimum, so
results do not depend on traversal or worker scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Iterator, Optional

from .graph import Graph, VertexSet, square_graph, _bits_of


class CapExceeded(RuntimeError):
    """An exact solver was asked for a graph above its vertex cap."""


class BudgetExhausted(RuntimeError):
    """A solver ran out of its wall-clock budget before finishing."""


class UndefinedInvariant(ValueError):
    """The requested invariant does not exist on this graph."""


@dataclass(frozen=True)
class SolverLimits:
    """Caps and budgets for the exact searches.

    ``vertex_cap`` bounds exponential searches; witness verification is
    polynomial and intentionally not capped.  ``budget_secs`` aborts a
    search with :class:`BudgetExhausted` rather than returning a guess.
    """

    vertex_cap: int = 40
    budget_secs: Optional[float] = None


DEFAULT_LIMITS = SolverLimits()


class _Deadline:
    """Cheap cooperative deadline checked every few thousand search nodes."""

    __slots__ = ("t_end", "ticks")

    def __init__(self, budget_secs: Optional[float]):
        self.t_end = None if budget_secs is None else perf_counter() + budget_secs
        self.ticks = 0

    def tick(self) -> None:
        if self.t_end is None:
            return
        self.ticks += 1
        if self.ticks & 0xFFF == 0 and perf_counter() > self.t_end:
            raise BudgetExhausted("solver budget exhausted")


def _require_cap(graph: Graph, limits: SolverLimits, what: str) -> None:
    if graph.n > limits.vertex_cap:
        raise CapExceeded(
            f"{what} on {graph.n} vertices exceeds the cap of {limits.vertex_cap}; "
            "raise the cap to force the search"
        )


@dataclass(frozen=True)
class InvariantResult:
    """An exact invariant value with its verifying witness."""

    name: str
    value: int
    witness: VertexSet
    method: str
    elapsed: float


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def _check_subset(graph: Graph, subset: VertexSet) -> None:
    if subset.n != graph.n:
        raise ValueError("vertex set does not live in this graph")


def is_independent(graph: Graph, subset: VertexSet) -> bool:
    _check_subset(graph, subset)
    bits = subset.bits
    for v in _bits_of(bits):
        if graph.adj[v] & bits:
            return False
    return True


def is_dominating(graph: Graph, subset: VertexSet) -> bool:
    _check_subset(graph, subset)
    covered = subset.bits
    for v in _bits_of(subset.bits):
        covered |= graph.adj[v]
    return covered == graph.full_bits


def is_maximal_independent(graph: Graph, subset: VertexSet) -> bool:
    """Independent and dominating, i.e. inclusion-maximal independent."""
    return is_independent(graph, subset) and is_dominating(graph, subset)


def is_total_dominating(graph: Graph, subset: VertexSet) -> bool:
    _check_subset(graph, subset)
    covered = 0
    for v in _bits_of(subset.bits):
        covered |= graph.adj[v]
    return covered == graph.full_bits


def is_2_packing(graph: Graph, subset: VertexSet) -> bool:
    """True when members are pairwise at distance at least 3."""
    _check_subset(graph, subset)
    square = square_graph(graph)
    bits = subset.bits
    for v in _bits_of(bits):
        if square.adj[v] & bits:
            return False
    return True


PREDICATES = {
    "i": is_maximal_independent,
    "alpha": is_independent,
    "gamma": is_dominating,
    "gamma_t": is_total_dominating,
    "rho": is_2_packing,
}


# ---------------------------------------------------------------------------
# Minimum maximal independent set (independent domination number)
# ---------------------------------------------------------------------------
#
# Branch on the lowest-index undecided vertex with states "in the set" and
# "excluded, must eventually be dominated".  Dead branches are cut by the
# lower bound |S| + ceil(undominated / (max degree + 1)) and by forcing the
# single remaining candidate of any undominated vertex into the set.


def _greedy_maximal_independent(adj: tuple[int, ...], n: int) -> int:
    chosen = 0
    banned = 0
    for v in range(n):
        if not (banned >> v) & 1:
            chosen |= 1 << v
            banned |= adj[v] | (1 << v)
    return chosen


def _propagate_mis(
    adj: tuple[int, ...],
    closed: tuple[int, ...],
    full: int,
    in_set: int,
    excluded: int,
    dominated: int,
) -> Optional[tuple[int, int, int]]:
    """Force unique dominators; return ``None`` on a dead branch."""
    while True:
        undecided = full & ~in_set & ~excluded
        forced = 0
        scan = full & ~dominated
        while scan:
            low = scan & -scan
            v = low.bit_length() - 1
            scan ^= low
            candidates = closed[v] & undecided
            if candidates == 0:
                return None
            if candidates & (candidates - 1) == 0:
                forced |= candidates
        if not forced:
            return in_set, excluded, dominated
        while forced:
            low = forced & -forced
            u = low.bit_length() - 1
            forced ^= low
            if (in_set >> u) & 1:
                continue
            if adj[u] & in_set:
                return None
            in_set |= 1 << u
            excluded |= adj[u]
            dominated |= closed[u]


def _solve_min_mis(graph: Graph, deadline: _Deadline, start_best: int) -> tuple[int, int]:
    """Return ``(i(G), witness bits)`` with the lexicographically least witness.

    Two passes: the first establishes the optimal value, the second re-runs
    the same search with the value pinned, taking the first (hence
    lexicographically smallest) optimal set it reaches.
    """
    n = graph.n
    adj = graph.adj
    full = graph.full_bits
    if n == 0:
        return 0, 0
    closed = tuple(adj[v] | (1 << v) for v in range(n))
    denom = max(row.bit_count() for row in adj) + 1

    best = start_best

    def search(in_set: int, excluded: int, dominated: int, limit: int, first_hit: bool):
        nonlocal best
        deadline.tick()
        state = _propagate_mis(adj, closed, full, in_set, excluded, dominated)
        if state is None:
            return None
        in_set, excluded, dominated = state
        k = in_set.bit_count()
        undominated = full & ~dominated
        bound = k + (undominated.bit_count() + denom - 1) // denom
        if first_hit:
            if bound > limit:
                return None
        else:
            if bound >= best:
                return None
        undecided = full & ~in_set & ~excluded
        if undecided == 0:
            if undominated == 0:
                if first_hit:
                    return in_set
                if k < best:
                    best = k
            return None
        v_bit = undecided & -undecided
        v = v_bit.bit_length() - 1
        hit = search(
            in_set | v_bit,
            excluded | (adj[v] & ~in_set),
            dominated | closed[v],
            limit,
            first_hit,
        )
        if hit is not None:
            return hit
        return search(in_set, excluded | v_bit, dominated, limit, first_hit)

    search(0, 0, 0, 0, False)
    witness = search(0, 0, 0, best, True)
    if witness is None:  # the value pass already found one; re-finding must succeed
        raise AssertionError("witness pass failed to reproduce the optimum")
    return best, witness


def independent_domination_number(
    graph: Graph, limits: SolverLimits = DEFAULT_LIMITS
) -> InvariantResult:
    """Exact minimum size of a maximal independent set, with witness."""
    _require_cap(graph, limits, "exact independent domination")
    started = perf_counter()
    deadline = _Deadline(limits.budget_secs)
    greedy = _greedy_maximal_independent(graph.adj, graph.n)
    value, bits = _solve_min_mis(graph, deadline, greedy.bit_count())
    return InvariantResult(
        "i", value, VertexSet(graph.n, bits), "branch-and-bound", perf_counter() - started
    )


# ---------------------------------------------------------------------------
# Maximum independent set (independence number)
# ---------------------------------------------------------------------------


def _clique_cover_bound(adj: tuple[int, ...], candidates: int) -> int:
    """Number of cliques in a greedy cover of ``candidates``; bounds alpha."""
    cliques: list[int] = []
    scan = candidates
    while scan:
        low = scan & -scan
        v = low.bit_length() - 1
        scan ^= low
        row = adj[v]
        for idx, members in enumerate(cliques):
            if members & ~row == 0:
                cliques[idx] = members | low
                break
        else:
            cliques.append(low)
    return len(cliques)


def _solve_max_independent(graph: Graph, deadline: _Deadline) -> tuple[int, int]:
    n = graph.n
    adj = graph.adj
    if n == 0:
        return 0, 0
    closed = tuple(adj[v] | (1 << v) for v in range(n))
    best = 0

    def search(chosen: int, candidates: int, target: int, first_hit: bool):
        nonlocal best
        deadline.tick()
        # vertices with no candidate neighbours always join
        while True:
            free = 0
            scan = candidates
            while scan:
                low = scan & -scan
                v = low.bit_length() - 1
                scan ^= low
                if adj[v] & candidates == 0:
                    free |= low
            if not free:
                break
            chosen |= free
            candidates &= ~free
        k = chosen.bit_count()
        if candidates == 0:
            if first_hit:
                return chosen if k == target else None
            if k > best:
                best = k
            return None
        upper = k + _clique_cover_bound(adj, candidates)
        if first_hit:
            if upper < target:
                return None
        else:
            if upper <= best:
                return None
        v_bit = candidates & -candidates
        v = v_bit.bit_length() - 1
        hit = search(chosen | v_bit, candidates & ~closed[v], target, first_hit)
        if hit is not None:
            return hit
        return search(chosen, candidates & ~v_bit, target, first_hit)

    search(0, graph.full_bits, 0, False)
    witness = search(0, graph.full_bits, best, True)
    if witness is None:
        raise AssertionError("witness pass failed to reproduce the optimum")
    return best, witness


def independence_number(graph: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> InvariantResult:
    """Exact maximum size of an independent set, with witness."""
    _require_cap(graph, limits, "exact independence number")
    started = perf_counter()
    deadline = _Deadline(limits.budget_secs)
    value, bits = _solve_max_independent(graph, deadline)
    return InvariantResult(
        "alpha", value, VertexSet(graph.n, bits), "branch-and-bound", perf_counter() - started
    )


# ---------------------------------------------------------------------------
# Domination and total domination numbers
# ---------------------------------------------------------------------------


def _solve_min_cover(
    graph: Graph,
    deadline: _Deadline,
    coverage: tuple[int, ...],
    chooser: tuple[int, ...],
    start_best: int,
) -> tuple[int, int]:
    """Shared search for domination-style problems.

    Picking vertex ``v`` covers ``coverage[v]``; an uncovered vertex ``u``
    can only ever be covered by members of ``chooser[u]``.  Finds a minimum
    set whose union of coverage is everything, then the lexicographically
    least such set of that size.
    """
    n = graph.n
    full = graph.full_bits
    if n == 0:
        return 0, 0
    denom = max(row.bit_count() for row in coverage) if any(coverage) else 0
    if denom == 0:
        raise UndefinedInvariant("no vertex covers anything; invariant undefined")

    best = start_best

    def search(chosen: int, rejected: int, covered: int, limit: int, first_hit: bool):
        nonlocal best
        deadline.tick()
        # propagate forced choices
        while True:
            undecided = full & ~chosen & ~rejected
            forced = 0
            scan = full & ~covered
            while scan:
                low = scan & -scan
                u = low.bit_length() - 1
                scan ^= low
                options = chooser[u] & undecided
                if options == 0:
                    return None
                if options & (options - 1) == 0:
                    forced |= options
            if not forced:
                break
            while forced:
                low = forced & -forced
                w = low.bit_length() - 1
                forced ^= low
                if not (chosen >> w) & 1:
                    chosen |= low
                    covered |= coverage[w]
        k = chosen.bit_count()
        uncovered = full & ~covered
        bound = k + (uncovered.bit_count() + denom - 1) // denom
        if first_hit:
            if bound > limit:
                return None
        else:
            if bound >= best:
                return None
        undecided = full & ~chosen & ~rejected
        if uncovered == 0:
            # any superset stays feasible; this is already a candidate
            if first_hit:
                return chosen if k == limit else None
            if k < best:
                best = k
            return None
        if undecided == 0:
            return None
        v_bit = undecided & -undecided
        v = v_bit.bit_length() - 1
        hit = search(chosen | v_bit, rejected, covered | coverage[v], limit, first_hit)
        if hit is not None:
            return hit
        return search(chosen, rejected | v_bit, covered, limit, first_hit)

    search(0, 0, 0, 0, False)
    witness = search(0, 0, 0, best, True)
    if witness is None:
        raise AssertionError("witness pass failed to reproduce the optimum")
    return best, witness


def domination_number(graph: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> InvariantResult:
    """Exact minimum size of a dominating set, with witness."""
    _require_cap(graph, limits, "exact domination")
    started = perf_counter()
    deadline = _Deadline(limits.budget_secs)
    if graph.n == 0:
        return InvariantResult("gamma", 0, VertexSet(0, 0), "branch-and-bound", 0.0)
    closed = tuple(graph.adj[v] | (1 << v) for v in range(graph.n))
    value, bits = _solve_min_cover(graph, deadline, closed, closed, graph.n)
    return InvariantResult(
        "gamma", value, VertexSet(graph.n, bits), "branch-and-bound", perf_counter() - started
    )


def total_domination_number(graph: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> InvariantResult:
    """Exact minimum size of a total dominating set, with witness.

    Undefined (raises :class:`UndefinedInvariant`) when the graph has an
    isolated vertex, since such a vertex can never acquire a neighbour.
    """
    _require_cap(graph, limits, "exact total domination")
    if graph.n == 0 or any(row == 0 for row in graph.adj):
        raise UndefinedInvariant("total domination is undefined with isolated vertices")
    started = perf_counter()
    deadline = _Deadline(limits.budget_secs)
    value, bits = _solve_min_cover(graph, deadline, graph.adj, graph.adj, graph.n)
    return InvariantResult(
        "gamma_t", value, VertexSet(graph.n, bits), "branch-and-bound", perf_counter() - started
    )


def two_packing_number(graph: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> InvariantResult:
    """Exact maximum size of a set with pairwise distances at least 3.

    Computed as a maximum independent set of the square graph.
    """
    _require_cap(graph, limits, "exact 2-packing")
    started = perf_counter()
    deadline = _Deadline(limits.budget_secs)
    value, bits = _solve_max_independent(square_graph(graph), deadline)
    return InvariantResult(
        "rho", value, VertexSet(graph.n, bits), "square+branch-and-bound", perf_counter() - started
    )


SOLVERS = {
    "i": independent_domination_number,
    "alpha": independence_number,
    "gamma": domination_number,
    "gamma_t": total_domination_number,
    "rho": two_packing_number,
}


def invariant(graph: Graph, name: str, limits: SolverLimits = DEFAULT_LIMITS) -> InvariantResult:
    """Dispatch an invariant computation by name."""
    try:
        solver = SOLVERS[name]
    except KeyError:
        raise ValueError(f"unknown invariant {name!r}; choose from {sorted(SOLVERS)}") from None
    return solver(graph, limits)


# ---------------------------------------------------------------------------
# Exhaustive enumeration of maximal independent sets
# ---------------------------------------------------------------------------


def enumerate_maximal_independent_sets(
    graph: Graph, limits: SolverLimits = DEFAULT_LIMITS
) -> Iterator[VertexSet]:
    """Yield every maximal independent set exactly once, in a fixed order.

    The order is lexicographic in the membership indicator read from vertex
    0 upward with "in" before "out", so runs are reproducible.
    """
    _require_cap(graph, limits, "maximal independent set enumeration")
    n = graph.n
    adj = graph.adj
    full = graph.full_bits
    if n == 0:
        yield VertexSet(0, 0)
        return
    closed = tuple(adj[v] | (1 << v) for v in range(n))
    deadline = _Deadline(limits.budget_secs)

    def rec(in_set: int, excluded: int, dominated: int) -> Iterator[int]:
        deadline.tick()
        state = _propagate_mis(adj, closed, full, in_set, excluded, dominated)
        if state is None:
            return
        in_set, excluded, dominated = state
        undecided = full & ~in_set & ~excluded
        if undecided == 0:
            if dominated == full:
                yield in_set
            return
        v_bit = undecided & -undecided
        v = v_bit.bit_length() - 1
        yield from rec(in_set | v_bit, excluded | (adj[v] & ~in_set), dominated | closed[v])
        yield from rec(in_set, excluded | v_bit, dominated)

    for bits in rec(0, 0, 0):
        yield VertexSet(n, bits)
