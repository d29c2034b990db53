"""Weak-partition labellings encoding maximal independent sets of G x K_n.

A labelling assigns each vertex of ``G`` one of the symbols
``0, 1, ..., n, [n]`` (internally ``[n]`` is the tag ``n + 1``).  The classes
``V_0, V_1, ..., V_n, V_[n]`` form a weak partition of ``V(G)``, and the
legal ones are exactly those that construct a maximal independent set of
``G x K_n``:

1. a vertex in class ``k >= 1`` may only neighbour vertices of ``V_0`` or
   its own class;
2. no vertex of a class ``k >= 1`` is isolated inside that class;
3. the ``[n]``-labelled vertices form an independent set;
4. every ``V_0`` vertex has an ``[n]``-labelled neighbour or neighbours in
   at least two distinct classes.

The weight ``n * |V_[n]| + sum_k |V_k|`` of a legal labelling is the size of
the constructed set, and its minimum over legal labellings equals
``i(G x K_n)``; :func:`minimize_weight` computes that minimum exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, VertexSet, _bits_of
from .invariants import (
    DEFAULT_LIMITS,
    SolverLimits,
    _Deadline,
    _require_cap,
)
from .products import ProductGraph

SPECIAL_TEXT = "[n]"


def special_tag(n: int) -> int:
    """Internal tag for the layer-filling label, rendered ``[n]``."""
    return n + 1


@dataclass(frozen=True)
class Labelling:
    """A weak partition of the vertices of some graph, as per-vertex tags.

    ``tags[v]`` is ``0``, a class ``1..n``, or ``n + 1`` for the label that
    puts the whole layer over ``v`` into the constructed set.
    """

    n: int
    tags: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("the complete factor must have order at least 2")
        for v, tag in enumerate(self.tags):
            if not 0 <= tag <= self.n + 1:
                raise ValueError(
                    f"malformed labelling: tag {tag} at vertex {v} exceeds the class range"
                )

    @property
    def size(self) -> int:
        return len(self.tags)

    def label_strings(self) -> tuple[str, ...]:
        special = special_tag(self.n)
        return tuple(SPECIAL_TEXT if t == special else str(t) for t in self.tags)

    @classmethod
    def from_strings(cls, n: int, labels: Sequence[str]) -> "Labelling":
        tags = []
        for text in labels:
            if text == SPECIAL_TEXT:
                tags.append(special_tag(n))
            else:
                try:
                    tags.append(int(text))
                except ValueError:
                    raise ValueError(f"unknown label token {text!r}") from None
        return cls(n, tuple(tags))

    def class_members(self, tag: int) -> tuple[int, ...]:
        return tuple(v for v, t in enumerate(self.tags) if t == tag)

    def __repr__(self) -> str:
        return f"Labelling(n={self.n}, {','.join(self.label_strings())})"


def weight(labelling: Labelling) -> int:
    """``n * |V_[n]| + sum of the nonzero class sizes``."""
    special = special_tag(labelling.n)
    total = 0
    for tag in labelling.tags:
        if tag == special:
            total += labelling.n
        elif tag > 0:
            total += 1
    return total


@dataclass(frozen=True)
class LegalityReport:
    """Outcome of the four legality conditions, with offending vertices."""

    legal: bool
    violations: tuple[tuple[int, tuple[int, ...]], ...]

    def describe(self) -> str:
        if self.legal:
            return "legal"
        parts = [
            f"condition {cond} violated at {list(vertices)}"
            for cond, vertices in self.violations
        ]
        return "; ".join(parts)


class IllegalLabelling(ValueError):
    """Raised when a construction requires a legal labelling."""

    def __init__(self, report: LegalityReport):
        super().__init__(report.describe())
        self.report = report


def check_legal(graph: Graph, labelling: Labelling) -> LegalityReport:
    """Evaluate the four legality conditions, reporting every violation."""
    if labelling.size != graph.n:
        raise ValueError("labelling does not cover the vertex set")
    n = labelling.n
    special = special_tag(n)
    tags = labelling.tags
    violations: list[tuple[int, tuple[int, ...]]] = []

    class_bits: dict[int, int] = {}
    for v, tag in enumerate(tags):
        class_bits[tag] = class_bits.get(tag, 0) | (1 << v)
    special_bits = class_bits.get(special, 0)
    zero_bits = class_bits.get(0, 0)

    # 1: class vertices may only neighbour their own class or V_0
    for v, tag in enumerate(tags):
        if 1 <= tag <= n:
            outside = graph.adj[v] & ~(zero_bits | class_bits[tag])
            for u in _bits_of(outside):
                if u > v and 1 <= tags[u] <= n:
                    violations.append((1, (v, u)))
                elif tags[u] == special:
                    violations.append((1, (v, u)))
    # 2: no vertex isolated inside its own class
    for v, tag in enumerate(tags):
        if 1 <= tag <= n and graph.adj[v] & class_bits[tag] == 0:
            violations.append((2, (v,)))
    # 3: the [n]-labelled vertices are independent
    for v in _bits_of(special_bits):
        conflict = graph.adj[v] & special_bits
        for u in _bits_of(conflict):
            if u > v:
                violations.append((3, (v, u)))
    # 4: V_0 vertices see [n] or two distinct classes
    for v in _bits_of(zero_bits):
        if graph.adj[v] & special_bits:
            continue
        seen_class = 0
        distinct = 0
        for u in _bits_of(graph.adj[v]):
            tag = tags[u]
            if 1 <= tag <= n and tag != seen_class:
                distinct += 1
                if distinct >= 2:
                    break
                seen_class = tag
        if distinct < 2:
            violations.append((4, (v,)))

    violations.sort()
    return LegalityReport(not violations, tuple(violations))


def to_independent_set(graph: Graph, labelling: Labelling) -> VertexSet:
    """Construct the maximal independent set of ``G x K_n`` a legal labelling encodes.

    Class ``k`` puts ``(v, k)`` in the set; the ``[n]`` label puts the whole
    layer ``(v, 1..n)`` in.  Product vertices use the fixed row-major
    encoding with ``K_n`` vertex ``k - 1`` for class ``k``.
    """
    report = check_legal(graph, labelling)
    if not report.legal:
        raise IllegalLabelling(report)
    n = labelling.n
    special = special_tag(n)
    bits = 0
    for v, tag in enumerate(labelling.tags):
        base = v * n
        if tag == special:
            bits |= ((1 << n) - 1) << base
        elif tag >= 1:
            bits |= 1 << (base + tag - 1)
    return VertexSet(graph.n * n, bits)


def from_independent_set(product: ProductGraph, independent: VertexSet) -> Labelling:
    """Recover the labelling generated by a maximal independent set of ``G x K_n``.

    Requires the right factor to be a complete graph of order at least 2.
    Any layer intersection of size outside ``{0, 1, n}`` is rejected: such a
    set cannot be maximal independent in a product with a complete factor.
    """
    right = product.right
    n = right.n
    if n < 2:
        raise ValueError("the complete factor must have order at least 2")
    if any(row != (product.right.full_bits ^ (1 << v)) for v, row in enumerate(right.adj)):
        raise ValueError("the right factor is not a complete graph")
    if independent.n != product.graph.n:
        raise ValueError("vertex set does not live in this product")

    layer_mask = (1 << n) - 1
    tags = []
    for g in range(product.left.n):
        chunk = (independent.bits >> (g * n)) & layer_mask
        count = chunk.bit_count()
        if count == 0:
            tags.append(0)
        elif count == 1:
            tags.append(chunk.bit_length())  # K_n vertex h gives class h + 1
        elif count == n:
            tags.append(special_tag(n))
        else:
            raise ValueError(
                f"layer over vertex {g} meets the set in {count} vertices; "
                f"only 0, 1 or {n} are possible for a maximal independent set"
            )

    from .invariants import is_maximal_independent

    if not is_maximal_independent(product.graph, independent):
        raise ValueError("the given set is not maximal independent in the product")
    return Labelling(n, tuple(tags))


# ---------------------------------------------------------------------------
# Exact weight minimization
# ---------------------------------------------------------------------------
#
# Branch-and-bound over per-vertex tags in index order.  Classes are
# interchangeable, so the search only ever opens class ``c + 1`` after class
# ``c`` has been used (first-occurrence canonical form); this collapses the
# n! label symmetry.  Conditions 1 and 3 are monotone and checked as edges
# complete; conditions 2 and 4 are only decidable once a vertex's closed
# neighbourhood is fully labelled, so they are checked at exactly that point.


def minimize_weight(
    graph: Graph,
    n: int,
    limits: SolverLimits = DEFAULT_LIMITS,
    allow_layer_label: bool = True,
) -> tuple[Labelling, int]:
    """Exact minimum weight over legal labellings, with an optimum labelling.

    The returned value equals ``i(G x K_n)``.  The labelling is the
    lexicographically least optimum in canonical (first-occurrence) class
    numbering.  ``allow_layer_label=False`` restricts the search to
    labellings avoiding the ``[n]`` label.
    """
    if n < 2:
        raise ValueError("the complete factor must have order at least 2")
    _require_cap(graph, limits, "exact labelling-weight minimization")
    m = graph.n
    deadline = _Deadline(limits.budget_secs)
    special = special_tag(n)

    if m == 0:
        return Labelling(n, ()), 0

    adj = graph.adj
    below = tuple(adj[v] & ((1 << v) - 1) for v in range(m))
    # vertices whose closed neighbourhood completes when v receives its tag
    finished_at: list[list[int]] = [[] for _ in range(m)]
    for u in range(m):
        last = u if adj[u] == 0 else max(u, adj[u].bit_length() - 1)
        finished_at[last].append(u)

    # start from a labelling that always exists: every non-isolated vertex in
    # class 1, isolated vertices labelled [n]
    start_tags = tuple(1 if adj[v] else special for v in range(m))
    best_weight = weight(Labelling(n, start_tags))

    tags = [0] * m

    def neighbourhood_ok(u: int) -> bool:
        """Conditions 2 and 4 for ``u`` once its closed neighbourhood is labelled."""
        tag = tags[u]
        if 1 <= tag <= n:
            for w in _bits_of(adj[u]):
                if tags[w] == tag:
                    return True
            return False
        if tag == 0:
            first_class = 0
            for w in _bits_of(adj[u]):
                t = tags[w]
                if t == special:
                    return True
                if 1 <= t <= n and t != first_class:
                    if first_class:
                        return True
                    first_class = t
            return False
        return True

    def search(v: int, used: int, partial: int, pinned: Optional[int]) -> Optional[tuple[int, ...]]:
        """DFS over tags of vertex ``v``; ``pinned`` switches to witness mode."""
        nonlocal best_weight
        deadline.tick()
        if v == m:
            if pinned is not None:
                return tuple(tags) if partial == pinned else None
            if partial < best_weight:
                best_weight = partial
            return None

        limit_weight = best_weight if pinned is None else pinned
        choices: list[tuple[int, int]] = [(0, 0)]
        for c in range(1, min(used + 1, n) + 1):
            choices.append((c, 1))
        if allow_layer_label:
            choices.append((special, n))

        for tag, cost in choices:
            new_partial = partial + cost
            if pinned is None:
                if new_partial >= limit_weight:
                    continue
            elif new_partial > limit_weight:
                continue
            # monotone legality against already-labelled neighbours
            ok = True
            if tag == 0:
                pass
            elif tag == special:
                for w in _bits_of(below[v]):
                    if tags[w] != 0:
                        ok = False
                        break
            else:
                for w in _bits_of(below[v]):
                    tw = tags[w]
                    if tw != 0 and tw != tag:
                        ok = False
                        break
            if not ok:
                continue
            tags[v] = tag
            # closed neighbourhoods completed at v
            for u in finished_at[v]:
                if not neighbourhood_ok(u):
                    ok = False
                    break
            if ok:
                next_used = used if tag == 0 or tag == special else max(used, tag)
                hit = search(v + 1, next_used, new_partial, pinned)
                if hit is not None:
                    tags[v] = 0
                    return hit
            tags[v] = 0
        return None

    search(0, 0, 0, None)
    witness = search(0, 0, 0, best_weight)
    if witness is None:
        raise AssertionError("witness pass failed to reproduce the optimal labelling")
    return Labelling(n, witness), best_weight

# ---------------------------------------------------------------------------
# Closed forms and constructions for paths and cycles
# ---------------------------------------------------------------------------

_CYCLE_BLOCK = (1, 1, 0, 2, 2, 0)


def formula_value(family: str, m: int, n: int) -> int:
    """Closed-form ``i(P_m x K_n)`` or ``i(C_m x K_n)``.

    For ``n = 2`` the value comes from the product's decomposition:
    ``P_m x K_2`` is two disjoint copies of ``P_m``, and ``C_m x K_2`` is
    ``C_{2m}`` for odd ``m`` but two copies of ``C_m`` for even ``m``.
    """
    if m < 3:
        raise ValueError(f"order {m} below the stated range (m >= 3)")
    if n < 2:
        raise ValueError("the complete factor must have order at least 2")
    if family == "path":
        if n == 2:
            return 2 * -(-m // 3)
        return -(-(2 * m + 2) // 3)
    if family == "cycle":
        if n == 2:
            if m % 2 == 1:
                return -(-(2 * m) // 3)
            return 2 * -(-m // 3)
        if m <= 5:
            return m
        return -(-(2 * m) // 3)
    raise ValueError(f"unknown family {family!r}; use 'path' or 'cycle'")


def _cycle_pattern(m: int) -> tuple[int, ...]:
    if 3 <= m <= 5:
        return (1,) * m
    r, p = divmod(m, 6)
    if p == 0:
        return _CYCLE_BLOCK * r
    if p == 1:
        return _CYCLE_BLOCK * (r - 1) + (1, 1, 0, 2, 2, 2, 0)
    if p == 2:
        return _CYCLE_BLOCK * (r - 1) + (1, 1, 0, 2, 2, 2, 2, 0)
    if p == 3:
        return _CYCLE_BLOCK * r + (3, 3, 0)
    if p == 4:
        return _CYCLE_BLOCK * r + (3, 3, 3, 0)
    return _CYCLE_BLOCK * r + (3, 3, 3, 3, 0)


def _path_pattern(m: int) -> tuple[int, ...]:
    r, p = divmod(m, 6)
    if p == 0:
        return _CYCLE_BLOCK * (r - 1) + (1, 1, 0, 2, 2, 2)
    if p == 1:
        return _CYCLE_BLOCK * (r - 1) + (1, 1, 1, 0, 2, 2, 2)
    if p == 2:
        return _CYCLE_BLOCK * r + (1, 1)
    if p == 3:
        return _CYCLE_BLOCK * r + (1, 1, 1)
    if p == 4:
        return _CYCLE_BLOCK * r + (1, 1, 1, 1)
    return _CYCLE_BLOCK * r + (1, 1, 0, 2, 2)


def pattern_labelling(family: str, m: int, n: int = 3) -> Labelling:
    """The periodic optimum labelling for a path or cycle of order ``m``.

    Legal for every ``n >= 3`` (only classes 1..3 appear) with weight equal
    to :func:`formula_value`.
    """
    if n < 3:
        raise ValueError("pattern constructions need a complete factor of order >= 3")
    if family == "cycle":
        if m < 3:
            raise ValueError("cycles need m >= 3")
        return Labelling(n, _cycle_pattern(m))
    if family == "path":
        if m < 3:
            raise ValueError("paths need m >= 3 here")
        return Labelling(n, _path_pattern(m))
    raise ValueError(f"unknown family {family!r}; use 'path' or 'cycle'")
