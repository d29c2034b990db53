"""Direct (tensor) products of graphs with layer and projection structure.

The product of ``G`` and ``H`` lives on ``V(G) x V(H)`` with
``(g1,h1)(g2,h2)`` an edge exactly when ``g1g2`` and ``h1h2`` are edges of
the factors.  Product vertices are encoded row-major as ``g * n(H) + h``;
that encoding is fixed so witness sets decode identically everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, _bits_of

MAX_PRODUCT_VERTICES = 100_000


@dataclass(frozen=True)
class ProductGraph:
    """A direct product together with its factor metadata.

    The flattened product is the ``graph`` attribute; ``left`` and ``right``
    are retained so layer and projection queries keep their coordinates.
    """

    graph: Graph
    left: Graph
    right: Graph

    @property
    def nG(self) -> int:
        return self.left.n

    @property
    def nH(self) -> int:
        return self.right.n

    def encode(self, g: int, h: int) -> int:
        if not (0 <= g < self.left.n and 0 <= h < self.right.n):
            raise ValueError(f"coordinate ({g},{h}) outside the factor ranges")
        return g * self.right.n + h

    def decode(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.graph.n:
            raise ValueError(f"product vertex {v} out of range")
        return divmod(v, self.right.n)

    def __repr__(self) -> str:
        return f"ProductGraph({self.left!r} x {self.right!r})"


def direct_product(left: Graph, right: Graph, max_vertices: int = MAX_PRODUCT_VERTICES) -> ProductGraph:
    """Construct the direct product of two graphs.

    Rejects products whose vertex count would exceed ``max_vertices``.
    """
    total = left.n * right.n
    if total > max_vertices:
        raise ValueError(
            f"product would have {total} vertices, above the limit of {max_vertices}"
        )
    nh = right.n
    rows = [0] * total
    # Row of (g, h) is the union over g' ~ g of N_H(h) shifted into g's block.
    for g in range(left.n):
        base = g * nh
        for h in range(nh):
            row = 0
            neighbours_h = right.adj[h]
            for g2 in _bits_of(left.adj[g]):
                row |= neighbours_h << (g2 * nh)
            rows[base + h] = row
    labels = None
    if left.labels is not None and right.labels is not None:
        labels = tuple(
            f"({left.labels[g]},{right.labels[h]})"
            for g in range(left.n)
            for h in range(nh)
        )
    return ProductGraph(Graph(total, tuple(rows), labels), left, right)


def layer(product: ProductGraph, side: str, index: int) -> VertexSet:
    """A fibre of the product over one fixed coordinate.

    ``side="H"`` gives the H-layer over a vertex ``index`` of the left
    factor (all ``(index, h)``); ``side="G"`` gives the G-layer over a
    vertex ``index`` of the right factor (all ``(g, index)``).
    """
    nh = product.right.n
    if side == "H":
        if not 0 <= index < product.left.n:
            raise ValueError(f"no left-factor vertex {index}")
        bits = ((1 << nh) - 1) << (index * nh)
    elif side == "G":
        if not 0 <= index < nh:
            raise ValueError(f"no right-factor vertex {index}")
        bits = 0
        for g in range(product.left.n):
            bits |= 1 << (g * nh + index)
    else:
        raise ValueError('side must be "G" or "H"')
    return VertexSet(product.graph.n, bits)


def project(product: ProductGraph, side: str, subset: VertexSet) -> VertexSet:
    """Coordinate image of a product vertex subset in the chosen factor."""
    if subset.n != product.graph.n:
        raise ValueError("subset does not live in this product")
    nh = product.right.n
    bits = 0
    if side == "G":
        for v in subset:
            bits |= 1 << (v // nh)
        return VertexSet(product.left.n, bits)
    if side == "H":
        for v in subset:
            bits |= 1 << (v % nh)
        return VertexSet(product.right.n, bits)
    raise ValueError('side must be "G" or "H"')


def layer_intersection(product: ProductGraph, subset: VertexSet, g: int) -> VertexSet:
    """``subset`` restricted to the H-layer over ``g``."""
    return subset.intersection(layer(product, "H", g))
