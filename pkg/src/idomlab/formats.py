"""Bit-exact serialization: graph formats, pattern syntax, certificates.

Formats are documented with examples in ``docs/formats.md``.  Certificates
are canonical JSON (UTF-8, sorted keys, integers only) so identical claims
diff cleanly across runs; every verified certificate re-verifies from its
own contents.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Optional

from .graph import Graph, VertexSet, build_graph
from .invariants import (
    DEFAULT_LIMITS,
    PREDICATES,
    CapExceeded,
    SolverLimits,
    invariant,
    is_maximal_independent,
)
from .labelling import Labelling, check_legal, weight

# ---------------------------------------------------------------------------
# Edge-list text: first line "n m", then m lines "u v"; '#' starts a comment
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text; parse errors carry the offending line number."""
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ValueError(f"line {lineno}: header counts must be nonnegative")
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise ValueError("empty edge-list input")
    n, m = header
    if len(edges) != m:
        raise ValueError(f"header announced {m} edges but {len(edges)} were given")
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise ValueError(f"bad edge list: {exc}") from None


def format_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.edge_count()}"]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6: standard 63+x byte encoding, upper-triangle column-major bit order
# ---------------------------------------------------------------------------


def graph6_encode(graph: Graph) -> str:
    n = graph.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    else:
        raise ValueError(f"graph6 encoding for n={n} is outside the supported range")
    bits: list[int] = []
    for j in range(1, n):
        column = graph.adj[j]
        for i in range(j):
            bits.append((column >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return head + "".join(chars)


def graph6_decode(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    if not data:
        raise ValueError("empty graph6 string")
    values = []
    for pos, ch in enumerate(data):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise ValueError(f"byte {pos}: {ch!r} is not a graph6 character")
        values.append(code - 63)
    if values[0] <= 62:
        n = values[0]
        body = values[1:]
    else:
        if len(values) < 4:
            raise ValueError("truncated graph6 order field")
        if values[1] > 62:
            raise ValueError("graph6 orders above 258047 are not supported")
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        body = values[4:]
    pair_count = n * (n - 1) // 2
    expected = (pair_count + 5) // 6
    if len(body) != expected:
        raise ValueError(
            f"graph6 length mismatch: order {n} needs {expected} data bytes, got {len(body)}"
        )
    bits = []
    for value in body:
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    if any(bits[pair_count:]):
        raise ValueError("graph6 padding bits must be zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def read_graph(text: str, fmt: str) -> Graph:
    """Parse a graph from text in the named format."""
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "graph6":
        return graph6_decode(text)
    raise ValueError(f"unknown graph format {fmt!r}; use 'edge-list' or 'graph6'")


def write_graph(graph: Graph, fmt: str) -> str:
    if fmt == "edge-list":
        return format_edge_list(graph)
    if fmt == "graph6":
        return graph6_encode(graph) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}; use 'edge-list' or 'graph6'")


# ---------------------------------------------------------------------------
# Compact pattern syntax: "(1,1,0,2,2,0)^2(3,3,3,0)"
# ---------------------------------------------------------------------------

_GROUP_RE = re.compile(r"\(([^()]*)\)(?:\^(\d+))?")


def parse_pattern(text: str, n: int, expect_length: Optional[int] = None) -> Labelling:
    """Expand pattern groups into a labelling over the clique order ``n``.

    Each group ``(c_1,...,c_k)^r`` contributes ``r`` copies of its labels;
    the exponent defaults to 1.  Tokens are class numbers or ``[n]``.
    """
    stripped = text.strip()
    tags: list[int] = []
    pos = 0
    while pos < len(stripped):
        match = _GROUP_RE.match(stripped, pos)
        if match is None:
            raise ValueError(f"pattern syntax error at position {pos} in {text!r}")
        body, exponent = match.group(1), match.group(2)
        repeat = int(exponent) if exponent else 1
        if repeat < 1:
            raise ValueError("pattern exponents must be at least 1")
        group_tags = []
        tokens = [] if not body.strip() else body.split(",")
        for token in tokens:
            token = token.strip()
            if token == "[n]":
                group_tags.append(n + 1)
                continue
            if not token.isdigit():
                raise ValueError(f"unknown pattern token {token!r}")
            value = int(token)
            if value > n:
                raise ValueError(f"class {value} exceeds the clique order {n}")
            group_tags.append(value)
        tags.extend(group_tags * repeat)
        pos = match.end()
    if expect_length is not None and len(tags) != expect_length:
        raise ValueError(
            f"pattern expands to {len(tags)} labels but {expect_length} were expected"
        )
    return Labelling(n, tuple(tags))


def print_pattern(labelling: Labelling) -> str:
    """Compact pattern text for a labelling; parsing it back is the identity.

    The longest run of repeats of the leading six labels is folded into one
    exponent group, matching the periodic constructions for paths and
    cycles; the remainder is printed as a single group.
    """
    symbols = labelling.label_strings()
    m = len(symbols)
    if m == 0:
        return "()"
    block = symbols[:6]
    repeats = 0
    if m >= 6:
        while (repeats + 1) * 6 <= m and symbols[repeats * 6 : (repeats + 1) * 6] == block:
            repeats += 1
    if repeats >= 1 and (repeats > 1 or m > 6):
        head = f"({','.join(block)})"
        if repeats > 1:
            head += f"^{repeats}"
        rest = symbols[repeats * 6 :]
        if rest:
            head += f"({','.join(rest)})"
        return head
    return f"({','.join(symbols)})"


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

CLAIM_KINDS = (
    "invariant_value",
    "upper_bound_witness",
    "lower_bound_formula",
    "legality",
    "refutation",
)

# maximizing invariants: the witness certifies "value is attainable from below"
_MAXIMIZING = {"alpha", "rho"}


@dataclass(frozen=True)
class Certificate:
    """A machine-checkable claim about a graph or a product of graphs."""

    claim: str
    subject: dict[str, Any]
    value: int
    verdict: str = "unchecked"
    invariant: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None
    bound_id: Optional[str] = None
    relation: Optional[str] = None
    threshold: Optional[int] = None
    labelling: Optional[dict[str, Any]] = None
    query: Optional[dict[str, Any]] = None
    paper_anchor: str = ""

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "claim": self.claim,
            "subject": self.subject,
            "value": self.value,
            "verdict": self.verdict,
            "paper_anchor": self.paper_anchor,
        }
        if self.invariant is not None:
            payload["invariant"] = self.invariant
        if self.witness is not None:
            payload["witness"] = list(self.witness)
        if self.bound_id is not None:
            payload["bound_id"] = self.bound_id
        if self.relation is not None:
            payload["relation"] = self.relation
        if self.threshold is not None:
            payload["threshold"] = self.threshold
        if self.labelling is not None:
            payload["labelling"] = self.labelling
        if self.query is not None:
            payload["query"] = self.query
        return payload


def write_certificate(certificate: Certificate) -> str:
    """Canonical one-line JSON: sorted keys, no floats, UTF-8."""
    return json.dumps(certificate.to_dict(), sort_keys=True, separators=(",", ":"))


def read_certificate(text: str) -> Certificate:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ValueError("certificate JSON must be an object")
    claim = payload.get("claim")
    if claim not in CLAIM_KINDS:
        raise ValueError(f"unknown certificate claim {claim!r}")
    if "subject" not in payload or "value" not in payload:
        raise ValueError("certificate must carry 'subject' and 'value'")
    if not isinstance(payload["value"], int):
        raise ValueError("certificate values must be integers")
    witness = payload.get("witness")
    return Certificate(
        claim=claim,
        subject=payload["subject"],
        value=payload["value"],
        verdict=payload.get("verdict", "unchecked"),
        invariant=payload.get("invariant"),
        witness=tuple(witness) if witness is not None else None,
        bound_id=payload.get("bound_id"),
        relation=payload.get("relation"),
        threshold=payload.get("threshold"),
        labelling=payload.get("labelling"),
        query=payload.get("query"),
        paper_anchor=payload.get("paper_anchor", ""),
    )


def resolve_subject(subject: dict[str, Any] | str):
    """Rebuild the graph (or product) a certificate subject describes.

    Subjects are ``{"family": spec}``, ``{"graph6": text}``,
    ``{"edge_list": text}``, or ``{"product": [subject, subject]}``; a bare
    string is shorthand for a family spec.  Products resolve to
    :class:`~idomlab.products.ProductGraph`.
    """
    from .families import build_family
    from .products import direct_product

    if isinstance(subject, str):
        return build_family(subject)
    if not isinstance(subject, dict) or len(subject) != 1:
        raise ValueError(f"malformed certificate subject: {subject!r}")
    key, value = next(iter(subject.items()))
    if key == "family":
        return build_family(value)
    if key == "graph6":
        return graph6_decode(value)
    if key == "edge_list":
        return parse_edge_list(value)
    if key == "product":
        if not isinstance(value, list) or len(value) != 2:
            raise ValueError("product subjects take exactly two factor subjects")
        left = resolve_subject(value[0])
        right = resolve_subject(value[1])
        left_graph = left.graph if hasattr(left, "graph") else left
        right_graph = right.graph if hasattr(right, "graph") else right
        return direct_product(left_graph, right_graph)
    raise ValueError(f"unknown certificate subject kind {key!r}")


def _subject_graph(subject) -> Graph:
    resolved = resolve_subject(subject)
    return resolved.graph if hasattr(resolved, "graph") else resolved


def verify_certificate(
    certificate: Certificate | str, limits: SolverLimits = DEFAULT_LIMITS
) -> str:
    """Re-check a claim from the certificate contents alone.

    Returns ``"verified"``, ``"refuted"``, or ``"unchecked"`` (the latter
    when full confirmation would need an exact solve above the cap).
    Witness checks are polynomial and run at any size.
    """
    if isinstance(certificate, str):
        certificate = read_certificate(certificate)
    cert = certificate

    if cert.claim in ("invariant_value", "upper_bound_witness"):
        if cert.invariant not in PREDICATES:
            raise ValueError(f"certificate names unknown invariant {cert.invariant!r}")
        graph = _subject_graph(cert.subject)
        if cert.witness is None:
            return "unchecked"
        try:
            witness = VertexSet.from_vertices(graph.n, cert.witness)
        except ValueError:
            return "refuted"
        if not PREDICATES[cert.invariant](graph, witness):
            return "refuted"
        if len(witness) != cert.value:
            return "refuted"
        if cert.claim == "upper_bound_witness":
            return "verified"
        # exact-value claims additionally re-solve when the cap allows
        try:
            result = invariant(graph, cert.invariant, limits)
        except CapExceeded:
            return "unchecked"
        return "verified" if result.value == cert.value else "refuted"

    if cert.claim == "legality":
        graph = _subject_graph(cert.subject)
        if cert.labelling is None:
            return "refuted"
        try:
            lab = Labelling.from_strings(int(cert.labelling["n"]), cert.labelling["labels"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed labelling payload: {exc}") from None
        if lab.size != graph.n:
            return "refuted"
        if not check_legal(graph, lab).legal:
            return "refuted"
        return "verified" if weight(lab) == cert.value else "refuted"

    if cert.claim == "lower_bound_formula":
        from .bounds import evaluate_pair_bound

        if cert.bound_id is None:
            return "refuted"
        subject = cert.subject
        if not (isinstance(subject, dict) and "product" in subject):
            raise ValueError("formula certificates need a product subject")
        left = _subject_graph(subject["product"][0])
        right = _subject_graph(subject["product"][1])
        try:
            report = evaluate_pair_bound(cert.bound_id, left, right, limits)[0]
        except CapExceeded:
            return "unchecked"
        if not report.applicable:
            return "refuted"
        return "verified" if report.rhs == cert.value else "refuted"

    if cert.claim == "refutation":
        if cert.witness is None or cert.threshold is None or cert.relation is None:
            return "refuted"
        subject = cert.subject
        if not (isinstance(subject, dict) and "product" in subject):
            raise ValueError("refutation certificates need a product subject")
        product = resolve_subject(subject)
        try:
            witness = VertexSet.from_vertices(product.graph.n, cert.witness)
        except ValueError:
            return "refuted"
        if not is_maximal_independent(product.graph, witness):
            return "refuted"
        if len(witness) != cert.value or cert.value >= cert.threshold:
            return "refuted"
        left = product.left
        right = product.right
        try:
            i_left = invariant(left, "i", limits).value
            i_right = invariant(right, "i", limits).value
        except CapExceeded:
            return "unchecked"
        if cert.relation == "product_of_factors":
            expected = i_left * i_right
        elif cert.relation == "min_of_factors":
            expected = min(i_left, i_right)
        else:
            raise ValueError(f"unknown refutation relation {cert.relation!r}")
        return "verified" if expected == cert.threshold else "refuted"

    raise ValueError(f"unknown certificate claim {cert.claim!r}")
