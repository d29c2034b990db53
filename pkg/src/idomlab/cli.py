"""Command-line surface: compute, product, verify, reproduce, search, export.

Exit codes are a stable contract: 0 success/verified, 1 refutation or
mismatch, 2 usage error, 3 budget or cap exceeded.  Diagnostics go to
stderr; stdout carries only the requested payload, and identical
configurations produce byte-identical JSON output regardless of worker
count (results are emitted in input order, never completion order).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from random import Random
from time import perf_counter
from typing import Any, Iterable, Optional, Sequence

from .bounds import (
    PAIR_BOUNDS,
    bipartite_bound,
    clawfree_bound,
    degree_ratio_bound,
    evaluate_pair_bound,
    k2_sandwich,
    packing_total_bound,
)
from .families import (
    build_family,
    build_family_with_witness,
    counterexample_product,
    extreme_product,
    make_complete,
    make_complete_bipartite,
    parse_family,
)
from .formats import (
    Certificate,
    graph6_decode,
    parse_edge_list,
    read_certificate,
    verify_certificate,
    write_certificate,
    write_graph,
)
from .graph import Graph
from .invariants import (
    BudgetExhausted,
    CapExceeded,
    SolverLimits,
    independent_domination_number,
    invariant as solve_invariant,
    is_maximal_independent,
    total_domination_number,
)
from .labelling import minimize_weight, pattern_labelling, formula_value, to_independent_set, weight
from .products import direct_product
from .smallgraphs import random_connected_graph, random_isolate_free_graph

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ENV_CAP = "IDOMLAB_CAP"


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by the subcommands."""

    subcommand: str
    graph_spec: Optional[str] = None
    graph_file: Optional[str] = None
    graph_format: str = "edge-list"
    product_spec: Optional[str] = None
    invariant: str = "i"
    n: Optional[int] = None
    k: Optional[int] = None
    workers: int = 1
    budget_secs: Optional[float] = None
    cap: int = 40
    out: str = "json"

    @property
    def limits(self) -> SolverLimits:
        return SolverLimits(vertex_cap=self.cap, budget_secs=self.budget_secs)


def _default_cap() -> int:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return 40
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"{ENV_CAP} must be an integer, got {raw!r}")
    if value <= 0:
        raise SystemExit(f"{ENV_CAP} must be positive")
    return value


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cap = args.cap if getattr(args, "cap", None) is not None else _default_cap()
    if cap <= 0:
        raise SystemExit("--cap must be positive")
    workers = getattr(args, "workers", 1) or 1
    if workers < 1:
        raise SystemExit("--workers must be at least 1")
    budget = getattr(args, "budget_secs", None)
    if budget is not None and budget <= 0:
        raise SystemExit("--budget-secs must be positive")
    return RunConfig(
        subcommand=args.subcommand,
        graph_spec=getattr(args, "graph", None),
        graph_file=getattr(args, "graph_file", None),
        graph_format=getattr(args, "format", "edge-list"),
        product_spec=getattr(args, "product", None),
        invariant=getattr(args, "invariant", "i"),
        n=getattr(args, "n", None),
        k=getattr(args, "k", None),
        workers=workers,
        budget_secs=budget,
        cap=cap,
        out=getattr(args, "out", "json"),
    )


# ---------------------------------------------------------------------------
# Output plumbing
# ---------------------------------------------------------------------------


def _emit_rows(rows: list[dict[str, Any]], out: str) -> None:
    if out == "json":
        for row in rows:
            sys.stdout.write(json.dumps(row, sort_keys=True, separators=(",", ":")) + "\n")
        return
    if out == "csv":
        if not rows:
            return
        columns = list(rows[0].keys())
        sys.stdout.write(",".join(columns) + "\n")
        for row in rows:
            sys.stdout.write(
                ",".join(_csv_cell(row.get(col, "")) for col in columns) + "\n"
            )
        return
    if out == "human":
        for row in rows:
            sys.stdout.write(
                "  ".join(f"{key}={_human_cell(value)}" for key, value in row.items()) + "\n"
            )
        return
    raise SystemExit(f"unknown output mode {out!r}")


def _csv_cell(value: Any) -> str:
    text = _human_cell(value)
    if "," in text or '"' in text or "\n" in text:
        return '"' + text.replace('"', '""') + '"'
    return text


def _human_cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def _emit_certificates(certs: list[Certificate], out: str) -> None:
    if out == "json":
        for cert in certs:
            sys.stdout.write(write_certificate(cert) + "\n")
        return
    rows = []
    for cert in certs:
        row: dict[str, Any] = {
            "claim": cert.claim,
            "subject": cert.subject,
            "invariant": cert.invariant or "",
            "value": cert.value,
            "verdict": cert.verdict,
        }
        if cert.witness is not None:
            row["witness"] = list(cert.witness)
        if cert.query is not None:
            row["query"] = cert.query
        rows.append(row)
    _emit_rows(rows, out)


def _note(message: str) -> None:
    sys.stderr.write(message + "\n")


# ---------------------------------------------------------------------------
# Graph loading
# ---------------------------------------------------------------------------


def _load_graphs_from_file(path: str, fmt: str) -> list[tuple[Graph, dict[str, Any]]]:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if fmt == "graph6":
        loaded = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            loaded.append((graph6_decode(line), {"graph6": line}))
        if not loaded:
            raise ValueError(f"no graph6 lines in {path}")
        return loaded
    if fmt == "edge-list":
        return [(parse_edge_list(text), {"edge_list": text})]
    raise ValueError(f"unknown graph format {fmt!r}")


def _load_input_graph(config: RunConfig) -> tuple[Graph, dict[str, Any]]:
    if config.graph_spec is not None and config.graph_file is not None:
        raise SystemExit("give either --graph or --graph-file, not both")
    if config.graph_spec is not None:
        spec = parse_family(config.graph_spec)  # validates at parse time
        return build_family(spec), {"family": str(spec)}
    if config.graph_file is not None:
        loaded = _load_graphs_from_file(config.graph_file, config.graph_format)
        if len(loaded) != 1:
            raise SystemExit(
                "the input file holds several graphs; this subcommand takes exactly one"
            )
        return loaded[0]
    raise SystemExit("an input graph is required (--graph or --graph-file)")


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _cmd_compute(config: RunConfig) -> int:
    graph, subject = _load_input_graph(config)
    limits = config.limits
    certs: list[Certificate] = []
    status = EXIT_OK

    try:
        if config.product_spec is None:
            result = solve_invariant(graph, config.invariant, limits)
            cert = Certificate(
                claim="invariant_value",
                invariant=config.invariant,
                subject=subject,
                value=result.value,
                witness=result.witness.members(),
                verdict="verified",
            )
            certs.append(_attach_query(cert, config))
        else:
            product_spec = parse_family(config.product_spec)
            right = build_family(product_spec)
            full_subject = {"product": [subject, {"family": str(product_spec)}]}
            if config.invariant == "i" and product_spec.kind == "complete":
                order = product_spec.params[0]
                if order < 2:
                    raise SystemExit("the complete factor must have order at least 2")
                labelling, value = minimize_weight(graph, order, limits)
                witness = to_independent_set(graph, labelling)
                product = direct_product(graph, right)
                if product.graph.n <= limits.vertex_cap:
                    cross = independent_domination_number(product.graph, limits)
                    if cross.value != value:
                        raise AssertionError(
                            f"weight minimizer ({value}) and product solver "
                            f"({cross.value}) disagree"
                        )
                    _note(f"cross-check against the product solver agreed: {value}")
                cert = Certificate(
                    claim="invariant_value",
                    invariant="i",
                    subject=full_subject,
                    value=value,
                    witness=witness.members(),
                    verdict="verified",
                )
            else:
                product = direct_product(graph, right)
                result = solve_invariant(product.graph, config.invariant, limits)
                cert = Certificate(
                    claim="invariant_value",
                    invariant=config.invariant,
                    subject=full_subject,
                    value=result.value,
                    witness=result.witness.members(),
                    verdict="verified",
                )
            certs.append(_attach_query(cert, config))
    except (CapExceeded, BudgetExhausted) as exc:
        _note(f"aborted: {exc}")
        certs.append(
            Certificate(
                claim="invariant_value",
                invariant=config.invariant,
                subject=subject if config.product_spec is None else full_subject,
                value=-1,
                verdict="unchecked",
            )
        )
        status = EXIT_BUDGET

    _emit_certificates(certs, config.out)
    return status


def _attach_query(cert: Certificate, config: RunConfig) -> Certificate:
    if config.k is None:
        return cert
    answer = cert.value <= config.k
    query = {"k": config.k, "satisfied": answer}
    _note(f"decision: value {cert.value} <= {config.k} is {str(answer).lower()}")
    return Certificate(
        claim=cert.claim,
        subject=cert.subject,
        value=cert.value,
        verdict=cert.verdict,
        invariant=cert.invariant,
        witness=cert.witness,
        query=query,
    )


# ---------------------------------------------------------------------------
# product / export
# ---------------------------------------------------------------------------


def _cmd_export(config: RunConfig, out_file: Optional[str], fmt: str) -> int:
    graph, subject = _load_input_graph(config)
    meta: dict[str, Any] = dict(subject) if "family" in subject else {}
    if config.product_spec is not None:
        right = build_family(config.product_spec)
        product = direct_product(graph, right)
        meta = {
            "nG": product.left.n,
            "nH": product.right.n,
            "encoding": "row-major",
        }
        graph = product.graph
    if graph.labels is not None:
        meta["labels"] = list(graph.labels)
    payload = write_graph(graph, fmt)
    if out_file is None:
        sys.stdout.write(payload)
        if meta:
            _note("metadata sidecar omitted on stdout; use --out-file to write it")
        return EXIT_OK
    extension = "g6" if fmt == "graph6" else "edges"
    graph_path = f"{out_file}.{extension}"
    with open(graph_path, "w", encoding="utf-8") as handle:
        handle.write(payload)
    sidecar_path = f"{out_file}.meta.json"
    with open(sidecar_path, "w", encoding="utf-8") as handle:
        json.dump(meta, handle, sort_keys=True, separators=(",", ":"))
        handle.write("\n")
    _note(f"wrote {graph_path} and {sidecar_path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(config: RunConfig, path: str) -> int:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    lines = [line for line in text.splitlines() if line.strip()]
    certificates = []
    if not lines:
        _note("empty bundle: zero claims")
        return EXIT_OK
    if lines[0].lstrip().startswith("["):
        for item in json.loads(text):
            certificates.append(read_certificate(json.dumps(item)))
    else:
        certificates = [read_certificate(line) for line in lines]

    rows = []
    refuted = 0
    unchecked = 0
    for index, cert in enumerate(certificates):
        verdict = verify_certificate(cert, config.limits)
        if verdict == "refuted":
            refuted += 1
        elif verdict != "verified":
            unchecked += 1
        rows.append(
            {
                "index": index,
                "claim": cert.claim,
                "subject": cert.subject,
                "value": cert.value,
                "verdict": verdict,
            }
        )
    _emit_rows(rows, config.out)
    _note(
        f"{len(certificates)} claims: {len(certificates) - refuted - unchecked} verified, "
        f"{refuted} refuted, {unchecked} unchecked"
    )
    if refuted:
        return EXIT_MISMATCH
    if unchecked:
        return EXIT_BUDGET
    return EXIT_OK


# ---------------------------------------------------------------------------
# reproduce
# ---------------------------------------------------------------------------

TABLE1_EXPECTED = {
    "path": (3, 4, 4, 5, 6, 6, 7, 8, 8, 9),
    "cycle": (3, 4, 5, 4, 5, 6, 6, 7, 8, 8),
}

REPRODUCE_TARGETS = ("table1", "prop34", "thm32", "bounds4", "conj-refutation", "thm12")


def _family_graph(kind: str, m: int) -> Graph:
    return build_family(f"{kind}:{m}")


def _reproduce_table1(config: RunConfig) -> tuple[list[dict[str, Any]], int]:
    limits = SolverLimits(vertex_cap=max(config.cap, 36), budget_secs=config.budget_secs)
    rows = []
    failures = 0
    k3 = make_complete(3)
    for kind in ("path", "cycle"):
        for offset, m in enumerate(range(3, 13)):
            expected = TABLE1_EXPECTED[kind][offset]
            graph = _family_graph(kind, m)
            via_product = independent_domination_number(
                direct_product(graph, k3).graph, limits
            ).value
            via_weight = minimize_weight(graph, 3, limits)[1]
            ok = via_product == expected and via_weight == expected
            failures += 0 if ok else 1
            rows.append(
                {
                    "target": "table1",
                    "family": kind,
                    "m": m,
                    "expected": expected,
                    "product_solver": via_product,
                    "weight_minimizer": via_weight,
                    "status": "ok" if ok else "MISMATCH",
                }
            )
    return rows, failures


def _reproduce_prop34(config: RunConfig) -> tuple[list[dict[str, Any]], int]:
    limits = SolverLimits(vertex_cap=max(config.cap, 48), budget_secs=config.budget_secs)
    rows = []
    failures = 0
    for kind in ("path", "cycle"):
        for n in (2, 3, 4):
            kn = make_complete(n)
            for m in range(3, 13):
                graph = _family_graph(kind, m)
                formula = formula_value(kind, m, n)
                exact = independent_domination_number(
                    direct_product(graph, kn).graph, limits
                ).value
                ok = formula == exact
                failures += 0 if ok else 1
                rows.append(
                    {
                        "target": "prop34",
                        "check": "formula-vs-exact",
                        "family": kind,
                        "m": m,
                        "n": n,
                        "formula": formula,
                        "exact": exact,
                        "status": "ok" if ok else "MISMATCH",
                    }
                )
    for kind in ("path", "cycle"):
        for m in range(3, 41):
            graph = _family_graph(kind, m)
            labelling = pattern_labelling(kind, m, 3)
            from .labelling import check_legal

            legal = check_legal(graph, labelling).legal
            expected = formula_value(kind, m, 3)
            got = weight(labelling)
            ok = legal and got == expected
            failures += 0 if ok else 1
            rows.append(
                {
                    "target": "prop34",
                    "check": "pattern-construction",
                    "family": kind,
                    "m": m,
                    "n": 3,
                    "formula": expected,
                    "pattern_weight": got,
                    "legal": legal,
                    "status": "ok" if ok else "MISMATCH",
                }
            )
    return rows, failures


def _reproduce_thm32(config: RunConfig) -> tuple[list[dict[str, Any]], int]:
    limits = SolverLimits(vertex_cap=max(config.cap, 20), budget_secs=config.budget_secs)
    rng = Random(320)
    k2 = make_complete(2)
    checked = 0
    violations = 0
    for _ in range(500):
        n = rng.randint(2, 10)
        p = rng.uniform(0.15, 0.9)
        graph = random_isolate_free_graph(rng, n, p)
        lower = total_domination_number(graph, limits).value
        i_graph = independent_domination_number(graph, limits).value
        middle = independent_domination_number(direct_product(graph, k2).graph, limits).value
        upper = min(2 * i_graph, graph.n)
        checked += 1
        if not lower <= middle <= upper:
            violations += 1
    star = k2_sandwich(make_complete_bipartite(1, 4), limits)
    star_tight = star.lhs == int(star.detail["i_product_k2"]) == 2
    kbip = k2_sandwich(make_complete_bipartite(3, 3), limits)
    kbip_tight = int(kbip.detail["i_product_k2"]) == kbip.rhs == 6
    rows = [
        {
            "target": "thm32",
            "check": "sandwich-random",
            "graphs": checked,
            "violations": violations,
            "status": "ok" if violations == 0 else "MISMATCH",
        },
        {
            "target": "thm32",
            "check": "lower-tight-star",
            "status": "ok" if star_tight else "MISMATCH",
        },
        {
            "target": "thm32",
            "check": "upper-tight-kbip",
            "status": "ok" if kbip_tight else "MISMATCH",
        },
    ]
    failures = (0 if violations == 0 else 1) + (0 if star_tight else 1) + (0 if kbip_tight else 1)
    return rows, failures


def _sample_bound_pair(rng: Random) -> tuple[Graph, Graph]:
    """A random pair with connected factors and product order at most 36."""
    while True:
        structured = rng.random() < 0.3
        graphs = []
        for _ in range(2):
            if structured and rng.random() < 0.5:
                kind = rng.choice(("path", "cycle", "complete"))
                low = 3 if kind == "cycle" else 2
                graphs.append(build_family(f"{kind}:{rng.randint(low, 6)}"))
            else:
                graphs.append(random_connected_graph(rng, rng.randint(2, 6), rng.uniform(0.3, 0.9)))
        left, right = graphs
        if left.n * right.n <= 36:
            return left, right


_BOUNDS4 = (packing_total_bound, degree_ratio_bound, bipartite_bound, clawfree_bound)


def _bounds4_task(payload: tuple[int, tuple[int, ...], tuple[int, ...]]) -> tuple[int, int, int]:
    cap, left_rows, right_rows = payload
    limits = SolverLimits(vertex_cap=cap)
    left = Graph(len(left_rows), left_rows)
    right = Graph(len(right_rows), right_rows)
    applicable = 0
    violations = 0
    for bound in _BOUNDS4:
        report = bound(left, right, limits)
        if report.applicable:
            applicable += 1
            if not report.holds:
                violations += 1
    return applicable, violations, left.n * right.n


def _reproduce_bounds4(config: RunConfig) -> tuple[list[dict[str, Any]], int]:
    cap = max(config.cap, 36)
    rng = Random(44)
    payloads = []
    for _ in range(500):
        left, right = _sample_bound_pair(rng)
        payloads.append((cap, left.adj, right.adj))
    results = _map_tasks(_bounds4_task, payloads, config.workers)
    applicable = sum(r[0] for r in results)
    violations = sum(r[1] for r in results)
    rows = [
        {
            "target": "bounds4",
            "pairs": len(payloads),
            "applicable_evaluations": applicable,
            "violations": violations,
            "status": "ok" if violations == 0 else "MISMATCH",
        }
    ]
    return rows, 0 if violations == 0 else 1

def _reproduce_conj_refutation(config: RunConfig) -> tuple[list[dict[str, Any]], int]:
    limits = SolverLimits(vertex_cap=max(config.cap, 40), budget_secs=config.budget_secs)
    rows = []
    failures = 0

    x3 = build_family("X:3")
    h3 = build_family("cocktail:3")
    i_x3 = independent_domination_number(x3, limits).value
    i_h3 = independent_domination_number(h3, limits).value
    product3, witness3 = counterexample_product(3, 3)
    witness_ok = is_maximal_independent(product3.graph, witness3)
    strict = len(witness3) < i_x3 * i_h3
    ok = i_x3 == 5 and i_h3 == 2 and witness_ok and strict
    failures += 0 if ok else 1
    rows.append(
        {
            "target": "conj-refutation",
            "pair": "X:3 x cocktail:3",
            "i_left": i_x3,
            "i_right": i_h3,
            "witness_size": len(witness3),
            "witness_verified": witness_ok,
            "product_bound_below_factor_product": strict,
            "status": "ok" if ok else "MISMATCH",
        }
    )

    x7 = build_family("X:7")
    i_x7 = independent_domination_number(x7, limits).value
    product7, witness7 = counterexample_product(7, 3)
    witness_ok7 = is_maximal_independent(product7.graph, witness7)
    below_factor = len(witness7) < i_x7
    ok7 = i_x7 == 9 and witness_ok7 and below_factor
    failures += 0 if ok7 else 1
    rows.append(
        {
            "target": "conj-refutation",
            "pair": "X:7 x cocktail:3",
            "i_left": i_x7,
            "witness_size": len(witness7),
            "witness_verified": witness_ok7,
            "product_bound_below_left_factor": below_factor,
            "status": "ok" if ok7 else "MISMATCH",
        }
    )
    return rows, failures


def _reproduce_thm12(config: RunConfig) -> tuple[list[dict[str, Any]], int]:
    n = config.n if config.n is not None else 11
    if n < 1:
        raise SystemExit("--n must be positive")
    rows = []
    failures = 0
    limits = SolverLimits(vertex_cap=max(config.cap, 34), budget_secs=config.budget_secs)

    product, witness = extreme_product(n)
    witness_ok = is_maximal_independent(product.graph, witness)
    row: dict[str, Any] = {
        "target": "thm12",
        "n": n,
        "product_order": product.graph.n,
        "witness_size": len(witness),
        "witness_verified": witness_ok,
    }
    for side, spec in (("left", f"Gn:{n}"), ("right", f"Hn:{n}")):
        graph, factor_witness = build_family_with_witness(spec)
        factor_ok = factor_witness is not None and is_maximal_independent(graph, factor_witness)
        row[f"{side}_witness_size"] = len(factor_witness) if factor_witness else None
        row[f"{side}_witness_verified"] = factor_ok
        witness_ok = witness_ok and factor_ok
        if n <= 4:
            exact = independent_domination_number(graph, limits).value
            row[f"{side}_exact_i"] = exact
            if exact != n + 2:
                failures += 1
    separation = len(witness) < n + 2
    row["product_bound_below_factor_bound"] = separation
    ok = witness_ok and (separation or n <= 10)
    failures += 0 if ok else 1
    row["status"] = "ok" if ok and failures == 0 else "MISMATCH"
    rows.append(row)
    return rows, failures


def _reproduce(config: RunConfig, target: str) -> int:
    handlers = {
        "table1": _reproduce_table1,
        "prop34": _reproduce_prop34,
        "thm32": _reproduce_thm32,
        "bounds4": _reproduce_bounds4,
        "conj-refutation": _reproduce_conj_refutation,
        "thm12": _reproduce_thm12,
    }
    started = perf_counter()
    try:
        rows, failures = handlers[target](config)
    except (CapExceeded, BudgetExhausted) as exc:
        _note(f"aborted: {exc}")
        return EXIT_BUDGET
    _emit_rows(rows, config.out)
    checked = len(rows)
    _note(
        f"{target}: {checked - failures}/{checked} rows ok in {perf_counter() - started:.1f}s"
    )
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

_SEARCH_BOUND_IDS = tuple(sorted(PAIR_BOUNDS)) + ("factor-product-lower", "factor-min-lower")


def _search_task(
    payload: tuple[str, int, Optional[float], tuple[int, ...], tuple[int, ...]]
) -> Optional[dict[str, Any]]:
    bound_id, cap, budget, left_rows, right_rows = payload
    limits = SolverLimits(vertex_cap=cap, budget_secs=budget)
    left = Graph(len(left_rows), left_rows)
    right = Graph(len(right_rows), right_rows)
    try:
        reports = evaluate_pair_bound(bound_id, left, right, limits)
    except (CapExceeded, BudgetExhausted):
        return {"error": "budget"}
    report = reports[0]
    return {
        "violation": report.applicable and report.holds is False,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "verdict": report.verdict(),
    }


def _cmd_search(
    config: RunConfig, bound_id: str, pairs_file: Optional[str], report_all: bool
) -> int:
    if bound_id not in _SEARCH_BOUND_IDS:
        raise SystemExit(
            f"unknown bound id {bound_id!r}; choose from {', '.join(_SEARCH_BOUND_IDS)}"
        )
    pairs: list[tuple[str, str, Graph, Graph]] = []
    if pairs_file is not None:
        with open(pairs_file, "r", encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise SystemExit(
                        f"{pairs_file}:{lineno}: expected two family specs per line"
                    )
                pairs.append(
                    (parts[0], parts[1], build_family(parts[0]), build_family(parts[1]))
                )
    elif config.graph_file is not None:
        corpus = _load_graphs_from_file(config.graph_file, config.graph_format)
        for i, (left, left_subject) in enumerate(corpus):
            for j in range(i, len(corpus)):
                right, right_subject = corpus[j]
                name_left = left_subject.get("graph6", f"#{i}")
                name_right = corpus[j][1].get("graph6", f"#{j}")
                pairs.append((name_left, name_right, left, right))
    else:
        raise SystemExit("search needs --graph-file (graph6 corpus) or --pairs-file")

    deadline = None
    if config.budget_secs is not None:
        deadline = perf_counter() + config.budget_secs
    payloads = [
        (bound_id, config.cap, None, left.adj, right.adj) for _, _, left, right in pairs
    ]
    rows: list[dict[str, Any]] = []
    violations = 0
    budget_hit = False
    done = 0

    for index, result in enumerate(_imap_tasks(_search_task, payloads, config.workers)):
        done = index + 1
        name_left, name_right, _, _ = pairs[index]
        if result.get("error") == "budget":
            budget_hit = True
            break
        if result["violation"]:
            violations += 1
        if result["violation"] or report_all:
            rows.append(
                {
                    "bound_id": bound_id,
                    "pair": f"{name_left} x {name_right}",
                    "lhs": "" if result["lhs"] is None else result["lhs"],
                    "rhs": "" if result["rhs"] is None else result["rhs"],
                    "verdict": result["verdict"],
                }
            )
        if deadline is not None and perf_counter() > deadline:
            budget_hit = True
            break

    if budget_hit and done < len(pairs):
        rows.append({"partial_scan": True, "pairs_done": done, "pairs_total": len(pairs)})
    _emit_rows(rows, config.out)
    _note(
        f"scanned {done}/{len(pairs)} pairs against {bound_id}: {violations} violation(s)"
    )
    if budget_hit and done < len(pairs):
        return EXIT_BUDGET
    return EXIT_MISMATCH if violations else EXIT_OK


# ---------------------------------------------------------------------------
# worker plumbing
# ---------------------------------------------------------------------------


def _map_tasks(task, payloads: list, workers: int) -> list:
    return list(_imap_tasks(task, payloads, workers))


def _imap_tasks(task, payloads: list, workers: int) -> Iterable:
    if workers <= 1 or len(payloads) <= 1:
        for payload in payloads:
            yield task(payload)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(task, payloads, chunksize=8)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idomlab",
        description=(
            "Exact independent domination in direct products: solvers, witnesses, "
            "certificates, and reproduction targets."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, with_inputs: bool = True) -> None:
        if with_inputs:
            p.add_argument("--graph", help="family spec such as cycle:16 or X:3")
            p.add_argument("--graph-file", help="path to a graph file")
            p.add_argument(
                "--format",
                choices=("edge-list", "graph6"),
                default="edge-list",
                help="format of --graph-file",
            )
        p.add_argument("--workers", type=int, default=1, help="parallel workers")
        p.add_argument(
            "--budget-secs", type=float, default=None, help="wall-clock budget"
        )
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help=f"exact-solver vertex cap (default 40, or ${ENV_CAP})",
        )
        p.add_argument(
            "--out",
            choices=("json", "csv", "human"),
            default="json",
            help="output format on stdout",
        )

    p_compute = sub.add_parser("compute", help="compute an invariant with a witness")
    add_common(p_compute)
    p_compute.add_argument("--product", help="second factor family spec")
    p_compute.add_argument(
        "--invariant",
        choices=("i", "alpha", "gamma", "gamma_t", "rho"),
        default="i",
    )
    p_compute.add_argument("--k", type=int, help="answer: is the value at most k?")

    p_product = sub.add_parser("product", help="build a direct product and write it out")
    add_common(p_product)
    p_product.add_argument("--product", required=True, help="second factor family spec")
    p_product.add_argument("--out-file", help="basename for graph + sidecar files")
    p_product.add_argument(
        "--write-format",
        choices=("edge-list", "graph6"),
        default="edge-list",
        help="serialization for the product graph",
    )

    p_verify = sub.add_parser("verify", help="re-check a certificate bundle")
    add_common(p_verify, with_inputs=False)
    p_verify.add_argument("certificates", help="path to a JSON/JSONL certificate bundle")

    p_repro = sub.add_parser("reproduce", help="re-derive a published result table")
    add_common(p_repro, with_inputs=False)
    p_repro.add_argument("target", choices=REPRODUCE_TARGETS)
    p_repro.add_argument("--n", type=int, help="size parameter for thm12")

    p_search = sub.add_parser("search", help="scan graph pairs for bound violations")
    add_common(p_search)
    p_search.add_argument("--bound", required=True, help="bound id to test")
    p_search.add_argument(
        "--pairs-file", help="manifest with one 'leftspec rightspec' pair per line"
    )
    p_search.add_argument(
        "--report-all",
        action="store_true",
        help="emit a row for every pair, not only violations",
    )

    p_export = sub.add_parser("export", help="write a family graph with its sidecar")
    add_common(p_export)
    p_export.add_argument("--product", help="second factor family spec")
    p_export.add_argument("--out-file", help="basename for graph + sidecar files")
    p_export.add_argument(
        "--write-format",
        choices=("edge-list", "graph6"),
        default="edge-list",
        help="serialization for the graph",
    )

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.subcommand == "compute":
            return _cmd_compute(config)
        if args.subcommand in ("product", "export"):
            return _cmd_export(config, args.out_file, args.write_format)
        if args.subcommand == "verify":
            return _cmd_verify(config, args.certificates)
        if args.subcommand == "reproduce":
            return _reproduce(config, args.target)
        if args.subcommand == "search":
            return _cmd_search(config, args.bound, args.pairs_file, args.report_all)
        raise SystemExit(f"unknown subcommand {args.subcommand!r}")
    except SystemExit as exc:
        if isinstance(exc.code, str):
            _note(exc.code)
            return EXIT_USAGE
        return exc.code if exc.code is not None else EXIT_OK
    except ValueError as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
