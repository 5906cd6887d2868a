"""Packing algorithms: iterated-matching heuristics and a first-fit baseline.

The matching-based packers repeat one step: build the union graph over the
current charts, compute a maximum (cardinality or weight) matching, merge
every matched pair using its recorded best overlap, and stop once no pair
can be combined. The final charts are laid out disjointly and converted to
a per-chart start-cell packing along their provenance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import NotAMatching, NotMaxWeight, ProvenanceGap
from .matching import (
    Graph,
    matching_weight,
    max_cardinality_matching,
    max_weight_matching,
)
from .model import Instance, Packing, compact, length
from .unions import UnionGraph, build_graph, chart_from_bars, merge


@dataclass(frozen=True)
class RoundStats:
    """One matching round: matched pairs, their weight, cells saved, and
    what the union graph offered (edge count, largest overlap)."""

    cardinality: int
    weight: int
    savings: int
    graph_edges: int
    max_union: int


@dataclass(frozen=True)
class RunTrace:
    initial_charts: int
    rounds: tuple[RoundStats, ...]
    final_charts: int

    def total_savings(self) -> int:
        return sum(r.savings for r in self.rounds)


@dataclass(frozen=True)
class PackResult:
    packing: Packing
    trace: RunTrace
    length: int


def realize(final_charts) -> Packing:
    """Lay charts consecutively (ascending first-provenance id) and derive
    each original chart's start cell from its provenance offset."""
    charts = sorted(final_charts, key=lambda c: c.provenance[0][0])
    ids = sorted(cid for ch in charts for cid, _ in ch.provenance)
    if ids != list(range(len(ids))) or not ids:
        raise ProvenanceGap("provenance must cover ids 0..n-1 exactly once")
    starts = [0] * len(ids)
    cursor = 1
    for ch in charts:
        for cid, off in ch.provenance:
            starts[cid] = cursor + off
        cursor += len(ch.cells)
    return Packing(tuple(starts))


def _finish(inst: Instance, charts, rounds) -> PackResult:
    packing = compact(inst, realize(charts))
    realized = length(inst, packing)
    trace = RunTrace(inst.n, tuple(rounds), len(charts))
    # the layout is gap-free, so the realized length telescopes exactly
    assert realized == 2 * inst.n - trace.total_savings()
    return PackResult(packing, trace, realized)


def _merge_round(charts, chosen_edges, denominator):
    """Merge each matched pair; the merged chart replaces the smaller index."""
    partner = {}
    for e in chosen_edges:
        partner[e.u] = e
        partner[e.v] = e
    new_charts = []
    savings = 0
    for i, ch in enumerate(charts):
        e = partner.get(i)
        if e is None:
            new_charts.append(ch)
            continue
        if i != min(e.u, e.v):
            continue
        left, right = (charts[e.u], charts[e.v]) if e.u_first else (charts[e.v], charts[e.u])
        new_charts.append(merge(left, right, e.t, denominator))
        savings += e.t
    return new_charts, savings


def _round_stats(graph: UnionGraph, chosen_edges, savings) -> RoundStats:
    return RoundStats(
        cardinality=len(chosen_edges),
        weight=sum(e.weight for e in chosen_edges),
        savings=savings,
        graph_edges=len(graph.edges),
        max_union=max((e.t for e in graph.edges), default=0),
    )


def _matching_graph(graph: UnionGraph) -> Graph:
    return Graph(graph.num_vertices,
                 tuple((e.u, e.v, e.weight) for e in graph.edges))


def _run_rounds(inst: Instance, weighted: bool, forced_first=None) -> PackResult:
    charts = [chart_from_bars(c) for c in inst.charts]
    rounds = []
    first_round = True
    while len(charts) > 1:
        graph = build_graph(charts, inst.denominator, weighted)
        if first_round and forced_first is not None:
            first_round = False
            chosen = _validate_forced(graph, forced_first)
            if not chosen:
                continue
        else:
            first_round = False
            if not graph.edges:
                break
            mg = _matching_graph(graph)
            m = max_weight_matching(mg) if weighted else max_cardinality_matching(mg)
            if not m.edge_indices:
                break
            chosen = [graph.edges[i] for i in sorted(m.edge_indices)]
        charts, savings = _merge_round(charts, chosen, inst.denominator)
        rounds.append(_round_stats(graph, chosen, savings))
    return _finish(inst, charts, rounds)


def _validate_forced(graph: UnionGraph, pairs):
    """Check the supplied id pairs form a maximum-weight matching of the
    first-round graph and return the corresponding edges."""
    by_pair = {(e.u, e.v): e for e in graph.edges}
    used = set()
    chosen = []
    for i, j in pairs:
        key = (i, j) if i < j else (j, i)
        edge = by_pair.get(key)
        if edge is None:
            raise NotAMatching(f"charts {i} and {j} admit no union")
        if i in used or j in used or i == j:
            raise NotAMatching(f"chart {i if i in used else j} is paired twice")
        used.update((i, j))
        chosen.append(edge)
    mg = _matching_graph(graph)
    optimum = matching_weight(mg, max_weight_matching(mg))
    forced_weight = sum(e.weight for e in chosen)
    if forced_weight < optimum:
        raise NotMaxWeight(
            f"forced matching weighs {forced_weight}, optimum is {optimum}")
    return chosen


def pack_matching(inst: Instance) -> PackResult:
    """Iterated maximum-cardinality matching over the unweighted union
    graph (CLI algo "m"). Matched pairs still merge with their best
    overlap, so a round may save more cells than it has matched edges."""
    return _run_rounds(inst, weighted=False)


def pack_weighted_matching(inst: Instance) -> PackResult:
    """Iterated maximum-weight matching over the weighted union graph
    (CLI algo "mw"); edge weights are the cells their union saves."""
    return _run_rounds(inst, weighted=True)


def pack_forced_first_matching(inst: Instance, first_pairs) -> PackResult:
    """Like pack_weighted_matching but realizing the supplied (id, id)
    pairs as round one, after verifying they attain maximum weight.
    Reproduces adversarial runs deterministically."""
    return _run_rounds(inst, weighted=True, forced_first=list(first_pairs))


def pack_first_fit(inst: Instance, order=None) -> PackResult:
    """Baseline: place each chart at the smallest feasible start cell.

    order is a permutation of ids (defaults to id order). The trace has no
    matching rounds.
    """
    if order is None:
        order = range(inst.n)
    order = list(order)
    if sorted(order) != list(range(inst.n)):
        raise ValueError("order must be a permutation of the instance ids")
    denom = inst.denominator
    loads = [0, 0]
    starts = [0] * inst.n
    for cid in order:
        chart = inst.charts[cid]
        s = 1
        while True:
            while len(loads) < s + 1:
                loads.append(0)
            if loads[s - 1] + chart.a <= denom and loads[s] + chart.b <= denom:
                loads[s - 1] += chart.a
                loads[s] += chart.b
                starts[cid] = s
                break
            s += 1
    packing = compact(inst, Packing(tuple(starts)))
    trace = RunTrace(inst.n, (), inst.n)
    return PackResult(packing, trace, length(inst, packing))


# ---------------------------------------------------------------------------
# Result serialization: {"length":L,"starts":[...],"trace":[{"m","w","s"},...]}

def pack_result_to_json(result: PackResult, extra=None) -> str:
    payload = {
        "length": result.length,
        "starts": list(result.packing.starts),
        "trace": [{"m": r.cardinality, "w": r.weight, "s": r.savings}
                  for r in result.trace.rounds],
    }
    if extra:
        payload.update(extra)
    return json.dumps(payload, separators=(",", ":"))
