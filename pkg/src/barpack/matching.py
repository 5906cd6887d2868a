"""Exact maximum matching in general (non-bipartite) graphs.

The weighted solver is the classic primal-dual blossom method (Galil's
survey describes it; Ed Rothberg's C code and its well-known Python ports
fix the bookkeeping conventions used here). Maximum-cardinality matching
is the same solver run on unit weights: every extra matched edge then adds
exactly one to the objective, so maximum weight and maximum cardinality
coincide. A brute-force enumerator over all matchings doubles as the
independent test oracle.

All arithmetic is integer; with integer weights the optimum is verified
against the dual solution on every call.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus (u, v, weight) edges."""

    num_vertices: int
    edges: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, stored by edge index."""

    edge_indices: frozenset[int]

    def cardinality(self) -> int:
        return len(self.edge_indices)


def validate_graph(g: Graph) -> None:
    seen = set()
    for u, v, w in g.edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < g.num_vertices and 0 <= v < g.num_vertices):
            raise ValueError(f"edge ({u}, {v}) out of vertex range")
        if not isinstance(w, int) or w < 0:
            raise ValueError(f"edge ({u}, {v}) weight {w!r} must be a non-negative integer")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)


def matching_pairs(g: Graph, m: Matching) -> tuple[tuple[int, int], ...]:
    return tuple((g.edges[i][0], g.edges[i][1]) for i in sorted(m.edge_indices))


def matching_weight(g: Graph, m: Matching) -> int:
    return sum(g.edges[i][2] for i in m.edge_indices)


def is_valid_matching(g: Graph, m: Matching) -> bool:
    used = set()
    for i in m.edge_indices:
        u, v, _ = g.edges[i]
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def max_weight_matching(g: Graph) -> Matching:
    """A matching of maximum total weight (not necessarily of maximum
    cardinality). Deterministic for a fixed edge input order."""
    validate_graph(g)
    mate = _maximum_weight_mates(g.num_vertices, g.edges)
    indices = frozenset(
        i for i, (u, v, _) in enumerate(g.edges) if mate.get(u) == v)
    return Matching(indices)


def max_cardinality_matching(g: Graph) -> Matching:
    """A matching of maximum cardinality (blossom-based, exact on general
    graphs). Runs the weighted solver on unit weights."""
    validate_graph(g)
    unit = tuple((u, v, 1) for u, v, _ in g.edges)
    mate = _maximum_weight_mates(g.num_vertices, unit)
    indices = frozenset(
        i for i, (u, v, _) in enumerate(g.edges) if mate.get(u) == v)
    return Matching(indices)


def brute_force_matching(g: Graph, objective: str = "weight") -> Matching:
    """Exhaustively enumerate all matchings and return an optimum.

    Only meant as a test oracle; refuses graphs with more than 24 edges.
    objective is "weight" or "cardinality".
    """
    validate_graph(g)
    if objective not in ("weight", "cardinality"):
        raise ValueError(f"unknown objective {objective!r}")
    if len(g.edges) > 24:
        raise TooLarge(f"{len(g.edges)} edges exceed the enumeration guard of 24")

    best_value = 0
    best: list[int] = []
    chosen: list[int] = []
    used = [False] * g.num_vertices

    def value_of(indices) -> int:
        if objective == "cardinality":
            return len(indices)
        return sum(g.edges[i][2] for i in indices)

    def explore(next_edge: int) -> None:
        nonlocal best_value, best
        v = value_of(chosen)
        if v > best_value:
            best_value = v
            best = list(chosen)
        for i in range(next_edge, len(g.edges)):
            u, w, _ = g.edges[i][0], g.edges[i][1], g.edges[i][2]
            if used[u] or used[w]:
                continue
            used[u] = used[w] = True
            chosen.append(i)
            explore(i + 1)
            chosen.pop()
            used[u] = used[w] = False

    explore(0)
    return Matching(frozenset(best))


class _NoNode:
    """Sentinel distinct from every vertex."""


class _Blossom:
    """A non-trivial blossom: odd alternating cycle over sub-blossoms."""

    __slots__ = ("childs", "edges", "mybestedges")

    def leaves(self):
        stack = [*self.childs]
        while stack:
            t = stack.pop()
            if isinstance(t, _Blossom):
                stack.extend(t.childs)
            else:
                yield t


def _maximum_weight_mates(num_vertices, edges):
    """Core solver; returns the symmetric mate dict of an optimum matching.

    State follows the standard formulation: vertices are labeled S (1) or
    T (2) while alternating trees are grown from free vertices; tight edges
    between S-vertices either close a new blossom or yield an augmenting
    path; when no tight edge is available, the dual variables are adjusted
    by the smallest of the four classic deltas.
    """
    if num_vertices == 0 or not edges:
        return {}

    weight = {}
    neighbors = {v: [] for v in range(num_vertices)}
    for u, v, w in edges:
        weight[(u, v)] = weight[(v, u)] = w
        neighbors[u].append(v)
        neighbors[v].append(u)

    gnodes = list(range(num_vertices))
    maxweight = max(w for _, _, w in edges)

    mate = {}
    label = {}
    labeledge = {}
    inblossom = {v: v for v in gnodes}
    blossomparent = {v: None for v in gnodes}
    blossombase = {v: v for v in gnodes}
    bestedge = {}
    dualvar = {v: maxweight for v in gnodes}
    blossomdual = {}
    allowedge = {}
    queue = []

    def slack(v, w):
        # duals are premultiplied by two so integer halving stays exact
        return dualvar[v] + dualvar[w] - 2 * weight[(v, w)]

    def assign_label(w, t, v):
        # label the top-level blossom containing w, reached through edge (v, w)
        b = inblossom[w]
        assert label.get(w) is None and label.get(b) is None
        label[w] = label[b] = t
        if v is not None:
            labeledge[w] = labeledge[b] = (v, w)
        else:
            labeledge[w] = labeledge[b] = None
        bestedge[w] = bestedge[b] = None
        if t == 1:
            # S-blossom: its vertices join the scan queue
            if isinstance(b, _Blossom):
                queue.extend(b.leaves())
            else:
                queue.append(b)
        elif t == 2:
            # T-blossom: its base's mate becomes an S-vertex
            base = blossombase[b]
            assign_label(mate[base], 1, base)

    def scan_blossom(v, w):
        # trace back from v and w; returns the base of a new blossom, or
        # _NoNode when the paths reach two different roots (augmenting path)
        path = []
        base = _NoNode
        while v is not _NoNode:
            b = inblossom[v]
            if label[b] & 4:
                base = blossombase[b]
                break
            assert label[b] == 1
            path.append(b)
            label[b] = 5
            if labeledge[b] is None:
                assert blossombase[b] not in mate
                v = _NoNode
            else:
                assert labeledge[b][0] == mate[blossombase[b]]
                v = labeledge[b][0]
                b = inblossom[v]
                assert label[b] == 2
                v = labeledge[b][0]
            if w is not _NoNode:
                v, w = w, v
        for b in path:
            label[b] = 1
        return base

    def add_blossom(base, v, w):
        # fold the odd cycle through S-vertices v, w with the given base
        # into a new S-blossom with dual zero
        bb = inblossom[base]
        bv = inblossom[v]
        bw = inblossom[w]
        b = _Blossom()
        blossombase[b] = base
        blossomparent[b] = None
        blossomparent[bb] = b
        b.childs = path = []
        b.edges = edgs = [(v, w)]
        while bv != bb:
            blossomparent[bv] = b
            path.append(bv)
            edgs.append(labeledge[bv])
            assert label[bv] == 2 or (
                label[bv] == 1 and labeledge[bv][0] == mate[blossombase[bv]])
            v = labeledge[bv][0]
            bv = inblossom[v]
        path.append(bb)
        path.reverse()
        edgs.reverse()
        while bw != bb:
            blossomparent[bw] = b
            path.append(bw)
            edgs.append((labeledge[bw][1], labeledge[bw][0]))
            assert label[bw] == 2 or (
                label[bw] == 1 and labeledge[bw][0] == mate[blossombase[bw]])
            w = labeledge[bw][0]
            bw = inblossom[w]
        assert label[bb] == 1
        label[b] = 1
        labeledge[b] = labeledge[bb]
        blossomdual[b] = 0
        for v in b.leaves():
            if label[inblossom[v]] == 2:
                # former T-vertex becomes S through the new blossom
                queue.append(v)
            inblossom[v] = b
        # compute the blossom's least-slack edges to other S-blossoms
        bestedgeto = {}
        for bv in path:
            if isinstance(bv, _Blossom):
                if bv.mybestedges is not None:
                    nblist = bv.mybestedges
                    bv.mybestedges = None
                else:
                    nblist = [(v, w)
                              for v in bv.leaves()
                              for w in neighbors[v] if v != w]
            else:
                nblist = [(bv, w) for w in neighbors[bv] if bv != w]
            for k in nblist:
                (i, j) = k
                if inblossom[j] == b:
                    i, j = j, i
                bj = inblossom[j]
                if (bj != b and label.get(bj) == 1
                        and ((bj not in bestedgeto)
                             or slack(i, j) < slack(*bestedgeto[bj]))):
                    bestedgeto[bj] = k
            bestedge[bv] = None
        b.mybestedges = list(bestedgeto.values())
        mybestedge = None
        mybestslack = None
        bestedge[b] = None
        for k in b.mybestedges:
            kslack = slack(*k)
            if mybestedge is None or kslack < mybestslack:
                mybestedge = k
                mybestslack = kslack
        bestedge[b] = mybestedge

    def expand_blossom(b, endstage):
        # recursion depth is bounded by blossom nesting, itself < n/2
        for s in b.childs:
            blossomparent[s] = None
            if isinstance(s, _Blossom):
                if endstage and blossomdual[s] == 0:
                    expand_blossom(s, endstage)
                else:
                    for v in s.leaves():
                        inblossom[v] = s
            else:
                inblossom[s] = s
        # a T-blossom expanded mid-stage must relabel its children
        if (not endstage) and label.get(b) == 2:
            entrychild = inblossom[labeledge[b][1]]
            j = b.childs.index(entrychild)
            if j & 1:
                # odd entry index: walk forward with wraparound
                j -= len(b.childs)
                jstep = 1
            else:
                jstep = -1
            v, w = labeledge[b]
            while j != 0:
                # relabel the T-sub-blossom on the way to the base
                if jstep == 1:
                    p, q = b.edges[j]
                else:
                    q, p = b.edges[j - 1]
                label[w] = None
                label[q] = None
                assign_label(w, 2, v)
                allowedge[(p, q)] = allowedge[(q, p)] = True
                j += jstep
                if jstep == 1:
                    v, w = b.edges[j]
                else:
                    w, v = b.edges[j - 1]
                allowedge[(v, w)] = allowedge[(w, v)] = True
                j += jstep
            # the base keeps label T without stepping to its mate
            bw = b.childs[j]
            label[w] = label[bw] = 2
            labeledge[w] = labeledge[bw] = (v, w)
            bestedge[bw] = None
            j += jstep
            while b.childs[j] != entrychild:
                # children on the other side are relabeled only if reachable
                bv = b.childs[j]
                if label.get(bv) == 1:
                    j += jstep
                    continue
                if isinstance(bv, _Blossom):
                    for v in bv.leaves():
                        if label.get(v):
                            break
                else:
                    v = bv
                if label.get(v):
                    assert label[v] == 2
                    assert inblossom[v] == bv
                    label[v] = None
                    label[mate[blossombase[bv]]] = None
                    assign_label(v, 2, labeledge[v][0])
                j += jstep
        label.pop(b, None)
        labeledge.pop(b, None)
        bestedge.pop(b, None)
        del blossomparent[b]
        del blossombase[b]
        del blossomdual[b]

    def augment_blossom(b, v):
        # swap matched/unmatched edges along the path from v to b's base
        t = v
        while blossomparent[t] != b:
            t = blossomparent[t]
        if isinstance(t, _Blossom):
            augment_blossom(t, v)
        i = j = b.childs.index(t)
        if i & 1:
            j -= len(b.childs)
            jstep = 1
        else:
            jstep = -1
        while j != 0:
            j += jstep
            t = b.childs[j]
            if jstep == 1:
                w, x = b.edges[j]
            else:
                x, w = b.edges[j - 1]
            if isinstance(t, _Blossom):
                augment_blossom(t, w)
            j += jstep
            t = b.childs[j]
            if isinstance(t, _Blossom):
                augment_blossom(t, x)
            mate[w] = x
            mate[x] = w
        # rotate children so the new base comes first
        b.childs = b.childs[i:] + b.childs[:i]
        b.edges = b.edges[i:] + b.edges[:i]
        blossombase[b] = blossombase[b.childs[0]]
        assert blossombase[b] == v

    def augment_matching(v, w):
        for s, j in ((v, w), (w, v)):
            while 1:
                bs = inblossom[s]
                assert label[bs] == 1
                assert (labeledge[bs] is None and blossombase[bs] not in mate) or (
                    labeledge[bs][0] == mate[blossombase[bs]])
                if isinstance(bs, _Blossom):
                    augment_blossom(bs, s)
                mate[s] = j
                if labeledge[bs] is None:
                    break
                t = labeledge[bs][0]
                bt = inblossom[t]
                assert label[bt] == 2
                s, j = labeledge[bt]
                assert blossombase[bt] == t
                if isinstance(bt, _Blossom):
                    augment_blossom(bt, j)
                mate[j] = s

    def verify_optimum():
        # complementary slackness against the final duals; integer-exact
        assert min(dualvar.values()) >= 0
        assert len(blossomdual) == 0 or min(blossomdual.values()) >= 0
        for u, v, w in edges:
            s = dualvar[u] + dualvar[v] - 2 * w
            ublossoms = [u]
            vblossoms = [v]
            while blossomparent[ublossoms[-1]] is not None:
                ublossoms.append(blossomparent[ublossoms[-1]])
            while blossomparent[vblossoms[-1]] is not None:
                vblossoms.append(blossomparent[vblossoms[-1]])
            ublossoms.reverse()
            vblossoms.reverse()
            for bi, bj in zip(ublossoms, vblossoms):
                if bi != bj:
                    break
                s += 2 * blossomdual[bi]
            assert s >= 0
            if mate.get(u) == v or mate.get(v) == u:
                assert mate[u] == v and mate[v] == u
                assert s == 0
        for v in gnodes:
            assert (v in mate) or dualvar[v] == 0
        for b in blossomdual:
            if blossomdual[b] > 0:
                assert len(b.edges) % 2 == 1
                for u, v in b.edges[1::2]:
                    assert mate[u] == v and mate[v] == u

    while 1:
        # stage: grow alternating trees until one augmentation succeeds
        label.clear()
        labeledge.clear()
        bestedge.clear()
        for b in blossomdual:
            b.mybestedges = None
        allowedge.clear()
        queue[:] = []

        for v in gnodes:
            if (v not in mate) and label.get(inblossom[v]) is None:
                assign_label(v, 1, None)

        augmented = 0
        while 1:
            # substage: scan tight edges; if none, pump the duals
            while queue and not augmented:
                v = queue.pop()
                assert label[inblossom[v]] == 1
                for w in neighbors[v]:
                    if w == v:
                        continue
                    bv = inblossom[v]
                    bw = inblossom[w]
                    if bv == bw:
                        continue
                    if (v, w) not in allowedge:
                        kslack = slack(v, w)
                        if kslack <= 0:
                            allowedge[(v, w)] = allowedge[(w, v)] = True
                    if (v, w) in allowedge:
                        if label.get(bw) is None:
                            # free vertex: becomes T, its mate becomes S
                            assign_label(w, 2, v)
                        elif label.get(bw) == 1:
                            # S-S edge: new blossom or augmenting path
                            base = scan_blossom(v, w)
                            if base is not _NoNode:
                                add_blossom(base, v, w)
                            else:
                                augment_matching(v, w)
                                augmented = 1
                                break
                        elif label.get(w) is None:
                            # unreached vertex inside a T-blossom
                            assert label[bw] == 2
                            label[w] = 2
                            labeledge[w] = (v, w)
                    elif label.get(bw) == 1:
                        if bestedge.get(bv) is None or kslack < slack(*bestedge[bv]):
                            bestedge[bv] = (v, w)
                    elif label.get(w) is None:
                        if bestedge.get(w) is None or kslack < slack(*bestedge[w]):
                            bestedge[w] = (v, w)

            if augmented:
                break

            # delta1: minimum vertex dual (stopping criterion)
            deltatype = 1
            delta = min(dualvar.values())
            deltaedge = deltablossom = None

            # delta2: least slack from an S-vertex to a free vertex
            for v in gnodes:
                if label.get(inblossom[v]) is None and bestedge.get(v) is not None:
                    d = slack(*bestedge[v])
                    if d < delta:
                        delta = d
                        deltatype = 2
                        deltaedge = bestedge[v]

            # delta3: half the least S-S slack
            for b in blossomparent:
                if (blossomparent[b] is None and label.get(b) == 1
                        and bestedge.get(b) is not None):
                    kslack = slack(*bestedge[b])
                    assert (kslack % 2) == 0
                    d = kslack // 2
                    if d < delta:
                        delta = d
                        deltatype = 3
                        deltaedge = bestedge[b]

            # delta4: smallest T-blossom dual
            for b in blossomdual:
                if (blossomparent[b] is None and label.get(b) == 2
                        and blossomdual[b] < delta):
                    delta = blossomdual[b]
                    deltatype = 4
                    deltablossom = b

            for v in gnodes:
                if label.get(inblossom[v]) == 1:
                    dualvar[v] -= delta
                elif label.get(inblossom[v]) == 2:
                    dualvar[v] += delta
            for b in blossomdual:
                if blossomparent[b] is None:
                    if label.get(b) == 1:
                        blossomdual[b] += delta
                    elif label.get(b) == 2:
                        blossomdual[b] -= delta

            if deltatype == 1:
                break
            elif deltatype == 2:
                (v, w) = deltaedge
                assert label[inblossom[v]] == 1
                allowedge[(v, w)] = allowedge[(w, v)] = True
                queue.append(v)
            elif deltatype == 3:
                (v, w) = deltaedge
                allowedge[(v, w)] = allowedge[(w, v)] = True
                assert label[inblossom[v]] == 1
                queue.append(v)
            else:
                expand_blossom(deltablossom, False)

        for v in mate:
            assert mate[mate[v]] == v

        if not augmented:
            break

        # discard S-blossoms whose dual dropped to zero
        for b in list(blossomdual.keys()):
            if b not in blossomdual:
                continue
            if blossomparent[b] is None and label.get(b) == 1 and blossomdual[b] == 0:
                expand_blossom(b, True)

    verify_optimum()
    return mate
