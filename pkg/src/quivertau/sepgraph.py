"""Separated quivers, Dynkin/Euclidean recognition, and the radical-square-
zero finiteness criterion.

A single subquiver of the separated quiver picks at most one of the two
copies of each original vertex.  A radical-square-zero algebra is finite
exactly when every single subquiver is a disjoint union of Dynkin graphs;
the decision is run either by brute enumeration (``naive``) or by searching
directly for an embedded Euclidean shape (``witness-search``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import verdict as vd
from .presentation import (
    Arrow,
    NoOrientedCycleError,
    NotRadicalSquareZeroError,
    Quiver,
    SizeLimitError,
    UnsupportedLoopError,
    dimension_table,
)
from .tensor import rad_square_quotient, tensor_product, tensor_vertex


@dataclass(frozen=True)
class UGraph:
    """Undirected multigraph; edges are (u, v) pairs, loops allowed."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class GraphType:
    tag: str  # A, D, E, A~, D~, E~, other
    n: int

    def is_dynkin(self):
        return self.tag in ("A", "D", "E")

    def is_euclidean(self):
        return self.tag in ("A~", "D~", "E~")

    def label(self):
        if self.tag == "other":
            return "other"
        return f"{self.tag}{self.n}"


EUCLIDEAN_VERTEX_COUNT = {"A~": lambda n: n + 1, "D~": lambda n: n + 1,
                          "E~": lambda n: n + 1}


def euclidean_size(gtype):
    """Number of vertices of a Euclidean diagram."""
    if not gtype.is_euclidean():
        raise ValueError(f"not Euclidean: {gtype}")
    return gtype.n + 1


@dataclass(frozen=True)
class GraphTypeReport:
    components: tuple[tuple[tuple[str, ...], GraphType], ...]

    def all_dynkin(self):
        return all(t.is_dynkin() for _, t in self.components)

    def tags(self):
        return tuple(t.label() for _, t in self.components)


def underlying_graph(quiver):
    return UGraph(quiver.vertices,
                  tuple((a.source, a.target) for a in quiver.arrows))


def _component_type(vertices, edges):
    """Classify one connected component given its vertices and edge list."""
    n = len(vertices)
    if any(u == v for u, v in edges):
        return GraphType("other", 0)
    simple = {}
    for u, v in edges:
        key = (u, v) if u <= v else (v, u)
        simple[key] = simple.get(key, 0) + 1
    if any(m >= 2 for m in simple.values()):
        if n == 2 and len(edges) == 2 and len(simple) == 1 \
                and next(iter(simple.values())) == 2:
            return GraphType("A~", 1)
        return GraphType("other", 0)
    deg = {v: 0 for v in vertices}
    for u, v in simple:
        deg[u] += 1
        deg[v] += 1
    e = len(simple)
    if e == n and all(d == 2 for d in deg.values()):
        return GraphType("A~", n - 1)
    if e != n - 1:
        return GraphType("other", 0)
    # tree
    branch = sorted(v for v in vertices if deg[v] >= 3)
    if not branch:
        return GraphType("A", n)
    adj = {v: [] for v in vertices}
    for u, v in simple:
        adj[u].append(v)
        adj[v].append(u)

    def leg_lengths(center):
        lengths = []
        for start in adj[center]:
            length = 1
            prev, at = center, start
            while deg[at] == 2:
                nxt = [w for w in adj[at] if w != prev][0]
                prev, at = at, nxt
                length += 1
            if deg[at] >= 3:
                return None  # leg runs into another branch vertex
            lengths.append(length)
        return sorted(lengths)

    if len(branch) == 1:
        center = branch[0]
        d = deg[center]
        if d == 4:
            legs = leg_lengths(center)
            if legs == [1, 1, 1, 1]:
                return GraphType("D~", 4)
            return GraphType("other", 0)
        if d > 4:
            return GraphType("other", 0)
        legs = leg_lengths(center)
        a, b, c = legs
        if a == 1 and b == 1:
            return GraphType("D", n)
        if (a, b, c) == (1, 2, 2):
            return GraphType("E", 6)
        if (a, b, c) == (1, 2, 3):
            return GraphType("E", 7)
        if (a, b, c) == (1, 2, 4):
            return GraphType("E", 8)
        if (a, b, c) == (2, 2, 2):
            return GraphType("E~", 6)
        if (a, b, c) == (1, 3, 3):
            return GraphType("E~", 7)
        if (a, b, c) == (1, 2, 5):
            return GraphType("E~", 8)
        return GraphType("other", 0)
    if len(branch) == 2 and all(deg[v] == 3 for v in branch):
        leaves = [v for v in vertices if deg[v] == 1]
        if len(leaves) == 4 and all(
                any(w in branch for w in adj[leaf]) for leaf in leaves):
            b1, b2 = branch
            if sum(1 for leaf in leaves if b1 in adj[leaf]) == 2 \
                    and sum(1 for leaf in leaves if b2 in adj[leaf]) == 2:
                return GraphType("D~", n - 1)
        return GraphType("other", 0)
    return GraphType("other", 0)


def classify_graph(graph):
    """Connected-component classification of an undirected multigraph."""
    adj = {v: set() for v in graph.vertices}
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = set()
    components = []
    for v in graph.vertices:
        if v in seen:
            continue
        comp = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    frontier.append(y)
        seen |= comp
        verts = tuple(sorted(comp))
        edges = [(a, b) for a, b in graph.edges if a in comp]
        components.append((verts, _component_type(verts, edges)))
    return GraphTypeReport(tuple(components))


# ---------------------------------------------------------------------------
# separated quivers and single subquivers


def sep_vertex(v, side):
    return f"({v},{side})"


def separated_quiver(quiver):
    """Bipartite acyclic double: one arrow (a,0) -> (b,1) per arrow a -> b."""
    vertices = tuple(sep_vertex(v, 0) for v in quiver.vertices) + \
        tuple(sep_vertex(v, 1) for v in quiver.vertices)
    arrows = tuple(Arrow(f"{a.name}^sp",
                         sep_vertex(a.source, 0), sep_vertex(a.target, 1))
                   for a in quiver.arrows)
    return Quiver(vertices, arrows)


@dataclass(frozen=True)
class SingleSubquiver:
    """Chosen separated vertices (original vertex, side) with induced arrows."""

    vertices: tuple[tuple[str, int], ...]
    arrows: tuple[tuple[tuple[str, int], tuple[str, int], str], ...]

    def to_payload(self):
        return {
            "kind": "single-subquiver",
            "vertices": [[v, s] for v, s in self.vertices],
            "arrows": [[list(src), list(tgt), name]
                       for src, tgt, name in self.arrows],
        }

    def underlying(self):
        verts = tuple(sep_vertex(v, s) for v, s in self.vertices)
        edges = tuple((sep_vertex(*src), sep_vertex(*tgt))
                      for src, tgt, _ in self.arrows)
        return UGraph(verts, edges)

    def report(self):
        return classify_graph(self.underlying())


def induced_single_subquiver(quiver, sides):
    """Full single subquiver for a {vertex: side} choice."""
    chosen = tuple(sorted(sides.items()))
    arrows = []
    for a in quiver.arrows:
        if sides.get(a.source) == 0 and sides.get(a.target) == 1:
            arrows.append(((a.source, 0), (a.target, 1), a.name))
    return SingleSubquiver(tuple((v, s) for v, s in chosen), tuple(arrows))


def is_single_subquiver(quiver, ssq):
    """Validity: vertices exist, one side per vertex, arrows induced."""
    vset = set(quiver.vertices)
    seen = set()
    for v, s in ssq.vertices:
        if v not in vset or s not in (0, 1) or v in seen:
            return False
        seen.add(v)
    sides = dict(ssq.vertices)
    expect = induced_single_subquiver(quiver, sides)
    return set(expect.arrows) == set(ssq.arrows) \
        and set(expect.vertices) == set(ssq.vertices)


# ---------------------------------------------------------------------------
# the finiteness criterion for radical-square-zero presentations


def is_rad_square_zero(pres):
    """Semantic check on acyclic quivers, syntactic on cyclic ones."""
    if pres.quiver.is_acyclic():
        table = dimension_table(pres)
        return all(len(p) <= 1 for _, paths in table.pairs for p in paths)
    monomial_squares = {rel.terms[0][1] for rel in pres.relations
                        if rel.is_monomial() and len(rel.terms[0][1]) == 2}
    by_name = pres.quiver.arrows_by_name()
    for a in pres.quiver.arrows:
        for b in pres.quiver.arrows:
            if a.target == b.source and (a.name, b.name) not in monomial_squares:
                return False
    del by_name
    return True


class _SepData:
    """Arrow multiplicities of a quiver, indexed for the subquiver sweeps."""

    def __init__(self, quiver):
        self.vertices = list(quiver.vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.n = len(self.vertices)
        self.mult = {}
        self.out_adj = [set() for _ in range(self.n)]
        self.in_adj = [set() for _ in range(self.n)]
        for a in quiver.arrows:
            i, j = self.index[a.source], self.index[a.target]
            self.mult[(i, j)] = self.mult.get((i, j), 0) + 1
            self.out_adj[i].add(j)
            self.in_adj[j].add(i)


def _assignment_bad(data, sides):
    """Does the single subquiver given by {vertex index: side} contain a
    non-Dynkin component?  Works on the induced bipartite multigraph."""
    zeros = [i for i, s in sides.items() if s == 0]
    ones = {i for i, s in sides.items() if s == 1}
    edges = []  # (source index, target index) with side 0 -> side 1
    deg = {}
    for i in zeros:
        for j in data.out_adj[i]:
            if j in ones:
                m = data.mult[(i, j)]
                if m >= 2:
                    return True
                edges.append((i, j))
                deg[(i, 0)] = deg.get((i, 0), 0) + 1
                deg[(j, 1)] = deg.get((j, 1), 0) + 1
    if any(d >= 4 for d in deg.values()):
        return True
    # union-find over chosen nodes
    nodes = [(i, s) for i, s in sides.items()]
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        a, b = find((i, 0)), find((j, 1))
        if a != b:
            parent[a] = b
    comp_edges = {}
    comp_nodes = {}
    comp_branch = {}
    for x in nodes:
        r = find(x)
        comp_nodes[r] = comp_nodes.get(r, 0) + 1
        if deg.get(x, 0) >= 3:
            comp_branch[r] = comp_branch.get(r, 0) + 1
    for i, j in edges:
        r = find((i, 0))
        comp_edges[r] = comp_edges.get(r, 0) + 1
    for r, nn in comp_nodes.items():
        ee = comp_edges.get(r, 0)
        if ee >= nn:  # contains a cycle
            return True
        if comp_branch.get(r, 0) >= 2:
            return True
    # remaining danger: a single degree-3 vertex with non-Dynkin legs
    for x in nodes:
        if deg.get(x, 0) != 3:
            continue
        legs = _leg_profile(data, sides, deg, x)
        if legs is None:
            continue  # handled by branch/cycle counts above
        a, b, c = legs
        if not (a == 1 and (b == 1 or (b == 2 and c <= 4))):
            return True
    return False


def _neighbors(data, sides, x):
    i, s = x
    out = []
    if s == 0:
        for j in data.out_adj[i]:
            if sides.get(j) == 1:
                out.append((j, 1))
    else:
        for j in data.in_adj[i]:
            if sides.get(j) == 0:
                out.append((j, 0))
    return out


def _leg_profile(data, sides, deg, center):
    """Sorted leg lengths of a degree-3 node inside a tree component."""
    lengths = []
    for start in _neighbors(data, sides, center):
        length = 1
        prev, at = center, start
        while deg.get(at, 0) == 2:
            nxts = [w for w in _neighbors(data, sides, at) if w != prev]
            prev, at = at, nxts[0]
            length += 1
        if deg.get(at, 0) >= 3:
            return None
        lengths.append(length)
    return sorted(lengths)


def _bad_sets_of_size(data, k):
    """All bad single subquivers on exactly k original vertices, as
    (sorted vertex names, sides dict)."""
    for combo in itertools.combinations(range(data.n), k):
        for mask in range(1 << k):
            sides = {combo[t]: (mask >> t) & 1 for t in range(k)}
            if _assignment_bad(data, sides):
                yield sides


def _lexmin_witness(data, quiver, k):
    best = None
    best_key = None
    for sides in _bad_sets_of_size(data, k):
        named = tuple(sorted((data.vertices[i], s)
                             for i, s in sides.items()))
        if best_key is None or named < best_key:
            best_key = named
            best = sides
    if best is None:
        return None
    named_sides = {data.vertices[i]: s for i, s in best.items()}
    return induced_single_subquiver(quiver, named_sides)


def _naive_decide(quiver, naive_limit):
    """Brute force: a bad choice extends to a full side assignment, so the
    2^n full assignments decide the verdict; the minimal witness is then
    recovered by an ascending-size sweep."""
    data = _SepData(quiver)
    n = data.n
    if n > naive_limit:
        raise SizeLimitError(
            f"{n} vertices exceeds the naive enumeration limit {naive_limit}")
    bad = False
    for mask in range(1 << n):
        sides = {i: (mask >> i) & 1 for i in range(n)}
        if _assignment_bad(data, sides):
            bad = True
            break
    if not bad:
        return None
    for k in range(2, n + 1):
        witness = _lexmin_witness(data, quiver, k)
        if witness is not None:
            return witness
    raise AssertionError("bad full assignment but no bad subset")


# Euclidean patterns for the direct search, as 2-colored edge lists.


def _cycle_pattern(size):
    edges = [(i, (i + 1) % size) for i in range(size)]
    coloring = {i: i % 2 for i in range(size)}
    return edges, coloring


def _star_pattern(leg_lengths):
    """Tree with one center and the given leg lengths, 2-colored by parity."""
    edges = []
    coloring = {0: 0}
    nxt = 1
    for leg in leg_lengths:
        prev = 0
        for step in range(leg):
            edges.append((prev, nxt))
            coloring[nxt] = (coloring[prev] + 1) % 2
            prev = nxt
            nxt += 1
    return edges, coloring


def _dtilde_pattern(m):
    """Two branch vertices with two leaves each, joined by a path; m >= 5."""
    # vertices: 0,1 leaves; 2 branch; path 2..; far branch; far leaves
    edges = []
    coloring = {}
    b1 = 2
    coloring[0] = 1
    coloring[1] = 1
    coloring[b1] = 0
    edges += [(0, b1), (1, b1)]
    path_len = m - 4  # arcs between the two branch vertices: m - 4 + ...
    prev = b1
    nxt = 3
    for _ in range(m - 5):
        coloring[nxt] = (coloring[prev] + 1) % 2
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    b2 = nxt
    coloring[b2] = (coloring[prev] + 1) % 2
    edges.append((prev, b2))
    for leaf in (nxt + 1, nxt + 2):
        coloring[leaf] = (coloring[b2] + 1) % 2
        edges.append((b2, leaf))
    del path_len
    return edges, coloring


def _embed_pattern(data, edges, coloring):
    """Backtracking embedding of a 2-colored pattern into the quiver.

    Pattern vertices map injectively to original vertices; an edge from a
    0-colored to a 1-colored pattern vertex needs an arrow in that
    direction.  Returns a {vertex index: side} assignment or None.
    """
    pattern_vertices = sorted(coloring)
    # order pattern vertices so each new one touches an embedded neighbor
    adj = {p: [] for p in pattern_vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    order = [pattern_vertices[0]]
    placed = {pattern_vertices[0]}
    while len(order) < len(pattern_vertices):
        nxt = next(p for p in pattern_vertices
                   if p not in placed and any(q in placed for q in adj[p]))
        order.append(nxt)
        placed.add(nxt)

    image = {}
    used = set()

    def candidates(p):
        anchored = [q for q in adj[p] if q in image]
        cands = None
        for q in anchored:
            iq = image[q]
            if coloring[p] == 0:
                # edge p -> q in the separated sense needs arrow p_img -> q_img
                cs = data.in_adj[iq] if coloring[q] == 1 else set()
            else:
                cs = data.out_adj[iq] if coloring[q] == 0 else set()
            cands = set(cs) if cands is None else cands & set(cs)
        if cands is None:
            cands = set(range(data.n))
        return sorted(cands - used)

    def place(idx):
        if idx == len(order):
            return True
        p = order[idx]
        for c in candidates(p):
            image[p] = c
            used.add(c)
            if place(idx + 1):
                return True
            del image[p]
            used.discard(c)
        return False

    if place(0):
        return {image[p]: coloring[p] for p in pattern_vertices}
    return None


def _patterns_of_size(size, n):
    """Euclidean patterns on exactly ``size`` vertices, candidate order."""
    out = []
    if size == 2:
        out.append("multi-pair")
    if size >= 4 and size % 2 == 0:
        out.append(("cycle", size))
    if size == 5:
        out.append(("star", (1, 1, 1, 1)))  # D~4
    if size >= 6:
        out.append(("dtilde", size - 1))
    if size == 7:
        out.append(("star", (2, 2, 2)))  # E~6
    if size == 8:
        out.append(("star", (1, 3, 3)))  # E~7
    if size == 9:
        out.append(("star", (1, 2, 5)))  # E~8
    return out


def _witness_search_decide(quiver):
    """Probe for embedded Euclidean shapes in ascending size; on a hit,
    normalize to the lexicographically minimal witness of that size."""
    data = _SepData(quiver)
    n = data.n
    for size in range(2, n + 1):
        for pattern in _patterns_of_size(size, n):
            if pattern == "multi-pair":
                hit = any(m >= 2 and i != j
                          for (i, j), m in data.mult.items())
                if hit:
                    return _lexmin_witness(data, quiver, size)
                continue
            kind, arg = pattern
            if kind == "cycle":
                edges, coloring = _cycle_pattern(arg)
                variants = [coloring]
            elif kind == "dtilde":
                edges, coloring = _dtilde_pattern(arg)
                variants = [coloring,
                            {p: 1 - c for p, c in coloring.items()}]
            else:
                edges, coloring = _star_pattern(arg)
                variants = [coloring,
                            {p: 1 - c for p, c in coloring.items()}]
            for variant in variants:
                if _embed_pattern(data, edges, variant) is not None:
                    return _lexmin_witness(data, quiver, size)
    return None


def minimal_bad_single_subquiver(quiver, mode="witness-search",
                                 naive_limit=12):
    """Minimal non-Dynkin single subquiver of the separated quiver, or None.

    The criterion depends on the quiver alone; both modes return the same
    smallest (then lexicographically first) witness.
    """
    if quiver.has_loop():
        raise UnsupportedLoopError("loop arrows are outside the criterion")
    if mode == "naive":
        return _naive_decide(quiver, naive_limit)
    if mode == "witness-search":
        return _witness_search_decide(quiver)
    raise ValueError(f"unknown mode {mode!r}")


def adachi_decide(pres, mode="witness-search", naive_limit=12):
    """Finiteness for a radical-square-zero presentation.

    Finite when every single subquiver of the separated quiver is a union
    of Dynkin graphs; infinite verdicts carry the minimal bad single
    subquiver.  ``naive`` enumerates choices up to ``naive_limit`` original
    vertices; ``witness-search`` hunts Euclidean shapes directly.
    """
    q = pres.quiver
    if q.has_loop():
        raise UnsupportedLoopError("loop arrows are outside the criterion")
    if not is_rad_square_zero(pres):
        raise NotRadicalSquareZeroError(
            "the relation ideal does not equal all length-2 paths")
    witness = minimal_bad_single_subquiver(q, mode=mode,
                                           naive_limit=naive_limit)
    if witness is None:
        return vd.verdict(
            vd.FINITE, "separated-quiver-criterion",
            "every single subquiver of the separated quiver is a disjoint "
            "union of Dynkin graphs",
            trace=(f"separated-quiver-criterion[{mode}]",))
    payload = witness.to_payload()
    payload["component_types"] = list(witness.report().tags())
    return vd.verdict(
        vd.INFINITE, "separated-quiver-criterion",
        "a single subquiver of the separated quiver contains a non-Dynkin "
        "component",
        witness=payload,
        trace=(f"separated-quiver-criterion[{mode}]",))


# ---------------------------------------------------------------------------
# cycle witness for self-tensor products


def find_oriented_cycle(quiver):
    """A simple oriented cycle of length >= 2, as a vertex list, or None."""
    out = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        if a.source != a.target:
            out[a.source].append(a.target)
    color = {v: 0 for v in quiver.vertices}
    stack_pos = {}

    def visit(v, stack):
        color[v] = 1
        stack_pos[v] = len(stack)
        stack.append(v)
        for w in out[v]:
            if color[w] == 1:
                return stack[stack_pos[w]:]
            if color[w] == 0:
                cyc = visit(w, stack)
                if cyc is not None:
                    return cyc
        color[v] = 2
        stack.pop()
        del stack_pos[v]
        return None

    for v in quiver.vertices:
        if color[v] == 0:
            cyc = visit(v, [])
            if cyc is not None:
                return cyc
    return None


def _first_arrow(quiver, u, v):
    for a in quiver.arrows:
        if a.source == u and a.target == v:
            return a
    raise AssertionError(f"no arrow {u} -> {v}")


def cycle_witness(pres):
    """Non-Dynkin single subquiver inside the separated self-tensor quiver.

    From an oriented cycle v_1 .. v_n the witness takes the tensor vertices
    (v_k, v_{-k}) on side 0 and (v_{k+1}, v_{-k}) on side 1 (indices mod n);
    consecutive choices share an arrow, closing an undirected cycle of
    length 2n.
    """
    cyc = find_oriented_cycle(pres.quiver)
    if cyc is None:
        raise NoOrientedCycleError(
            "no oriented cycle of length >= 2 (loops do not count)")
    n = len(cyc)
    ambient = tensor_product(rad_square_quotient(pres),
                             rad_square_quotient(pres)).quiver
    sides = {}
    for k in range(n):
        sides[tensor_vertex(cyc[k % n], cyc[(-k) % n])] = 0
        sides[tensor_vertex(cyc[(k + 1) % n], cyc[(-k) % n])] = 1
    return induced_single_subquiver(ambient, sides)


def self_tensor_separated_quiver(pres):
    """Ambient separated quiver that cycle witnesses live in."""
    ambient = tensor_product(rad_square_quotient(pres),
                             rad_square_quotient(pres)).quiver
    return separated_quiver(ambient)
