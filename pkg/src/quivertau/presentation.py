"""Bound quiver presentations: parsing, validation, exact dimensions.

A presentation is a finite quiver together with admissible relations
(rational linear combinations of parallel paths of length >= 2); it stands
for the quotient of the path algebra by the ideal those relations generate.
All coefficients are exact rationals and every operation here is a pure
function of its inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import SparseSpace

SIMPLY_CONNECTED = "SimplyConnected"
NOT_SIMPLY_CONNECTED = "NotSimplyConnected"
LIKELY_SIMPLY_CONNECTED = "LikelySimplyConnected"


class QuivertauError(Exception):
    """Base class for all library errors."""


class ParseError(QuivertauError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CyclicQuiverError(QuivertauError):
    pass


class DisconnectedError(QuivertauError):
    pass


class NotSimplyConnectedError(QuivertauError):
    pass


class UnknownVertexError(QuivertauError):
    pass


class UnknownArrowError(QuivertauError):
    pass


class InvalidExtraRelationError(QuivertauError):
    pass


class SizeLimitError(QuivertauError):
    pass


class NotRadicalSquareZeroError(QuivertauError):
    pass


class UnsupportedLoopError(QuivertauError):
    pass


class NoOrientedCycleError(QuivertauError):
    pass


class InvariantViolationError(QuivertauError):
    """An internal consistency condition failed; report as a bug."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph. Vertex ids and arrow names are unique."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def arrow(self, name):
        for a in self.arrows:
            if a.name == name:
                return a
        raise UnknownArrowError(name)

    def arrows_by_name(self):
        return {a.name: a for a in self.arrows}

    def out_arrows(self, v):
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v):
        return [a for a in self.arrows if a.target == v]

    def is_acyclic(self):
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a.target)
        state = {v: 0 for v in self.vertices}  # 0 new, 1 open, 2 done

        def visit(v):
            stack = [(v, iter(out[v]))]
            state[v] = 1
            while stack:
                u, it = stack[-1]
                advanced = False
                for w in it:
                    if state[w] == 1:
                        return False
                    if state[w] == 0:
                        state[w] = 1
                        stack.append((w, iter(out[w])))
                        advanced = True
                        break
                if not advanced:
                    state[u] = 2
                    stack.pop()
            return True

        for v in self.vertices:
            if state[v] == 0 and not visit(v):
                return False
        return True

    def is_connected(self):
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(self.vertices)

    def has_multiple_arrows(self):
        seen = set()
        for a in self.arrows:
            key = (a.source, a.target)
            if key in seen:
                return True
            seen.add(key)
        return False

    def has_loop(self):
        return any(a.source == a.target for a in self.arrows)


@dataclass(frozen=True)
class Relation:
    """Rational combination of parallel paths, each a tuple of arrow names."""

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]

    def paths(self):
        return [p for _, p in self.terms]

    def is_monomial(self):
        return len(self.terms) == 1


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple[Relation, ...]


@dataclass(frozen=True)
class Violation:
    code: str
    where: str
    detail: str


@dataclass(frozen=True)
class DimensionTable:
    """Per vertex pair: basis paths of e_i A e_j and their count."""

    pairs: tuple[tuple[tuple[str, str], tuple[tuple[str, ...], ...]], ...]
    total: int

    def basis(self, i, j):
        for (a, b), paths in self.pairs:
            if (a, b) == (i, j):
                return paths
        return ()

    def dim(self, i, j):
        return len(self.basis(i, j))

    def as_dict(self):
        return {pair: paths for pair, paths in self.pairs}


@dataclass(frozen=True)
class Profile:
    simple_count: int
    is_acyclic: bool
    is_connected: bool
    is_tree: bool
    is_local: bool
    is_hereditary: bool
    is_linear_nakayama: bool
    is_radical_square_zero: bool | None
    is_schurian: bool | None
    has_multiple_arrows: bool


def path_key(path):
    """Sort key for paths: by length, then by arrow name sequence."""
    return (len(path), path)


def path_source(quiver, path):
    return quiver.arrow(path[0]).source


def path_target(quiver, path):
    return quiver.arrow(path[-1]).target


def path_is_composable(quiver, path):
    by_name = quiver.arrows_by_name()
    for x, y in zip(path, path[1:]):
        if x not in by_name or y not in by_name:
            return False
        if by_name[x].target != by_name[y].source:
            return False
    return path[0] in by_name


# ---------------------------------------------------------------------------
# quiver file format


_NAME_BAD = re.compile(r"[\s#*]")
_ARROW_LINE = re.compile(r"^arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_TERM = re.compile(r"^(-?\d+)(?:/(\d+))?\*(\S+)$")


def _check_name(name, what, lineno):
    if not name or _NAME_BAD.search(name) or "->" in name:
        raise ParseError(f"bad {what} name {name!r}", lineno)
    if what == "arrow" and "." in name:
        raise ParseError(f"bad arrow name {name!r} (no dots allowed)", lineno)


def _parse_term(token, lineno):
    m = _TERM.match(token)
    if not m:
        raise ParseError(f"bad relation term {token!r}", lineno)
    num, den, pathtxt = m.groups()
    coeff = Fraction(int(num), int(den) if den else 1)
    if coeff == 0:
        raise ParseError("zero coefficient in relation term", lineno)
    return coeff, tuple(pathtxt.split("."))


def parse_presentation(text):
    """Parse the line-oriented quiver file format into a Presentation."""
    vertices = []
    arrows = []
    relations = []
    vertex_set = set()
    arrow_names = {}

    def resolve_path(path, lineno):
        for name in path:
            if name not in arrow_names:
                raise ParseError(f"unknown arrow {name!r} in path", lineno)
        for x, y in zip(path, path[1:]):
            if arrow_names[x].target != arrow_names[y].source:
                raise ParseError(
                    f"path not composable at {x!r}.{y!r}", lineno)
        return path

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertex "):
            name = line[len("vertex "):].strip()
            _check_name(name, "vertex", lineno)
            if name in vertex_set:
                raise ParseError(f"duplicate vertex {name!r}", lineno)
            vertex_set.add(name)
            vertices.append(name)
        elif line.startswith("arrow "):
            m = _ARROW_LINE.match(line)
            if not m:
                raise ParseError("malformed arrow line", lineno)
            name, src, tgt = m.groups()
            _check_name(name, "arrow", lineno)
            if name in arrow_names:
                raise ParseError(f"duplicate arrow {name!r}", lineno)
            for v in (src, tgt):
                if v not in vertex_set:
                    raise ParseError(f"unknown vertex {v!r}", lineno)
            a = Arrow(name, src, tgt)
            arrow_names[name] = a
            arrows.append(a)
        elif line.startswith("zero "):
            path = tuple(line[len("zero "):].strip().split("."))
            resolve_path(path, lineno)
            if len(path) < 2:
                raise ParseError("relation term of length < 2", lineno)
            relations.append(Relation(((Fraction(1), path),)))
        elif line.startswith("relation "):
            tokens = line[len("relation "):].split()
            terms = []
            sign = 1
            expect_term = True
            for tok in tokens:
                if not expect_term and tok in "+-":
                    sign = 1 if tok == "+" else -1
                    expect_term = True
                    continue
                if not expect_term:
                    raise ParseError(f"expected + or - before {tok!r}", lineno)
                coeff, path = _parse_term(tok, lineno)
                resolve_path(path, lineno)
                if len(path) < 2:
                    raise ParseError("relation term of length < 2", lineno)
                terms.append((sign * coeff, path))
                sign = 1
                expect_term = False
            if expect_term:
                raise ParseError("relation with no terms", lineno)
            relations.append(Relation(tuple(terms)))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)

    pres = Presentation(Quiver(tuple(vertices), tuple(arrows)),
                        tuple(relations))
    _check_relations_parallel(pres)
    return pres


def _check_relations_parallel(pres):
    for rel in pres.relations:
        paths = rel.paths()
        src = {path_source(pres.quiver, p) for p in paths}
        tgt = {path_target(pres.quiver, p) for p in paths}
        if len(src) > 1 or len(tgt) > 1:
            raise ParseError(f"relation terms not parallel: {paths}")


def _format_coeff(coeff, path):
    c = f"{coeff.numerator}"
    if coeff.denominator != 1:
        c += f"/{coeff.denominator}"
    return f"{c}*{'.'.join(path)}"


def serialize_presentation(pres):
    """Canonical text form; vertices and arrows keep declaration order."""
    lines = [f"vertex {v}" for v in pres.quiver.vertices]
    lines += [f"arrow {a.name} : {a.source} -> {a.target}"
              for a in pres.quiver.arrows]
    rels = []
    for rel in pres.relations:
        terms = sorted(rel.terms, key=lambda t: path_key(t[1]))
        rels.append(tuple(terms))
    rels.sort(key=lambda terms: (path_key(terms[0][1]), terms))
    for terms in rels:
        if len(terms) == 1 and terms[0][0] == 1:
            lines.append(f"zero {'.'.join(terms[0][1])}")
            continue
        first_coeff, first_path = terms[0]
        out = "relation " + _format_coeff(first_coeff, first_path)
        for coeff, path in terms[1:]:
            op = " + " if coeff > 0 else " - "
            out += op + _format_coeff(abs(coeff), path)
        lines.append(out)
    return "\n".join(lines) + "\n"


def canonical_form(pres):
    """Normal form used for equality up to relation reordering."""
    return serialize_presentation(pres)


def validate_presentation(pres, require_acyclic=False):
    """Structural checks; returns a list of Violation records."""
    out = []
    q = pres.quiver
    if len(set(q.vertices)) != len(q.vertices):
        out.append(Violation("DuplicateVertex", "quiver", "vertex ids repeat"))
    names = [a.name for a in q.arrows]
    if len(set(names)) != len(names):
        out.append(Violation("DuplicateArrow", "quiver", "arrow names repeat"))
    vset = set(q.vertices)
    for a in q.arrows:
        if a.source not in vset or a.target not in vset:
            out.append(Violation("UnknownVertex", a.name,
                                 "arrow endpoint not declared"))
    if not q.is_connected():
        out.append(Violation("Disconnected", "quiver",
                             "underlying graph is not connected"))
    if require_acyclic and not q.is_acyclic():
        out.append(Violation("CyclicQuiver", "quiver",
                             "oriented cycle present"))
    by_name = q.arrows_by_name()
    for idx, rel in enumerate(pres.relations):
        where = f"relation {idx}"
        if not rel.terms:
            out.append(Violation("EmptyRelation", where, "no terms"))
            continue
        srcs, tgts = set(), set()
        for coeff, path in rel.terms:
            if coeff == 0:
                out.append(Violation("ZeroCoefficient", where, str(path)))
            if len(path) < 2:
                out.append(Violation("ShortRelationTerm", where, str(path)))
                continue
            if any(n not in by_name for n in path):
                out.append(Violation("UnknownArrow", where, str(path)))
                continue
            if not path_is_composable(q, path):
                out.append(Violation("NonComposablePath", where, str(path)))
                continue
            srcs.add(path_source(q, path))
            tgts.add(path_target(q, path))
        if len(srcs) > 1 or len(tgts) > 1:
            out.append(Violation("NonParallelRelation", where,
                                 "terms have different endpoints"))
    return out


def require_valid(pres, require_acyclic=False):
    violations = validate_presentation(pres, require_acyclic=require_acyclic)
    if violations:
        codes = {v.code for v in violations}
        if codes == {"Disconnected"}:
            raise DisconnectedError(violations)
        if "CyclicQuiver" in codes:
            raise CyclicQuiverError(violations)
        raise QuivertauError(violations)


# ---------------------------------------------------------------------------
# paths and dimensions


@lru_cache(maxsize=None)
def all_paths(quiver):
    """All nonempty paths of an acyclic quiver, grouped by (source, target).

    Each value list is sorted by path_key, so downstream elimination and
    basis choices are deterministic.
    """
    if not quiver.is_acyclic():
        raise CyclicQuiverError("path enumeration needs an acyclic quiver")
    out_by_vertex = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        out_by_vertex[a.source].append(a)
    grouped = {}

    def extend(src, prefix, at):
        for a in out_by_vertex[at]:
            path = prefix + (a.name,)
            grouped.setdefault((src, a.target), []).append(path)
            extend(src, path, a.target)

    for v in quiver.vertices:
        extend(v, (), v)
    return {pair: tuple(sorted(ps, key=path_key))
            for pair, ps in grouped.items()}


def _ideal_spaces(pres):
    """Per vertex pair, the subspace of kQ spanned by the padded relations."""
    q = pres.quiver
    paths = all_paths(q)
    spaces = {}
    for rel in pres.relations:
        if not rel.terms:
            continue
        a = path_source(q, rel.terms[0][1])
        b = path_target(q, rel.terms[0][1])
        lefts = [()] + [p for (x, y), ps in paths.items() if y == a
                        for p in ps]
        rights = [()] + [p for (x, y), ps in paths.items() if x == b
                         for p in ps]
        for left in lefts:
            lsrc = path_source(q, left) if left else a
            for right in rights:
                rtgt = path_target(q, right) if right else b
                vec = {}
                for coeff, mid in rel.terms:
                    key = left + mid + right
                    vec[key] = vec.get(key, Fraction(0)) + coeff
                vec = {k: c for k, c in vec.items() if c}
                if not vec:
                    continue
                pair = (lsrc, rtgt)
                space = spaces.get(pair)
                if space is None:
                    space = spaces[pair] = SparseSpace(path_key)
                space.add(vec)
    return spaces


@lru_cache(maxsize=None)
def dimension_table(pres):
    """Exact basis of e_i(kQ/I)e_j per pair; needs an acyclic quiver."""
    q = pres.quiver
    if not q.is_acyclic():
        raise CyclicQuiverError("dimension table needs an acyclic quiver")
    paths = all_paths(q)
    spaces = _ideal_spaces(pres)
    pairs = []
    total = 0
    for i in q.vertices:
        for j in q.vertices:
            basis = []
            if i == j:
                basis.append(())  # the idempotent e_i
            candidates = paths.get((i, j), ())
            space = spaces.get((i, j))
            if space is None:
                basis.extend(candidates)
            else:
                pivots = space.pivots()
                basis.extend(p for p in candidates if p not in pivots)
            if basis:
                pairs.append(((i, j), tuple(sorted(basis, key=path_key))))
                total += len(basis)
    return DimensionTable(tuple(pairs), total)


def ideal_membership_spaces(pres):
    """Public handle on the per-pair relation ideal subspaces."""
    return _ideal_spaces(pres)


def path_is_zero(pres, path, spaces=None):
    """True if the path lies in the relation ideal."""
    if spaces is None:
        spaces = _ideal_spaces(pres)
    pair = (path_source(pres.quiver, path), path_target(pres.quiver, path))
    space = spaces.get(pair)
    return space is not None and space.contains({path: Fraction(1)})


# ---------------------------------------------------------------------------
# structural operations


def opposite(pres):
    """Reverse all arrows; relation paths are read backwards."""
    q = pres.quiver
    arrows = tuple(Arrow(a.name, a.target, a.source) for a in q.arrows)
    rels = tuple(
        Relation(tuple((coeff, tuple(reversed(path)))
                       for coeff, path in rel.terms))
        for rel in pres.relations)
    return Presentation(Quiver(q.vertices, arrows), rels)


def quotient(pres, killed_vertices=(), killed_arrows=(), extra_relations=()):
    """Kill vertices/arrows and add relations; relations are re-imaged.

    A relation term survives only if none of its arrows dies; relations
    with no surviving terms are dropped.
    """
    q = pres.quiver
    killed_vertices = set(killed_vertices)
    killed_arrows = set(killed_arrows)
    vset = set(q.vertices)
    for v in killed_vertices:
        if v not in vset:
            raise UnknownVertexError(v)
    by_name = q.arrows_by_name()
    for a in killed_arrows:
        if a not in by_name:
            raise UnknownArrowError(a)
    dead_arrows = set(killed_arrows)
    for a in q.arrows:
        if a.source in killed_vertices or a.target in killed_vertices:
            dead_arrows.add(a.name)
    vertices = tuple(v for v in q.vertices if v not in killed_vertices)
    arrows = tuple(a for a in q.arrows if a.name not in dead_arrows)
    rels = []
    for rel in pres.relations:
        terms = tuple((c, p) for c, p in rel.terms
                      if not any(n in dead_arrows for n in p))
        if terms:
            rels.append(Relation(terms))
    surviving = Quiver(vertices, arrows)
    for rel in extra_relations:
        for coeff, path in rel.terms:
            if len(path) < 2 or coeff == 0:
                raise InvalidExtraRelationError(rel)
            if not all(n in {a.name for a in arrows} for n in path):
                raise InvalidExtraRelationError(rel)
            if not path_is_composable(surviving, path):
                raise InvalidExtraRelationError(rel)
        rels.append(rel)
    return Presentation(surviving, tuple(rels))


# ---------------------------------------------------------------------------
# profile and simply-connectedness proxy


def _is_linear_nakayama(quiver):
    """True when the quiver is the linearly oriented line 1 -> 2 -> ... -> n."""
    n = len(quiver.vertices)
    if len(quiver.arrows) != n - 1:
        return False
    if n == 1:
        return True
    outdeg = {v: 0 for v in quiver.vertices}
    indeg = {v: 0 for v in quiver.vertices}
    for a in quiver.arrows:
        if a.source == a.target:
            return False
        outdeg[a.source] += 1
        indeg[a.target] += 1
    sources = [v for v in quiver.vertices if indeg[v] == 0]
    if len(sources) != 1:
        return False
    at = sources[0]
    seen = 1
    while outdeg[at] == 1:
        nxt = [a.target for a in quiver.arrows if a.source == at]
        at = nxt[0]
        seen += 1
        if indeg[at] != 1:
            return False
    return outdeg[at] == 0 and seen == n


def linear_order(quiver):
    """Vertex order along a linearly oriented line quiver, else None."""
    if not _is_linear_nakayama(quiver):
        return None
    indeg = {v: 0 for v in quiver.vertices}
    for a in quiver.arrows:
        indeg[a.target] += 1
    at = [v for v in quiver.vertices if indeg[v] == 0][0]
    order = [at]
    while True:
        nxt = [a.target for a in quiver.arrows if a.source == at]
        if not nxt:
            return order
        at = nxt[0]
        order.append(at)


def structural_profile(pres):
    """Structural flags; dimension-based flags are None on cyclic quivers."""
    q = pres.quiver
    acyclic = q.is_acyclic()
    connected = q.is_connected()
    tree = connected and len(q.arrows) == len(q.vertices) - 1 \
        and not q.has_multiple_arrows() and not q.has_loop()
    rsz = None
    schurian = None
    if acyclic:
        table = dimension_table(pres)
        rsz = all(len(p) <= 1 for _, paths in table.pairs for p in paths)
        schurian = all(len(paths) <= 1 for _, paths in table.pairs)
    return Profile(
        simple_count=len(q.vertices),
        is_acyclic=acyclic,
        is_connected=connected,
        is_tree=tree,
        is_local=len(q.vertices) == 1,
        is_hereditary=len(pres.relations) == 0,
        is_linear_nakayama=_is_linear_nakayama(q),
        is_radical_square_zero=rsz,
        is_schurian=schurian,
        has_multiple_arrows=q.has_multiple_arrows(),
    )


def homology_rank(pres):
    """Abelianized simple-connectedness proxy.

    Rank = dim(cycle space of the underlying graph) minus the rank of the
    cells attached by multi-term relations (each pair of parallel relation
    paths spans the cycle w_i - w_1).  A positive rank certifies a
    nontrivial fundamental group; rank zero on a non-tree is only evidence.
    """
    q = pres.quiver
    if not q.is_connected():
        raise DisconnectedError("homology proxy needs a connected quiver")
    cycle_rank = len(q.arrows) - len(q.vertices) + 1
    is_tree = cycle_rank == 0 and not q.has_loop()
    if is_tree:
        return 0, SIMPLY_CONNECTED

    def edge_vector(path):
        vec = {}
        for name in path:
            vec[name] = vec.get(name, Fraction(0)) + 1
        return vec

    cells = SparseSpace(lambda k: k)
    for rel in pres.relations:
        if len(rel.terms) < 2:
            continue
        base = edge_vector(rel.terms[0][1])
        for _, path in rel.terms[1:]:
            vec = dict(base)
            for name, c in edge_vector(path).items():
                new = vec.get(name, Fraction(0)) - c
                if new:
                    vec[name] = new
                else:
                    vec.pop(name, None)
            cells.add(vec)
    rank = cycle_rank - cells.rank
    if rank > 0:
        return rank, NOT_SIMPLY_CONNECTED
    return 0, LIKELY_SIMPLY_CONNECTED


def presentations_equal(p1, p2):
    """Equality up to canonical reordering of relations and terms."""
    return canonical_form(p1) == canonical_form(p2)
