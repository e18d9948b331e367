"""Named algebras, witness frames, isomorphism and quotient search.

The catalog stores the small bound quiver algebras the classifier needs as
obstructions or finite cases, plus witness frames: marked vertex sets
inside specific tensor products whose induced quotients certify infinite
verdicts.  Frame type labels are recorded data; the structural parts of a
frame are re-verified, the labels are not re-derived.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .presentation import (
    Arrow,
    Presentation,
    Quiver,
    QuivertauError,
    Relation,
    SizeLimitError,
    ideal_membership_spaces,
    path_source,
    path_target,
    quotient,
    validate_presentation,
)
from .sepgraph import GraphType, classify_graph, euclidean_size, underlying_graph
from .tensor import tensor_product, tensor_vertex


class UnknownIdError(QuivertauError):
    pass


class BadParameterError(QuivertauError):
    pass


class UnknownFrameError(QuivertauError):
    pass


class MalformedFrameError(QuivertauError):
    pass


def _line_quiver(n, eps, arrow_prefix="a"):
    if len(eps) != n - 1 or any(c not in "+-" for c in eps):
        raise BadParameterError(f"orientation {eps!r} needs length {n - 1}")
    vertices = tuple(str(i) for i in range(1, n + 1))
    arrows = []
    for i, c in enumerate(eps, start=1):
        if c == "+":
            arrows.append(Arrow(f"{arrow_prefix}{i}", str(i), str(i + 1)))
        else:
            arrows.append(Arrow(f"{arrow_prefix}{i}", str(i + 1), str(i)))
    return Quiver(vertices, tuple(arrows))


def _n_algebra(n):
    if n < 1:
        raise BadParameterError("N(n) needs n >= 1")
    q = _line_quiver(n, "+" * (n - 1))
    rels = tuple(Relation(((Fraction(1), (f"a{i}", f"a{i+1}")),))
                 for i in range(1, n - 1))
    return Presentation(q, rels)


def _a_algebra(n, eps):
    if n < 1:
        raise BadParameterError("A(n,eps) needs n >= 1")
    return Presentation(_line_quiver(n, eps), ())


def _d_algebra(n, eps):
    if n < 4:
        raise BadParameterError("D(n,eps) needs n >= 4")
    if len(eps) != n - 1 or any(c not in "+-" for c in eps):
        raise BadParameterError(f"orientation {eps!r} needs length {n - 1}")
    vertices = tuple(str(i) for i in range(1, n + 1))
    edges = [("1", "3"), ("2", "3")] + [(str(i), str(i + 1))
                                        for i in range(3, n)]
    arrows = []
    for i, ((u, v), c) in enumerate(zip(edges, eps), start=1):
        if c == "+":
            arrows.append(Arrow(f"a{i}", u, v))
        else:
            arrows.append(Arrow(f"a{i}", v, u))
    return Presentation(Quiver(vertices, tuple(arrows)), ())


def _mono(*paths):
    return tuple(Relation(((Fraction(1), tuple(p.split("."))),))
                 for p in paths)


def _fixed_catalog():
    out = {}

    out["B1"] = Presentation(
        Quiver(("1", "2", "3", "4"),
               (Arrow("α", "1", "2"), Arrow("β", "3", "2"),
                Arrow("γ", "4", "3"))),
        _mono("γ.β"))

    out["L42"] = Presentation(
        Quiver(("1", "2", "3", "4"),
               (Arrow("α", "1", "3"), Arrow("β", "3", "2"),
                Arrow("γ", "4", "3"))),
        _mono("α.β", "γ.β"))

    out["L43square"] = Presentation(
        Quiver(("1", "2", "3", "4"),
               (Arrow("α", "1", "2"), Arrow("γ", "1", "3"),
                Arrow("β", "2", "4"), Arrow("δ", "3", "4"))),
        _mono("α.β", "γ.δ"))

    out["B5_1"] = Presentation(
        Quiver(("1", "2", "3", "4", "5"),
               (Arrow("α", "1", "2"), Arrow("β", "3", "2"),
                Arrow("γ", "4", "3"), Arrow("δ", "5", "4"))),
        _mono("δ.γ", "γ.β"))

    out["B5_2"] = Presentation(
        Quiver(("1", "2", "3", "4", "5"),
               (Arrow("α", "1", "2"), Arrow("β", "3", "2"),
                Arrow("γ", "4", "3"), Arrow("δ", "4", "5"))),
        _mono("γ.β"))

    out["B5_3"] = Presentation(
        Quiver(("1", "2", "3", "4", "5"),
               (Arrow("α", "1", "2"), Arrow("β", "3", "2"),
                Arrow("γ", "4", "3"), Arrow("δ", "5", "1"))),
        _mono("δ.α", "γ.β"))

    out["B5_4"] = Presentation(
        Quiver(("1", "2", "3", "4", "5"),
               (Arrow("α", "1", "2"), Arrow("β", "3", "2"),
                Arrow("γ", "4", "3"), Arrow("δ", "1", "5"))),
        _mono("γ.β"))

    out["LNak4"] = Presentation(
        Quiver(("1", "2", "3", "4"),
               (Arrow("α", "1", "2"), Arrow("β", "2", "3"),
                Arrow("γ", "3", "4"))),
        _mono("α.β.γ"))

    return out


_FIXED = _fixed_catalog()
_N_RE = re.compile(r"^N\((\d+)\)$")
_A_RE = re.compile(r"^A\((\d+),([+-]*)\)$")
_D_RE = re.compile(r"^D\((\d+),([+-]*)\)$")


def catalog_get(cat_id):
    """Presentation stored under a catalog id such as N(3) or A(4,+-+)."""
    if cat_id in _FIXED:
        return _FIXED[cat_id]
    m = _N_RE.match(cat_id)
    if m:
        return _n_algebra(int(m.group(1)))
    m = _A_RE.match(cat_id)
    if m:
        return _a_algebra(int(m.group(1)), m.group(2))
    m = _D_RE.match(cat_id)
    if m:
        return _d_algebra(int(m.group(1)), m.group(2))
    raise UnknownIdError(cat_id)


def catalog_ids():
    """Concrete stored ids plus the parameterized family patterns."""
    return tuple(sorted(_FIXED)) + ("N(n)", "A(n,eps)", "D(n,eps)")


# ---------------------------------------------------------------------------
# quiver isomorphism with ideal transport


def _mult_table(quiver):
    mult = {}
    for a in quiver.arrows:
        mult[(a.source, a.target)] = mult.get((a.source, a.target), 0) + 1
    return mult


def _degree_signature(quiver):
    mult = _mult_table(quiver)
    sig = {}
    for v in quiver.vertices:
        outs = sorted(m for (s, t), m in mult.items() if s == v)
        ins = sorted(m for (s, t), m in mult.items() if t == v)
        sig[v] = (tuple(outs), tuple(ins))
    return sig


def _vertex_maps(q1, q2):
    """All quiver-compatible vertex bijections, in deterministic order."""
    if len(q1.vertices) != len(q2.vertices) or \
            len(q1.arrows) != len(q2.arrows):
        return
    m1, m2 = _mult_table(q1), _mult_table(q2)
    sig1, sig2 = _degree_signature(q1), _degree_signature(q2)
    order = list(q1.vertices)
    used = set()
    vmap = {}

    def backtrack(idx):
        if idx == len(order):
            yield dict(vmap)
            return
        u = order[idx]
        for w in q2.vertices:
            if w in used or sig1[u] != sig2[w]:
                continue
            ok = True
            for prev in order[:idx]:
                pw = vmap[prev]
                if m1.get((u, prev), 0) != m2.get((w, pw), 0) or \
                        m1.get((prev, u), 0) != m2.get((pw, w), 0) or \
                        m1.get((u, u), 0) != m2.get((w, w), 0):
                    ok = False
                    break
            if not ok:
                continue
            vmap[u] = w
            used.add(w)
            yield from backtrack(idx + 1)
            del vmap[u]
            used.discard(w)

    yield from backtrack(0)


def _arrow_maps(q1, q2, vmap):
    """All arrow bijections compatible with a vertex bijection."""
    cells1 = {}
    for a in q1.arrows:
        cells1.setdefault((a.source, a.target), []).append(a.name)
    cells2 = {}
    for a in q2.arrows:
        cells2.setdefault((a.source, a.target), []).append(a.name)
    cell_list = sorted(cells1)
    pools = []
    for cell in cell_list:
        target_cell = (vmap[cell[0]], vmap[cell[1]])
        names2 = cells2.get(target_cell, [])
        names1 = cells1[cell]
        if len(names1) != len(names2):
            return
        pools.append([list(zip(names1, perm))
                      for perm in itertools.permutations(names2)])
    for combo in itertools.product(*pools):
        amap = {}
        for pairs in combo:
            for n1, n2 in pairs:
                amap[n1] = n2
        yield amap


def _transported_relation_vectors(pres, amap):
    """Relation vectors of pres with arrows renamed along amap."""
    out = []
    for rel in pres.relations:
        vec = {}
        for coeff, path in rel.terms:
            key = tuple(amap[n] for n in path)
            vec[key] = vec.get(key, Fraction(0)) + coeff
        vec = {k: c for k, c in vec.items() if c}
        if vec:
            out.append(vec)
    return out


def _pair_of_vector(quiver, vec):
    path = next(iter(vec))
    return (path_source(quiver, path), path_target(quiver, path))


def _ideal_contains(target_pres, vectors):
    spaces = ideal_membership_spaces(target_pres)
    for vec in vectors:
        pair = _pair_of_vector(target_pres.quiver, vec)
        space = spaces.get(pair)
        if space is None or not space.contains(vec):
            return False
    return True


def _ideals_equal(pres1, amap, pres2):
    """Does transporting pres1's ideal along amap give exactly pres2's?"""
    vectors = _transported_relation_vectors(pres1, amap)
    if not _ideal_contains(pres2, vectors):
        return False
    # equality needs matching ranks pairwise
    spaces2 = ideal_membership_spaces(pres2)
    transported = Presentation(
        pres2.quiver,
        tuple(Relation(tuple((c, p) for p, c in sorted(v.items())))
              for v in vectors))
    # build spans of the transported ideal inside pres2's quiver
    spaces1 = ideal_membership_spaces(transported)
    pairs = set(spaces1) | set(spaces2)
    for pair in pairs:
        r1 = spaces1[pair].rank if pair in spaces1 else 0
        r2 = spaces2[pair].rank if pair in spaces2 else 0
        if r1 != r2:
            return False
    return True


@dataclass(frozen=True)
class Isomorphism:
    vertex_map: tuple[tuple[str, str], ...]
    arrow_map: tuple[tuple[str, str], ...]

    def to_payload(self):
        return {"vertices": dict(self.vertex_map),
                "arrows": dict(self.arrow_map)}


def is_iso(p1, p2, size_limit=20):
    """Quiver isomorphism carrying the first ideal onto the second, if any."""
    if len(p1.quiver.vertices) > size_limit or \
            len(p2.quiver.vertices) > size_limit:
        raise SizeLimitError("isomorphism search limit exceeded")
    for vmap in _vertex_maps(p1.quiver, p2.quiver):
        for amap in _arrow_maps(p1.quiver, p2.quiver, vmap):
            if _ideals_equal(p1, amap, p2):
                return Isomorphism(tuple(sorted(vmap.items())),
                                   tuple(sorted(amap.items())))
    return None


# ---------------------------------------------------------------------------
# quotient witness search


@dataclass(frozen=True)
class QuotientWitness:
    killed_vertices: tuple[str, ...]
    killed_arrows: tuple[str, ...]
    vertex_map: tuple[tuple[str, str], ...]
    arrow_map: tuple[tuple[str, str], ...]

    def to_payload(self):
        return {
            "kind": "quotient",
            "killed_vertices": list(self.killed_vertices),
            "killed_arrows": list(self.killed_arrows),
            "vertex_map": dict(self.vertex_map),
            "arrow_map": dict(self.arrow_map),
        }


def has_quotient(pres, target, size_limit=16):
    """First witness that ``target`` is a quotient of ``pres``, or None.

    The search kills vertex sets then arrow sets (ascending, declaration
    order), maps the surviving subquiver onto the target quiver, and checks
    that the induced relations land inside the target ideal; containment
    suffices because additional admissible relations may always be imposed.
    """
    if len(pres.quiver.vertices) > size_limit:
        raise SizeLimitError("quotient search limit exceeded")
    nv = len(pres.quiver.vertices) - len(target.quiver.vertices)
    if nv < 0:
        return None
    for killed_vs in itertools.combinations(pres.quiver.vertices, nv):
        after_v = quotient(pres, killed_vs)
        na = len(after_v.quiver.arrows) - len(target.quiver.arrows)
        if na < 0:
            continue
        arrow_names = tuple(a.name for a in after_v.quiver.arrows)
        for killed_as in itertools.combinations(arrow_names, na):
            sub = quotient(pres, killed_vs, killed_as)
            for vmap in _vertex_maps(sub.quiver, target.quiver):
                for amap in _arrow_maps(sub.quiver, target.quiver, vmap):
                    vectors = _transported_relation_vectors(sub, amap)
                    if _ideal_contains(target, vectors):
                        return QuotientWitness(
                            tuple(killed_vs), tuple(killed_as),
                            tuple(sorted(vmap.items())),
                            tuple(sorted(amap.items())))
    return None


def verify_quotient_witness(pres, target, witness):
    """Re-run the containment check for a stored quotient witness."""
    sub = quotient(pres, witness.killed_vertices, witness.killed_arrows)
    vmap = dict(witness.vertex_map)
    amap = dict(witness.arrow_map)
    if sorted(vmap) != sorted(sub.quiver.vertices):
        return False
    if sorted(vmap.values()) != sorted(target.quiver.vertices):
        return False
    for a in sub.quiver.arrows:
        if a.name not in amap:
            return False
        b = target.quiver.arrows_by_name().get(amap[a.name])
        if b is None or vmap[a.source] != b.source or \
                vmap[a.target] != b.target:
            return False
    vectors = _transported_relation_vectors(sub, amap)
    return _ideal_contains(target, vectors)


# ---------------------------------------------------------------------------
# witness frames


@dataclass(frozen=True)
class WitnessFrame:
    frame_id: str
    factors: tuple[str, str]  # catalog ids; ambient = tensor of the two
    marked: tuple[str, ...]
    claimed_type: GraphType
    claim_kind: str  # hereditary-surjection | concealed-quotient
    extra_killed_arrows: tuple[str, ...] = ()
    note: str = ""

    def ambient(self):
        return tensor_product(catalog_get(self.factors[0]),
                              catalog_get(self.factors[1]))

    def to_payload(self):
        return {
            "kind": "frame",
            "frame": self.frame_id,
            "factors": list(self.factors),
            "claimed_type": self.claimed_type.label(),
            "claim_kind": self.claim_kind,
            "marked": list(self.marked),
        }


def _marks(pairs):
    return tuple(tensor_vertex(str(u), str(v)) for u, v in pairs)


_FRAMES = {}


def _add_frame(frame):
    _FRAMES[frame.frame_id] = frame


_add_frame(WitnessFrame(
    "a3a3:++,++", ("A(3,++)", "A(3,++)"),
    _marks([(2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3)]),
    GraphType("D~", 4), "concealed-quotient",
    note="3x3 commutative grid, both lines linearly oriented"))

_add_frame(WitnessFrame(
    "a3a3:++,-+", ("A(3,++)", "A(3,-+)"),
    _marks([(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3)]),
    GraphType("E~", 6), "concealed-quotient",
    note="3x3 commutative grid, second line with a source in the middle"))

_add_frame(WitnessFrame(
    "a3a3:+-,+-", ("A(3,+-)", "A(3,+-)"),
    _marks([(2, 1), (1, 2), (2, 2), (3, 2), (2, 3)]),
    GraphType("D~", 4), "concealed-quotient",
    note="3x3 commutative grid, both lines with a sink in the middle"))

_add_frame(WitnessFrame(
    "a3a3:+-,-+", ("A(3,+-)", "A(3,-+)"),
    _marks([(1, 1), (3, 1), (1, 2), (2, 2), (3, 2), (1, 3), (3, 3)]),
    GraphType("D~", 6), "concealed-quotient",
    note="3x3 commutative grid, sink against source"))

_add_frame(WitnessFrame(
    "a4n3:+-+", ("A(4,+-+)", "N(3)"),
    _marks([(2, 1), (1, 2), (2, 2), (3, 2), (4, 2), (3, 3)]),
    GraphType("D~", 5), "hereditary-surjection",
    note="4-line against the 3-vertex radical-square-zero line; the marked "
         "set induces a hereditary quotient"))

_add_frame(WitnessFrame(
    "a4n3:-++", ("A(4,-++)", "N(3)"),
    _marks([(1, 1), (4, 1), (1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]),
    GraphType("E~", 7), "concealed-quotient",
    note="4-line with a source at position 2 against the 3-vertex "
         "radical-square-zero line"))

_add_frame(WitnessFrame(
    "a4n3:++-", ("A(4,++-)", "N(3)"),
    _marks([(3, 1), (1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3)]),
    GraphType("D~", 5), "concealed-quotient",
    note="4-line with a sink at position 3 against the 3-vertex "
         "radical-square-zero line"))

_add_frame(WitnessFrame(
    "n3-L42", ("L42", "N(3)"),
    _marks([(3, 1), (2, 1), (1, 2), (3, 2), (4, 2), (1, 3), (4, 3)]),
    GraphType("E~", 6), "concealed-quotient",
    note="the one-sink star with two zero compositions, tensored with the "
         "3-vertex radical-square-zero line"))

_add_frame(WitnessFrame(
    "n3-square", ("L43square", "N(3)"),
    _marks([(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]),
    GraphType("A~", 6), "concealed-quotient",
    note="the monomial square tensored with the 3-vertex "
         "radical-square-zero line"))

_add_frame(WitnessFrame(
    "n4-B5_1", ("B5_1", "N(4)"),
    _marks([(2, 1), (1, 2), (2, 2), (3, 2), (1, 3), (3, 3), (4, 3), (4, 4),
            (5, 4)]),
    GraphType("E~", 8), "concealed-quotient",
    note="5-vertex line with two zero compositions against the 4-vertex "
         "radical-square-zero line"))

_add_frame(WitnessFrame(
    "n3-B5_2", ("B5_2", "N(3)"),
    _marks([(2, 1), (1, 2), (2, 2), (3, 2), (5, 2), (1, 3), (3, 3), (4, 3),
            (5, 3)]),
    GraphType("E~", 8), "concealed-quotient",
    note="5-vertex line with one zero composition against the 3-vertex "
         "radical-square-zero line"))

_add_frame(WitnessFrame(
    "n3-B5_3", ("B5_3", "N(3)"),
    _marks([(2, 1), (1, 2), (2, 2), (3, 2), (5, 3), (1, 3), (3, 3), (4, 3)]),
    GraphType("E~", 7), "concealed-quotient",
    note="5-vertex line with two zero compositions against the 3-vertex "
         "radical-square-zero line"))

_add_frame(WitnessFrame(
    "n4-LNak4", ("LNak4", "N(4)"),
    _marks([(4, 1), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3), (1, 4)]),
    GraphType("E~", 7), "concealed-quotient",
    note="4-vertex line with zero length-3 path against the 4-vertex "
         "radical-square-zero line"))


def frame_ids():
    return tuple(sorted(_FRAMES))


def witness_frame(frame_id):
    if frame_id not in _FRAMES:
        raise UnknownFrameError(frame_id)
    return _FRAMES[frame_id]


@dataclass(frozen=True)
class WitnessReport:
    frame_id: str
    quotient_ok: bool
    connected: bool
    marked_count: int
    expected_count: int
    count_anomaly: bool
    hereditary_ok: bool | None
    induced_graph: str | None
    ok: bool
    notes: tuple[str, ...]

    def to_payload(self):
        return {
            "frame": self.frame_id,
            "quotient_ok": self.quotient_ok,
            "connected": self.connected,
            "marked_count": self.marked_count,
            "expected_count": self.expected_count,
            "count_anomaly": self.count_anomaly,
            "hereditary_ok": self.hereditary_ok,
            "induced_graph": self.induced_graph,
            "ok": self.ok,
            "notes": list(self.notes),
        }


def verify_witness(frame):
    """Structural verification of a stored frame.

    Checks that the marked set induces a well-formed connected quotient of
    the ambient tensor presentation; hereditary frames additionally verify
    a zero induced ideal and the exact claimed diagram, concealed frames
    verify the marked count against the claimed type and report anomalies.
    """
    ambient = frame.ambient()
    vset = set(ambient.quiver.vertices)
    marked = set(frame.marked)
    if not marked <= vset:
        raise MalformedFrameError(f"{frame.frame_id}: marked vertices "
                                  "missing from the ambient quiver")
    killed = tuple(v for v in ambient.quiver.vertices if v not in marked)
    notes = []
    try:
        induced = quotient(ambient, killed, frame.extra_killed_arrows)
        violations = [v for v in validate_presentation(induced)
                      if v.code != "Disconnected"]
        quotient_ok = not violations
    except QuivertauError as exc:
        notes.append(f"quotient failed: {exc}")
        induced = None
        quotient_ok = False
    connected = bool(induced) and induced.quiver.is_connected()
    expected = euclidean_size(frame.claimed_type)
    count_anomaly = len(marked) != expected
    if count_anomaly:
        notes.append("count-anomaly (paper figure)")
    hereditary_ok = None
    induced_graph = None
    if induced is not None:
        report = classify_graph(underlying_graph(induced.quiver))
        if len(report.components) == 1:
            induced_graph = report.components[0][1].label()
    if frame.claim_kind == "hereditary-surjection" and induced is not None:
        hereditary_ok = (len(induced.relations) == 0
                         and induced_graph == frame.claimed_type.label()
                         and not count_anomaly)
    if frame.claim_kind == "hereditary-surjection":
        ok = quotient_ok and connected and bool(hereditary_ok)
    else:
        ok = quotient_ok and connected
    return WitnessReport(
        frame_id=frame.frame_id,
        quotient_ok=quotient_ok,
        connected=connected,
        marked_count=len(marked),
        expected_count=expected,
        count_anomaly=count_anomaly,
        hereditary_ok=hereditary_ok,
        induced_graph=induced_graph,
        ok=ok,
        notes=tuple(notes),
    )
