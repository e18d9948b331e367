"""Built-in golden verdict suite covering the classification table.

Each entry pins a pair of simply connected factors and the expected
verdict; the runner reports one line per pair and fails on any mismatch.
Entries cover every combination of factor kinds: radical-square-zero lines
(short and long), deeper Nakayama lines, and non-line algebras with 3, 4,
and 5 or more simple modules, in both factor orders.
"""

from __future__ import annotations

from .catalog import catalog_get
from .classify import classify_tensor
from .presentation import parse_presentation

_INLINE = {
    # line on 4 vertices where only the back composition vanishes; it has
    # no quotient with a zero length-3 path
    "ka4-bc": """
vertex 1
vertex 2
vertex 3
vertex 4
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow c : 3 -> 4
zero b.c
""",
    # commutative square (simply connected; the monomial square is its
    # quotient)
    "comm-square": """
vertex 1
vertex 2
vertex 3
vertex 4
arrow a : 1 -> 2
arrow b : 2 -> 4
arrow c : 1 -> 3
arrow d : 3 -> 4
relation 1*a.b - 1*c.d
""",
    # 5-vertex tree with a 2-in fork and a zero tail composition; neither
    # it nor its opposite has the one-sink 4-line with a zero composition
    # as a quotient
    "fork-tail": """
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
arrow a : 1 -> 3
arrow b : 2 -> 3
arrow c : 3 -> 4
arrow d : 4 -> 5
zero c.d
""",
}


def resolve_algebra(spec):
    """Catalog id or inline table key to a Presentation."""
    if spec in _INLINE:
        return parse_presentation(_INLINE[spec])
    return catalog_get(spec)


GOLDEN_PAIRS = (
    # radical-square-zero lines against each other
    ("rsz-rsz short", "N(3)", "N(3)", "finite"),
    ("rsz-rsz long", "N(3)", "N(7)", "finite"),
    ("rsz-rsz mixed", "N(4)", "N(5)", "finite"),
    # against deeper Nakayama lines
    ("rsz3 vs deep line", "N(3)", "LNak4", "open"),
    ("rsz3 vs deep line, no witness quotient", "N(3)", "ka4-bc", "open"),
    ("rsz4 vs deep line", "N(4)", "LNak4", "infinite"),
    ("rsz4 vs deep line, no witness quotient", "N(4)", "ka4-bc", "open"),
    ("deep line vs rsz3 (swapped)", "LNak4", "N(3)", "open"),
    ("deep line vs deep line", "LNak4", "LNak4", "infinite"),
    # against non-line factors on 3 vertices (hereditary 3-lines)
    ("rsz vs 3-line", "N(3)", "A(3,+-)", "finite"),
    ("rsz vs 3-line (long)", "N(5)", "A(3,-+)", "finite"),
    ("3-line vs rsz (swapped)", "A(3,-+)", "N(6)", "finite"),
    ("3-line vs deep line", "A(3,+-)", "LNak4", "infinite"),
    # against non-line factors on 4 vertices
    ("rsz3 vs one-sink line", "N(3)", "B1", "finite"),
    ("rsz6 vs one-sink line op", "N(6)", "B1", "finite"),
    ("one-sink line vs rsz (swapped)", "B1", "N(3)", "finite"),
    ("rsz3 vs two-zero star", "N(3)", "L42", "infinite"),
    ("rsz4 vs commutative square", "N(4)", "comm-square", "infinite"),
    ("rsz5 vs 4-line hereditary", "N(5)", "A(4,++-)", "infinite"),
    ("rsz4 vs branching hereditary", "N(4)", "D(4,+++)", "infinite"),
    # against non-line factors on 5 or more vertices
    ("rsz3 vs 5-line one zero", "N(3)", "B5_2", "infinite"),
    ("rsz3 vs 5-cycle-shape zeros", "N(3)", "B5_3", "infinite"),
    ("rsz3 vs 5-line two zeros", "N(3)", "B5_1", "open"),
    ("rsz4 vs 5-line two zeros", "N(4)", "B5_1", "infinite"),
    ("rsz3 vs fork without witness quotient", "N(3)", "fork-tail",
     "infinite"),
    ("five-vertex vs rsz4 (swapped)", "B5_2", "N(4)", "infinite"),
    # both factors non-line
    ("one-sink line squared", "B1", "B1", "infinite"),
    ("non-line pair", "B5_2", "B5_3", "infinite"),
    ("deep line vs non-line", "LNak4", "B1", "infinite"),
    ("deep line vs two-zero star", "ka4-bc", "L42", "infinite"),
    # hereditary pairs
    ("2-line vs 4-line", "A(2,+)", "A(4,+-+)", "finite"),
    ("2-line vs 5-line", "A(2,+)", "A(5,++++)", "infinite"),
    ("3-line grid", "A(3,++)", "A(3,-+)", "infinite"),
)


def run_table():
    """Evaluate every golden pair; returns (rows, all_ok)."""
    rows = []
    all_ok = True
    for label, a_spec, b_spec, expected in GOLDEN_PAIRS:
        pa = resolve_algebra(a_spec)
        pb = resolve_algebra(b_spec)
        got = classify_tensor(pa, pb)
        ok = got.status == expected
        all_ok = all_ok and ok
        rows.append({
            "label": label,
            "a": a_spec,
            "b": b_spec,
            "expected": expected,
            "got": got.status,
            "rule": got.certificate.rule,
            "ok": ok,
        })
    return rows, all_ok
