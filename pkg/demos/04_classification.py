"""Walkthrough: the finiteness classifier and its certificates.

Every verdict names the rule that fired, a one-line statement of it, the
consultation trace, and a machine-checkable witness when one exists.
Open is a first-class answer: it marks the cells no implemented rule
decides.
"""

import json

from quivertau import (
    catalog_get,
    classify_enveloping,
    classify_tensor,
    classify_triple,
    parse_presentation,
)
from quivertau.table import run_table

C = catalog_get


def show(label, verdict):
    cert = verdict.certificate
    print(f"{label}: {verdict.status}   [{cert.rule}]")
    if cert.witness is not None and cert.witness.get("frame"):
        print(f"    witness frame {cert.witness['frame']} "
              f"of type {cert.witness['claimed_type']}")


# Hereditary pairs: finite only for the 2-line against a line on at most
# four vertices.
show("2-line x 4-line", classify_tensor(C("A(2,+)"), C("A(4,+-+)")))
show("2-line x 5-line", classify_tensor(C("A(2,+)"), C("A(5,++++)")))
show("3-line x 3-line", classify_tensor(C("A(3,++)"), C("A(3,-+)")))

# Radical-square-zero lines against the stored obstructions.
show("N(3) x one-sink line", classify_tensor(C("N(3)"), C("B1")))
show("N(3) x two-zero star", classify_tensor(C("N(3)"), C("L42")))
show("N(4) x zero-cube line", classify_tensor(C("N(4)"), C("LNak4")))

# Undecided cells stay open, with the trace naming the nearest rule.
verdict = classify_tensor(C("N(3)"), C("LNak4"))
show("N(3) x zero-cube line", verdict)
print("    trace:", " | ".join(verdict.certificate.trace[-2:]))

# The enveloping algebra is finite only for radical-square-zero lines.
show("enveloping of N(4)", classify_enveloping(C("N(4)")))
show("enveloping of B1", classify_enveloping(C("B1")))

# Three non-local factors are always infinite.
show("triple of 2-lines",
     classify_triple(C("A(2,+)"), C("A(2,+)"), C("A(2,+)")))

# A custom input from a quiver file body.
custom = parse_presentation("""\
vertex 1
vertex 2
vertex 3
vertex 4
arrow α : 1 -> 2
arrow γ : 1 -> 3
arrow β : 2 -> 4
arrow δ : 3 -> 4
relation 1*α.β - 1*γ.δ
""")
verdict = classify_tensor(C("N(4)"), custom)
show("N(4) x commutative square", verdict)
print("    as JSON:", json.dumps(verdict.to_json(), sort_keys=True,
                                 ensure_ascii=False)[:120], "...")

# The built-in golden suite covers every cell of the classification table.
rows, all_ok = run_table()
print(f"\ngolden table: {sum(r['ok'] for r in rows)}/{len(rows)} verdicts "
      f"match ({'all good' if all_ok else 'MISMATCH'})")
