"""Verdicts and machine-checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass

FINITE = "finite"
INFINITE = "infinite"
OPEN = "open"


@dataclass(frozen=True)
class Certificate:
    """Why a verdict holds: fired rule, its statement, optional witness.

    ``witness`` is a JSON-able dict; ``trace`` lists every rule consulted,
    in order, including the ones that did not fire.
    """

    rule: str
    statement: str
    witness: dict | None = None
    trace: tuple[str, ...] = ()


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: Certificate

    def to_json(self):
        cert = self.certificate
        out = {
            "status": self.status,
            "rule": cert.rule,
            "citation": cert.statement,
            "trace": list(cert.trace),
        }
        if cert.witness is not None:
            out["witness"] = cert.witness
        return out


def verdict(status, rule, statement, witness=None, trace=()):
    return Verdict(status, Certificate(rule, statement, witness, tuple(trace)))
