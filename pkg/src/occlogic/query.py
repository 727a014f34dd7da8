"""One entry point for all inference relations, plus their known ordering."""

from __future__ import annotations

from dataclasses import dataclass

from . import inference, lpm, osem
from .formula import Base, Formula
from .inference import Verdict
from .relations import DEFAULT_OCC_CAP
from .semantics import DEFAULT_BOOL_CAP, entails

RELATIONS = ("classical", "m1", "m2", "mb1", "mb2", "a1", "a2", "b1", "b2", "lpm")

# (smaller, larger): every consequence of the first is one of the second
CONTAINMENTS = (
    ("m2", "m1"),
    ("m2", "mb2"),
    ("m1", "mb1"),
    ("mb2", "mb1"),
    ("m1", "lpm"),
    ("m1", "a1"),
    ("mb1", "b1"),
    ("a1", "b1"),
    ("a1", "lpm"),
)
EQUALITIES = (("a2", "m2"), ("b2", "mb2"))


@dataclass(frozen=True)
class Limits:
    bool_cap: int = DEFAULT_BOOL_CAP
    lpm_cap: int = lpm.DEFAULT_LPM_CAP
    occ_cap: int = DEFAULT_OCC_CAP


def decide(base: Base, phi: Formula, relation: str, limits: Limits = Limits()) -> Verdict:
    if relation == "classical":
        return Verdict("classical", entails(base.formulas, (), phi))
    if relation in ("m1", "m2", "mb1", "mb2"):
        fn = {"m1": inference.infer1, "m2": inference.infer2,
              "mb1": inference.infer1b, "mb2": inference.infer2b}[relation]
        return fn(base, phi, limits.occ_cap)
    if relation in ("a1", "a2", "b1", "b2"):
        fn = {"a1": osem.infer_a1, "a2": osem.infer_a2,
              "b1": osem.infer_b1, "b2": osem.infer_b2}[relation]
        return fn(base, phi, limits.bool_cap)
    if relation == "lpm":
        return lpm.lpm_entails(base, phi, limits.lpm_cap)
    raise ValueError(f"unknown relation {relation!r}; expected one of {', '.join(RELATIONS)}")


def decide_all(base: Base, phi: Formula, limits: Limits = Limits()) -> dict[str, bool]:
    return {r: decide(base, phi, r, limits).holds for r in RELATIONS}


def violations(row: dict[str, bool]) -> list[str]:
    """Containments or equalities that a row of verdicts contradicts."""
    out = [f"{a} ⊆ {b}" for a, b in CONTAINMENTS if row[a] and not row[b]]
    out += [f"{a} = {b}" for a, b in EQUALITIES if row[a] != row[b]]
    return out
