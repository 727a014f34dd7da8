"""Renaming-based inference relations over (B)MCRs.

For each relation, every class of occurrences gets its own variable; the
query is then checked classically against the renamed base, once per way of
renaming the query's shared variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any

from .formula import And, Base, Formula, Not, Var, substitute, variables
from .relations import DEFAULT_OCC_CAP, OccRelation, enumerate_bmcrs, enumerate_mcrs
from .semantics import entails


@dataclass(frozen=True)
class Verdict:
    """Outcome of one query, with data explaining it."""

    relation: str
    holds: bool
    witness: dict[str, Any] = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ClassRenaming:
    base: Base
    relation: OccRelation
    names: dict[tuple[int, ...], str]

    def __call__(self, ordinal: int) -> str:
        return self.names[self.relation.block_of[ordinal]]

    def names_of(self, var: str) -> tuple[str, ...]:
        """The names given to the classes of ``var``, in class order."""
        return tuple(self.names[b] for b in self.relation.by_var[var])

    @cached_property
    def formulas(self) -> tuple[Formula, ...]:
        """The renamed base."""
        counter = 0

        def go(g: Formula) -> Formula:
            nonlocal counter
            if isinstance(g, Var):
                counter += 1
                return Var(self(counter))
            if isinstance(g, Not):
                return Not(go(g.arg))
            return And(go(g.left), go(g.right))

        return tuple(go(f) for f in self.base.formulas)


def build_renaming(base: Base, mcr: OccRelation, avoid=(), check: bool = True) -> ClassRenaming:
    """Name every class of ``mcr``.

    A class holding all occurrences of ``p`` is named ``p``; otherwise the
    classes of ``p`` become ``p__1``, ``p__2``, ... in class order, with
    trailing underscores added until the name clashes with nothing in the
    base or in ``avoid``.
    """
    if check and mcr not in enumerate_mcrs(base):
        raise ValueError("relation is not an MCR of the base")
    used = set(base.variables) | set(avoid)
    names: dict[tuple[int, ...], str] = {}
    for var, blocks in mcr.parts:
        if len(blocks) == 1:
            names[blocks[0]] = var
            continue
        for i, blk in enumerate(blocks, start=1):
            name = f"{var}__{i}"
            while name in used:
                name += "_"
            used.add(name)
            names[blk] = name
    return ClassRenaming(base, mcr, names)


def shared_variables(base: Base, phi: Formula) -> tuple[str, ...]:
    return tuple(sorted(set(base.variables) & variables(phi)))


def _renaming_query(base, phi, relations, relation_name: str, every_tuple: bool) -> Verdict:
    shared = shared_variables(base, phi)
    avoid = variables(phi)
    per_relation = []
    for rel in relations:
        rho = build_renaming(base, rel, avoid, check=False)
        premises = list(rho.formulas)
        choices = [rho.names_of(p) for p in shared]
        outcome = None
        for combo in product(*choices):
            ok = entails(premises, (), substitute(phi, dict(zip(shared, combo))))
            if ok and not every_tuple:
                outcome = combo
                break
            if not ok and every_tuple:
                return Verdict(relation_name, False, {
                    "relation": rel, "tuple": dict(zip(shared, combo)), "renaming": rho})
        if not every_tuple:
            if outcome is None:
                return Verdict(relation_name, False, {"relation": rel, "renaming": rho})
            per_relation.append((rel, dict(zip(shared, outcome))))
    return Verdict(relation_name, True, {"witnesses": per_relation} if not every_tuple else {})


def infer1(base: Base, phi: Formula, cap: int = DEFAULT_OCC_CAP) -> Verdict:
    """Every MCR admits some renaming of ``phi`` entailed by the renamed base."""
    return _renaming_query(base, phi, enumerate_mcrs(base, cap), "m1", every_tuple=False)


def infer2(base: Base, phi: Formula, cap: int = DEFAULT_OCC_CAP) -> Verdict:
    """Every MCR entails every renaming of ``phi``."""
    return _renaming_query(base, phi, enumerate_mcrs(base, cap), "m2", every_tuple=True)


def infer1b(base: Base, phi: Formula, cap: int = DEFAULT_OCC_CAP) -> Verdict:
    return _renaming_query(base, phi, enumerate_bmcrs(base, cap), "mb1", every_tuple=False)


def infer2b(base: Base, phi: Formula, cap: int = DEFAULT_OCC_CAP) -> Verdict:
    return _renaming_query(base, phi, enumerate_bmcrs(base, cap), "mb2", every_tuple=True)
