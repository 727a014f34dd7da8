"""Priest's minimally inconsistent Logic of Paradox (LP_m).

Variables take one of the values {0}, {1} or {0, 1}; the last is a glut.
Entailment quantifies over models whose glut set is inclusion-minimal.
Variables never mentioned by an interpretation default to {0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping

from .formula import And, Base, Formula, Not, Var, variables
from .inference import Verdict
from .osem import OInterp
from .relations import OccRelation
from .semantics import CapExceeded

FALSE = frozenset({0})
TRUE = frozenset({1})
BOTH = frozenset({0, 1})
CRISP = (FALSE, TRUE)

DEFAULT_LPM_CAP = 16


@dataclass(frozen=True)
class LPmInterp:
    values: tuple[tuple[str, frozenset], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, Iterable[int]]) -> "LPmInterp":
        return cls(tuple(sorted((v, frozenset(s)) for v, s in mapping.items())))

    def __getitem__(self, var: str) -> frozenset:
        return dict(self.values).get(var, FALSE)

    def as_dict(self) -> dict[str, frozenset]:
        return dict(self.values)

    @property
    def gluts(self) -> frozenset[str]:
        return frozenset(v for v, s in self.values if s == BOTH)

    def with_value(self, var: str, value: Iterable[int]) -> "LPmInterp":
        d = self.as_dict()
        d[var] = frozenset(value)
        return LPmInterp.of(d)

    def describe(self) -> str:
        return "{" + ", ".join(f"{v}: {sorted(s)}" for v, s in self.values) + "}"


def lpm_eval(lam: LPmInterp | Mapping[str, frozenset], f: Formula) -> frozenset:
    """Three-valued value of a core formula."""
    table = lam.as_dict() if isinstance(lam, LPmInterp) else lam

    def go(g: Formula) -> frozenset:
        if isinstance(g, Var):
            return table.get(g.name, FALSE)
        if isinstance(g, Not):
            return frozenset(1 - v for v in go(g.arg))
        if isinstance(g, And):
            a = go(g.left)
            b = go(g.right)
            return frozenset(x * y for x in a for y in b)
        raise TypeError(f"not a core formula: {g!r}")

    return go(f)


def is_lpm_model(lam, formulas: Iterable[Formula]) -> bool:
    return all(1 in lpm_eval(lam, f) for f in formulas)


def minimal_lpm_models(base: Base, extra_vars: Iterable[str] = (), cap: int = DEFAULT_LPM_CAP) -> list[LPmInterp]:
    """Every LP_m model of the base with an inclusion-minimal glut set.

    Interpretations range over the base's variables plus ``extra_vars``; the
    extra variables only take crisp values (a glut on a variable the base
    does not mention is never minimal).  Candidate glut sets are visited by
    size and supersets of glut sets already realized are skipped, so every
    model found is minimal.
    """
    names = list(base.variables)
    extras = sorted(set(extra_vars) - set(names))
    if len(names) + len(extras) > cap:
        raise CapExceeded("LP_m variables", len(names) + len(extras), cap)
    key = ("lpm_minimal", tuple(extras))
    cached = base.cache.get(key)
    if cached is not None:
        return list(cached)
    minimal_gluts: list[frozenset] = []
    found: list[LPmInterp] = []
    for size in range(len(names) + 1):
        for gl in combinations(names, size):
            gset = frozenset(gl)
            if any(m <= gset for m in minimal_gluts):
                continue
            crisp = [v for v in names if v not in gset]
            hit = False
            for combo in product(CRISP, repeat=len(crisp)):
                table = dict(zip(crisp, combo))
                table.update((v, BOTH) for v in gl)
                if is_lpm_model(table, base.formulas):
                    hit = True
                    for extra in product(CRISP, repeat=len(extras)):
                        row = dict(table)
                        row.update(zip(extras, extra))
                        found.append(LPmInterp.of(row))
            if hit:
                minimal_gluts.append(gset)
    found.sort(key=_interp_key)
    base.cache[key] = tuple(found)
    return found


def _interp_key(lam: LPmInterp):
    return tuple((v, sorted(s)) for v, s in lam.values)


def lpm_entails(base: Base, phi: Formula, cap: int = DEFAULT_LPM_CAP) -> Verdict:
    """Every minimal LP_m model of the base satisfies ``phi``.

    Query variables outside the base range over both crisp values.
    """
    extras = variables(phi) - set(base.variables)
    for lam in minimal_lpm_models(base, extras, cap):
        if 1 not in lpm_eval(lam, phi):
            return Verdict("lpm", False, {"lpm_model": lam})
    return Verdict("lpm", True)


def mcr_from_lpm(base: Base, lam: LPmInterp) -> OccRelation:
    """Relation keeping crisp variables whole and splitting gluts by polarity."""
    if not is_lpm_model(lam, base.formulas):
        raise ValueError("interpretation is not an LP_m model of the base")
    blocks = []
    for v, ords in base.occurrences_by_var.items():
        if lam[v] == BOTH:
            blocks.append([k for k in ords if base.positive(k)])
            blocks.append([k for k in ords if not base.positive(k)])
        else:
            blocks.append(list(ords))
    return OccRelation.from_blocks(base, blocks)


def o_interp_from_lpm(base: Base, lam: LPmInterp) -> OInterp:
    """Crisp variables give their value; gluts give 1 to positive, 0 to negative occurrences."""
    values = []
    for o in base.occurrences:
        s = lam[o.var]
        values.append(int(o.positive) if s == BOTH else next(iter(s)))
    return OInterp(tuple(values))


def lpm_from_o_interp(base: Base, mu: OInterp) -> LPmInterp:
    return LPmInterp.of({v: {mu[k] for k in ords}
                         for v, ords in base.occurrences_by_var.items()})
