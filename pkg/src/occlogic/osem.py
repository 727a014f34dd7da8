"""Occurrence-based semantics: truth values for occurrences, not variables.

An o-interpretation assigns 0/1 to each occurrence of a base; it is an
o-model when the renamed base R(K) holds under it.  Minimality compares the
sets of same-variable occurrence pairs that disagree (``diff_a``), and for
b-minimality only the positive/negative ones among them (``diff_b``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping

from .formula import Base, Formula, fresh_name, variables
from .inference import Verdict, shared_variables
from .relations import OccRelation, canonical_relation, relation_eqs
from .semantics import DEFAULT_BOOL_CAP, CapExceeded, enumerate_models, evaluate

Pair = tuple[int, int]


@dataclass(frozen=True)
class OInterp:
    """Truth values of a base's occurrences, indexed by ordinal."""

    values: tuple[int, ...]

    @classmethod
    def from_mapping(cls, base: Base, mapping: Mapping[int, int]) -> "OInterp":
        return cls(tuple(int(mapping[o.ordinal]) for o in base.occurrences))

    def __getitem__(self, ordinal: int) -> int:
        return self.values[ordinal - 1]

    def __len__(self) -> int:
        return len(self.values)

    def labelled(self, base: Base) -> dict[str, int]:
        return {o.label: self[o.ordinal] for o in base.occurrences}

    def valuation(self) -> dict[str, int]:
        """The Boolean interpretation of R(K) that this o-interpretation induces."""
        return {fresh_name(k): v for k, v in enumerate(self.values, start=1)}


def is_omodel(base: Base, mu: OInterp) -> bool:
    if len(mu) != len(base.occurrences):
        raise ValueError("o-interpretation does not cover the occurrences of the base")
    omega = mu.valuation()
    return all(evaluate(f, omega) for f in base.renamed)


def _check_cap(base: Base, cap: int) -> None:
    n = len(base.occurrences)
    if n > cap:
        raise CapExceeded("o-model enumeration occurrences", n, cap)


def omodels(base: Base, cap: int = DEFAULT_BOOL_CAP) -> list[OInterp]:
    """All o-models, ordered by their value tuples."""
    _check_cap(base, cap)
    cached = base.cache.get("omodels")
    if cached is not None:
        return list(cached)
    n = len(base.occurrences)
    names = [fresh_name(k) for k in range(1, n + 1)]
    found = [OInterp(tuple(m[x] for x in names))
             for m in enumerate_models(base.renamed, (), names, cap)]
    found.sort(key=lambda mu: mu.values)
    base.cache["omodels"] = tuple(found)
    return found


def diff_a(base: Base, mu: OInterp) -> frozenset[Pair]:
    out = set()
    for ords in base.occurrences_by_var.values():
        out.update((a, b) for a, b in combinations(ords, 2) if mu[a] != mu[b])
    return frozenset(out)


def diff_b(base: Base, mu: OInterp) -> frozenset[Pair]:
    return frozenset((a, b) for a, b in diff_a(base, mu)
                     if base.positive(a) != base.positive(b))


def _minimal_sets(sets: Iterable[frozenset]) -> set[frozenset]:
    distinct = set(sets)
    return {s for s in distinct if not any(t < s for t in distinct)}


def a_minimal_omodels(base: Base, cap: int = DEFAULT_BOOL_CAP) -> list[OInterp]:
    _check_cap(base, cap)
    cached = base.cache.get("a_minimal")
    if cached is not None:
        return list(cached)
    models = omodels(base, cap)
    diffs = {mu: diff_a(base, mu) for mu in models}
    keep = _minimal_sets(diffs.values())
    result = [mu for mu in models if diffs[mu] in keep]
    base.cache["a_minimal"] = tuple(result)
    return result


def b_minimal_omodels(base: Base, cap: int = DEFAULT_BOOL_CAP) -> list[OInterp]:
    """a-minimal o-models whose ``diff_b`` no o-model strictly undercuts."""
    _check_cap(base, cap)
    cached = base.cache.get("b_minimal")
    if cached is not None:
        return list(cached)
    all_b = {diff_b(base, mu) for mu in omodels(base, cap)}
    result = [mu for mu in a_minimal_omodels(base, cap)
              if not any(t < diff_b(base, mu) for t in all_b)]
    base.cache["b_minimal"] = tuple(result)
    return result


def om(base: Base, mcr: OccRelation, cap: int = DEFAULT_BOOL_CAP) -> list[OInterp]:
    """The o-interpretations read off the models of R(K) under ``mcr``'s equalities."""
    names = [fresh_name(o.ordinal) for o in base.occurrences]
    return sorted((OInterp(tuple(m[x] for x in names))
                   for m in enumerate_models(base.renamed, relation_eqs(mcr), names, cap)),
                  key=lambda mu: mu.values)


def relation_of(base: Base, mu: OInterp) -> OccRelation:
    """The canonical relation minus ``diff_a(mu)``: occurrences with equal values."""
    gone = diff_a(base, mu)
    return OccRelation.from_pairs(base, canonical_relation(base).pairs - gone)


def compatible_valuations(base: Base, mu: OInterp, extra_vars: Iterable[str] = ()) -> Iterator[dict[str, int]]:
    """Valuations giving each base variable the value of one of its occurrences.

    Variables outside the base range freely.
    """
    allowed = _allowed_values(base, mu)
    extras = sorted(set(extra_vars) - set(allowed))
    names = sorted(allowed) + extras
    choices = [allowed[v] for v in sorted(allowed)] + [(0, 1)] * len(extras)
    for combo in product(*choices):
        yield dict(zip(names, combo))


def _allowed_values(base: Base, mu: OInterp, only=None) -> dict[str, tuple[int, ...]]:
    return {v: tuple(sorted({mu[k] for k in ords}))
            for v, ords in base.occurrences_by_var.items()
            if only is None or v in only}


def _occurrence_query(base, phi, models, name: str, every: bool) -> Verdict:
    """Shared body of the four o-semantics relations.

    Variables of ``phi`` outside the base are read universally in both the
    existential and universal variants, matching classical entailment from
    the renamed base.
    """
    shared = shared_variables(base, phi)
    extras = sorted(variables(phi) - set(shared))
    extra_rows = [dict(zip(extras, vals)) for vals in product((0, 1), repeat=len(extras))]
    verdicts: dict[tuple, tuple[bool, dict | None]] = {}

    for mu in models:
        allowed = _allowed_values(base, mu, shared)
        profile = tuple(allowed[p] for p in shared)
        if profile not in verdicts:
            verdicts[profile] = _decide_profile(phi, shared, profile, extra_rows, every)
        ok, omega = verdicts[profile]
        if not ok:
            return Verdict(name, False, {"omodel": mu, "valuation": omega})
    return Verdict(name, True)


def _decide_profile(phi, shared, profile, extra_rows, every):
    for combo in product(*profile):
        base_row = dict(zip(shared, combo))
        failing = None
        for row in extra_rows:
            omega = {**base_row, **row}
            if not evaluate(phi, omega):
                failing = omega
                break
        if every and failing is not None:
            return False, failing
        if not every and failing is None:
            return True, None
    if every:
        return True, None
    return False, None


def infer_a1(base: Base, phi: Formula, cap: int = DEFAULT_BOOL_CAP) -> Verdict:
    return _occurrence_query(base, phi, a_minimal_omodels(base, cap), "a1", every=False)


def infer_a2(base: Base, phi: Formula, cap: int = DEFAULT_BOOL_CAP) -> Verdict:
    return _occurrence_query(base, phi, a_minimal_omodels(base, cap), "a2", every=True)


def infer_b1(base: Base, phi: Formula, cap: int = DEFAULT_BOOL_CAP) -> Verdict:
    return _occurrence_query(base, phi, b_minimal_omodels(base, cap), "b1", every=False)


def infer_b2(base: Base, phi: Formula, cap: int = DEFAULT_BOOL_CAP) -> Verdict:
    return _occurrence_query(base, phi, b_minimal_omodels(base, cap), "b2", every=True)
