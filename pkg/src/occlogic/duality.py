"""Minimal hitting sets and the MIR/MCR duality check."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, Iterable, Sequence

from .formula import Base
from .relations import (
    DEFAULT_OCC_CAP,
    OccRelation,
    canonical_relation,
    cmcrs,
    enumerate_mcrs,
    enumerate_mirs,
    sort_relations,
)


def minimal_hitting_sets(collection: Sequence[Iterable[Hashable]]) -> list[frozenset]:
    """All inclusion-minimal hitting sets of ``collection``.

    Depth-first branching on the elements of the first set not yet hit.  A
    branch is cut as soon as some chosen element no longer hits a set on its
    own, since adding elements can never restore that.  The empty collection
    has exactly one minimal hitting set, the empty set.
    """
    targets = [frozenset(s) for s in collection]
    if any(not t for t in targets):
        raise ValueError("collection contains an empty set; no hitting set exists")
    targets = sorted(set(targets), key=lambda t: (len(t), sorted(t)))
    found: set[frozenset] = set()

    def critical(chosen: frozenset) -> bool:
        return all(any(t & chosen == {x} for t in targets) for x in chosen)

    def go(chosen: frozenset) -> None:
        if not critical(chosen):
            return
        unhit = next((t for t in targets if not t & chosen), None)
        if unhit is None:
            found.add(chosen)
            return
        for x in sorted(unhit):
            go(chosen | {x})

    go(frozenset())
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def is_h_maximal(base: Base, r: OccRelation, h: Iterable) -> bool:
    """``r`` avoids every pair of ``h`` and no strict coarsening does."""
    h = _normalize(h)
    if r.pairs & h:
        return False
    # any strict coarsening lies above an immediate one
    return all(c.pairs & h for c in r.coarsenings())


def is_h_minimal(base: Base, r: OccRelation, h: Iterable) -> bool:
    """``r`` contains ``h`` and is the least equivalence relation that does."""
    h = _normalize(h)
    if not h <= r.pairs:
        return False
    return OccRelation.from_pairs(base, h) == r


def _normalize(pairs: Iterable) -> frozenset:
    return frozenset((min(a, b), max(a, b)) for a, b in pairs)


def _maximal_avoiding(ords: tuple[int, ...], forbidden: frozenset) -> list[tuple[tuple[int, ...], ...]]:
    """Coarsest partitions of ``ords`` whose blocks contain no forbidden pair."""
    results: list[list[list[int]]] = []

    def go(i: int, blocks: list[list[int]]) -> None:
        if i == len(ords):
            results.append([list(b) for b in blocks])
            return
        x = ords[i]
        for b in blocks:
            if not any((min(x, y), max(x, y)) in forbidden for y in b):
                b.append(x)
                go(i + 1, blocks)
                b.pop()
        blocks.append([x])
        go(i + 1, blocks)
        blocks.pop()

    go(0, [])
    parts = [tuple(sorted(tuple(b) for b in p)) for p in results]

    def merges_ok(p) -> bool:
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if not any((min(a, b), max(a, b)) in forbidden for a in p[i] for b in p[j]):
                    return True
        return False

    return [p for p in parts if not merges_ok(p)]


def h_maximal_relations(base: Base, h: Iterable) -> list[OccRelation]:
    """Every H-maximal relation below the canonical relation.

    Avoiding ``h`` and maximality both decompose per variable, so the
    relations are products of per-variable coarsest ``h``-free partitions.
    """
    h = _normalize(h)
    names = sorted(base.occurrences_by_var)
    choices = [_maximal_avoiding(base.occurrences_by_var[v], h) for v in names]
    return sort_relations(OccRelation(tuple(zip(names, combo))) for combo in product(*choices))


@dataclass
class DualityReport:
    mcr_direction: bool
    mir_direction: bool
    mir_hitting_sets: list[frozenset] = field(default_factory=list)
    cmcr_hitting_sets: list[frozenset] = field(default_factory=list)
    # relations produced by one side but not the other
    mcr_only: list[OccRelation] = field(default_factory=list)
    hmax_only: list[OccRelation] = field(default_factory=list)
    mir_only: list[OccRelation] = field(default_factory=list)
    hmin_only: list[OccRelation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.mcr_direction and self.mir_direction


def verify_duality(base: Base, cap: int = DEFAULT_OCC_CAP) -> DualityReport:
    """Check both directions of the hitting-set duality on ``base``.

    MCRs must be exactly the relations that are H-maximal for some minimal
    hitting set H of the MIRs (as pair sets), and MIRs exactly the relations
    that are H-minimal for some minimal hitting set of the C-MCRs.
    """
    mirs = enumerate_mirs(base, cap)
    mcrs = enumerate_mcrs(base, cap)
    top = canonical_relation(base)

    mir_hs = minimal_hitting_sets([m.pairs for m in mirs])
    hmax = set()
    for h in mir_hs:
        for r in h_maximal_relations(base, h):
            if r.pairs <= top.pairs and is_h_maximal(base, r, h):
                hmax.add(r)

    targets = cmcrs(base, cap)
    try:
        cmcr_hs = minimal_hitting_sets(targets)
    except ValueError:
        # an empty C-MCR (consistent base) cannot be hit
        cmcr_hs = []
    hmin = set()
    for h in cmcr_hs:
        r = OccRelation.from_pairs(base, h)
        if is_h_minimal(base, r, h):
            hmin.add(r)

    mcr_set, mir_set = set(mcrs), set(mirs)
    return DualityReport(
        mcr_direction=mcr_set == hmax,
        mir_direction=mir_set == hmin,
        mir_hitting_sets=mir_hs,
        cmcr_hitting_sets=cmcr_hs,
        mcr_only=sort_relations(mcr_set - hmax),
        hmax_only=sort_relations(hmax - mcr_set),
        mir_only=sort_relations(mir_set - hmin),
        hmin_only=sort_relations(hmin - mir_set),
    )
