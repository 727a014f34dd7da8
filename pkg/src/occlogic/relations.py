"""Equivalence relations on variable occurrences.

A relation is stored as one set partition per variable, so blocks can never
mix variables.  Occurrences are referred to by their global ordinal.  The
refinement order on partitions coincides with inclusion of pair sets, and
inconsistency is upward closed in it, which is what lets the enumerators
certify minimality and maximality by looking at immediate neighbours only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator

from .formula import Base, Formula, Var, fresh_name, substitute
from .semantics import is_consistent

Pair = tuple[int, int]
Block = tuple[int, ...]

DEFAULT_OCC_CAP = 40


@dataclass(frozen=True)
class OccRelation:
    """A compliant equivalence relation on the occurrences of a base.

    ``parts`` holds ``(variable, blocks)`` entries sorted by variable, each
    block a sorted tuple of ordinals and blocks sorted by their least element.
    """

    parts: tuple[tuple[str, tuple[Block, ...]], ...]

    @classmethod
    def from_blocks(cls, base: Base, blocks: Iterable[Iterable[int]]) -> "OccRelation":
        """Build a relation from blocks; unmentioned occurrences stay alone."""
        seen: set[int] = set()
        per_var: dict[str, list[Block]] = {v: [] for v in base.variables}
        for blk in blocks:
            blk = tuple(sorted(set(blk)))
            if not blk:
                continue
            names = {base.occurrence(k).var for k in blk}
            if len(names) != 1:
                raise ValueError(f"block {blk} mixes variables {sorted(names)}")
            if seen & set(blk):
                raise ValueError(f"block {blk} overlaps another block")
            seen |= set(blk)
            per_var[names.pop()].append(blk)
        for o in base.occurrences:
            if o.ordinal not in seen:
                per_var[o.var].append((o.ordinal,))
        return cls(tuple((v, tuple(sorted(bs))) for v, bs in sorted(per_var.items())))

    @classmethod
    def from_pairs(cls, base: Base, pairs: Iterable[Pair]) -> "OccRelation":
        """Smallest equivalence relation containing ``pairs``."""
        parent = {o.ordinal: o.ordinal for o in base.occurrences}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for k in parent:
            groups.setdefault(find(k), []).append(k)
        return cls.from_blocks(base, groups.values())

    @cached_property
    def blocks(self) -> tuple[Block, ...]:
        """All blocks, ordered by least element."""
        return tuple(sorted(b for _, bs in self.parts for b in bs))

    @cached_property
    def by_var(self) -> dict[str, tuple[Block, ...]]:
        return dict(self.parts)

    @cached_property
    def pairs(self) -> frozenset[Pair]:
        """Unordered non-reflexive pairs ``(a, b)`` with ``a < b``."""
        return frozenset(p for b in self.blocks for p in combinations(b, 2))

    @cached_property
    def sort_key(self) -> tuple:
        return (tuple(sorted(self.pairs)), self.blocks)

    @cached_property
    def block_of(self) -> dict[int, Block]:
        return {k: b for b in self.blocks for k in b}

    def refines(self, other: "OccRelation") -> bool:
        """``self`` is contained in ``other`` as a set of pairs."""
        return self.pairs <= other.pairs

    def __le__(self, other: "OccRelation") -> bool:
        return self.refines(other)

    def __lt__(self, other: "OccRelation") -> bool:
        return self.pairs < other.pairs

    def with_var(self, var: str, blocks) -> "OccRelation":
        new = tuple(sorted(tuple(sorted(b)) for b in blocks))
        return OccRelation(tuple((v, new if v == var else bs) for v, bs in self.parts))

    def coarsenings(self) -> Iterator["OccRelation"]:
        """Immediate coarsenings: merge two blocks of one variable."""
        for var, bs in self.parts:
            for i, j in combinations(range(len(bs)), 2):
                rest = [b for k, b in enumerate(bs) if k not in (i, j)]
                yield self.with_var(var, rest + [bs[i] + bs[j]])

    def refinements(self) -> Iterator["OccRelation"]:
        """Immediate refinements: split one block into two nonempty parts."""
        for var, bs in self.parts:
            for i, blk in enumerate(bs):
                if len(blk) < 2:
                    continue
                rest = [b for k, b in enumerate(bs) if k != i]
                head, tail = blk[0], blk[1:]
                # fixing head on the left side enumerates each split once
                for mask in range(2 ** len(tail) - 1):
                    left = (head,) + tuple(x for n, x in enumerate(tail) if mask >> n & 1)
                    right = tuple(x for x in blk if x not in left)
                    yield self.with_var(var, rest + [left, right])

    def labelled(self, base: Base, short: bool = False) -> list[list[str]]:
        attr = "short" if short else "label"
        return [[getattr(base.occurrence(k), attr) for k in b] for b in self.blocks]

    def describe(self, base: Base) -> str:
        return "{" + ", ".join("{" + ", ".join(b) + "}"
                               for b in self.labelled(base, short=True)) + "}"


def sort_relations(rels: Iterable[OccRelation]) -> list[OccRelation]:
    return sorted(set(rels), key=lambda r: r.sort_key)


def canonical_relation(base: Base) -> OccRelation:
    """The relation that equates all occurrences of each variable."""
    return OccRelation(tuple((v, (ords,)) for v, ords in sorted(base.occurrences_by_var.items())))


def discrete_relation(base: Base) -> OccRelation:
    return OccRelation.from_blocks(base, ())


def _check_cap(base: Base, cap: int) -> None:
    from .semantics import CapExceeded

    n = len(base.occurrences)
    if n > cap:
        raise CapExceeded("occurrences", n, cap)


def relation_formulas(base: Base, r: OccRelation) -> list[Formula]:
    """R(K) with each block collapsed onto the fresh name of its least member."""
    mapping = {fresh_name(k): Var(fresh_name(b[0])) for b in r.blocks for k in b[1:]}
    return [substitute(f, mapping) for f in base.renamed]


def relation_eqs(r: OccRelation) -> list[tuple[str, str]]:
    return [(fresh_name(a), fresh_name(b)) for blk in r.blocks for a, b in zip(blk, blk[1:])]


def relation_consistent(base: Base, r: OccRelation) -> bool:
    """Whether R(K) together with the equalities induced by ``r`` is satisfiable."""
    memo = base.cache.setdefault("consistent", {})
    verdict = memo.get(r)
    if verdict is None:
        verdict = memo[r] = is_consistent(base.renamed, relation_eqs(r))
    return verdict


def _bipolar(base: Base, blk: Block) -> bool:
    signs = {base.positive(k) for k in blk}
    return len(signs) == 2


def enumerate_mirs(base: Base, cap: int = DEFAULT_OCC_CAP) -> list[OccRelation]:
    """All minimal inconsistency relations, in canonical order.

    Bottom-up traversal from the discrete relation through merges that keep
    every non-singleton block bipolar.  Every relation whose non-singleton
    blocks are bipolar is reachable this way, and no MIR has a block with a
    single polarity, so nothing is lost.  Inconsistent relations are not
    expanded further; they are MIRs when every immediate refinement is
    consistent.
    """
    _check_cap(base, cap)
    cached = base.cache.get("mirs")
    if cached is not None:
        return list(cached)
    found: list[OccRelation] = []
    if relation_consistent(base, canonical_relation(base)):
        base.cache["mirs"] = ()
        return []
    start = discrete_relation(base)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for r in frontier:
            if not relation_consistent(base, r):
                if all(relation_consistent(base, s) for s in r.refinements()):
                    found.append(r)
                continue
            for c in r.coarsenings():
                if c in seen:
                    continue
                merged = [b for b in c.blocks if len(b) > 1]
                if not all(_bipolar(base, b) for b in merged):
                    continue
                seen.add(c)
                nxt.append(c)
        frontier = nxt
    result = sort_relations(found)
    base.cache["mirs"] = tuple(result)
    return result


def two_block_partitions(ords: Block) -> Iterator[tuple[Block, ...]]:
    """Partitions of ``ords`` into at most two blocks."""
    yield (ords,)
    head, tail = ords[0], ords[1:]
    for mask in range(2 ** len(tail) - 1):
        left = (head,) + tuple(x for n, x in enumerate(tail) if mask >> n & 1)
        right = tuple(x for x in ords if x not in left)
        yield (left, right)


def enumerate_mcrs(base: Base, cap: int = DEFAULT_OCC_CAP) -> list[OccRelation]:
    """All maximal consistency relations, in canonical order.

    An MCR never splits a variable into more than two classes, so only
    relations with at most two blocks per variable are candidates.  Among the
    consistent candidates, those whose every immediate coarsening is
    inconsistent are maximal in the full lattice since consistency is
    downward closed.
    """
    _check_cap(base, cap)
    cached = base.cache.get("mcrs")
    if cached is not None:
        return list(cached)
    canon = canonical_relation(base)
    if relation_consistent(base, canon):
        result = [canon]
    else:
        names = sorted(base.occurrences_by_var)
        choices = [list(two_block_partitions(base.occurrences_by_var[v])) for v in names]
        result = []
        for combo in product(*choices):
            r = OccRelation(tuple((v, tuple(sorted(bs))) for v, bs in zip(names, combo)))
            if not relation_consistent(base, r):
                continue
            if any(relation_consistent(base, c) for c in r.coarsenings()):
                continue
            result.append(r)
        result = sort_relations(result)
    base.cache["mcrs"] = tuple(result)
    return result


def pn_pairs(base: Base, r: OccRelation) -> frozenset[Pair]:
    """Ordered (positive, negative) pairs of occurrences related by ``r``."""
    out = set()
    for blk in r.blocks:
        pos = [k for k in blk if base.positive(k)]
        neg = [k for k in blk if not base.positive(k)]
        out.update(product(pos, neg))
    return frozenset(out)


def enumerate_bmcrs(base: Base, cap: int = DEFAULT_OCC_CAP) -> list[OccRelation]:
    """MCRs whose PN set is maximal among the PN sets of all MCRs.

    Comparing against MCRs only is enough: coarsening never loses PN pairs,
    so every consistent relation is dominated by some MCR.
    """
    _check_cap(base, cap)
    cached = base.cache.get("bmcrs")
    if cached is not None:
        return list(cached)
    mcrs = enumerate_mcrs(base, cap)
    pn = {m: pn_pairs(base, m) for m in mcrs}
    result = [m for m in mcrs if not any(pn[m] < pn[n] for n in mcrs)]
    base.cache["bmcrs"] = tuple(result)
    return result


def cmcrs(base: Base, cap: int = DEFAULT_OCC_CAP) -> list[frozenset[Pair]]:
    """Complements of the MCRs within the canonical relation, as pair sets."""
    top = canonical_relation(base).pairs
    return [top - m.pairs for m in enumerate_mcrs(base, cap)]


def omis_of(base: Base, mir: OccRelation) -> frozenset[int]:
    """Indices of the formulas holding an occurrence in a non-singleton block."""
    return frozenset(base.occurrence(k).formula for b in mir.blocks if len(b) > 1 for k in b)


def enumerate_omises(base: Base, cap: int = DEFAULT_OCC_CAP) -> list[frozenset[int]]:
    return sorted({omis_of(base, m) for m in enumerate_mirs(base, cap)}, key=sorted)


def enumerate_mises(base: Base) -> list[frozenset[int]]:
    """Classical minimal inconsistent subsets, as sets of formula indices."""
    n = len(base.formulas)
    found: list[frozenset[int]] = []
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            s = frozenset(idx)
            if any(m <= s for m in found):
                continue
            if not is_consistent([base.formulas[i] for i in idx]):
                found.append(s)
    return sorted(found, key=sorted)


def eq_classes_of(base: Base, r: OccRelation, var: str) -> list[Block]:
    if var not in r.by_var:
        raise KeyError(f"unknown variable {var!r}")
    return list(r.by_var[var])
