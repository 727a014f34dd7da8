"""Brute-force reference implementations, independent of the library's search code.

Relations are enumerated as products of all set partitions per variable
(sympy), consistency is a bitmask truth table, and minimal/maximal
elements are found by plain inclusion filtering.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from sympy.utilities.iterables import multiset_partitions

from occlogic.formula import And, Not, Var


@lru_cache(maxsize=None)
def columns(n: int) -> tuple[int, tuple[int, ...]]:
    rows = 1 << n
    full = (1 << rows) - 1
    cols = []
    for i in range(n):
        mask = 0
        for row in range(rows):
            if row >> i & 1:
                mask |= 1 << row
        cols.append(mask)
    return full, tuple(cols)


def table(f, index: dict[str, int], n: int) -> int:
    """Bitmask of the rows (assignments to ``index``'s names) satisfying f."""
    full, cols = columns(n)
    if isinstance(f, Var):
        return cols[index[f.name]]
    if isinstance(f, Not):
        return full & ~table(f.arg, index, n)
    if isinstance(f, And):
        return table(f.left, index, n) & table(f.right, index, n)
    raise TypeError(f)


def satisfiable(formulas, names=None) -> bool:
    names = sorted(names if names is not None else {v for f in formulas for v in _vars(f)})
    index = {v: i for i, v in enumerate(names)}
    full, _ = columns(len(names))
    acc = full
    for f in formulas:
        acc &= table(f, index, len(names))
    return acc != 0


def truth_table_entails(premises, goal) -> bool:
    names = sorted({v for f in (*premises, goal) for v in _vars(f)})
    index = {v: i for i, v in enumerate(names)}
    full, _ = columns(len(names))
    acc = full
    for f in premises:
        acc &= table(f, index, len(names))
    return acc & ~table(goal, index, len(names)) & full == 0


def _vars(f):
    if isinstance(f, Var):
        yield f.name
    elif isinstance(f, Not):
        yield from _vars(f.arg)
    else:
        yield from _vars(f.left)
        yield from _vars(f.right)


def _rename(f, counter: list, name_of):
    """Replace the k-th variable occurrence (left to right, from 1) with name_of(k)."""
    if isinstance(f, Var):
        counter[0] += 1
        return Var(name_of(counter[0]))
    if isinstance(f, Not):
        return Not(_rename(f.arg, counter, name_of))
    return And(_rename(f.left, counter, name_of), _rename(f.right, counter, name_of))


def renamed(base, name_of):
    counter = [0]
    return [_rename(f, counter, name_of) for f in base.formulas]


def occurrence_vars(base) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {}
    counter = 0
    for f in base.formulas:
        for v in _vars(f):
            counter += 1
            out.setdefault(v, []).append(counter)
    return out


def all_relations(base):
    """Every compliant relation as a frozenset of blocks (tuples of ordinals)."""
    per_var = [list(multiset_partitions(ords)) for ords in occurrence_vars(base).values()]
    for choice in product(*per_var):
        yield frozenset(tuple(sorted(b)) for parts in choice for b in parts)


def pairs_of(blocks) -> frozenset:
    return frozenset(p for b in blocks for p in combinations(sorted(b), 2))


def consistent(base, blocks) -> bool:
    owner = {k: i for i, b in enumerate(sorted(blocks)) for k in b}
    fs = renamed(base, lambda k: f"b{owner[k]}")
    return satisfiable(fs, [f"b{i}" for i in range(len(blocks))])


def minimal(items):
    items = sorted(set(items), key=len)
    kept = []
    for s in items:
        if not any(k < s for k in kept):
            kept.append(s)
    return kept


def maximal(items):
    items = sorted(set(items), key=len, reverse=True)
    kept = []
    for s in items:
        if not any(s < k for k in kept):
            kept.append(s)
    return kept


def mirs_and_mcrs(base):
    """(MIR pair-sets, MCR pair-sets) by exhaustive enumeration."""
    bad, good = [], []
    for blocks in all_relations(base):
        (good if consistent(base, blocks) else bad).append(pairs_of(blocks))
    return set(minimal(bad)), set(maximal(good))


def mises(base):
    n = len(base.formulas)
    bad = [frozenset(s) for k in range(1, n + 1) for s in combinations(range(n), k)
           if not satisfiable([base.formulas[i] for i in s])]
    return set(minimal(bad))
