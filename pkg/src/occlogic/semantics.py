"""Classical Boolean engine over core formulas.

A small backtracking search with top-level unit propagation, run directly on
the ``&``/``!`` AST.  Equality side constraints between variables are
compiled away by merging each class into its lexicographically smallest
member before the search starts.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .formula import And, Formula, Not, Var, substitute, variables

EqConstraint = tuple[str, str]
Valuation = dict[str, int]

DEFAULT_BOOL_CAP = 26


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured size limit."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, x: str) -> str:
        parent = self.parent
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smallest name wins, so representatives come first in sorted order
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def evaluate(f: Formula, valuation) -> int:
    if isinstance(f, Var):
        return valuation[f.name]
    if isinstance(f, Not):
        return 1 - evaluate(f.arg, valuation)
    if isinstance(f, And):
        return evaluate(f.left, valuation) and evaluate(f.right, valuation)
    raise TypeError(f"not a core formula: {f!r}")


def _simplify(f: Formula, asg: dict[str, int]):
    """Partially evaluate ``f``: returns 1, 0 or a residual formula."""
    if isinstance(f, Var):
        return asg.get(f.name, f)
    if isinstance(f, Not):
        a = _simplify(f.arg, asg)
        if a == 1 or a == 0:
            return 1 - a
        if isinstance(a, Not):
            return a.arg
        return Not(a)
    if isinstance(f, And):
        a = _simplify(f.left, asg)
        if a == 0:
            return 0
        b = _simplify(f.right, asg)
        if b == 0:
            return 0
        if a == 1:
            return b
        if b == 1:
            return a
        return And(a, b)
    raise TypeError(f"not a core formula: {f!r}")


def _conjuncts(f, out: list) -> None:
    if isinstance(f, And):
        _conjuncts(f.left, out)
        _conjuncts(f.right, out)
    else:
        out.append(f)


def _propagate(clauses: list, asg: dict[str, int]):
    """Simplify ``clauses`` under ``asg`` and force literal conjuncts.

    Mutates ``asg``.  Returns the residual clause list, or ``None`` on a
    conflict.
    """
    while True:
        residual: list = []
        forced = False
        for c in clauses:
            s = _simplify(c, asg)
            if s == 0:
                return None
            if s == 1:
                continue
            parts: list = []
            _conjuncts(s, parts)
            for part in parts:
                if isinstance(part, Var):
                    name, value = part.name, 1
                elif isinstance(part, Not) and isinstance(part.arg, Var):
                    name, value = part.arg.name, 0
                else:
                    residual.append(part)
                    continue
                if asg.setdefault(name, value) != value:
                    return None
                forced = True
        if not forced:
            return residual
        clauses = residual


def _first_var(f) -> str:
    while not isinstance(f, Var):
        f = f.arg if isinstance(f, Not) else f.left
    return f.name


def _merge(formulas: Iterable[Formula], eqs: Iterable[EqConstraint]):
    uf = UnionFind()
    for a, b in eqs:
        uf.union(a, b)
    rep = {x: uf.find(x) for x in list(uf.parent)}
    rep = {x: r for x, r in rep.items() if x != r}
    merged = [substitute(f, rep) if rep else f for f in formulas]
    return merged, rep


def is_consistent(formulas: Sequence[Formula], eqs: Iterable[EqConstraint] = ()) -> bool:
    """Whether the conjunction of ``formulas`` and the equalities has a model."""
    clauses, _ = _merge(formulas, eqs)

    def search(clauses, asg) -> bool:
        clauses = _propagate(clauses, asg)
        if clauses is None:
            return False
        if not clauses:
            return True
        v = _first_var(clauses[0])
        for value in (0, 1):
            trial = dict(asg)
            trial[v] = value
            if search(clauses, trial):
                return True
        return False

    return search(list(clauses), {})


def entails(premises: Sequence[Formula], eqs: Iterable[EqConstraint], goal: Formula) -> bool:
    """Classical consequence, decided as unsatisfiability of premises & !goal."""
    return not is_consistent(list(premises) + [Not(goal)], eqs)


def enumerate_models(
    formulas: Sequence[Formula],
    eqs: Iterable[EqConstraint] = (),
    vars: Iterable[str] | None = None,
    cap: int = DEFAULT_BOOL_CAP,
) -> Iterator[Valuation]:
    """Yield every model over ``vars`` exactly once, in lexicographic order.

    Variables are ordered by name and 0 precedes 1.  ``vars`` defaults to
    the variables of the formulas and constraints and must cover them.
    """
    eqs = list(eqs)
    mentioned = set()
    for f in formulas:
        mentioned |= variables(f)
    for a, b in eqs:
        mentioned |= {a, b}
    names = sorted(mentioned if vars is None else set(vars))
    missing = mentioned - set(names)
    if missing:
        raise ValueError(f"variables not declared: {sorted(missing)}")
    if len(names) > cap:
        raise CapExceeded("model enumeration variables", len(names), cap)
    clauses, rep = _merge(formulas, eqs)
    order = [v for v in names if v not in rep]
    return _enumerate(list(clauses), order, rep, names)


def _enumerate(clauses, order, rep, names) -> Iterator[Valuation]:
    def expand(asg):
        return {v: asg[rep.get(v, v)] for v in names}

    def go(clauses, asg, k):
        clauses = _propagate(clauses, asg)
        if clauses is None:
            return
        while k < len(order) and order[k] in asg:
            k += 1
        if k == len(order):
            if not clauses:
                yield expand(asg)
            return
        v = order[k]
        for value in (0, 1):
            trial = dict(asg)
            trial[v] = value
            yield from go(clauses, trial, k + 1)

    yield from go(clauses, {}, 0)


def count_models(formulas, eqs=(), vars=None, cap: int = DEFAULT_BOOL_CAP) -> int:
    return sum(1 for _ in enumerate_models(formulas, eqs, vars, cap))
