"""Random bases and queries for experiments and property checks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formula import And, Base, Formula, Implies, Not, Or, Var, desugar

VARIABLES = ("p", "q", "r", "s")


@dataclass(frozen=True)
class SampleConfig:
    max_vars: int = 4
    max_formulas: int = 4
    max_occurrences: int = 10
    max_per_variable: int = 6
    query_occurrences: int = 4
    # chance that a query mentions a variable outside the base
    foreign_query_var: float = 0.15


def random_formula(rng: random.Random, names, leaves: int) -> Formula:
    """A random surface formula with exactly ``leaves`` variable occurrences."""
    if leaves == 1:
        f = Var(rng.choice(names))
        return Not(f) if rng.random() < 0.4 else f
    split = rng.randint(1, leaves - 1)
    left = random_formula(rng, names, split)
    right = random_formula(rng, names, leaves - split)
    f = rng.choice((And, And, Or, Or, Implies))(left, right)
    return Not(f) if rng.random() < 0.2 else f


def random_base(rng: random.Random, cfg: SampleConfig = SampleConfig()) -> Base:
    while True:
        names = list(VARIABLES[: rng.randint(1, cfg.max_vars)])
        n = rng.randint(1, cfg.max_formulas)
        budget = rng.randint(n, cfg.max_occurrences)
        sizes = [1] * n
        for _ in range(budget - n):
            sizes[rng.randrange(n)] += 1
        base = Base.from_surface(random_formula(rng, names, k) for k in sizes)
        counts = [len(v) for v in base.occurrences_by_var.values()]
        if max(counts) <= cfg.max_per_variable:
            return base


def random_query(rng: random.Random, base: Base, cfg: SampleConfig = SampleConfig()) -> Formula:
    names = list(base.variables) or ["p"]
    if rng.random() < cfg.foreign_query_var:
        names.append("t")
    return desugar(random_formula(rng, names, rng.randint(1, cfg.query_occurrences)))
