"""Formula language: parsing, desugaring to the and/not core, occurrences.

Input bases are text with one formula per line.  Grammar, tightest first::

    !  (prefix)   &   |   ->  (right-assoc)   <->  (left-assoc)

with parentheses, ``#`` line comments and the Unicode aliases ``¬ ∧ ∨ → ↔``.
Atoms match ``[a-z][a-zA-Z0-9_]*``; names starting with ``_`` are reserved
for fresh variables introduced by renamings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping, Union


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


# Surface-only connectives; desugar() removes them.

@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Iff:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


Formula = Union[Var, Not, And, Or, Implies, Iff]

_BINARY = (And, Or, Implies, Iff)
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_ASCII = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
_UNICODE = {And: "∧", Or: "∨", Implies: "→", Iff: "↔"}


def format_formula(f: Formula, unicode: bool = False) -> str:
    """Render ``f`` so that parsing the result gives back ``f``."""
    ops = _UNICODE if unicode else _ASCII
    neg = "¬" if unicode else "!"

    def go(g: Formula, ctx: int) -> str:
        if isinstance(g, Var):
            return g.name
        if isinstance(g, Not):
            return neg + go(g.arg, 5)
        prec = _PREC[type(g)]
        if isinstance(g, Implies):
            # right-assoc: parenthesize a left operand of equal precedence
            text = f"{go(g.left, prec + 1)} {ops[Implies]} {go(g.right, prec)}"
        else:
            text = f"{go(g.left, prec)} {ops[type(g)]} {go(g.right, prec + 1)}"
        return f"({text})" if prec < ctx else text

    return go(f, 0)


def conjoin(formulas) -> Formula | None:
    """Left-nested conjunction of ``formulas``; ``None`` for the empty list."""
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return result


def negate(f: Formula) -> Formula:
    return Not(f)


def variables(f: Formula) -> set[str]:
    return {name for name, _ in _walk_vars(f)}


def var_sequence(f: Formula) -> list[str]:
    """Variable names in left-to-right order, one entry per occurrence."""
    return [name for name, _ in _walk_vars(f)]


def _walk_vars(f: Formula, positive: bool = True) -> Iterator[tuple[str, bool]]:
    # Polarity is only meaningful on core formulas.
    if isinstance(f, Var):
        yield f.name, positive
    elif isinstance(f, Not):
        yield from _walk_vars(f.arg, not positive)
    elif isinstance(f, _BINARY):
        yield from _walk_vars(f.left, positive)
        yield from _walk_vars(f.right, positive)
    else:
        raise TypeError(f"not a formula: {f!r}")


def is_core(f: Formula) -> bool:
    if isinstance(f, Var):
        return True
    if isinstance(f, Not):
        return is_core(f.arg)
    if isinstance(f, And):
        return is_core(f.left) and is_core(f.right)
    return False


def desugar(f: Formula) -> Formula:
    """Rewrite ``|``, ``->`` and ``<->`` in terms of ``&`` and ``!``.

    Disjunction and implication keep the left-to-right order of variable
    occurrences.  A biconditional ``a <-> b`` becomes
    ``!(a & !b) & !(b & !a)`` and therefore doubles every occurrence.
    """
    if isinstance(f, Var):
        return f
    if isinstance(f, Not):
        return Not(desugar(f.arg))
    left, right = desugar(f.left), desugar(f.right)
    if isinstance(f, And):
        return And(left, right)
    if isinstance(f, Or):
        return Not(And(Not(left), Not(right)))
    if isinstance(f, Implies):
        return Not(And(left, Not(right)))
    if isinstance(f, Iff):
        return And(Not(And(left, Not(right))), Not(And(right, Not(left))))
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, mapping: Mapping[str, Formula | str]) -> Formula:
    """Simultaneously replace variables according to ``mapping``.

    Values may be formulas or plain variable names.
    """
    if not mapping:
        return f
    table = {k: Var(v) if isinstance(v, str) else v for k, v in mapping.items()}

    def go(g: Formula) -> Formula:
        if isinstance(g, Var):
            return table.get(g.name, g)
        if isinstance(g, Not):
            return Not(go(g.arg))
        return type(g)(go(g.left), go(g.right))

    return go(f)


def substitute_occurrence(f: Formula, occ, g: Formula) -> Formula:
    """Replace one occurrence of a variable in ``f`` by ``g``.

    ``occ`` is an :class:`Occurrence` or a ``(variable, index)`` pair where
    ``index`` is the 1-based left-to-right position among that variable's
    occurrences in ``f``.
    """
    if isinstance(occ, Occurrence):
        name, index = occ.var, occ.index
    else:
        name, index = occ
    seen = 0

    def go(h: Formula) -> Formula:
        nonlocal seen
        if isinstance(h, Var):
            if h.name == name:
                seen += 1
                if seen == index:
                    return g
            return h
        if isinstance(h, Not):
            return Not(go(h.arg))
        return type(h)(go(h.left), go(h.right))

    result = go(f)
    if index < 1 or seen < index:
        raise IndexError(f"{name!r} has no occurrence #{index} in {format_formula(f)}")
    return result


# ---------------------------------------------------------------------------
# Parser

_TOKEN = re.compile(
    r"\s*(?:(?P<atom>[A-Za-z_][A-Za-z0-9_]*)|(?P<op><->|->|[!&|()¬∧∨→↔]))"
)
_ALIAS = {"¬": "!", "∧": "&", "∨": "|", "→": "->", "↔": "<->"}
_ATOM = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")


class _Parser:
    def __init__(self, text: str, line: int = 1):
        self.line = line
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
                raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
            if m.group("atom") is not None:
                atom = m.group("atom")
                col = m.start("atom") + 1
                if not _ATOM.match(atom):
                    raise ParseError(f"invalid variable name {atom!r}", line, col)
                self.tokens.append(("atom", atom, col))
            else:
                op = m.group("op")
                self.tokens.append(("op", _ALIAS.get(op, op), m.start("op") + 1))
            pos = m.end()
        self.end_col = len(text) + 1
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == op:
            self.i += 1
            return True
        return False

    def fail(self, what: str):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {what}, got end of input", self.line, self.end_col)
        raise ParseError(f"expected {what}, got {tok[1]!r}", self.line, tok[2])

    def parse(self) -> Formula:
        if not self.tokens:
            self.fail("a formula")
        f = self.iff()
        if self.peek() is not None:
            self.fail("an operator or end of input")
        return f

    def iff(self) -> Formula:
        f = self.implies()
        while self.accept("<->"):
            f = Iff(f, self.implies())
        return f

    def implies(self) -> Formula:
        f = self.disjunction()
        if self.accept("->"):
            return Implies(f, self.implies())
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.accept("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.accept("!"):
            return Not(self.unary())
        if self.accept("("):
            f = self.iff()
            if not self.accept(")"):
                self.fail("')'")
            return f
        tok = self.peek()
        if tok is not None and tok[0] == "atom":
            self.i += 1
            return Var(tok[1])
        self.fail("a variable, '!' or '('")


def parse_formula(text: str, line: int = 1) -> Formula:
    """Parse a single surface formula (no desugaring)."""
    return _Parser(text, line).parse()


def parse_query(text: str) -> Formula:
    """Parse a query formula and desugar it to core form."""
    return desugar(parse_formula(text.split("#", 1)[0]))


def parse(text: str) -> "Base":
    """Parse a base: one formula per non-blank line, ``#`` starts a comment."""
    surface = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            surface.append(parse_formula(body, lineno))
    return Base.from_surface(surface)


# ---------------------------------------------------------------------------
# Bases and occurrences

@dataclass(frozen=True, slots=True)
class Occurrence:
    """One occurrence of a variable in a base.

    ``index`` counts occurrences of ``var`` inside formula ``formula``;
    ``var_index`` counts occurrences of ``var`` across the whole base (the
    subscript in the ``p_i`` notation); ``ordinal`` counts all variable
    occurrences of the base, left to right, starting at 1.
    """

    var: str
    formula: int
    index: int
    ordinal: int
    var_index: int
    positive: bool

    @property
    def sign(self) -> str:
        return "+" if self.positive else "-"

    @property
    def label(self) -> str:
        return f"{self.var}@f{self.formula}#{self.index}{self.sign}"

    @property
    def short(self) -> str:
        return f"{self.var}{self.var_index}{self.sign}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Base:
    """An ordered propositional base in core form.

    Order matters: occurrence ordinals follow the textual order, and
    duplicates are separate members.  ``surface`` keeps the formulas as
    written, for display only.
    """

    formulas: tuple[Formula, ...] = ()
    surface: tuple[Formula, ...] = field(default=(), compare=False)

    def __post_init__(self):
        for f in self.formulas:
            if not is_core(f):
                raise ValueError(f"base formula not in core form: {format_formula(f)}")

    @classmethod
    def from_surface(cls, formulas) -> "Base":
        formulas = tuple(formulas)
        return cls(tuple(desugar(f) for f in formulas), formulas)

    @classmethod
    def from_strings(cls, *texts: str) -> "Base":
        return cls.from_surface(parse_formula(t) for t in texts)

    def __len__(self) -> int:
        return len(self.formulas)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.formulas)

    def __eq__(self, other) -> bool:
        return self is other or (
            isinstance(other, Base) and self.formulas == other.formulas
        )

    @cached_property
    def cache(self) -> dict:
        """Per-base memo shared by the enumeration modules."""
        return {}

    @cached_property
    def occurrences(self) -> tuple[Occurrence, ...]:
        occs = []
        per_var: dict[str, int] = {}
        for fi, f in enumerate(self.formulas):
            in_formula: dict[str, int] = {}
            for name, positive in _walk_vars(f):
                in_formula[name] = in_formula.get(name, 0) + 1
                per_var[name] = per_var.get(name, 0) + 1
                occs.append(Occurrence(name, fi, in_formula[name], len(occs) + 1,
                                       per_var[name], positive))
        return tuple(occs)

    def occurrence(self, ordinal: int) -> Occurrence:
        return self.occurrences[ordinal - 1]

    @cached_property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted({o.var for o in self.occurrences}))

    @cached_property
    def occurrences_by_var(self) -> dict[str, tuple[int, ...]]:
        """Ordinals of each variable's occurrences, in global order."""
        table: dict[str, list[int]] = {v: [] for v in self.variables}
        for o in self.occurrences:
            table[o.var].append(o.ordinal)
        return {v: tuple(ords) for v, ords in table.items()}

    def positive(self, ordinal: int) -> bool:
        return self.occurrences[ordinal - 1].positive

    @cached_property
    def conjunction(self) -> Formula | None:
        return conjoin(self.formulas)

    @cached_property
    def renamed(self) -> tuple[Formula, ...]:
        """R(K): every occurrence replaced by its own fresh variable."""
        counter = 0

        def go(g: Formula) -> Formula:
            nonlocal counter
            if isinstance(g, Var):
                counter += 1
                return Var(fresh_name(counter))
            if isinstance(g, Not):
                return Not(go(g.arg))
            return And(go(g.left), go(g.right))

        return tuple(go(f) for f in self.formulas)

    def subset(self, indices) -> "Base":
        idx = sorted(indices)
        return Base(tuple(self.formulas[i] for i in idx),
                    tuple(self.surface[i] for i in idx) if self.surface else ())

    def text(self, unicode: bool = False) -> list[str]:
        return [format_formula(f, unicode) for f in (self.surface or self.formulas)]


def fresh_name(ordinal: int) -> str:
    return f"_o{ordinal}"


@dataclass(frozen=True)
class Renaming:
    """The fixed occurrence renaming of a base and its inverse."""

    forward: Mapping[int, str]
    inverse: Mapping[str, int]

    def __call__(self, occ: Occurrence | int) -> str:
        return self.forward[occ.ordinal if isinstance(occ, Occurrence) else occ]


def crename(base: Base) -> tuple[Base, Renaming]:
    """Return R(K) together with the occurrence renaming R."""
    forward = {o.ordinal: fresh_name(o.ordinal) for o in base.occurrences}
    inverse = {name: k for k, name in forward.items()}
    return Base(base.renamed), Renaming(forward, inverse)
