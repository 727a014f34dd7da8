"""Occurrence-level inconsistency analysis and paraconsistent inference for propositional bases."""

from .formula import Base, ParseError, parse, parse_formula, parse_query
from .query import RELATIONS, Limits, decide, decide_all
from .relations import OccRelation, enumerate_bmcrs, enumerate_mcrs, enumerate_mirs
from .semantics import CapExceeded

__all__ = [
    "Base", "CapExceeded", "Limits", "OccRelation", "ParseError", "RELATIONS",
    "decide", "decide_all", "enumerate_bmcrs", "enumerate_mcrs", "enumerate_mirs",
    "parse", "parse_formula", "parse_query",
]
