"""Data models for terms, types, spines, traces and semantic values."""

from .canonical import CanonicalForm, EquivRelation, Verdict
from .checks import Counterexample, GenConfig, Report
from .names import Name, name
from .reduction import NormalizationResult, Redex, Rule, Trace, TraceStep
from .semantics import FunVal, NatVal, SemValue, Valuation
from .spine import HOLE, Decomposition, EContext, HeadContext, SAbs, SArg, SpineAnalysis, SpineItem
from .terms import Abs, App, Binding, Environment, Path, Term, Var, app, lam, var
from .types import O, Arrow, Base, SimpleType, TypeContext, arrow, split_arrow

__all__ = [
    "CanonicalForm",
    "EquivRelation",
    "Verdict",
    "Counterexample",
    "GenConfig",
    "Report",
    "Name",
    "name",
    "NormalizationResult",
    "Redex",
    "Rule",
    "Trace",
    "TraceStep",
    "FunVal",
    "NatVal",
    "SemValue",
    "Valuation",
    "HOLE",
    "Decomposition",
    "EContext",
    "HeadContext",
    "SAbs",
    "SArg",
    "SpineAnalysis",
    "SpineItem",
    "Abs",
    "App",
    "Binding",
    "Environment",
    "Path",
    "Term",
    "Var",
    "app",
    "lam",
    "var",
    "O",
    "Arrow",
    "Base",
    "SimpleType",
    "TypeContext",
    "arrow",
    "split_arrow",
]
