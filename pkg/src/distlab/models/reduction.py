"""Reduction rule, redex and trace data models."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .names import Name
from .terms import Path, Term


class Rule(str, Enum):
    """Reduction rules. AFFINE is the union of LINEAR and GARBAGE."""

    BETA = "beta"
    BETA_D = "beta-d"
    HEAD = "head"
    LINEAR = "linear"
    GARBAGE = "garbage"
    AFFINE = "affine"
    LINEAR_HEAD = "linear-head"


class Redex(BaseModel):
    """A rule instance located in a term.

    ``position`` addresses the application node whose argument is the redex
    argument; ``abs_position`` the abstraction binding the redex variable;
    ``occurrence`` the replaced variable for linear rules.
    """

    model_config = ConfigDict(frozen=True)

    rule: Rule
    position: Path
    abs_position: Path
    binder: Name
    argument: Term
    occurrence: Optional[Path] = None

    def same_site(self, other: "Redex") -> bool:
        """Name-independent identity of two redexes."""
        return (
            self.rule == other.rule
            and self.position == other.position
            and self.abs_position == other.abs_position
            and self.occurrence == other.occurrence
        )


class TraceStep(BaseModel):
    """One recorded step: the redex contracted and the resulting term."""

    model_config = ConfigDict(frozen=True)

    redex: Redex
    result: Term


class Trace(BaseModel):
    """A start term and the steps applied to it."""

    model_config = ConfigDict(frozen=True)

    start: Term
    steps: tuple[TraceStep, ...] = Field(default_factory=tuple)

    @property
    def final(self) -> Term:
        return self.steps[-1].result if self.steps else self.start

    @property
    def terms(self) -> list[Term]:
        return [self.start] + [step.result for step in self.steps]

    @property
    def rules(self) -> list[Rule]:
        return [step.redex.rule for step in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


class NormalizationResult(BaseModel):
    """Outcome of a strategy driver run."""

    model_config = ConfigDict(frozen=True)

    term: Term
    trace: Trace
    exhausted: bool = False
