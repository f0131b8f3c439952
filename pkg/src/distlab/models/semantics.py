"""Semantic values of the increasing-function domains."""

from typing import Callable, Literal, Union

from pydantic import BaseModel, ConfigDict, Field

from .names import Name
from .types import O, Arrow, SimpleType


class NatVal(BaseModel):
    """Element of the base domain: a natural number."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["nat"] = "nat"
    n: int = Field(..., ge=0)

    @property
    def type(self) -> SimpleType:
        return O

    def __str__(self) -> str:
        return str(self.n)


class FunVal(BaseModel):
    """Element of an arrow domain, applied by calling it."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["fun"] = "fun"
    fn: Callable[["SemValue"], "SemValue"]
    at_type: Arrow

    @property
    def type(self) -> SimpleType:
        return self.at_type

    def __call__(self, v: "SemValue") -> "SemValue":
        return self.fn(v)

    def __str__(self) -> str:
        return f"<fun : {self.at_type}>"


SemValue = Union[NatVal, FunVal]

FunVal.model_rebuild()

# Values of variables x:τ; the stored value inhabits ⟨τ⟩.
Valuation = dict[Name, SemValue]
