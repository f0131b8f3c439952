"""Simple type data models."""

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field

from .names import Name


class Base(BaseModel):
    """The unique base type o."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["base"] = "base"

    def __str__(self) -> str:
        return "o"

    @property
    def depth(self) -> int:
        return 0


class Arrow(BaseModel):
    """Functional type domain -> codomain."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["arrow"] = "arrow"
    domain: "SimpleType"
    codomain: "SimpleType"

    def __str__(self) -> str:
        left = str(self.domain)
        if isinstance(self.domain, Arrow):
            left = f"({left})"
        return f"{left}->{self.codomain}"

    @property
    def depth(self) -> int:
        return 1 + max(self.domain.depth, self.codomain.depth)


SimpleType = Annotated[Union[Base, Arrow], Field(discriminator="kind")]

Arrow.model_rebuild()

O = Base()


def arrow(*types: SimpleType) -> SimpleType:
    """Build the right-nested arrow type t1 -> t2 -> ... -> tn."""
    if not types:
        raise ValueError("arrow() needs at least one type")
    result = types[-1]
    for domain in reversed(types[:-1]):
        result = Arrow(domain=domain, codomain=result)
    return result


def split_arrow(tau: SimpleType) -> tuple[list[SimpleType], SimpleType]:
    """Split t1 -> ... -> tn -> o into ([t1, ..., tn], o)."""
    domains: list[SimpleType] = []
    while isinstance(tau, Arrow):
        domains.append(tau.domain)
        tau = tau.codomain
    return domains, tau


# Types of free variables; at most one binding per name.
TypeContext = dict[Name, SimpleType]
