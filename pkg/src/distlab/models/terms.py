"""λ-term and environment data models."""

from typing import Annotated, Iterator, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .names import Name, name as parse_name
from .types import SimpleType

# A position in a term: steps "b" (abstraction body), "f" (function), "a" (argument).
Path = tuple[str, ...]


class _TermBase(BaseModel):
    model_config = ConfigDict(frozen=True)

    def __str__(self) -> str:
        from ..utils.parser import print_term

        return print_term(self)

    @property
    def size(self) -> int:
        """Node count."""
        count = 0
        stack: list[_TermBase] = [self]
        while stack:
            node = stack.pop()
            count += 1
            if isinstance(node, Abs):
                stack.append(node.body)
            elif isinstance(node, App):
                stack.append(node.fun)
                stack.append(node.arg)
        return count


class Var(_TermBase):
    """Variable occurrence."""

    kind: Literal["var"] = "var"
    name: Name


class Abs(_TermBase):
    """Abstraction, optionally annotated with the binder's type."""

    kind: Literal["abs"] = "abs"
    binder: Name
    annotation: Optional[SimpleType] = None
    body: "Term"


class App(_TermBase):
    """Application."""

    kind: Literal["app"] = "app"
    fun: "Term"
    arg: "Term"


Term = Annotated[Union[Var, Abs, App], Field(discriminator="kind")]

Abs.model_rebuild()
App.model_rebuild()


class Binding(BaseModel):
    """A substitution pair t/x of an environment."""

    model_config = ConfigDict(frozen=True)

    term: Term
    variable: Name
    annotation: Optional[SimpleType] = None

    def __str__(self) -> str:
        return f"{self.term}/{self.variable}"


class Environment(BaseModel):
    """Ordered sequence of substitutions t1/x1, ..., tk/xk.

    For i < j, occurrences of x_j inside t_i are affected by t_j/x_j.
    """

    model_config = ConfigDict(frozen=True)

    pairs: tuple[Binding, ...] = Field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.pairs)

    def __getitem__(self, index: int) -> Binding:
        return self.pairs[index]

    def bindings(self) -> Iterator[Binding]:
        return iter(self.pairs)

    def __add__(self, other: "Environment") -> "Environment":
        return Environment(pairs=self.pairs + other.pairs)

    @property
    def variables(self) -> list[Name]:
        return [b.variable for b in self.pairs]

    @property
    def terms(self) -> list["Term"]:
        return [b.term for b in self.pairs]

    def __str__(self) -> str:
        return ", ".join(str(b) for b in self.pairs) or "ε"


def var(n: Name | str) -> Var:
    """Shorthand constructor for variables."""
    if isinstance(n, str):
        n = parse_name(n)
    return Var(name=n)


def lam(binder: Name | str, body: Term, annotation: SimpleType | None = None) -> Abs:
    """Shorthand constructor for abstractions."""
    if isinstance(binder, str):
        binder = parse_name(binder)
    return Abs(binder=binder, annotation=annotation, body=body)


def app(fun: Term, *args: Term) -> Term:
    """Left-associated application fun a1 ... an."""
    result = fun
    for a in args:
        result = App(fun=result, arg=a)
    return result
