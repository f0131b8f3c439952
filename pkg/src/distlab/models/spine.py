"""Spine, head context and decomposition data models."""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .names import Name
from .terms import Abs, App, Path, Term, Var
from .types import SimpleType


class SAbs(BaseModel):
    """Spine abstraction."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["abs"] = "abs"
    binder: Name
    annotation: Optional[SimpleType] = None

    def __str__(self) -> str:
        return f"abs {self.binder}"


class SArg(BaseModel):
    """Spine argument (right subterm of a spine application)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["arg"] = "arg"
    argument: Term

    def __str__(self) -> str:
        return f"arg {self.argument}"


SpineItem = Annotated[Union[SAbs, SArg], Field(discriminator="kind")]


class HeadContext(BaseModel):
    """A head context given by its spine word, ordered root to hole."""

    model_config = ConfigDict(frozen=True)

    items: tuple[SpineItem, ...] = Field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.items)

    def plug(self, t: Term) -> Term:
        """Fill the hole with t. Plugging never renames, so t may be captured."""
        result = t
        for item in reversed(self.items):
            if isinstance(item, SAbs):
                result = Abs(binder=item.binder, annotation=item.annotation, body=result)
            else:
                result = App(fun=result, arg=item.argument)
        return result

    @property
    def spine_vars(self) -> list[Name]:
        return [item.binder for item in self.items if isinstance(item, SAbs)]

    @property
    def arguments(self) -> list[Term]:
        return [item.argument for item in self.items if isinstance(item, SArg)]

    def __str__(self) -> str:
        return str(self.plug(Var(name=HOLE)))


class EContext(HeadContext):
    """A head context whose spine word is a complete Dyck word."""


class SpineAnalysis(BaseModel):
    """Spine word of the maximal head context plus its bracket matching.

    ``matching`` holds (arg_position, abs_position) pairs into ``word``.
    """

    model_config = ConfigDict(frozen=True)

    word: tuple[SpineItem, ...]
    paths: tuple[Path, ...]
    head_var: Name
    head_path: Path
    matching: tuple[tuple[int, int], ...]
    unmatched_abs: tuple[int, ...]
    unmatched_args: tuple[int, ...]

    @property
    def context(self) -> HeadContext:
        return HeadContext(items=self.word)

    @property
    def n_lambda(self) -> int:
        return len(self.unmatched_abs)

    @property
    def n_app(self) -> int:
        return len(self.unmatched_args)

    @property
    def n_primary(self) -> int:
        return len(self.matching)

    def partner(self) -> dict[int, int]:
        """Map every matched position to the position it is matched with."""
        result: dict[int, int] = {}
        for arg_pos, abs_pos in self.matching:
            result[arg_pos] = abs_pos
            result[abs_pos] = arg_pos
        return result


class Decomposition(BaseModel):
    """Unique split H = E0[λx1.E1[... λxn.En[E(n+1)[... E(n+m) t1 ...] tm]]]."""

    model_config = ConfigDict(frozen=True)

    e_blocks: tuple[EContext, ...]
    head_abs: tuple[SAbs, ...]
    head_args: tuple[Term, ...]
    head_var: Name

    def reassemble(self) -> Term:
        n = len(self.head_abs)
        m = len(self.head_args)
        items: list = list(self.e_blocks[0].items)
        for i in range(1, n + 1):
            items.append(self.head_abs[i - 1])
            items.extend(self.e_blocks[i].items)
        for j in range(1, m + 1):
            items.append(SArg(argument=self.head_args[m - j]))
            items.extend(self.e_blocks[n + j].items)
        return HeadContext(items=tuple(items)).plug(Var(name=self.head_var))


# Stand-in for the hole when a context is printed or its free variables are taken.
# The grammar never produces a name starting with "_".
HOLE = Name(base="_")
