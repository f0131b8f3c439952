"""Head canonical forms and equivalence relation models."""

from enum import Enum

from pydantic import BaseModel, ConfigDict

from .names import Name
from .spine import SAbs, SArg, HeadContext
from .terms import Environment, Term, Var


class EquivRelation(str, Enum):
    """Equivalences decided by the equivalence module."""

    ALPHA = "alpha"
    SURFACE_E = "surface-e"
    DEEP_E = "deep-e"
    SIGMA = "sigma"
    BETA = "beta"


class Verdict(str, Enum):
    """Outcome of an equivalence decision; UNKNOWN only for fuel-bounded Beta."""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __bool__(self) -> bool:
        return self is Verdict.TRUE


def canonical_items(env: Environment) -> list[SAbs | SArg]:
    """Spine word of the head canonical E-context built from env.

    t1/x1, ..., tn/xn renders as (λxn. ... (λx1.□)t1 ...)tn.
    """
    items: list[SAbs | SArg] = []
    for binding in reversed(env.pairs):
        items.append(SArg(argument=binding.term))
        items.append(SAbs(binder=binding.variable, annotation=binding.annotation))
    return items


class CanonicalForm(BaseModel):
    """λx1...λxn. E_c[z t1 ... tm] with E_c built from canonical_env."""

    model_config = ConfigDict(frozen=True)

    head_abs: tuple[SAbs, ...]
    canonical_env: Environment
    head_var: Name
    head_args: tuple[Term, ...]

    @property
    def n_lambda(self) -> int:
        return len(self.head_abs)

    @property
    def n_app(self) -> int:
        return len(self.head_args)

    @property
    def n_primary(self) -> int:
        return len(self.canonical_env)

    def context(self) -> HeadContext:
        items: list[SAbs | SArg] = list(self.head_abs)
        items.extend(canonical_items(self.canonical_env))
        items.extend(SArg(argument=t) for t in reversed(self.head_args))
        return HeadContext(items=tuple(items))

    def render(self) -> Term:
        return self.context().plug(Var(name=self.head_var))

    def __str__(self) -> str:
        return str(self.render())
