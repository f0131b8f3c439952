"""Church-style simple type checking."""

from ..errors import DistlabError
from ..models import Abs, Arrow, Name, SimpleType, Term, Trace, TypeContext, Valuation, Var


class TypeCheckError(DistlabError):
    """Base class for typing failures."""

    pass


class UnannotatedBinderError(TypeCheckError):
    def __init__(self, binder: Name):
        self.binder = binder
        super().__init__(f"binder {binder} has no type annotation")


class UnboundVariableError(TypeCheckError):
    def __init__(self, variable: Name):
        self.variable = variable
        super().__init__(f"free variable {variable} has no type in the context")


class TypeMismatchError(TypeCheckError):
    """An application whose function or argument type does not fit."""

    def __init__(self, expected: str, found: SimpleType, term: Term):
        self.expected = expected
        self.found = found
        self.term = term
        super().__init__(f"in {term}: expected {expected}, found {found}")


def infer(t: Term, ctx: TypeContext | None = None) -> SimpleType:
    """The unique type of t, free variables typed by ctx.

    Raises:
        UnannotatedBinderError: if some binder lacks an annotation
        UnboundVariableError: if a free variable is missing from ctx
        TypeMismatchError: if an application does not typecheck
    """
    env = dict(ctx or {})

    def go(u: Term, scope: dict[Name, SimpleType]) -> SimpleType:
        if isinstance(u, Var):
            if u.name not in scope:
                raise UnboundVariableError(u.name)
            return scope[u.name]
        if isinstance(u, Abs):
            if u.annotation is None:
                raise UnannotatedBinderError(u.binder)
            return Arrow(domain=u.annotation, codomain=go(u.body, {**scope, u.binder: u.annotation}))
        fun_type = go(u.fun, scope)
        if not isinstance(fun_type, Arrow):
            raise TypeMismatchError("an arrow type", fun_type, u.fun)
        arg_type = go(u.arg, scope)
        if arg_type != fun_type.domain:
            raise TypeMismatchError(str(fun_type.domain), arg_type, u.arg)
        return fun_type.codomain

    return go(t, env)


def is_typed(t: Term, ctx: TypeContext | None = None) -> bool:
    try:
        infer(t, ctx)
    except TypeCheckError:
        return False
    return True


def check_subject_reduction(tr: Trace, ctx: TypeContext | None = None) -> bool:
    """True iff every term of tr has the type of its start.

    Raises:
        TypeCheckError: if the start term does not typecheck
    """
    expected = infer(tr.start, ctx)
    for step in tr.steps:
        try:
            if infer(step.result, ctx) != expected:
                return False
        except TypeCheckError:
            return False
    return True


def type_context_of(valuation: Valuation) -> TypeContext:
    """Types of the variables a valuation covers."""
    return {n: v.type for n, v in valuation.items()}
