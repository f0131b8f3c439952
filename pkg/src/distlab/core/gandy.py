"""Interpretation of typed terms in increasing-function domains and the induced measure.

Values at base type are naturals; a value at ``a -> b`` is an increasing map
from values at ``a`` to values at ``b``. Orders between functions are only
ever decided on a finite probe set.
"""

from typing import Mapping, Sequence

from ..errors import DistlabError
from ..models import (
    Abs,
    App,
    Arrow,
    FunVal,
    NatVal,
    Name,
    SemValue,
    SimpleType,
    Term,
    Trace,
    TypeContext,
    Valuation,
    Var,
)
from .typecheck import infer, type_context_of

PROBE_BUMPS = (1, 2, 3)


class SemanticError(DistlabError):
    """A value does not inhabit the domain it is used at, or a variable has no value."""

    pass


def _expect_nat(v: SemValue) -> int:
    if not isinstance(v, NatVal):
        raise SemanticError(f"expected a natural, found {v}")
    return v.n


def _expect_fun(tau: Arrow, v: SemValue) -> FunVal:
    if not isinstance(v, FunVal) or v.at_type != tau:
        raise SemanticError(f"expected a value of type {tau}, found {v}")
    return v


def bottom(tau: SimpleType) -> SemValue:
    """The least-like element tau_*: 0 at base type, v ↦ b_* + a*(v) at a -> b."""
    if not isinstance(tau, Arrow):
        return NatVal(n=0)
    return FunVal(
        fn=lambda v: bump(tau.codomain, bottom(tau.codomain), collapse(tau.domain, v)),
        at_type=tau,
    )


def collapse(tau: SimpleType, v: SemValue) -> int:
    """tau*(v): the natural obtained by feeding bottoms to v."""
    if not isinstance(tau, Arrow):
        return _expect_nat(v)
    return collapse(tau.codomain, _expect_fun(tau, v)(bottom(tau.domain)))


def bump(tau: SimpleType, v: SemValue, k: int) -> SemValue:
    """v +_tau k, adding k pointwise to the final result."""
    if not isinstance(tau, Arrow):
        return NatVal(n=_expect_nat(v) + k)
    f = _expect_fun(tau, v)
    return FunVal(fn=lambda w: bump(tau.codomain, f(w), k), at_type=tau)


def interpret(t: Term, valuation: Valuation, tuned: bool = True) -> SemValue:
    """[[t]] under valuation.

    With ``tuned`` a variable denotes its value bumped by one; the untuned
    variant is left unchanged by linear substitution steps.

    Raises:
        TypeCheckError: if t does not typecheck against the valuation's types
        SemanticError: if a free variable has no value
    """
    infer(t, type_context_of(valuation))

    def go(u: Term, phi: dict[Name, SemValue]) -> SemValue:
        if isinstance(u, Var):
            if u.name not in phi:
                raise SemanticError(f"no value for {u.name}")
            value = phi[u.name]
            return bump(value.type, value, 1) if tuned else value
        if isinstance(u, Abs):
            tau = infer(u, type_context_of(phi))
            sigma = tau.domain

            def fn(v: SemValue) -> SemValue:
                return bump(tau.codomain, go(u.body, {**phi, u.binder: v}), collapse(sigma, v) + 1)

            return FunVal(fn=fn, at_type=tau)
        assert isinstance(u, App)
        f = go(u.fun, phi)
        if not isinstance(f, FunVal):
            raise SemanticError(f"cannot apply {f}")
        return f(go(u.arg, phi))

    return go(t, dict(valuation))


def measure(t: Term, valuation: Valuation, tuned: bool = True) -> int:
    """mu(t) = tau*([[t]]) for t : tau."""
    tau = infer(t, type_context_of(valuation))
    return collapse(tau, interpret(t, valuation, tuned))


def default_valuation(ctx: TypeContext) -> Valuation:
    return {n: bottom(tau) for n, tau in ctx.items()}


def probe_set(tau: SimpleType, extras: Sequence[SemValue] = ()) -> list[SemValue]:
    """bottom(tau), bump(tau, bottom(tau), k) for k = 1, 2, 3, then extras."""
    base = bottom(tau)
    return [base] + [bump(tau, base, k) for k in PROBE_BUMPS] + list(extras)


def precedes(
    tau: SimpleType,
    v: SemValue,
    w: SemValue,
    extras: Mapping[SimpleType, Sequence[SemValue]] | None = None,
) -> bool:
    """v ≺ w at tau, deciding arrow types pointwise on probe_set of the domain."""
    extras = extras or {}
    if not isinstance(tau, Arrow):
        return _expect_nat(v) < _expect_nat(w)
    f, g = _expect_fun(tau, v), _expect_fun(tau, w)
    return all(
        precedes(tau.codomain, f(p), g(p), extras)
        for p in probe_set(tau.domain, extras.get(tau.domain, ()))
    )


def is_increasing(
    tau: Arrow,
    f: SemValue,
    extras: Mapping[SimpleType, Sequence[SemValue]] | None = None,
) -> bool:
    """Whether f maps ≺-ordered probe pairs to ≺-ordered results."""
    extras = extras or {}
    fun = _expect_fun(tau, f)
    probes = probe_set(tau.domain, extras.get(tau.domain, ()))
    for v in probes:
        for w in probes:
            if precedes(tau.domain, v, w, extras) and not precedes(tau.codomain, fun(v), fun(w), extras):
                return False
    return True


def measure_trace(trace: Trace, ctx: TypeContext) -> list[int]:
    """Measure under the default valuation of every term in trace."""
    valuation = default_valuation(ctx)
    return [measure(t, valuation) for t in trace.terms]
