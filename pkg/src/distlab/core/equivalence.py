"""→E rewriting, head canonical forms, and E-/σ-equivalence decisions.

Canonical forms are computed directly from the spine decomposition. The
oriented rewriting system is implemented separately on spine words; that
both agree is checked by the property suites.
"""

import logging
import random
from typing import Callable, Iterator, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from ..errors import DistlabError
from ..models import (
    Abs,
    App,
    Binding,
    CanonicalForm,
    EContext,
    Environment,
    EquivRelation,
    HeadContext,
    Name,
    Rule,
    SAbs,
    SArg,
    Term,
    Var,
    Verdict,
)
from ..models.canonical import canonical_items
from ..utils.paths import subterms, replace_at
from .reductions import default_fuel, normalize
from .spine import analyze_spine, context_free_vars, decompose, eta, spine_vars
from .syntax import NameSupply, alpha_eq, fingerprint, free_vars, occurs_free

logger = logging.getLogger(__name__)


class ArgumentIndexError(DistlabError):
    """arg(t, i) called outside 1..n_@(t) and -n_p(t)..-1."""

    pass


class ENormalizationError(DistlabError):
    """→E did not reach a normal form within its bound; the system terminates, so this is a bug."""

    pass


class EStep(BaseModel):
    """One →E rule instance on the spine word: move item ``source`` to ``target``.

    ``rule`` is ``context`` for E1[λx.E2]t →E E1[(λx.E2)t], ``abs`` for
    H_λ[E[λx.s]] →E H_λ[λx.E[s]] and ``arg`` for H_λ[E[s]t] →E H_λ[E[st]].
    """

    model_config = ConfigDict(frozen=True)

    rule: str
    source: int
    target: int


Selector = Callable[[Sequence[EStep]], int]


def leftmost(steps: Sequence[EStep]) -> int:
    return 0


def rightmost(steps: Sequence[EStep]) -> int:
    return len(steps) - 1


def random_selector(seed: int) -> Selector:
    """Seeded uniform choice among the available instances."""
    rng = random.Random(seed)
    return lambda steps: rng.randrange(len(steps))


def canonical_e_context(e: EContext | HeadContext) -> EContext:
    """𝓔(η(E)): the head canonical E-context equivalent to e."""
    return EContext(items=tuple(canonical_items(eta(e))))


def head_canonical(t: Term) -> CanonicalForm:
    """Head canonical form λx1...λxn. E_c[z t1 ... tm] of t."""
    d = decompose(t)
    env = Environment()
    for block in reversed(d.e_blocks):
        env = env + eta(block)
    return CanonicalForm(head_abs=d.head_abs, canonical_env=env, head_var=d.head_var, head_args=d.head_args)


def is_head_canonical(t: Term) -> bool:
    return head_canonical(t).render() == t


def e_steps(t: Term) -> list[EStep]:
    """All →E instances of t, ordered by the position of the moved item."""
    analysis = analyze_spine(t)
    word = analysis.word
    partner = analysis.partner()
    unmatched_abs = set(analysis.unmatched_abs)
    unmatched_args = analysis.unmatched_args
    steps: list[EStep] = []
    for i, item in enumerate(word):
        if isinstance(item, SArg) and i in partner:
            j = partner[i]
            block = word[i + 1 : j]
            if block and not (free_vars(item.argument) & spine_vars(block)):
                steps.append(EStep(rule="context", source=i, target=j - 1))
        elif isinstance(item, SAbs) and i in unmatched_abs:
            start = i
            while start > 0 and (start - 1) not in unmatched_abs:
                start -= 1
            block = word[start:i]
            if block and item.binder not in context_free_vars(block):
                steps.append(EStep(rule="abs", source=i, target=start))
        elif isinstance(item, SArg):
            later = [k for k in unmatched_args if k > i]
            end = later[0] if later else len(word)
            block = word[i + 1 : end]
            if block and not (free_vars(item.argument) & spine_vars(block)):
                steps.append(EStep(rule="arg", source=i, target=end - 1))
    return steps


def _move(word: Sequence, source: int, target: int) -> tuple:
    items = list(word)
    item = items.pop(source)
    items.insert(target, item)
    return tuple(items)


def apply_e_step(t: Term, step: EStep) -> Term:
    analysis = analyze_spine(t)
    return HeadContext(items=_move(analysis.word, step.source, step.target)).plug(Var(name=analysis.head_var))


def rewrite_e_step(t: Term, selector: Selector = leftmost) -> Optional[Term]:
    """One →E step at the instance chosen by selector, or None at a normal form."""
    steps = e_steps(t)
    if not steps:
        return None
    step = steps[selector(steps)]
    logger.debug("→E %s: move spine item %d to %d", step.rule, step.source, step.target)
    return apply_e_step(t, step)


def normalize_e(t: Term, selector: Selector = leftmost, fuel: int | None = None) -> Term:
    """Iterate rewrite_e_step to the →E normal form.

    Raises:
        ENormalizationError: if fuel runs out
    """
    if fuel is None:
        # every step raises the sum of argument positions, which is below len(word)^2
        fuel = len(analyze_spine(t).word) ** 2 + 1
    for _ in range(fuel + 1):
        nxt = rewrite_e_step(t, selector)
        if nxt is None:
            return t
        t = nxt
    raise ENormalizationError(f"→E did not terminate within {fuel} steps on {t}")


def arg(t: Term, i: int) -> Term:
    """ar(t, i): i-th head argument for i > 0, argument of the -i-th primary redex for i < 0.

    Raises:
        ArgumentIndexError: if i is 0 or out of range
    """
    cf = head_canonical(t)
    if 1 <= i <= cf.n_app:
        return cf.head_args[i - 1]
    if 1 <= -i <= cf.n_primary:
        return cf.canonical_env[-i - 1].term
    raise ArgumentIndexError(
        f"argument index {i} out of range (n_@ = {cf.n_app}, n_p = {cf.n_primary})"
    )


def commute(a: Binding, b: Binding) -> bool:
    """Adjacent pairs t_a/x_a, t_b/x_b may be swapped."""
    return not occurs_free(a.variable, b.term) and not occurs_free(b.variable, a.term)


def sigma_orders(env: Environment, labels: dict[Name, str] | None = None) -> Iterator[Environment]:
    """Least representatives of env's commutation class, one per way of breaking ties.

    The sort key is the argument fingerprint only: outer-scope variables print
    by their label and sibling binders as ``~``. Pairs with equal fingerprints
    are interchangeable as far as the key can tell, so each choice among them
    yields its own order. Binder names never influence the result.
    """
    labels = dict(labels or {})
    for variable in env.variables:
        labels[variable] = "~"

    def go(remaining: list[Binding], ordered: list[Binding]) -> Iterator[Environment]:
        if not remaining:
            yield Environment(pairs=tuple(ordered))
            return
        available = [
            k for k in range(len(remaining)) if all(commute(remaining[j], remaining[k]) for j in range(k))
        ]
        keys = {k: fingerprint(remaining[k].term, labels) for k in available}
        best = min(keys.values())
        for k in available:
            if keys[k] == best:
                yield from go(remaining[:k] + remaining[k + 1 :], ordered + [remaining[k]])

    return go(list(env.pairs), [])


def sigma_sort(env: Environment, labels: dict[Name, str] | None = None) -> Environment:
    """Lexicographically least representative of env's commutation class.

    Ties between equal fingerprints keep their order in env.
    """
    return next(sigma_orders(env, labels))


def _deep_equal(t: Term, s: Term, lt: dict[Name, int], ls: dict[Name, int], sort_env: bool) -> bool:
    ct, cs = head_canonical(t), head_canonical(s)
    if (ct.n_lambda, ct.n_app, ct.n_primary) != (cs.n_lambda, cs.n_app, cs.n_primary):
        return False
    lt, ls = dict(lt), dict(ls)
    depth = max(list(lt.values()) + list(ls.values()) + [-1]) + 1
    for a, b in zip(ct.head_abs, cs.head_abs):
        if a.annotation != b.annotation:
            return False
        lt[a.binder] = ls[b.binder] = depth
        depth += 1
    if not sort_env:
        return _env_equal(ct, cs, ct.canonical_env, cs.canonical_env, lt, ls, depth, sort_env)
    env_t = sigma_sort(ct.canonical_env, {n: f"#{lvl}" for n, lvl in lt.items()})
    return any(
        _env_equal(ct, cs, env_t, env_s, lt, ls, depth, sort_env)
        for env_s in sigma_orders(cs.canonical_env, {n: f"#{lvl}" for n, lvl in ls.items()})
    )


def _env_equal(
    ct: CanonicalForm,
    cs: CanonicalForm,
    env_t: Environment,
    env_s: Environment,
    lt: dict[Name, int],
    ls: dict[Name, int],
    depth: int,
    sort_env: bool,
) -> bool:
    lt, ls = dict(lt), dict(ls)
    for a, b in zip(reversed(env_t.pairs), reversed(env_s.pairs)):
        if a.annotation != b.annotation:
            return False
        lt[a.variable] = ls[b.variable] = depth
        depth += 1
    head_t, head_s = lt.get(ct.head_var), ls.get(cs.head_var)
    if head_t is None and head_s is None:
        if ct.head_var != cs.head_var:
            return False
    elif head_t != head_s:
        return False
    pairs = list(zip(env_t.terms, env_s.terms)) + list(zip(ct.head_args, cs.head_args))
    return all(_deep_equal(a, b, lt, ls, sort_env) for a, b in pairs)


def equivalent(t: Term, s: Term, rel: EquivRelation, fuel: int | None = None) -> Verdict:
    """Decide t ≡ s for rel; Beta is a fuel-bounded semi-decision that may answer UNKNOWN."""
    if rel == EquivRelation.ALPHA:
        result = alpha_eq(t, s)
    elif rel == EquivRelation.SURFACE_E:
        result = alpha_eq(head_canonical(t).render(), head_canonical(s).render())
    elif rel == EquivRelation.DEEP_E:
        result = _deep_equal(t, s, {}, {}, sort_env=False)
    elif rel == EquivRelation.SIGMA:
        result = _deep_equal(t, s, {}, {}, sort_env=True)
    else:
        return _beta_equivalent(t, s, fuel)
    return Verdict.TRUE if result else Verdict.FALSE


def _beta_equivalent(t: Term, s: Term, fuel: int | None) -> Verdict:
    supply = NameSupply.for_terms(t, s)
    results = []
    for term in (t, s):
        outcome = normalize(term, Rule.BETA, fuel if fuel is not None else default_fuel(term), supply)
        if outcome.exhausted:
            logger.warning("β-normalization ran out of fuel; equivalence unknown")
            return Verdict.UNKNOWN
        results.append(outcome.term)
    return Verdict.TRUE if alpha_eq(*results) else Verdict.FALSE


def permute_primary_redexes(t: Term, i: int) -> Optional[Term]:
    """Swap the i-th and (i+1)-th canonical primary redexes when they commute.

    Returns the re-rendered canonical form, or None if the pairs depend on
    each other.

    Raises:
        ArgumentIndexError: if there is no (i+1)-th primary redex
    """
    cf = head_canonical(t)
    if not 1 <= i < cf.n_primary:
        raise ArgumentIndexError(f"no primary redexes {i} and {i + 1} (n_p = {cf.n_primary})")
    pairs = list(cf.canonical_env.pairs)
    if not commute(pairs[i - 1], pairs[i]):
        return None
    pairs[i - 1], pairs[i] = pairs[i], pairs[i - 1]
    swapped = cf.model_copy(update={"canonical_env": Environment(pairs=tuple(pairs))})
    return swapped.render()


def sigma_steps(t: Term) -> list[Term]:
    """Results of one oriented σ-rule at any position of t.

    ((λx.u)v)w → (λx.u w)v if x ∉ FV(w); (λx.λy.u)v → λy.(λx.u)v if y ∉ FV(v).
    """
    results = []
    for path, node in subterms(t):
        if not isinstance(node, App):
            continue
        fun = node.fun
        if isinstance(fun, App) and isinstance(fun.fun, Abs):
            lam = fun.fun
            if not occurs_free(lam.binder, node.arg):
                new = App(
                    fun=Abs(binder=lam.binder, annotation=lam.annotation, body=App(fun=lam.body, arg=node.arg)),
                    arg=fun.arg,
                )
                results.append(replace_at(t, path, new))
        if isinstance(fun, Abs) and isinstance(fun.body, Abs):
            inner = fun.body
            if not occurs_free(inner.binder, node.arg):
                new = Abs(
                    binder=inner.binder,
                    annotation=inner.annotation,
                    body=App(fun=Abs(binder=fun.binder, annotation=fun.annotation, body=inner.body), arg=node.arg),
                )
                results.append(replace_at(t, path, new))
    return results


def sigma_normal_forms(t: Term, limit: int = 1000) -> list[Term]:
    """Normal forms of the oriented σ-rules reachable from t, explored up to limit terms.

    The oriented system terminates but is not confluent, so several normal
    forms may come back.
    """
    seen = {fingerprint(t)}
    frontier = [t]
    normal: list[Term] = []
    while frontier and len(seen) <= limit:
        current = frontier.pop()
        successors = sigma_steps(current)
        if not successors:
            normal.append(current)
        for nxt in successors:
            key = fingerprint(nxt)
            if key not in seen:
                seen.add(key)
                frontier.append(nxt)
    return normal
