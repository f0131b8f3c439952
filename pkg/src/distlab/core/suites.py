"""Property suites over generated terms and the runner that shrinks their counterexamples."""

import logging
import random
from abc import ABC, abstractmethod
from typing import Callable, Iterator, Optional

from ..errors import DistlabError
from ..models import (
    Abs,
    App,
    Arrow,
    Counterexample,
    Environment,
    EquivRelation,
    GenConfig,
    Name,
    Report,
    Rule,
    SemValue,
    SimpleType,
    Term,
    Trace,
    TraceStep,
    TypeContext,
    Var,
    Verdict,
)
from ..utils.parser import parse_term
from ..utils.paths import subterm_at, subterms
from .equivalence import (
    apply_e_step,
    e_steps,
    equivalent,
    head_canonical,
    is_head_canonical,
    leftmost,
    normalize_e,
    permute_primary_redexes,
    random_selector,
    rightmost,
    sigma_steps,
)
from .gandy import bump, collapse, default_valuation, interpret, is_increasing, measure, precedes, probe_set
from .generators import GenerationError, enumerate_terms, gen_e_context, gen_term, gen_type, gen_typed_term
from .postponement import postpone_garbage
from .reductions import (
    FuelExhaustedError,
    apply_step,
    beta_normal_form_by_head,
    default_fuel,
    find_redexes,
    is_head_normal,
    normalize,
    reduce_primary_redexes,
    simulate_beta_by_affine,
)
from .spine import analyze_spine, decompose, e_context, eta, primary_redexes
from .syntax import (
    NameSupply,
    alpha_eq,
    apply_env,
    ensure_distinct_names,
    free_vars,
    has_distinct_names,
    refresh,
    substitute,
)
from .typecheck import check_subject_reduction, infer, is_typed

logger = logging.getLogger(__name__)

REDUCTION_RULES = tuple(Rule)
CHAIN = (EquivRelation.SURFACE_E, EquivRelation.DEEP_E, EquivRelation.SIGMA, EquivRelation.BETA)
BUMPS = ((0, 1), (1, 2), (2, 5))
AFFINE_TRACE_LENGTH = 12
CONTEXT_VARIABLE = Name(base="c")


class UnknownSuiteError(DistlabError):
    """No suite is registered under the requested name."""

    pass


class SkipCase(Exception):
    """Raised by a check when the generated case turns out not to apply."""


class PropertySuite(ABC):
    """A property checked over generated terms.

    ``check`` returns None when the property holds and a description of the
    violation otherwise. Cases failing ``precondition`` are skipped, and the
    shrinker only keeps subterms that still satisfy it. Suites about
    contracting redexes set ``needs_redex`` so that normal forms are skipped.
    """

    name: str = ""
    description: str = ""
    exhaustive: bool = False
    needs_redex: Optional[Rule] = None

    @abstractmethod
    def generate(self, cfg: GenConfig) -> Term:
        pass

    def precondition(self, t: Term, cfg: GenConfig) -> bool:
        return True

    def has_redex(self, t: Term) -> bool:
        return self.needs_redex is None or bool(find_redexes(t, self.needs_redex))

    @abstractmethod
    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        pass


class UntypedSuite(PropertySuite):
    def generate(self, cfg: GenConfig) -> Term:
        return gen_term(cfg)

    def precondition(self, t: Term, cfg: GenConfig) -> bool:
        return has_distinct_names(t) and self.has_redex(t)


class TypedSuite(PropertySuite):
    """Suites over annotated terms typed by the configuration's free variable pool."""

    def generate(self, cfg: GenConfig) -> Term:
        return gen_typed_term(cfg, gen_type(cfg))

    def precondition(self, t: Term, cfg: GenConfig) -> bool:
        return has_distinct_names(t) and is_typed(t, cfg.free_var_pool) and self.has_redex(t)


SUITES: dict[str, PropertySuite] = {}


def register(cls: type[PropertySuite]) -> type[PropertySuite]:
    suite = cls()
    SUITES[suite.name] = suite
    return cls


def suite_names() -> list[str]:
    return sorted(SUITES)


def get_suite(name: str) -> PropertySuite:
    """
    Raises:
        UnknownSuiteError: if name is not registered
    """
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuiteError(f"unknown suite {name!r}; known suites: {', '.join(suite_names())}") from None


# Runner


def _outcome(suite: PropertySuite, t: Term, cfg: GenConfig) -> Optional[str]:
    try:
        return suite.check(t, cfg)
    except DistlabError as e:
        return f"{type(e).__name__}: {e}"


def _violates(suite: PropertySuite, t: Term, cfg: GenConfig) -> bool:
    if not suite.precondition(t, cfg):
        return False
    try:
        return _outcome(suite, t, cfg) is not None
    except SkipCase:
        return False


def shrink(suite: PropertySuite, t: Term, cfg: GenConfig) -> Term:
    """Greedily replace t by its smallest proper subterm that still violates the suite."""
    current = t
    while True:
        candidates = sorted((u for path, u in subterms(current) if path), key=lambda u: u.size)
        smaller = next((u for u in candidates if _violates(suite, u, cfg)), None)
        if smaller is None:
            return current
        current = smaller


def _cases(
    suite: PropertySuite, cfg: GenConfig, count: int, exhaustive: int | None
) -> Iterator[tuple[int, GenConfig, Optional[Term]]]:
    for index in range(count):
        case_cfg = cfg.for_case(index)
        try:
            yield case_cfg.seed, case_cfg, suite.generate(case_cfg)
        except GenerationError as e:
            logger.debug("%s: case %d not generated: %s", suite.name, index, e)
            yield case_cfg.seed, case_cfg, None
    if exhaustive and suite.exhaustive:
        for index, t in enumerate(enumerate_terms(exhaustive, list(cfg.free_var_pool))):
            yield index, cfg, t


def run_property_suite(name: str, cfg: GenConfig, count: int = 100, exhaustive: int | None = None) -> Report:
    """Run suite ``name`` over ``count`` generated cases.

    Args:
        name: Registered suite name
        cfg: Base configuration; case i runs under cfg.for_case(i)
        count: Number of generated cases
        exhaustive: Also check every term up to this size, for suites that support it

    Returns:
        Report with pass/fail/skip counts and shrunk counterexamples

    Raises:
        UnknownSuiteError: if name is not registered
    """
    suite = get_suite(name)
    passed = failed = skipped = 0
    counterexamples: list[Counterexample] = []
    for seed, case_cfg, t in _cases(suite, cfg, count, exhaustive):
        if t is None or not suite.precondition(t, case_cfg):
            skipped += 1
            continue
        try:
            message = _outcome(suite, t, case_cfg)
        except SkipCase:
            skipped += 1
            continue
        if message is None:
            passed += 1
            continue
        failed += 1
        logger.info("%s failed on seed %d: %s", name, seed, message)
        small = shrink(suite, t, case_cfg)
        counterexamples.append(Counterexample(suite=name, seed=seed, term=str(small), message=message))
    return Report(
        suite=name,
        seed=cfg.seed,
        passed=passed,
        failed=failed,
        skipped=skipped,
        counterexamples=tuple(counterexamples),
    )


# Helpers


def _run(t: Term, rule: Rule, supply: NameSupply | None = None, typed: bool = True) -> Trace:
    """Full trace of rule from t; exhaustion fails typed cases and skips untyped ones."""
    outcome = normalize(t, rule, default_fuel(t, typed), supply)
    if outcome.exhausted:
        if typed:
            raise FuelExhaustedError(f"{rule.value} did not terminate on a typed term")
        raise SkipCase()
    return outcome.trace


def _beta_normal(t: Term, typed: bool = True) -> Term:
    return _run(t, Rule.BETA, typed=typed).final


def _agree(tau: SimpleType, a: SemValue, b: SemValue) -> bool:
    """Equality of two values on the probe points of tau."""
    if not isinstance(tau, Arrow):
        return collapse(tau, a) == collapse(tau, b)
    return all(_agree(tau.codomain, a(p), b(p)) for p in probe_set(tau.domain))


def _forget_indices(t: Term) -> Term:
    if isinstance(t, Var):
        return Var(name=Name(base=t.name.base))
    if isinstance(t, Abs):
        return Abs(binder=Name(base=t.binder.base), annotation=t.annotation, body=_forget_indices(t.body))
    return App(fun=_forget_indices(t.fun), arg=_forget_indices(t.arg))


def _each_rule(t: Term, check: Callable[[Rule, Trace], Optional[str]]) -> Optional[str]:
    for rule in REDUCTION_RULES:
        message = check(rule, _run(t, rule))
        if message is not None:
            return message
    return None


# Syntax


@register
class RoundTrip(PropertySuite):
    name = "roundtrip"
    description = "printing then parsing gives the term back exactly"

    def generate(self, cfg: GenConfig) -> Term:
        if cfg.seed % 2:
            return gen_typed_term(cfg, gen_type(cfg))
        return gen_term(cfg)

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        back = parse_term(str(t))
        return None if back == t else f"reparsed as {back}"


@register
class DistinctNames(PropertySuite):
    name = "distinct-names"
    description = "ensure_distinct_names is α-equal to its input and has distinct names"

    def generate(self, cfg: GenConfig) -> Term:
        return _forget_indices(gen_term(cfg))

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        renamed = ensure_distinct_names(t, NameSupply.for_terms(t))
        if not alpha_eq(renamed, t):
            return f"renamed to the non-α-equal {renamed}"
        if not has_distinct_names(renamed):
            return f"{renamed} still reuses a name"
        return None


@register
class SubstitutionHygiene(UntypedSuite):
    name = "substitution"
    description = "substitution keeps distinct names and ignores non-free variables"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        supply = NameSupply.for_terms(t)
        s = refresh(gen_term(cfg.for_case(1)), supply)
        x = sorted(cfg.free_var_pool, key=Name.sort_key)[0]
        result = substitute(t, x, s, supply)
        if not has_distinct_names(result):
            return f"{t}{{{s}/{x}}} = {result} reuses a name"
        absent = supply.fresh("absent")
        if substitute(t, absent, s, supply) != t:
            return f"substituting the absent {absent} changed the term"
        return None


@register
class EnvironmentComposition(UntypedSuite):
    name = "env-composition"
    description = "applying η1 ++ η2 equals applying η1 then η2"

    def generate(self, cfg: GenConfig) -> Term:
        context, body = gen_e_context(cfg)
        return context.plug(body)

    def precondition(self, t: Term, cfg: GenConfig) -> bool:
        return has_distinct_names(t) and analyze_spine(t).n_primary > 0

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        cf = head_canonical(t)
        body = cf.model_copy(update={"canonical_env": Environment()}).render()
        env = cf.canonical_env
        k = len(env) // 2
        first, second = Environment(pairs=env.pairs[:k]), Environment(pairs=env.pairs[k:])
        supply = NameSupply.for_terms(t)
        whole = apply_env(body, first + second, supply)
        stepwise = apply_env(apply_env(body, first, supply), second, supply)
        return None if alpha_eq(whole, stepwise) else f"{whole} differs from {stepwise}"


# Spine and equivalence


@register
class Decomposition(UntypedSuite):
    name = "decomposition"
    description = "the spine decomposition reassembles to the term; unmatched λs precede unmatched arguments"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        rebuilt = decompose(t).reassemble()
        if rebuilt != t:
            return f"reassembled as {rebuilt}"
        analysis = analyze_spine(t)
        if analysis.unmatched_abs and analysis.unmatched_args:
            if max(analysis.unmatched_abs) > min(analysis.unmatched_args):
                return "an unmatched argument precedes an unmatched abstraction"
        return None


@register
class EContextBeta(UntypedSuite):
    name = "e-context-beta"
    description = "contracting the primary redexes of E[u] gives u{η(E)}"

    def generate(self, cfg: GenConfig) -> Term:
        context, body = gen_e_context(cfg)
        supply = NameSupply.for_terms(context.plug(body))
        try:
            body = reduce_primary_redexes(body, supply)
        except FuelExhaustedError:
            pass
        return context.plug(body)

    def precondition(self, t: Term, cfg: GenConfig) -> bool:
        if not has_distinct_names(t):
            return False
        d = decompose(t)
        context = d.e_blocks[0]
        if not context.items:
            return False
        inner = analyze_spine(context.plug(Var(name=d.head_var)))
        return d.head_var not in context.spine_vars and analyze_spine(t).n_primary == inner.n_primary

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        context = e_context(decompose(t).e_blocks[0])
        analysis = analyze_spine(t)
        body_path = analysis.paths[len(context.items)] if len(context.items) < len(analysis.word) else analysis.head_path
        body = subterm_at(t, body_path)
        env = eta(context)
        if len(env) != analysis.n_primary:
            return f"η has {len(env)} pairs for {analysis.n_primary} matched pairs"
        supply = NameSupply.for_terms(t)
        reduced = reduce_primary_redexes(t, supply)
        expected = apply_env(body, env, supply)
        return None if alpha_eq(reduced, expected) else f"reduced to {reduced}, expected {expected}"


@register
class CanonicalUniqueness(UntypedSuite):
    name = "canonical-uniqueness"
    description = "→E normal forms under any selector equal the head canonical form"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        expected = head_canonical(t).render()
        if not is_head_canonical(expected):
            return f"{expected} is not head canonical"
        for label, selector in (("leftmost", leftmost), ("rightmost", rightmost), ("random", random_selector(cfg.seed))):
            result = normalize_e(t, selector)
            if not alpha_eq(result, expected):
                return f"{label} selector reached {result}, canonical form is {expected}"
        return None


@register
class EtaInvariance(UntypedSuite):
    name = "eta-invariance"
    description = "→E normalization keeps the primary redexes, their order and their binders"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        before = primary_redexes(t)
        after = primary_redexes(normalize_e(t, random_selector(cfg.seed)))
        if len(before) != len(after):
            return f"{len(before)} primary redexes became {len(after)}"
        for (x, a), (y, b) in zip(before, after):
            if x != y or not alpha_eq(a, b):
                return f"pair {a}/{x} became {b}/{y}"
        return None


@register
class SigmaSteps(UntypedSuite):
    name = "sigma-steps"
    description = "each oriented σ-rule step is σ-equivalent to its source"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        for u in sigma_steps(t):
            if not equivalent(t, u, EquivRelation.SIGMA):
                return f"σ-step to {u} judged inequivalent"
        return None


@register
class Containment(TypedSuite):
    name = "containment"
    description = "surface E ⇒ deep E ⇒ σ ⇒ β on →E and σ variants"
    needs_redex = Rule.BETA

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        variant = normalize_e(t, random_selector(cfg.seed))
        pairs = [(variant, True), (refresh(variant, NameSupply.for_terms(t, variant)), True)]
        if head_canonical(variant).n_primary >= 2:
            swapped = permute_primary_redexes(variant, 1)
            if swapped is not None:
                pairs.append((swapped, False))
        for other, surface in pairs:
            verdicts = [equivalent(t, other, rel, default_fuel(t, typed=True)) for rel in CHAIN]
            if surface and verdicts[0] is not Verdict.TRUE:
                return f"{other} is an →E variant but not surface E-equivalent"
            if verdicts[2] is not Verdict.TRUE:
                return f"{other} is not σ-equivalent"
            for rel, verdict, following in zip(CHAIN, verdicts, verdicts[1:]):
                if verdict is Verdict.TRUE and following is not Verdict.TRUE:
                    return f"{rel.value} holds with {other} but the next relation gives {following.value}"
        return None


@register
class EStepBeta(TypedSuite):
    name = "e-step-beta"
    description = "every →E step preserves the β-normal form"
    needs_redex = Rule.BETA

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        expected = _beta_normal(t)
        for step in e_steps(t):
            u = apply_e_step(t, step)
            got = _beta_normal(u)
            if not alpha_eq(got, expected):
                return f"{step.rule} step to {u} changes the β-normal form to {got}"
        return None


# Reductions


@register
class BetaDistanceBeta(PropertySuite):
    name = "betad-beta"
    description = "β_d and β reach α-equal normal forms and have redexes on the same terms"
    exhaustive = True

    def generate(self, cfg: GenConfig) -> Term:
        return gen_typed_term(cfg, gen_type(cfg))

    def precondition(self, t: Term, cfg: GenConfig) -> bool:
        return has_distinct_names(t)

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        if bool(find_redexes(t, Rule.BETA)) != bool(find_redexes(t, Rule.BETA_D)):
            return "β and β_d disagree on whether a redex exists"
        typed = is_typed(t, cfg.free_var_pool)
        by_beta = _run(t, Rule.BETA, typed=typed).final
        by_distance = _run(t, Rule.BETA_D, typed=typed).final
        return None if alpha_eq(by_beta, by_distance) else f"β gives {by_beta}, β_d gives {by_distance}"


@register
class AffineSimulation(TypedSuite):
    name = "affine-simulation"
    description = "each β_d step is k linear steps then one garbage step on the same redex"
    needs_redex = Rule.BETA_D

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        supply = NameSupply.for_terms(t)
        linear = find_redexes(t, Rule.LINEAR)
        for r in find_redexes(t, Rule.BETA_D):
            k = sum(1 for x in linear if x.position == r.position and x.abs_position == r.abs_position)
            trace = simulate_beta_by_affine(t, r, supply)
            if trace.rules != [Rule.LINEAR] * k + [Rule.GARBAGE]:
                return f"simulation shape {[rule.value for rule in trace.rules]} for {k} occurrences"
            expected = apply_step(t, r, supply)
            if not alpha_eq(trace.final, expected):
                return f"simulation ends at {trace.final}, β_d gives {expected}"
        return None


@register
class AffineBeta(TypedSuite):
    name = "affine-beta"
    description = "linear and garbage steps preserve the β-normal form"
    needs_redex = Rule.AFFINE

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        expected = _beta_normal(t)
        supply = NameSupply.for_terms(t)
        for r in find_redexes(t, Rule.AFFINE):
            u = apply_step(t, r, supply)
            got = _beta_normal(u)
            if not alpha_eq(got, expected):
                return f"{r.rule.value} step to {u} changes the β-normal form to {got}"
        return None


def random_affine_trace(t: Term, seed: int, length: int = AFFINE_TRACE_LENGTH) -> Trace:
    """Up to ``length`` affine steps, each chosen uniformly among the available redexes."""
    rng = random.Random(seed)
    supply = NameSupply.for_terms(t)
    current = t
    steps: list[TraceStep] = []
    for _ in range(length):
        redexes = find_redexes(current, Rule.AFFINE)
        if not redexes:
            break
        r = rng.choice(redexes)
        current = apply_step(current, r, supply)
        steps.append(TraceStep(redex=r, result=current))
    return Trace(start=t, steps=tuple(steps))


@register
class GarbagePostponement(TypedSuite):
    name = "garbage-postponement"
    description = "random affine traces reorder into linear steps followed by garbage steps"
    needs_redex = Rule.AFFINE

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        trace = random_affine_trace(t, cfg.seed)
        result = postpone_garbage(trace)
        rules = result.rules
        if Rule.GARBAGE in rules and Rule.LINEAR in rules[rules.index(Rule.GARBAGE) :]:
            return f"a linear step follows a garbage step: {[rule.value for rule in rules]}"
        if result.start != trace.start or not alpha_eq(result.final, trace.final):
            return f"postponed trace ends at {result.final}, original at {trace.final}"
        return None


@register
class LinearHeadThenHead(TypedSuite):
    name = "lhnf-hnf"
    description = "linear head normal form, primary redexes contracted, then head reduced, is the head normal form"
    needs_redex = Rule.BETA

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        supply = NameSupply.for_terms(t)
        linear_head = _run(t, Rule.LINEAR_HEAD, supply).final
        via_linear = _run(reduce_primary_redexes(linear_head, supply), Rule.HEAD, supply).final
        direct = _run(t, Rule.HEAD, supply).final
        return None if alpha_eq(via_linear, direct) else f"through lhnf {via_linear}, directly {direct}"


@register
class HeadNormalForm(TypedSuite):
    name = "head-normal-form"
    description = "head reduction ends in a head normal form; iterating it finds the β-normal form"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        hnf = _run(t, Rule.HEAD).final
        if not is_head_normal(hnf):
            return f"{hnf} is not a head normal form"
        by_head = beta_normal_form_by_head(t, fuel=default_fuel(t, typed=True))
        expected = _beta_normal(t)
        return None if alpha_eq(by_head, expected) else f"head strategy gives {by_head}, β gives {expected}"


@register
class SizeChange(UntypedSuite):
    name = "size-change"
    description = "linear steps grow the size by |s| - 1, garbage steps shrink it by |s| + 2"
    needs_redex = Rule.AFFINE

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        supply = NameSupply.for_terms(t)
        for r in find_redexes(t, Rule.AFFINE):
            u = apply_step(t, r, supply)
            if r.rule == Rule.LINEAR:
                expected = t.size + r.argument.size - 1
            else:
                expected = t.size - r.argument.size - 2
            if u.size != expected:
                return f"{r.rule.value} step to {u} has size {u.size}, expected {expected}"
        return None


@register
class TraceHygiene(TypedSuite):
    name = "trace-hygiene"
    description = "every term of every trace has distinct names and reparses"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        def check_trace(rule: Rule, trace: Trace) -> Optional[str]:
            for u in trace.terms:
                if not has_distinct_names(u):
                    return f"{rule.value} trace reaches {u} which reuses a name"
                if parse_term(str(u)) != u:
                    return f"{rule.value} trace term {u} does not reparse"
            return None

        return _each_rule(t, check_trace)


@register
class Termination(TypedSuite):
    name = "termination"
    description = "every strategy terminates on typed terms"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        return _each_rule(t, lambda rule, trace: None)


# Types and measure


@register
class SubjectReduction(TypedSuite):
    name = "subject-reduction"
    description = "every rule preserves the type"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        pool = cfg.free_var_pool
        return _each_rule(
            t,
            lambda rule, trace: None if check_subject_reduction(trace, pool) else f"{rule.value} changes the type",
        )


@register
class MeasureDecrease(TypedSuite):
    name = "measure-decrease"
    description = "the measure strictly decreases along every step of every rule"
    needs_redex = Rule.BETA

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        valuation = default_valuation(cfg.free_var_pool)

        def check_trace(rule: Rule, trace: Trace) -> Optional[str]:
            values = [measure(u, valuation) for u in trace.terms]
            for i, (before, after) in enumerate(zip(values, values[1:])):
                if after >= before:
                    return f"{rule.value} step {i + 1} to {trace.terms[i + 1]}: measure {before} -> {after}"
            return None

        return _each_rule(t, check_trace)


def _context_pool(cfg: GenConfig) -> TypeContext:
    return {**cfg.free_var_pool, CONTEXT_VARIABLE: gen_type(cfg.for_case(1))}


@register
class SubstitutionBound(TypedSuite):
    name = "substitution-bound"
    description = "μ(C[t]) < μ(C[x]) with x valued at [[t]], for x free in C"

    def generate(self, cfg: GenConfig) -> Term:
        return gen_typed_term(cfg.model_copy(update={"free_var_pool": _context_pool(cfg)}), gen_type(cfg))

    def precondition(self, t: Term, cfg: GenConfig) -> bool:
        return has_distinct_names(t) and is_typed(t, _context_pool(cfg)) and CONTEXT_VARIABLE in free_vars(t)

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        sigma = _context_pool(cfg)[CONTEXT_VARIABLE]
        small = cfg.for_case(2).model_copy(update={"max_size": max(1, cfg.max_size // 2)})
        try:
            argument = gen_typed_term(small, sigma)
        except GenerationError:
            raise SkipCase() from None
        valuation = default_valuation(cfg.free_var_pool)
        supply = NameSupply.for_terms(t, argument)
        filled = substitute(t, CONTEXT_VARIABLE, argument, supply)
        lower = measure(filled, valuation)
        upper = measure(t, {**valuation, CONTEXT_VARIABLE: interpret(argument, valuation)})
        return None if lower < upper else f"with {argument}: μ(C[t]) = {lower}, μ(C[x]) = {upper}"


@register
class BumpLaws(TypedSuite):
    name = "bump-laws"
    description = "bump is additive under collapse, associative, zero-neutral and monotone in k"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        valuation = default_valuation(cfg.free_var_pool)
        tau = infer(t, cfg.free_var_pool)
        for v in probe_set(tau, [interpret(t, valuation)]):
            if not _agree(tau, bump(tau, v, 0), v):
                return "bumping by 0 changes the value"
            for k, h in BUMPS:
                if collapse(tau, bump(tau, v, k)) != collapse(tau, v) + k:
                    return f"collapse is not additive for k = {k}"
                if not _agree(tau, bump(tau, bump(tau, v, k), h), bump(tau, v, k + h)):
                    return f"bumping by {k} then {h} differs from bumping by {k + h}"
                if not precedes(tau, bump(tau, v, k), bump(tau, v, h)):
                    return f"bumping by {k} does not precede bumping by {h}"
        return None


@register
class Increasing(TypedSuite):
    name = "increasing"
    description = "interpreted abstractions are increasing and collapse is strictly monotone"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        tau = infer(t, cfg.free_var_pool)
        value = interpret(t, default_valuation(cfg.free_var_pool))
        if isinstance(tau, Arrow) and not is_increasing(tau, value):
            return f"[[{t}]] is not increasing"
        probes = probe_set(tau, [value])
        for v in probes:
            for w in probes:
                if precedes(tau, v, w) and not collapse(tau, v) < collapse(tau, w):
                    return "collapse is not strictly monotone on the probes"
        return None


@register
class MeasureAlpha(TypedSuite):
    name = "measure-alpha"
    description = "the measure does not depend on bound names"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        valuation = default_valuation(cfg.free_var_pool)
        renamed = refresh(t, NameSupply.for_terms(t))
        before, after = measure(t, valuation), measure(renamed, valuation)
        return None if before == after else f"renaming changes the measure from {before} to {after}"


@register
class UntunedLinear(TypedSuite):
    name = "untuned-linear"
    description = "without the +1 on variables, linear steps leave the measure unchanged"

    def check(self, t: Term, cfg: GenConfig) -> Optional[str]:
        valuation = default_valuation(cfg.free_var_pool)
        supply = NameSupply.for_terms(t)
        before = measure(t, valuation, tuned=False)
        for r in find_redexes(t, Rule.LINEAR):
            u = apply_step(t, r, supply)
            after = measure(u, valuation, tuned=False)
            if after != before:
                return f"linear step to {u} moves the untuned measure from {before} to {after}"
        return None
