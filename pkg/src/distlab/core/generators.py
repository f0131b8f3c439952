"""Seeded generation of terms, typed terms and E-contexts with distinct names."""

import logging
import random
from functools import lru_cache
from typing import Iterator, Sequence

from ..errors import DistlabError
from ..models import (
    O,
    Abs,
    App,
    Arrow,
    EContext,
    GenConfig,
    Name,
    SAbs,
    SArg,
    SimpleType,
    SpineItem,
    Term,
    Var,
)
from ..utils.paths import replace_at
from .spine import analyze_spine
from .syntax import NameSupply

logger = logging.getLogger(__name__)

BINDER_BASES = ("x", "u", "v", "w")
# abstraction / application / variable; variables only below budget 3
WEIGHTS = (3, 3, 4)
MAX_ATTEMPTS = 100


class GenerationError(DistlabError):
    """No term of the requested shape was found within the attempt budget."""

    pass


class _Stuck(Exception):
    pass


def _supply(cfg: GenConfig) -> NameSupply:
    return NameSupply(start=max((n.index for n in cfg.free_var_pool), default=0))


def _split(rng: random.Random, budget: int, parts: int) -> int:
    """Budget for the next of ``parts`` children, leaving one node to each of the others."""
    return rng.randint(1, budget - (parts - 1))


def _target(rng: random.Random, max_size: int) -> int:
    """Size budget drawn from the upper half of [1, max_size]."""
    return rng.randint((max_size + 1) // 2, max_size)


def _gen_untyped(rng: random.Random, supply: NameSupply, budget: int, scope: list[Name], pool: list[Name]) -> Term:
    """Term of size at most budget; only the last leaf of a branch may fall short of it."""
    candidates = scope + pool
    if budget == 1:
        if not candidates:
            raise _Stuck()
        return Var(name=rng.choice(candidates))
    if not candidates:
        choice = "abs"
    elif budget == 2:
        choice = rng.choices(("abs", "var"), weights=(WEIGHTS[0], WEIGHTS[2]))[0]
    else:
        choice = rng.choices(("abs", "app"), weights=WEIGHTS[:2])[0]
    if choice == "var":
        return Var(name=rng.choice(candidates))
    if choice == "abs":
        binder = supply.fresh(rng.choice(BINDER_BASES))
        return Abs(binder=binder, body=_gen_untyped(rng, supply, budget - 1, scope + [binder], pool))
    fun = _gen_untyped(rng, supply, _split(rng, budget - 1, 2), scope, pool)
    arg = _gen_untyped(rng, supply, budget - 1 - fun.size, scope, pool)
    return App(fun=fun, arg=arg)


def gen_term(cfg: GenConfig) -> Term:
    """Untyped term of size at most cfg.max_size over cfg's free variable pool.

    Sizes land in the upper half of the bound.

    Raises:
        GenerationError: if max_size is 1 and the pool is empty
    """
    rng = random.Random(cfg.seed)
    try:
        return _gen_untyped(rng, _supply(cfg), _target(rng, cfg.max_size), [], list(cfg.free_var_pool))
    except _Stuck:
        raise GenerationError("no variable available for a term of size 1") from None


def _random_type(rng: random.Random, depth: int) -> SimpleType:
    if depth == 0 or rng.random() < 0.5:
        return O
    return Arrow(domain=_random_type(rng, depth - 1), codomain=_random_type(rng, depth - 1))


def gen_type(cfg: GenConfig) -> SimpleType:
    """Random simple type of depth at most cfg.max_type_depth."""
    return _random_type(random.Random(cfg.seed), cfg.max_type_depth)


class _TypedGenerator:
    """Goal-directed search for a term of a given type within a size budget."""

    def __init__(self, rng: random.Random, supply: NameSupply, cfg: GenConfig):
        self.rng = rng
        self.supply = supply
        self.cfg = cfg

    def heads_for(self, tau: SimpleType, scope: dict[Name, SimpleType]) -> list[tuple[Name, list[SimpleType]]]:
        """Variables usable as head of an application of type tau, with the argument types."""
        heads = []
        for x, sigma in scope.items():
            domains = []
            while isinstance(sigma, Arrow):
                domains.append(sigma.domain)
                sigma = sigma.codomain
                if sigma == tau:
                    heads.append((x, list(domains)))
        return heads

    def gen(self, tau: SimpleType, budget: int, scope: dict[Name, SimpleType]) -> Term:
        """Term of type tau and size at most budget.

        Variables are only drawn at budgets of two or less; above that they
        are the last resort once every other shape got stuck.
        """
        if budget < 1:
            raise _Stuck()
        rng = self.rng
        options: list[tuple[str, int]] = []
        exact = [x for x, sigma in scope.items() if sigma == tau]
        if exact and budget <= 2:
            options.append(("var", 4))
        if isinstance(tau, Arrow) and budget >= 2:
            options.append(("abs", 3))
        heads = [h for h in self.heads_for(tau, scope) if 2 * len(h[1]) + 1 <= budget]
        if heads:
            options.append(("spine", 3))
        if budget >= 4:
            options.append(("redex", 2))
        order: list[str] = []
        while options:
            k = rng.choices(range(len(options)), weights=[w for _, w in options])[0]
            order.append(options.pop(k)[0])
        if exact and budget > 2:
            order.append("var")
        for choice in order:
            try:
                return self.build(choice, tau, budget, scope, exact, heads)
            except _Stuck:
                continue
        raise _Stuck()

    def build(
        self,
        choice: str,
        tau: SimpleType,
        budget: int,
        scope: dict[Name, SimpleType],
        exact: list[Name],
        heads: list[tuple[Name, list[SimpleType]]],
    ) -> Term:
        rng = self.rng
        if choice == "var":
            return Var(name=rng.choice(exact))
        if choice == "abs":
            binder = self.supply.fresh(rng.choice(BINDER_BASES))
            body = self.gen(tau.codomain, budget - 1, {**scope, binder: tau.domain})
            return Abs(binder=binder, annotation=tau.domain, body=body)
        if choice == "spine":
            head, domains = rng.choice(heads)
            result: Term = Var(name=head)
            remaining = budget - 1 - len(domains)
            for i, sigma in enumerate(domains):
                arg = self.gen(sigma, _split(rng, remaining, len(domains) - i), scope)
                remaining -= arg.size
                result = App(fun=result, arg=arg)
            return result
        sigma = _random_type(rng, self.cfg.max_type_depth)
        binder = self.supply.fresh(rng.choice(BINDER_BASES))
        body = self.gen(tau, _split(rng, budget - 2, 2), {**scope, binder: sigma})
        arg = self.gen(sigma, budget - 2 - body.size, scope)
        return App(fun=Abs(binder=binder, annotation=sigma, body=body), arg=arg)


def gen_typed_term(cfg: GenConfig, target: SimpleType) -> Term:
    """Annotated term of type target, free variables typed by cfg.free_var_pool.

    Raises:
        GenerationError: if no term is found within MAX_ATTEMPTS attempts
    """
    rng = random.Random(cfg.seed)
    generator = _TypedGenerator(rng, _supply(cfg), cfg)
    for _ in range(MAX_ATTEMPTS):
        try:
            return generator.gen(target, _target(rng, cfg.max_size), dict(cfg.free_var_pool))
        except _Stuck:
            continue
    logger.info("no term of type %s found in %d attempts (seed %d)", target, MAX_ATTEMPTS, cfg.seed)
    raise GenerationError(f"no term of type {target} within size {cfg.max_size} after {MAX_ATTEMPTS} attempts")


def gen_e_context(cfg: GenConfig, pairs: int | None = None) -> tuple[EContext, Term]:
    """A non-trivial E-context E and a body u whose head variable E does not bind.

    Raises:
        GenerationError: if the free variable pool is empty
    """
    rng = random.Random(cfg.seed)
    supply = _supply(cfg)
    pool = list(cfg.free_var_pool)
    if not pool:
        raise GenerationError("E-context bodies need a free variable for their head")
    pairs = pairs if pairs is not None else rng.randint(1, 3)
    arg_budget = max(1, cfg.max_size // (2 * pairs + 2))

    items: list[SpineItem] = []
    scope: list[Name] = []
    opened = depth = 0
    while opened < pairs or depth > 0:
        if opened < pairs and (depth == 0 or rng.random() < 0.5):
            items.append(SArg(argument=_gen_untyped(rng, supply, arg_budget, scope, pool)))
            opened += 1
            depth += 1
        else:
            binder = supply.fresh(rng.choice(BINDER_BASES))
            items.append(SAbs(binder=binder))
            scope.append(binder)
            depth -= 1

    body = _gen_untyped(rng, supply, arg_budget, scope, pool)
    analysis = analyze_spine(body)
    if analysis.head_var in scope:
        body = replace_at(body, analysis.head_path, Var(name=rng.choice(pool)))
    return EContext(items=tuple(items)), body


def gen_e_term(cfg: GenConfig) -> Term:
    """E[u] for a generated E-context E and body u."""
    context, body = gen_e_context(cfg)
    return context.plug(body)


@lru_cache(maxsize=None)
def _shapes(size: int, depth: int, free: tuple[Name, ...]) -> tuple:
    """Terms of exactly ``size`` nodes as nested tuples, bound variables as levels."""
    if size == 1:
        return tuple(("bound", i) for i in range(depth)) + tuple(("free", x) for x in free)
    result = [("abs", body) for body in _shapes(size - 1, depth + 1, free)]
    for k in range(1, size - 1):
        for fun in _shapes(k, depth, free):
            for arg in _shapes(size - 1 - k, depth, free):
                result.append(("app", fun, arg))
    return tuple(result)


def _build(shape: tuple, binders: list[Name], counter: list[int]) -> Term:
    tag = shape[0]
    if tag == "bound":
        return Var(name=binders[shape[1]])
    if tag == "free":
        return Var(name=shape[1])
    if tag == "abs":
        counter[0] += 1
        binder = Name(base="x", index=counter[0])
        return Abs(binder=binder, body=_build(shape[1], binders + [binder], counter))
    return App(fun=_build(shape[1], binders, counter), arg=_build(shape[2], binders, counter))


def enumerate_terms(max_size: int, free: Sequence[Name] = ()) -> Iterator[Term]:
    """Every term of size at most max_size up to α, binders named x#1, x#2, ... in preorder."""
    free_names = tuple(free)
    offset = max((n.index for n in free_names), default=0)
    for size in range(1, max_size + 1):
        for shape in _shapes(size, 0, free_names):
            yield _build(shape, [], [offset])
