"""Free variables, α-congruence, the distinct names discipline and substitution."""

import threading
from typing import Iterable

from ..models import Abs, App, Environment, Name, Term, Var


class NameSupply:
    """Source of fresh names with strictly increasing indices.

    Shared between threads through an internal lock; every name drawn has an
    index above any index drawn before or seen in an observed term.
    """

    def __init__(self, start: int = 0):
        self._counter = start
        self._lock = threading.Lock()

    @classmethod
    def for_terms(cls, *terms: Term) -> "NameSupply":
        supply = cls()
        supply.observe(*terms)
        return supply

    @property
    def counter(self) -> int:
        return self._counter

    def observe(self, *terms: Term) -> None:
        """Raise the counter above every index occurring in terms."""
        highest = max((n.index for t in terms for n in all_names(t)), default=0)
        with self._lock:
            self._counter = max(self._counter, highest)

    def fresh(self, base: str) -> Name:
        with self._lock:
            self._counter += 1
            return Name(base=base, index=self._counter)


def all_names(t: Term) -> Iterable[Name]:
    """Every name occurring in t, binders included."""
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            yield node.name
        elif isinstance(node, Abs):
            yield node.binder
            stack.append(node.body)
        else:
            stack.append(node.fun)
            stack.append(node.arg)


def free_vars(t: Term) -> frozenset[Name]:
    """FV(t)."""
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Abs):
        return free_vars(t.body) - {t.binder}
    return free_vars(t.fun) | free_vars(t.arg)


def occurs_free(x: Name, t: Term) -> bool:
    if isinstance(t, Var):
        return t.name == x
    if isinstance(t, Abs):
        return t.binder != x and occurs_free(x, t.body)
    return occurs_free(x, t.fun) or occurs_free(x, t.arg)


def bound_names(t: Term) -> list[Name]:
    """Binders of t in preorder, duplicates kept."""
    return list(_binders(t))


def _binders(t: Term) -> Iterable[Name]:
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Abs):
            yield node.binder
            stack.append(node.body)
        elif isinstance(node, App):
            stack.append(node.arg)
            stack.append(node.fun)


def has_distinct_names(*terms: Term) -> bool:
    """Bound names pairwise distinct and disjoint from free names, jointly over terms."""
    binders: list[Name] = []
    free: set[Name] = set()
    for t in terms:
        binders.extend(_binders(t))
        free |= free_vars(t)
    return len(binders) == len(set(binders)) and free.isdisjoint(binders)


def ensure_distinct_names(t: Term, supply: NameSupply) -> Term:
    """α-congruent copy of t with the distinct names property; t itself if it already has it."""
    return rename_apart(t, supply=supply)[0]


def rename_apart(*terms: Term, supply: NameSupply) -> tuple[Term, ...]:
    """α-congruent copies of terms with the distinct names property jointly.

    Binders clashing with a free name of any term, or with a binder seen
    earlier, are renamed; the terms come back unchanged if nothing clashes.
    """
    if has_distinct_names(*terms):
        return terms
    supply.observe(*terms)
    seen: set[Name] = set().union(*(free_vars(t) for t in terms))

    def go(u: Term, mapping: dict[Name, Name]) -> Term:
        if isinstance(u, Var):
            return Var(name=mapping.get(u.name, u.name))
        if isinstance(u, Abs):
            new = u.binder if u.binder not in seen else supply.fresh(u.binder.base)
            seen.add(new)
            return Abs(binder=new, annotation=u.annotation, body=go(u.body, {**mapping, u.binder: new}))
        return App(fun=go(u.fun, mapping), arg=go(u.arg, mapping))

    return tuple(go(t, {}) for t in terms)


def alpha_eq(t: Term, s: Term) -> bool:
    """Equality up to consistent renaming of bound variables; annotations must match."""

    def go(a: Term, b: Term, ea: dict[Name, int], eb: dict[Name, int], depth: int) -> bool:
        if isinstance(a, Var) and isinstance(b, Var):
            la, lb = ea.get(a.name), eb.get(b.name)
            if la is None and lb is None:
                return a.name == b.name
            return la == lb
        if isinstance(a, Abs) and isinstance(b, Abs):
            if a.annotation != b.annotation:
                return False
            return go(a.body, b.body, {**ea, a.binder: depth}, {**eb, b.binder: depth}, depth + 1)
        if isinstance(a, App) and isinstance(b, App):
            return go(a.fun, b.fun, ea, eb, depth) and go(a.arg, b.arg, ea, eb, depth)
        return False

    return go(t, s, {}, {}, 0)


def rename_free(t: Term, old: Name, new: Name) -> Term:
    """Replace free occurrences of old by the variable new."""
    return _replace_free(t, old, lambda: Var(name=new))


def _replace_free(t: Term, x: Name, make) -> Term:
    if isinstance(t, Var):
        return make() if t.name == x else t
    if isinstance(t, Abs):
        if t.binder == x:
            return t
        return Abs(binder=t.binder, annotation=t.annotation, body=_replace_free(t.body, x, make))
    return App(fun=_replace_free(t.fun, x, make), arg=_replace_free(t.arg, x, make))


def refresh(t: Term, supply: NameSupply) -> Term:
    """Fresh copy of t: every bound variable gets a new name from supply."""

    def go(u: Term, mapping: dict[Name, Name]) -> Term:
        if isinstance(u, Var):
            return Var(name=mapping.get(u.name, u.name))
        if isinstance(u, Abs):
            new = supply.fresh(u.binder.base)
            return Abs(binder=new, annotation=u.annotation, body=go(u.body, {**mapping, u.binder: new}))
        return App(fun=go(u.fun, mapping), arg=go(u.arg, mapping))

    return go(t, {})


def substitute(t: Term, x: Name, s: Term, supply: NameSupply) -> Term:
    """t{s/x}: each free occurrence of x gets its own fresh copy of s."""
    if not occurs_free(x, t):
        return t
    fv_s = free_vars(s)

    def go(u: Term) -> Term:
        if isinstance(u, Var):
            return refresh(s, supply) if u.name == x else u
        if isinstance(u, Abs):
            if u.binder == x or not occurs_free(x, u.body):
                return u
            if u.binder in fv_s:
                # would capture: rename the binder first
                new = supply.fresh(u.binder.base)
                return Abs(binder=new, annotation=u.annotation, body=go(rename_free(u.body, u.binder, new)))
            return Abs(binder=u.binder, annotation=u.annotation, body=go(u.body))
        return App(fun=go(u.fun), arg=go(u.arg))

    return go(t)


def apply_env(t: Term, env: Environment, supply: NameSupply) -> Term:
    """t{η} = t{t1/x1}...{tk/xk}, applied left to right."""
    for binding in env.bindings():
        t = substitute(t, binding.variable, binding.term, supply)
    return t


def fingerprint(t: Term, free_labels: dict[Name, str] | None = None) -> str:
    """Printed form of t with binders renamed by traversal order.

    Free variables listed in ``free_labels`` print as their label, so terms
    from different scopes can be compared.
    """
    labels = dict(free_labels or {})
    counter = [0]

    def go(u: Term, mapping: dict[Name, str]) -> str:
        if isinstance(u, Var):
            return mapping.get(u.name) or labels.get(u.name) or str(u.name)
        if isinstance(u, Abs):
            counter[0] += 1
            label = f"_{counter[0]}"
            annotation = f":{u.annotation}" if u.annotation is not None else ""
            return f"\\{label}{annotation}.{go(u.body, {**mapping, u.binder: label})}"
        return f"({go(u.fun, mapping)} {go(u.arg, mapping)})"

    return go(t, {})
