"""Addressing subterms by paths from the root."""

from typing import Iterator

from ..models import Abs, App, Path, Term

BODY = "b"
FUN = "f"
ARG = "a"


def subterm_at(t: Term, path: Path) -> Term:
    """Return the subterm of t at path.

    Raises:
        KeyError: if the path leaves the term
    """
    node = t
    for step in path:
        if step == BODY and isinstance(node, Abs):
            node = node.body
        elif step == FUN and isinstance(node, App):
            node = node.fun
        elif step == ARG and isinstance(node, App):
            node = node.arg
        else:
            raise KeyError(f"path {format_path(path)} does not address a subterm")
    return node


def replace_at(t: Term, path: Path, new: Term) -> Term:
    """Return t with the subterm at path replaced by new (no renaming)."""
    if not path:
        return new
    step, rest = path[0], path[1:]
    if step == BODY and isinstance(t, Abs):
        return Abs(binder=t.binder, annotation=t.annotation, body=replace_at(t.body, rest, new))
    if step == FUN and isinstance(t, App):
        return App(fun=replace_at(t.fun, rest, new), arg=t.arg)
    if step == ARG and isinstance(t, App):
        return App(fun=t.fun, arg=replace_at(t.arg, rest, new))
    raise KeyError(f"path {format_path(path)} does not address a subterm")


def subterms(t: Term, prefix: Path = ()) -> Iterator[tuple[Path, Term]]:
    """Yield (path, subterm) pairs in preorder: outside-in, left to right."""
    stack: list[tuple[Path, Term]] = [(prefix, t)]
    while stack:
        path, node = stack.pop()
        yield path, node
        if isinstance(node, Abs):
            stack.append((path + (BODY,), node.body))
        elif isinstance(node, App):
            stack.append((path + (ARG,), node.arg))
            stack.append((path + (FUN,), node.fun))


def is_prefix(prefix: Path, path: Path) -> bool:
    return path[: len(prefix)] == prefix


def format_path(path: Path) -> str:
    """Render a path as ``/`` (root) or ``/f/b/a``."""
    return "/" + "/".join(path)


def parse_path(text: str) -> Path:
    return tuple(step for step in text.strip("/").split("/") if step)
