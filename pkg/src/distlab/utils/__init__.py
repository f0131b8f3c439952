"""Utility modules."""

from .parser import ParseError, parse_context, parse_term, parse_type, print_term, print_type
from .paths import format_path, replace_at, subterm_at, subterms

__all__ = [
    "ParseError",
    "parse_context",
    "parse_term",
    "parse_type",
    "print_term",
    "print_type",
    "format_path",
    "replace_at",
    "subterm_at",
    "subterms",
]
