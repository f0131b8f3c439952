import hypothesis as hyp
import pytest

from distlab.core.syntax import NameSupply
from distlab.models import Term
from distlab.utils.parser import parse_term

# Normalization time varies a lot with the generated term.
hyp.settings.register_profile("distlab", deadline=None, max_examples=50)
hyp.settings.load_profile("distlab")


def t(text: str) -> Term:
    return parse_term(text)


@pytest.fixture
def supply() -> NameSupply:
    return NameSupply(start=100)
