"""Generator configuration and property-suite report models."""

from pydantic import BaseModel, ConfigDict, Field

from .names import Name
from .types import O, Arrow, SimpleType


def default_pool() -> dict[Name, SimpleType]:
    return {
        Name(base="y"): O,
        Name(base="z"): O,
        Name(base="f"): Arrow(domain=O, codomain=O),
        Name(base="g"): Arrow(domain=O, codomain=Arrow(domain=O, codomain=O)),
    }


class GenConfig(BaseModel):
    """Seeded generation parameters; identical configs give identical outputs."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(default=0, ge=0, lt=2**64, description="64-bit seed")
    max_size: int = Field(default=20, ge=1, description="Upper bound on term size")
    max_type_depth: int = Field(default=2, ge=0, description="Depth bound for generated types")
    free_var_pool: dict[Name, SimpleType] = Field(
        default_factory=default_pool, description="Free variables available at leaves"
    )

    def for_case(self, index: int) -> "GenConfig":
        """Independent sub-configuration for case ``index``."""
        sub_seed = (self.seed * 0x9E3779B97F4A7C15 + index + 1) % 2**64
        return self.model_copy(update={"seed": sub_seed})


class Counterexample(BaseModel):
    """A (shrunk) failing input of a property suite."""

    model_config = ConfigDict(frozen=True)

    suite: str
    seed: int
    term: str
    message: str = ""

    def __str__(self) -> str:
        return f"FAIL {self.suite} {self.seed} {self.term}"


class Report(BaseModel):
    """Pass/fail counts of one suite run."""

    model_config = ConfigDict(frozen=True)

    suite: str
    seed: int
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: tuple[Counterexample, ...] = Field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def lines(self) -> list[str]:
        status = "PASS" if self.ok else "FAILED"
        head = f"{status} {self.suite} passed={self.passed} failed={self.failed} skipped={self.skipped}"
        return [head] + [str(c) for c in self.counterexamples]
