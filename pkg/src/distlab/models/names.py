"""Variable name data model."""

from pydantic import BaseModel, ConfigDict, Field


class Name(BaseModel):
    """A variable name: a user-written base plus a machine-generated index.

    Index 0 marks a name written by the user; fresh renames get a positive
    index and print as ``base#index``.
    """

    model_config = ConfigDict(frozen=True)

    base: str = Field(..., description="Identifier text")
    index: int = Field(default=0, ge=0, description="0 for user names, >0 for fresh renames")

    def __str__(self) -> str:
        if self.index == 0:
            return self.base
        return f"{self.base}#{self.index}"

    def sort_key(self) -> tuple[str, int]:
        return (self.base, self.index)


def name(text: str) -> Name:
    """Build a Name from its printed form (``x`` or ``x#3``)."""
    base, _, index = text.partition("#")
    return Name(base=base, index=int(index) if index else 0)
