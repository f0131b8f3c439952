"""Environment-driven settings."""

import os

from pydantic import BaseModel, Field, ValidationError

from ..errors import DistlabError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class SettingsError(DistlabError):
    """Malformed environment setting."""

    pass


class Settings(BaseModel):
    """Tunables read from DISTLAB_* environment variables."""

    seed: int = Field(default=0, ge=0, description="Default seed for property suites")
    fuel_factor: int = Field(default=10, ge=1, description="Untyped fuel = factor * size^2")
    typed_fuel: int = Field(default=1_000_000, ge=1, description="Watchdog bound for typed drivers")
    log_level: str = Field(default="WARNING", description="Logging level name")

    def untyped_fuel(self, size: int) -> int:
        return self.fuel_factor * size * size


def load_settings() -> Settings:
    """Build Settings from the environment (call load_dotenv() first to honour .env).

    Raises:
        SettingsError: if a variable does not validate
    """
    raw = {
        "seed": os.getenv("DISTLAB_SEED"),
        "fuel_factor": os.getenv("DISTLAB_FUEL_FACTOR"),
        "typed_fuel": os.getenv("DISTLAB_TYPED_FUEL"),
        "log_level": os.getenv("DISTLAB_LOG_LEVEL"),
    }
    values = {key: value for key, value in raw.items() if value is not None}
    if "log_level" in values:
        values["log_level"] = values["log_level"].upper()
        if values["log_level"] not in LOG_LEVELS:
            raise SettingsError(f"DISTLAB_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}")
    try:
        return Settings(**values)
    except ValidationError as e:
        raise SettingsError(f"Invalid DISTLAB_* setting: {e}") from e
