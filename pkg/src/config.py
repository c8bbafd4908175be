"""
Workbench Configuration Manager

Centralizes configuration from environment variables with sensible defaults.
All variables use the ``DATRTAG_`` prefix, e.g. ``DATRTAG_PROBE_DEPTH=8``.
"""

from pathlib import Path
from typing import List

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Workbench configuration"""

    model_config = SettingsConfigDict(
        env_prefix="DATRTAG_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # Paths
    CORPUS_DIR: Path = Field(default=Path(__file__).resolve().parent.parent / "corpus")
    CORPUS_FILES: List[str] = ["hierarchy.dtr", "rules.dtr", "words.dtr"]

    # Inference engine
    MAX_EVAL_DEPTH: int = Field(default=512, ge=1)

    # Tree extraction
    PROBE_DEPTH: int = Field(default=16, ge=1)
    LABEL_FEATURES: List[str] = ["cat", "type", "root", "form"]

    # Rendering
    UNICODE_MARKERS: bool = False

    # Family enumeration
    FAMILY_WORKERS: int = Field(default=4, ge=1)

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = False

    @field_validator("LABEL_FEATURES")
    @classmethod
    def _labels_not_empty(cls, value: List[str]) -> List[str]:
        if not value:
            raise ValueError("LABEL_FEATURES must name at least one label")
        return value

    @property
    def corpus_paths(self) -> List[Path]:
        return [self.CORPUS_DIR / name for name in self.CORPUS_FILES]


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get global settings instance"""
    return settings
