"""Configuration Management

Handles configuration loading, validation, and environment variable support
for the variable-inclusion workbench: proof-search limits, the enumeration
guardrail, property-sweep sizes and the corpus location.
"""

import logging
import os
import platform
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import orjson
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

ENV_PREFIX = "VARINCL_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _default_corpus_path() -> Path:
    return Path(__file__).resolve().parents[2] / "corpus"


class WorkbenchConfig(BaseSettings):
    """
    Configuration for the workbench.

    Supports:
    - Environment variable loading with VARINCL_ prefix
    - Range validation of search and enumeration limits
    - Configuration file loading (JSON via orjson)
    """

    model_config = SettingsConfigDict(
        env_prefix=ENV_PREFIX,
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Proof search
    search_depth: int = Field(default=6, ge=1, le=50, description="Rule-application rounds")
    max_formula_size: int = Field(
        default=12, ge=1, le=200, description="Node-count cap on derived formulas"
    )

    # Algebra enumeration
    enumeration_max_size: int = Field(
        default=4, ge=1, le=4, description="Largest universe size to enumerate"
    )

    # Property sweeps
    property_instances: int = Field(default=10000, ge=1, description="Instances per sweep")
    random_seed: int = Field(default=20210607, description="Seed for instance generation")

    log_level: str = Field(default="INFO", description="Default CLI log level")
    corpus_path: Path = Field(
        default_factory=_default_corpus_path, description="Checked-in proofs and instances"
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def validate_log_level(cls, v: Any) -> str:
        """Upper-case and check against the supported levels."""
        level = str(v).strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level

    @field_validator("corpus_path", mode="before")
    @classmethod
    def validate_corpus_path(cls, v: Any) -> Path:
        if isinstance(v, (str, Path)):
            path = Path(v).expanduser()
        else:
            raise ValueError("corpus_path must be a string or Path object")
        logger.debug(f"Validated corpus path: {path}")
        return path

    def search_limits(self) -> "SearchLimits":
        return SearchLimits(self.search_depth, self.max_formula_size)

    def load_from_file(self, config_file: Path) -> bool:
        """
        Load configuration from a JSON file while preserving environment precedence.

        Args:
            config_file: Path to configuration file

        Returns:
            bool: True if loaded successfully
        """
        if not config_file.exists():
            logger.warning(f"Configuration file not found: {config_file}")
            return False
        try:
            data = orjson.loads(config_file.read_bytes())
        except orjson.JSONDecodeError as e:
            logger.error(f"Failed to load configuration from {config_file}: {e}")
            return False
        if not isinstance(data, dict):
            logger.error(f"Configuration file {config_file} must hold a JSON object")
            return False

        fields = self.__class__.model_fields
        updates: Dict[str, Any] = {}
        for key, value in data.items():
            if key not in fields:
                logger.warning(f"Unknown configuration key: {key}")
                continue
            if f"{ENV_PREFIX}{key.upper()}" in os.environ:
                logger.debug(f"Skipping file value for {key}, environment variable takes precedence")
                continue
            updates[key] = value

        if updates:
            current = {name: getattr(self, name) for name in fields}
            current.update(updates)
            validated = self.__class__(**current)
            for name, value in validated:
                setattr(self, name, value)
        logger.info(f"Configuration loaded from: {config_file}")
        return True

    def get_summary(self) -> Dict[str, Any]:
        return {
            "search_depth": self.search_depth,
            "max_formula_size": self.max_formula_size,
            "enumeration_max_size": self.enumeration_max_size,
            "property_instances": self.property_instances,
            "random_seed": self.random_seed,
            "log_level": self.log_level,
            "corpus_path": str(self.corpus_path),
            "platform": platform.system(),
            "python_version": platform.python_version(),
        }


@dataclass(frozen=True)
class SearchLimits:
    """Bounds for proof search: rule rounds and formula node count."""

    depth: int = 6
    max_formula_size: int = 12

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError(f"Search depth must be non-negative, got {self.depth}")
        if self.max_formula_size < 1:
            raise ValueError(f"Formula size cap must be positive, got {self.max_formula_size}")

    @classmethod
    def from_config(cls, config: Optional[WorkbenchConfig] = None) -> "SearchLimits":
        return (config or WorkbenchConfig()).search_limits()


def load_config(config_file: Optional[Path] = None) -> WorkbenchConfig:
    """
    Load configuration with optional file override.

    Environment variables take precedence over file values.
    """
    config = WorkbenchConfig()
    if config_file is not None:
        config.load_from_file(config_file)
    if not config.corpus_path.exists():
        logger.warning(f"Corpus path does not exist: {config.corpus_path}")
    logger.debug(f"Configuration: {config.get_summary()}")
    return config
