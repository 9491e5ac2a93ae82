"""Size caps and runtime settings."""

import os
from pathlib import Path
from typing import Any, Dict, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from nit_partitions.core.exceptions import CapacityError, ConfigurationError
from nit_partitions.utils.validation import bounded_power


_ENV_FIELDS = {
    "max_states": "NIT_MAX_STATES",
    "max_basis_states": "NIT_MAX_BASIS_STATES",
    "max_permutation_search_states": "NIT_MAX_PERMUTATION_SEARCH_STATES",
    "max_enumeration_states": "NIT_MAX_ENUMERATION_STATES",
    "max_search_states": "NIT_MAX_SEARCH_STATES",
    "max_oracle_states": "NIT_MAX_ORACLE_STATES",
    "log_level": "NIT_LOG_LEVEL",
}


class NitConfig(BaseModel):
    """Configuration shared by every capped operation.

    Attributes:
        max_states: Largest state count n^k for frames and operators
        max_basis_states: Largest dimension for dense exact bases
        max_permutation_search_states: Largest N for mapping_permutations
        max_enumeration_states: Largest N for exhaustive frame enumeration
        max_search_states: Largest N for optimal strategy planning
        max_oracle_states: Largest N for the brute-force decision tree oracle
        log_level: Level applied to the package loggers
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_states: int = Field(default=10**6, ge=1, description="State cap")
    max_basis_states: int = Field(default=4096, ge=1, description="Dense basis cap")
    max_permutation_search_states: int = Field(
        default=12, ge=1, description="Permutation search cap"
    )
    max_enumeration_states: int = Field(default=9, ge=1, description="Enumeration cap")
    max_search_states: int = Field(default=20, ge=1, description="Planner cap")
    max_oracle_states: int = Field(default=8, ge=1, description="Oracle cap")
    log_level: str = Field(default="WARNING", description="Package log level")

    def check(self, cap: str, requested: int, what: str) -> None:
        """Raise CapacityError when ``requested`` exceeds the named cap."""
        limit = getattr(self, cap)
        if requested > limit:
            raise CapacityError(
                f"{what} needs {requested} states, configured cap {cap}={limit}",
                limit=limit,
                requested=requested,
            )

    def check_power(self, cap: str, n: int, k: int, what: str) -> int:
        """Return n^k, or raise CapacityError when it exceeds the named cap.

        The power is never built past the cap.
        """
        limit = getattr(self, cap)
        size = bounded_power(n, k, limit)
        if size is None:
            raise CapacityError(
                f"{what} needs {n}^{k} states, configured cap {cap}={limit}",
                limit=limit,
            )
        return size

    @classmethod
    def from_env(cls) -> "NitConfig":
        """Create configuration from environment variables."""
        values: Dict[str, Any] = {}
        for name, env in _ENV_FIELDS.items():
            raw = os.environ.get(env)
            if raw:
                values[name] = raw
        return cls._build(values, source="environment")

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "NitConfig":
        """Create configuration from a YAML mapping."""
        try:
            with open(path, encoding="utf-8") as handle:
                data = yaml.safe_load(handle) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError(
                f"Cannot read configuration file: {e}", details={"path": str(path)}
            ) from e
        if not isinstance(data, dict):
            raise ConfigurationError(
                "Configuration file must contain a mapping", details={"path": str(path)}
            )
        return cls._build(data, source=str(path))

    @classmethod
    def _build(cls, values: Dict[str, Any], source: str) -> "NitConfig":
        try:
            return cls(**values)
        except ValidationError as e:
            raise ConfigurationError(
                f"Invalid configuration from {source}",
                details={"errors": e.errors(include_url=False)},
            ) from e
