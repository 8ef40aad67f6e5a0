"""
Configuration: packaged YAML defaults, optionally overridden by a user YAML file.
"""
import copy
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from pylyndon import DomainError

logger = logging.getLogger("pylyndon")

DEFAULTS_RESOURCE = "defaults.yaml"


@dataclass(frozen=True)
class LimitSettings:
    factor_cap: int
    sieve_cap: int
    enumeration_budget: int
    property_limit: int


@dataclass(frozen=True)
class SeriesSettings:
    terms: int
    slow_terms: int
    rounding_ulps: int


@dataclass(frozen=True)
class LambertSettings:
    terms: int
    max_modulus: float


@dataclass(frozen=True)
class SpecialValueSettings:
    max_m: int
    points: List[Dict[str, Any]]
    random_points: int


@dataclass(frozen=True)
class AuditSettings:
    seed: int
    jobs: int
    special_values: SpecialValueSettings
    grids: Dict[str, Dict[str, Dict[str, list]]] = field(default_factory=dict)


@dataclass(frozen=True)
class Settings:
    limits: LimitSettings
    series: SeriesSettings
    lambert: LambertSettings
    audit: AuditSettings


def _merge(base: dict, override: dict, path: str = "") -> dict:
    """Deep merge override into a copy of base, rejecting keys base does not know (grids excepted)."""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        where = f"{path}.{key}" if path else key
        if key not in base:
            if path.startswith("audit.grids"):
                merged[key] = value
                continue
            raise DomainError(f"unknown configuration key '{where}'")
        if isinstance(value, dict) and isinstance(base[key], dict) and where != "audit.special_values.points":
            merged[key] = _merge(base[key], value, where)
        else:
            merged[key] = value
    return merged


class SettingsLoader:
    """Build a Settings tree from YAML documents."""

    def __init__(self, path: Optional[Union[str, Path]] = None) -> None:
        """Create loader.

        :param path: optional user YAML file merged over the packaged defaults.
        """
        self.path = Path(path) if path else None

    def __parse_limits(self, obj: dict) -> LimitSettings:
        return LimitSettings(
            factor_cap=int(obj["factor_cap"]),
            sieve_cap=int(obj["sieve_cap"]),
            enumeration_budget=int(obj["enumeration_budget"]),
            property_limit=int(obj["property_limit"]),
        )

    def __parse_series(self, obj: dict) -> SeriesSettings:
        return SeriesSettings(
            terms=int(obj["terms"]), slow_terms=int(obj["slow_terms"]), rounding_ulps=int(obj["rounding_ulps"])
        )

    def __parse_lambert(self, obj: dict) -> LambertSettings:
        max_modulus = float(obj["max_modulus"])
        if not 0 < max_modulus < 1:
            raise DomainError(f"lambert.max_modulus must lie in (0, 1), got {max_modulus}")
        return LambertSettings(terms=int(obj["terms"]), max_modulus=max_modulus)

    def __parse_audit(self, obj: dict) -> AuditSettings:
        special = obj["special_values"]
        points = []
        for point in special.get("points", []):
            points.append({"k": int(point["k"]), "kx": Fraction(str(point["kx"]))})
        return AuditSettings(
            seed=int(obj.get("seed", 0)),
            jobs=max(1, int(obj.get("jobs", 1))),
            special_values=SpecialValueSettings(
                max_m=int(special.get("max_m", 9)), points=points, random_points=int(special.get("random_points", 0))
            ),
            grids=obj.get("grids", {}),
        )

    def parse(self) -> Settings:
        """Read packaged defaults, merge the user file and return the settings tree."""
        defaults = yaml.safe_load(resources.files("pylyndon").joinpath(DEFAULTS_RESOURCE).read_text(encoding="utf-8"))
        if self.path:
            logger.info(f"Loading settings from {self.path}")
            with open(self.path, "r", encoding="utf-8") as yaml_file:
                override = yaml.safe_load(yaml_file.read()) or {}
            defaults = _merge(defaults, override)
        return Settings(
            limits=self.__parse_limits(defaults["limits"]),
            series=self.__parse_series(defaults["series"]),
            lambert=self.__parse_lambert(defaults["lambert"]),
            audit=self.__parse_audit(defaults["audit"]),
        )


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """Load settings from the packaged defaults and an optional override file."""
    return SettingsLoader(path).parse()


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the process-wide settings, loading the defaults on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def configure(path: Optional[Union[str, Path]] = None) -> Settings:
    """Replace the process-wide settings."""
    global _settings
    _settings = load_settings(path)
    return _settings
