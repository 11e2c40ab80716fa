"""
Run configuration for vertex-forms.
File name and location: vertex-forms/src/config/run_config.py
"""

import copy
import json
import logging
import os
import sys
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.algebra.errors import ConfigError
from src.linalg import parse_scalar

logger = logging.getLogger("vertex_forms.config")

SUITES = ("axioms", "sl2", "adjoint", "forms", "rad0", "all")


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ModelSpec(StrictModel):
    """Which vertex algebra to build."""
    type: Literal["heisenberg", "lattice", "free"]
    k: str = Field("0", description="Heisenberg parameter of omega_k, as a p/q string")
    generators: Optional[List[str]] = None
    N: Optional[List[List[int]]] = Field(None, description="Locality matrix")
    cocycle_flips: List[Tuple[List[int], List[int]]] = Field(
        default_factory=list, description="Ordered lattice-vector pairs whose cocycle sign is negated")
    max_degree: Optional[int] = Field(None, ge=0)
    max_weight_len: Optional[int] = Field(None, ge=0)
    source_degree: Optional[int] = Field(
        None, description="Free models: largest degree of the source blocks used to generate a block; unbounded when omitted")
    scan_excess: Optional[int] = Field(
        None, ge=0, description="Verification scans skip blocks more than this far above the minimal degree of their weight")

    @field_validator("k", mode="before")
    @classmethod
    def _rational(cls, value: Any) -> str:
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            raise ValueError("k must be an integer or a \"p/q\" string")
        parse_scalar(value)
        return str(value)

    @model_validator(mode="after")
    def _lattice_data(self) -> "ModelSpec":
        if self.type == "heisenberg":
            return self
        if not self.N:
            raise ValueError(f"A {self.type} model needs the locality matrix N")
        if self.generators is None:
            self.generators = [f"g{i + 1}" for i in range(len(self.N))]
        if len(self.generators) != len(self.N):
            raise ValueError("generators and N have different sizes")
        return self


class CutoffSettings(StrictModel):
    max_degree: int = Field(4, ge=0)
    max_weight_len: int = Field(2, ge=0)


class RunOptions(StrictModel):
    functional: str = Field("canonical", description="\"canonical\" or a path to a functional file")
    format: Literal["json", "csv"] = "json"
    seed: int = Field(0, ge=0)
    samples: int = Field(20, ge=0)
    suite: Literal["axioms", "sl2", "adjoint", "forms", "rad0", "all"] = "all"
    max_skipped_share: float = Field(
        1.0, ge=0, le=1, description="A check family fails when a larger share of its instances left the cutoffs")


class LoggingSettings(StrictModel):
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    file: Optional[str] = None


class RunSettings(StrictModel):
    model: ModelSpec
    cutoffs: CutoffSettings = Field(default_factory=CutoffSettings)
    run: RunOptions = Field(default_factory=RunOptions)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


class FunctionalEntry(StrictModel):
    weight: List[int]
    values: List[str]

    @field_validator("values", mode="before")
    @classmethod
    def _rationals(cls, values: Any) -> List[str]:
        out = []
        for v in values:
            if isinstance(v, bool) or not isinstance(v, (str, int)):
                raise ValueError("functional values must be integers or \"p/q\" strings")
            parse_scalar(v)
            out.append(str(v))
        return out


class FunctionalFile(StrictModel):
    """A scalar functional on A_0, one value per degree-0 basis element of each listed weight."""
    values: List[FunctionalEntry]


class RunConfig:
    """
    Configuration manager for vertex-forms.
    Handles loading, saving, accessing and validating configuration settings.
    """

    DEFAULT_CONFIG = {
        "model": {
            "type": "heisenberg",
            "k": "0"
        },
        "cutoffs": {
            "max_degree": 4,
            "max_weight_len": 2
        },
        "run": {
            "functional": "canonical",
            "format": "json",
            "seed": 0,
            "samples": 20,
            "suite": "all",
            "max_skipped_share": 1.0
        },
        "logging": {
            "level": "INFO",
            "file": None
        }
    }

    def __init__(self, config_path: Optional[str] = "config.json"):
        """
        Args:
            config_path: Path to the configuration file (default: "config.json")

        Raises:
            ConfigError: If the file exists but is not valid JSON
        """
        self.config_path = config_path
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        self.load_config()

    def load_config(self) -> None:
        """Load configuration from file if it exists."""
        if not self.config_path or not os.path.exists(self.config_path):
            logger.info(f"Config file not found at {self.config_path}, using defaults")
            return
        try:
            with open(self.config_path, 'r') as f:
                loaded_config = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read config file {self.config_path}: {e}") from e
        if not isinstance(loaded_config, dict):
            raise ConfigError(f"Config file {self.config_path} must hold a JSON object")
        self._update_nested_dict(self.config, loaded_config)
        logger.info(f"Loaded configuration from {self.config_path}")

    def load_model_file(self, path: str) -> None:
        """
        Replace the model section with the model spec stored in a file.

        Raises:
            ConfigError: If the file cannot be read
        """
        try:
            with open(path, 'r') as f:
                spec = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read model file {path}: {e}") from e
        self.config["model"] = spec

    def _update_nested_dict(self, d: Dict[str, Any], u: Dict[str, Any]) -> Dict[str, Any]:
        """
        Recursively merge u into d.

        Args:
            d: Target dictionary to update
            u: Source dictionary with new values

        Returns:
            Updated dictionary
        """
        for k, v in u.items():
            if isinstance(v, dict) and k in d and isinstance(d[k], dict):
                self._update_nested_dict(d[k], v)
            else:
                d[k] = v
        return d

    def save_config(self) -> None:
        """Save the current configuration to file."""
        if not self.config_path:
            logger.warning("No config path specified, cannot save configuration")
            return
        os.makedirs(os.path.dirname(os.path.abspath(self.config_path)), exist_ok=True)
        with open(self.config_path, 'w') as f:
            json.dump(self.config, f, indent=2)
        logger.info(f"Saved configuration to {self.config_path}")

    def get(self, section: str, key: Optional[str] = None) -> Any:
        """
        Get a configuration value.

        Args:
            section: Configuration section (e.g., "model", "run")
            key: Specific key within the section (optional)

        Returns:
            Configuration value or section dictionary
        """
        if section not in self.config:
            return None
        if key is None:
            return self.config[section]
        return self.config[section].get(key)

    def set(self, section: str, key: str, value: Any) -> None:
        if section not in self.config:
            self.config[section] = {}
        self.config[section][key] = value

    def create_default_config(self) -> bool:
        """
        Create a default configuration file if it doesn't exist.

        Returns:
            True when a file was written
        """
        if not self.config_path:
            logger.warning("No config path specified, cannot create default configuration")
            return False
        if os.path.exists(self.config_path):
            logger.info(f"Config file already exists at {self.config_path}")
            return False
        os.makedirs(os.path.dirname(os.path.abspath(self.config_path)), exist_ok=True)
        with open(self.config_path, 'w') as f:
            json.dump(self.DEFAULT_CONFIG, f, indent=2)
        logger.info(f"Created default configuration at {self.config_path}")
        return True

    def validate(self) -> RunSettings:
        """
        Validated settings. Cutoffs given in the model spec override the cutoffs section.

        Raises:
            ConfigError: On unknown keys, wrong types or malformed rationals
        """
        try:
            settings = RunSettings.model_validate(self.config)
        except ValidationError as e:
            raise ConfigError(f"Invalid configuration: {e}") from e
        for key in ("max_degree", "max_weight_len"):
            value = getattr(settings.model, key)
            if value is not None:
                setattr(settings.cutoffs, key, value)
        return settings


def load_functional_file(path: str) -> FunctionalFile:
    """
    Raises:
        ConfigError: If the file cannot be read or validated
    """
    try:
        with open(path, 'r') as f:
            return FunctionalFile.model_validate(json.load(f))
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise ConfigError(f"Invalid functional file {path}: {e}") from e


def setup_logging(config: RunConfig) -> None:
    """
    Set up logging based on configuration. Logs go to stderr so reports on
    stdout stay byte-identical between runs.

    Args:
        config: Run configuration object
    """
    log_level_name = config.get("logging", "level") or "INFO"
    log_level = getattr(logging, log_level_name, logging.INFO)
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_file = config.get("logging", "file")
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )
