"""Configuration management for treegraft."""

import copy
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import yaml


class Config:
    """Parse and manage defaults for the gen, verify and bench commands."""

    # Default random tree generation settings
    DEFAULT_GEN = {
        "shape": "yule",
        "contraction_prob": 0.0,
    }

    # Default cross-engine verification settings
    DEFAULT_VERIFY = {
        "trials": 1000,
        "max_n": 64,
        "seed": 0,
        "workers": 1,
    }

    # Default benchmark settings
    DEFAULT_BENCH = {
        "sizes": [1024, 4096, 16384, 65536],
        "engines": ["fast", "basic"],
        "seed": 0,
        "repeats": 1,
        "shape": "yule",
        "target": "star",
    }

    SECTIONS = ("gen", "verify", "bench")

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            config_file: Path to a YAML file. If None, uses defaults.
        """
        self.gen = copy.deepcopy(self.DEFAULT_GEN)
        self.verify = copy.deepcopy(self.DEFAULT_VERIFY)
        self.bench = copy.deepcopy(self.DEFAULT_BENCH)

        if config_file:
            self._load_config(config_file)

    @classmethod
    def from_yaml(cls, yaml_path: str) -> "Config":
        """
        Load configuration, falling back to defaults if the file is unusable.

        Args:
            yaml_path: Path to YAML configuration file

        Returns:
            Config instance
        """
        if not Path(yaml_path).exists():
            print(f"⚠️  Config file not found: {yaml_path}", file=sys.stderr)
            print("   Using default settings", file=sys.stderr)
            return cls()

        try:
            return cls(config_file=yaml_path)
        except ValueError as e:
            print(f"⚠️  Error loading config file: {e}", file=sys.stderr)
            print("   Using default settings", file=sys.stderr)
            return cls()

    def _load_config(self, config_file: str):
        """Load configuration from YAML file."""
        config_path = Path(config_file)
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {config_file}")

        try:
            with open(config_path, encoding="utf-8") as f:
                config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in config file: {e}")

        if not isinstance(config, dict):
            raise ValueError("Config file must contain a mapping at top level")

        for section in self.SECTIONS:
            if section not in config:
                continue
            values = config[section]
            if not isinstance(values, dict):
                raise ValueError(f"Section '{section}' must be a mapping")
            getattr(self, section).update(values)

    def section(self, name: str) -> Dict[str, Any]:
        """Get all settings of one section."""
        if name not in self.SECTIONS:
            raise KeyError(f"Unknown config section: {name}")
        return getattr(self, name)

    def resolve(self, name: str, args, keys=None) -> Dict[str, Any]:
        """
        Merge command-line values over the section defaults.

        Args:
            name: Section name
            args: Parsed arguments; attributes left as None fall back to config
            keys: Keys to resolve (default: every key of the section)

        Returns:
            Dict of effective settings
        """
        settings = dict(self.section(name))
        for key in keys or list(settings):
            value = getattr(args, key, None)
            if value is not None:
                settings[key] = value
        return settings
