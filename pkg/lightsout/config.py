"""Configuration for lightsout."""

import os
from dataclasses import asdict, dataclass
from pathlib import Path
import json


def _default_config_dir() -> Path:
    override = os.environ.get("LIGHTSOUT_CONFIG_DIR")
    if override:
        return Path(override)
    base = os.environ.get("XDG_CONFIG_HOME", str(Path.home() / ".config"))
    return Path(base) / "lightsout"


CONFIG_DIR = _default_config_dir()
CONFIG_FILE = CONFIG_DIR / "config.json"


@dataclass
class Config:
    """lightsout configuration (defaults for the command line)."""

    seed: int = 0
    # Random join trials run by `table-check`
    table_trials: int = 2000
    # Largest operand drawn by `table-check`
    max_join_size: int = 12
    # Edge probability used by `gen graph` when --p is omitted
    gen_edge_probability: float = 0.5
    # JSON indentation for reports (None = compact single line)
    json_indent: int | None = 2
    log_level: str = "WARNING"
    log_file: str | None = None

    def save(self) -> None:
        """Save config to file."""
        CONFIG_DIR.mkdir(parents=True, exist_ok=True)
        with open(CONFIG_FILE, "w") as f:
            json.dump(asdict(self), f, indent=2)

    @classmethod
    def load(cls) -> "Config":
        """Load config from file, or return defaults."""
        if CONFIG_FILE.exists():
            try:
                with open(CONFIG_FILE) as f:
                    data = json.load(f)
                return cls(**data)
            except (json.JSONDecodeError, TypeError):
                pass
        return cls()


# Global config instance
config = Config.load()
