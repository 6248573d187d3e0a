"""Project configuration loaded from config/project.json with environment overrides."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, model_validator

from core.constants import DEFAULT_INITIAL_PRECISION_BITS, DEFAULT_MAX_PRECISION_BITS
from core.errors import ConfigError

logger = logging.getLogger(__name__)

ROOT_DIR = Path(__file__).resolve().parents[1]
DEFAULT_CONFIG_PATH = ROOT_DIR / "config" / "project.json"

ENV_PROGRESS_LOG = "CYCLOSIG_PROGRESS_LOG"
ENV_CLASS_DATA = "CYCLOSIG_CLASS_DATA"
ENV_MAX_PRECISION = "CYCLOSIG_MAX_PRECISION"
ENV_LOG_RUNS = "CYCLOSIG_LOG_RUNS"

_TRUE_VALUES = {"1", "true", "yes", "on"}
_FALSE_VALUES = {"0", "false", "no", "off"}


class LabSettings(BaseModel):
    project_name: str = "cyclosig"
    progress_log: Path
    default_emoji: str = "ℹ️"
    default_agent: str = "Scribe"
    class_data: Optional[Path] = None
    initial_precision_bits: int = Field(DEFAULT_INITIAL_PRECISION_BITS, gt=0)
    max_precision_bits: int = Field(DEFAULT_MAX_PRECISION_BITS, gt=0)
    log_runs: bool = True

    @model_validator(mode="after")
    def check_precision(self) -> "LabSettings":
        if self.initial_precision_bits > self.max_precision_bits:
            raise ValueError("initial_precision_bits must not exceed max_precision_bits")
        return self

    def resolve(self, path: Path) -> Path:
        return path if path.is_absolute() else ROOT_DIR / path

    @property
    def progress_log_path(self) -> Path:
        return self.resolve(self.progress_log)

    @property
    def class_data_path(self) -> Optional[Path]:
        return self.resolve(self.class_data) if self.class_data else None


def _parse_bool(name: str, raw: str) -> bool:
    value = raw.strip().lower()
    if value in _TRUE_VALUES:
        return True
    if value in _FALSE_VALUES:
        return False
    raise ConfigError(f"{name} must be a boolean, received {raw!r}")


def _env_overrides() -> dict:
    overrides: dict = {}
    if os.getenv(ENV_PROGRESS_LOG):
        overrides["progress_log"] = os.environ[ENV_PROGRESS_LOG]
    if os.getenv(ENV_CLASS_DATA):
        overrides["class_data"] = os.environ[ENV_CLASS_DATA]
    if os.getenv(ENV_MAX_PRECISION):
        raw = os.environ[ENV_MAX_PRECISION]
        try:
            overrides["max_precision_bits"] = int(raw)
        except ValueError as exc:
            raise ConfigError(f"{ENV_MAX_PRECISION} must be an integer, received {raw!r}") from exc
    if os.getenv(ENV_LOG_RUNS):
        overrides["log_runs"] = _parse_bool(ENV_LOG_RUNS, os.environ[ENV_LOG_RUNS])
    return overrides


def load_settings(config_path: Optional[Path] = None) -> LabSettings:
    config_path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    load_dotenv()
    try:
        raw = json.loads(config_path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigError(f"Config file not found: {config_path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"Config file is not valid JSON: {config_path}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"Config file must hold a JSON object: {config_path}")
    raw.update(_env_overrides())
    try:
        settings = LabSettings(**raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first.get("loc", ())) or "config"
        raise ConfigError(f"Invalid {field} in {config_path}: {first.get('msg')}") from exc
    logger.debug(f"Loaded settings from {config_path}")
    return settings
