from __future__ import annotations

import json
from pathlib import Path
from typing import Tuple

import pytest
from sympy import primerange

from core.resgroup import Modulus, make_modulus
from support.settings import ENV_CLASS_DATA, ENV_LOG_RUNS, ENV_MAX_PRECISION, ENV_PROGRESS_LOG, LabSettings, load_settings

ROOT_DIR = Path(__file__).resolve().parents[1]
BUNDLED_CLASS_DATA = ROOT_DIR / "data" / "class_parity.csv"


def prime_powers(limit: int):
    """(p, n) for every prime power N = p^n <= limit accepted by make_modulus."""
    out = []
    for p in primerange(2, limit + 1):
        n = 2 if p == 2 else 1
        while p**n <= limit:
            out.append((int(p), n))
            n += 1
    return out


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in (ENV_PROGRESS_LOG, ENV_CLASS_DATA, ENV_MAX_PRECISION, ENV_LOG_RUNS):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture()
def temp_config(tmp_path: Path) -> Tuple[Path, Path]:
    log_path = tmp_path / "progress.log"
    config_path = tmp_path / "project.json"
    config = {
        "project_name": "cyclosig-test",
        "progress_log": str(log_path),
        "default_emoji": "ℹ️",
        "default_agent": "TestAgent",
        "class_data": str(BUNDLED_CLASS_DATA),
        "initial_precision_bits": 64,
        "max_precision_bits": 4096,
        "log_runs": True,
    }
    config_path.write_text(json.dumps(config, indent=2), encoding="utf-8")
    return config_path, log_path


@pytest.fixture()
def settings(temp_config) -> LabSettings:
    config_path, _ = temp_config
    return load_settings(config_path)


@pytest.fixture()
def mod5() -> Modulus:
    return make_modulus(5)


@pytest.fixture()
def mod7() -> Modulus:
    return make_modulus(7)


@pytest.fixture(scope="session")
def mod163() -> Modulus:
    return make_modulus(163)
