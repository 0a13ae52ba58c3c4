"""Pytest configuration and shared fixtures."""

import json
from pathlib import Path
from typing import Any

import pytest

from spherikit.core.types import CodecConfig, ParserMode
from spherikit.family.spherical import SphericalFamily, build_family


@pytest.fixture
def strict_config() -> CodecConfig:
    """Strict parser configuration."""
    return CodecConfig(mode=ParserMode.STRICT)


@pytest.fixture
def permissive_config() -> CodecConfig:
    """Permissive parser configuration."""
    return CodecConfig(mode=ParserMode.PERMISSIVE)


@pytest.fixture
def scalar_family() -> SphericalFamily:
    """Normalized l = 0, n = 0 family with members 0..8."""
    return build_family(0, 0, 8)


@pytest.fixture
def matrix_family() -> SphericalFamily:
    """Normalized l = 1, n = 2 family with members 0..9."""
    return build_family(2, 1, 9)


@pytest.fixture
def small_family_payload() -> dict[str, Any]:
    """Hand-written l = 0, n = 0 family file payload."""
    return {
        "l": 0,
        "n": 0,
        "normalized": True,
        "members": {"0": [[["1"]]], "1": [[["-1/2", "3/2"]]]},
    }


@pytest.fixture
def small_family_file(tmp_path: Path, small_family_payload: dict[str, Any]) -> Path:
    """The hand-written payload on disk."""
    path = tmp_path / "family.json"
    path.write_text(json.dumps(small_family_payload), encoding="utf-8")
    return path


__all__ = [
    "strict_config",
    "permissive_config",
    "scalar_family",
    "matrix_family",
    "small_family_payload",
    "small_family_file",
]
