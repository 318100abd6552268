"""Unit tests for configuration management functionality."""

import os
from pathlib import Path
from unittest.mock import patch

import orjson
import pytest
from pydantic import ValidationError

from src.utils.config import SearchLimits, WorkbenchConfig, load_config


@pytest.fixture
def sample_config_data():
    """Sample configuration data for testing."""
    return {
        "search_depth": 4,
        "max_formula_size": 9,
        "enumeration_max_size": 3,
        "property_instances": 250,
        "random_seed": 7,
        "log_level": "debug",
    }


class TestWorkbenchConfig:
    """Test cases for WorkbenchConfig class."""

    def test_initialization_with_defaults(self):
        config = WorkbenchConfig()

        assert config.search_depth == 6
        assert config.max_formula_size == 12
        assert config.enumeration_max_size == 4
        assert config.property_instances == 10000
        assert config.random_seed == 20210607
        assert config.log_level == "INFO"
        assert config.corpus_path.name == "corpus"

    def test_initialization_with_custom_values(self, sample_config_data):
        config = WorkbenchConfig(**sample_config_data)

        assert config.search_depth == 4
        assert config.max_formula_size == 9
        assert config.log_level == "DEBUG"

    def test_environment_variable_loading(self):
        """Test configuration loading from VARINCL_ environment variables."""
        env_vars = {
            "VARINCL_SEARCH_DEPTH": "3",
            "VARINCL_PROPERTY_INSTANCES": "42",
            "VARINCL_CORPUS_PATH": "/tmp/varincl-corpus",
        }
        with patch.dict(os.environ, env_vars):
            config = WorkbenchConfig()

        assert config.search_depth == 3
        assert config.property_instances == 42
        assert config.corpus_path == Path("/tmp/varincl-corpus")

    @pytest.mark.parametrize(
        "field,value",
        [
            ("search_depth", 0),
            ("search_depth", 51),
            ("max_formula_size", 0),
            ("enumeration_max_size", 5),
            ("property_instances", 0),
        ],
    )
    def test_range_validation(self, field, value):
        with pytest.raises(ValidationError):
            WorkbenchConfig(**{field: value})

    def test_log_level_validation(self):
        with pytest.raises(ValidationError, match="log_level"):
            WorkbenchConfig(log_level="verbose")

    def test_corpus_path_invalid_type(self):
        with pytest.raises(ValidationError):
            WorkbenchConfig(corpus_path=123)

    def test_search_limits(self):
        limits = WorkbenchConfig(search_depth=2, max_formula_size=7).search_limits()
        assert limits == SearchLimits(2, 7)

    def test_get_summary(self):
        summary = WorkbenchConfig().get_summary()

        for key in ("search_depth", "max_formula_size", "corpus_path", "python_version"):
            assert key in summary
        assert isinstance(summary["corpus_path"], str)


class TestConfigFiles:
    """Test cases for loading and saving configuration files."""

    def test_load_from_file_success(self, tmp_path, sample_config_data):
        config_file = tmp_path / "config.json"
        config_file.write_bytes(orjson.dumps(sample_config_data))

        config = WorkbenchConfig()
        assert config.load_from_file(config_file) is True
        assert config.search_depth == 4
        assert config.random_seed == 7
        assert config.log_level == "DEBUG"

    def test_load_from_file_not_found(self, tmp_path):
        config = WorkbenchConfig()
        assert config.load_from_file(tmp_path / "missing.json") is False
        assert config.search_depth == 6

    def test_load_from_file_invalid_json(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_text("{ invalid json")

        assert WorkbenchConfig().load_from_file(config_file) is False

    def test_load_from_file_not_an_object(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_text("[1, 2]")

        assert WorkbenchConfig().load_from_file(config_file) is False

    def test_load_from_file_unknown_keys(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_bytes(orjson.dumps({"search_depth": 5, "output_format": "/x"}))

        config = WorkbenchConfig()
        assert config.load_from_file(config_file) is True
        assert config.search_depth == 5
        assert not hasattr(config, "output_format")

    def test_load_from_file_validates_values(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_bytes(orjson.dumps({"enumeration_max_size": 9}))

        with pytest.raises(ValidationError):
            WorkbenchConfig().load_from_file(config_file)

    def test_environment_overrides_file(self, tmp_path, sample_config_data):
        config_file = tmp_path / "config.json"
        config_file.write_bytes(orjson.dumps(sample_config_data))

        with patch.dict(os.environ, {"VARINCL_SEARCH_DEPTH": "8"}):
            config = WorkbenchConfig()
            config.load_from_file(config_file)

        assert config.search_depth == 8
        assert config.max_formula_size == 9


class TestSearchLimits:
    """Test cases for SearchLimits."""

    def test_defaults_follow_config(self):
        assert SearchLimits.from_config() == SearchLimits(6, 12)

    def test_zero_depth_allowed(self):
        assert SearchLimits(depth=0).depth == 0

    @pytest.mark.parametrize("depth,size", [(-1, 5), (3, 0)])
    def test_invalid_limits(self, depth, size):
        with pytest.raises(ValueError):
            SearchLimits(depth, size)


class TestLoadConfig:
    """Test cases for load_config."""

    def test_without_file(self):
        assert isinstance(load_config(), WorkbenchConfig)

    def test_with_file(self, tmp_path, sample_config_data):
        config_file = tmp_path / "config.json"
        config_file.write_bytes(orjson.dumps(sample_config_data))

        assert load_config(config_file).property_instances == 250

    def test_missing_corpus_path_still_loads(self, tmp_path):
        with patch.dict(os.environ, {"VARINCL_CORPUS_PATH": str(tmp_path / "absent")}):
            config = load_config()
        assert config.corpus_path == tmp_path / "absent"
