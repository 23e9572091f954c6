"""
Tests for util.settings: YAML defaults, environment overrides, global instance.
"""
import pytest

from util.settings import (
    SETTINGS_PATH,
    VerifierSettings,
    configure_settings,
    get_settings,
    load_settings,
    load_settings_file,
    reset_settings,
)


@pytest.fixture
def restore_settings():
    yield
    configure_settings(VerifierSettings())


class TestLoadSettings:
    """YAML and environment layering"""

    def test_shipped_yaml_matches_defaults(self):
        assert load_settings(SETTINGS_PATH, environ={}) == VerifierSettings()

    def test_environment_overrides(self):
        settings = load_settings(
            SETTINGS_PATH,
            environ={"GAMMA_GRID_LEVELS": "5", "GAMMA_CACHE_DIR": "/tmp/cache", "GAMMA_LOG_LEVEL": "DEBUG"},
        )
        assert settings.grid_levels == 5
        assert settings.cache_dir == "/tmp/cache"
        assert settings.log_level == "DEBUG"

    def test_non_integer_override(self):
        with pytest.raises(ValueError, match="GAMMA_WORKERS|workers"):
            load_settings(SETTINGS_PATH, environ={"GAMMA_WORKERS": "many"})

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="verifier.yaml"):
            load_settings_file(tmp_path / "verifier.yaml")

    def test_bad_yaml(self, tmp_path):
        path = tmp_path / "verifier.yaml"
        path.write_text("grid_levels: [1,\n")
        with pytest.raises(ValueError, match="parsing"):
            load_settings_file(path)

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "verifier.yaml"
        path.write_text("grid_size: 3\n")
        with pytest.raises(ValueError, match="grid_size"):
            load_settings(path, environ={})

    def test_empty_file_gives_defaults(self, tmp_path):
        path = tmp_path / "verifier.yaml"
        path.write_text("")
        assert load_settings(path, environ={}) == VerifierSettings()


class TestGlobalSettings:
    """get / configure / reset"""

    def test_configure_and_reset(self, restore_settings):
        custom = VerifierSettings(grid_levels=4)
        configure_settings(custom)
        assert get_settings() is custom
        reset_settings()
        assert get_settings() is not custom
