import pytest

from coalgebra import SplittingSettings
from config import Config
from utils.exceptions import ConfigurationError


def test_defaults():
    config = Config.load()
    assert config.get("field", "default_conductor") == 1
    assert config.get("bounds", "include_pointed") is False
    assert config.get("missing", "key", 7) == 7


def test_overlay_keeps_unrelated_defaults(tmp_path):
    path = tmp_path / "local.yaml"
    path.write_text("linear_algebra:\n  seed: 11\n", encoding="utf-8")
    config = Config.load(str(path))
    settings = SplittingSettings.from_config(config)
    assert settings.seed == 11
    assert settings.max_split_attempts == 64


def test_missing_file(tmp_path):
    with pytest.raises(ConfigurationError):
        Config.load(str(tmp_path / "absent.yaml"))


@pytest.mark.parametrize("text", ["- just\n- a list\n", "key: [unclosed\n"])
def test_malformed_file(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigurationError):
        Config.load(str(path))
