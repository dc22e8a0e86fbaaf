from copy import deepcopy

import pytest

from kcore.toolbox import bootstrap


@pytest.fixture(autouse=True)
def tmp_config(tmp_path, monkeypatch):
    # Ensure fresh config for every test.
    monkeypatch.setattr('kcore.utils.KcoreConfig.USER_SETTINGS_FILE', tmp_path / 'kcore.json')
    monkeypatch.delenv('KCORE_MAX_ENUM', raising=False)
    monkeypatch.delenv('KCORE_REDUCED_WORD_BOUND', raising=False)
    bootstrap()


@pytest.fixture
def mock_config(monkeypatch):
    """Allows an easy access to config."""

    from kcore.utils import KcoreConfig

    settings = deepcopy(KcoreConfig._basic_settings)

    class MockConfig(KcoreConfig):

        @classmethod
        def load(cls) -> dict:
            return settings

    monkeypatch.setattr('kcore.toolbox.config', MockConfig)
    monkeypatch.setattr('kcore.utils.config', MockConfig)
    monkeypatch.setattr('kcore.affine.config', MockConfig)
    monkeypatch.setattr('kcore.utils.KcoreConfig', MockConfig)

    return settings
