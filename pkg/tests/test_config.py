import pytest

from stretched_string.constants.defaults import ENV_REL_TOL_KEY, ENV_SEED_KEY, VERIFY_SEED
from stretched_string.utils.config_helpers import Settings, get_settings_from_env
from stretched_string.utils.errors import InvalidParameters


@pytest.fixture(autouse=True)
def clean_env(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for key in (ENV_REL_TOL_KEY, ENV_SEED_KEY):
        monkeypatch.setenv(key, '')
        monkeypatch.delenv(key)


def write_env(path, text):
    path.write_text(text)
    return str(path)


def test_defaults_without_env_file():
    assert get_settings_from_env() == Settings(rel_tol=None, seed=VERIFY_SEED)


def test_reads_env_file(tmp_path):
    path = write_env(tmp_path / '.env', f'{ENV_REL_TOL_KEY}=1e-11\n{ENV_SEED_KEY}=42\n')
    assert get_settings_from_env(path) == Settings(rel_tol=1e-11, seed=42)


def test_finds_env_file_in_working_directory(tmp_path):
    write_env(tmp_path / '.env', f'{ENV_SEED_KEY}=9\n')
    assert get_settings_from_env().seed == 9


def test_process_environment_wins(tmp_path, monkeypatch):
    path = write_env(tmp_path / '.env', f'{ENV_SEED_KEY}=42\n')
    monkeypatch.setenv(ENV_SEED_KEY, '7')
    assert get_settings_from_env(path).seed == 7


def test_empty_value_keeps_default(monkeypatch):
    monkeypatch.setenv(ENV_REL_TOL_KEY, '  ')
    assert get_settings_from_env().rel_tol is None


@pytest.mark.parametrize('key, value', [
    (ENV_REL_TOL_KEY, 'tight'),
    (ENV_REL_TOL_KEY, '0'),
    (ENV_SEED_KEY, '1.5'),
])
def test_invalid_values(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(InvalidParameters, match=key):
        get_settings_from_env()
