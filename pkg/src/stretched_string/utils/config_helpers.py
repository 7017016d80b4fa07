"""
This module contains helper functions to read default settings from the environment.

Functions
---------
get_settings_from_env :
    Function to get the default tolerance and seed, using the environment variables
"""
import os
from dataclasses import dataclass

from dotenv import find_dotenv, load_dotenv

from ..constants.defaults import ENV_REL_TOL_KEY, ENV_SEED_KEY, VERIFY_SEED
from .errors import InvalidParameters


@dataclass(frozen=True)
class Settings:
    """
    Defaults that can be overridden from the environment

    Attributes
    ----------
    rel_tol : float
        Relative tolerance of the quadrature and elliptic engines when --tol is not given.
        None leaves each engine at its own default.
    seed : int
        Seed of the randomized invariant suite when --seed is not given
    """
    rel_tol: float | None = None
    seed: int = VERIFY_SEED


def get_settings_from_env(path_env: str | None = None,
                          rel_tol_key: str = ENV_REL_TOL_KEY,
                          seed_key: str = ENV_SEED_KEY) -> Settings:
    '''
    Returns the Settings read from the environment variables
    Note: Values already present in the process environment take precedence over the .env file

    Parameters
    ----------
    path_env : str, optional
        Path to the .env file that contains the environment variables.
        If not provided, python-dotenv searches for a .env file from the working directory upwards.
    rel_tol_key : str
        Key that contains the default relative tolerance
    seed_key : str
        Key that contains the default seed

    Returns
    -------
    Settings
        The settings, with package defaults for the keys that are not set

    Raises
    ------
    InvalidParameters
        If a key is set to a value that cannot be parsed, or the tolerance is not positive

    Examples
    --------
    >>> settings = get_settings_from_env('.env')
    >>> print(settings.rel_tol)
    1e-12
    '''
    load_dotenv(dotenv_path=path_env or find_dotenv(usecwd=True))

    rel_tol = _read_env(rel_tol_key, float, None)
    if rel_tol is not None and not rel_tol > 0:
        raise InvalidParameters(f'{rel_tol_key} must be positive, got {rel_tol}')
    seed = _read_env(seed_key, int, VERIFY_SEED)
    return Settings(rel_tol=rel_tol, seed=seed)


def _read_env(key: str, cast, default):
    raw = os.getenv(key)
    if raw is None or raw.strip() == '':
        return default
    try:
        return cast(raw.strip())
    except ValueError as exc:
        raise InvalidParameters(f'{key} has an unparseable value: {raw!r}') from exc
