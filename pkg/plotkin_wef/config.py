__doc__ = """
The library's own settings group, "plotkin_wef": resource budgets of the
oracles and the CLI, memoization of subtree spectra, and the default CLI
output format.

Session values are built lazily by get_settings(). Lowest precedence first:
    factory defaults
    < the settings file named by $PLOTKIN_WEF_SETTINGS (file, or a
      directory holding a `.plotkin_wef` file)
    < $PLOTKIN_WEF_MAX_LENGTH (overrides max_length only)
    < explicit CLI flags (applied by the cli module)
"""
import logging
import os

from .errors import BudgetExceededError
from .settings import Setting_bool, Setting_choice, Setting_int, SettingsMapping


__all__ = ['GROUP', 'ENV_SETTINGS', 'ENV_MAX_LENGTH',
           'get_settings', 'reload_settings', 'check_budget']

logger = logging.getLogger(__name__)

GROUP = 'plotkin_wef'
ENV_SETTINGS = 'PLOTKIN_WEF_SETTINGS'
ENV_MAX_LENGTH = 'PLOTKIN_WEF_MAX_LENGTH'

OUTPUT_FORMATS = ('poly', 'json', 'csv')

_setting_info_list = (
    Setting_int('max_depth',          int,  12,   allow_falsy=True,
                help="largest tree depth m the CLI will evaluate"),
    Setting_int('max_length',         int,  4096, allow_falsy=False,
                help="largest code length the CLI will evaluate"),
    Setting_int('bruteforce_max_dim', int,  24,   allow_falsy=True,
                help="largest k enumerated by exact_wef_bruteforce"),
    Setting_int('exhaustive_max_n',   int,  7,    allow_falsy=False,
                help="largest n averaged over all n! permutations"),
    Setting_int('exhaustive_max_dim', int,  16,   allow_falsy=True,
                help="largest k0+k1 for ensemble_wef_exhaustive"),
    Setting_int('montecarlo_max_dim', int,  24,   allow_falsy=True,
                help="largest k0+k1 for ensemble_wef_montecarlo"),
    Setting_bool('memoize',           bool, True, allow_falsy=True,
                 help="memoize spectra of structurally equal subtrees"),
    Setting_choice('output_format',   'poly', choices=OUTPUT_FORMATS,
                   help="default CLI output format"),
)
SettingsMapping.register_class_settings(GROUP, _setting_info_list)

_session_settings = None


def _env_overrides() -> dict:
    d = {}
    path = os.environ.get(ENV_SETTINGS)
    if path:
        if not os.path.exists(path):
            logger.warning("%s names a path that doesn't exist: %s", ENV_SETTINGS, path)
        d.update(SettingsMapping.read_settings_file(GROUP, path))

    max_length = os.environ.get(ENV_MAX_LENGTH)
    if max_length:
        try:
            d['max_length'] = int(max_length)
        except ValueError:
            logger.warning("ignoring %s=%r: not an integer", ENV_MAX_LENGTH, max_length)
    return d


def get_settings() -> SettingsMapping:
    """The session's "plotkin_wef" settings, built on first use."""
    global _session_settings
    if _session_settings is None:
        _session_settings = SettingsMapping(GROUP)
        overrides = _env_overrides()
        if overrides:
            logger.debug("settings from environment: %r", overrides)
        _session_settings.update(overrides)
    return _session_settings


def reload_settings() -> SettingsMapping:
    """Drop the cached session settings and build them again
    (picks up changed defaults and environment variables)."""
    global _session_settings
    _session_settings = None
    return get_settings()


def check_budget(budget: str, requested: int, limit: int = None):
    """Raise BudgetExceededError if requested > limit. When limit is None,
    the limit is the session setting named `budget`."""
    if limit is None:
        limit = get_settings()[budget]
    if requested > limit:
        raise BudgetExceededError(budget, limit, requested)
