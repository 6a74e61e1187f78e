from unittest import TestCase, mock
import logging
import os

from plotkin_wef import config
from plotkin_wef.errors import BudgetExceededError

here = os.path.dirname(os.path.abspath(__file__))


class TestSessionSettings(TestCase):

    def tearDown(self):
        config.reload_settings()

    def test_factory_defaults(self):
        with mock.patch.dict(os.environ, clear=True):
            s = config.reload_settings()
        self.assertEqual(s.as_dict(), {
            'max_depth': 12,
            'max_length': 4096,
            'bruteforce_max_dim': 24,
            'exhaustive_max_n': 7,
            'exhaustive_max_dim': 16,
            'montecarlo_max_dim': 24,
            'memoize': True,
            'output_format': 'poly',
        })

    def test_get_settings_is_cached(self):
        self.assertIs(config.get_settings(), config.get_settings())

    def test_settings_file_from_env(self):
        env = {config.ENV_SETTINGS: os.path.join(here, 'plotkin_wef-settings.txt')}
        with mock.patch.dict(os.environ, env, clear=True):
            s = config.reload_settings()
        self.assertEqual(s.max_depth, 8)
        self.assertEqual(s.max_length, 512)
        self.assertEqual(s.memoize, False)
        self.assertEqual(s.output_format, 'json')
        self.assertEqual(s.bruteforce_max_dim, 24)

    def test_max_length_env_wins_over_file(self):
        env = {config.ENV_SETTINGS: os.path.join(here, 'plotkin_wef-settings.txt'),
               config.ENV_MAX_LENGTH: '1024'}
        with mock.patch.dict(os.environ, env, clear=True):
            s = config.reload_settings()
        self.assertEqual(s.max_length, 1024)
        self.assertEqual(s.max_depth, 8)

    def test_bad_env_values_are_ignored(self):
        env = {config.ENV_SETTINGS: os.path.join(here, 'no-such-dir', 'settings.txt'),
               config.ENV_MAX_LENGTH: 'lots'}
        with mock.patch.dict(os.environ, env, clear=True):
            with self.assertLogs('plotkin_wef.config', logging.WARNING) as cm:
                s = config.reload_settings()
        self.assertEqual(len(cm.output), 2)
        self.assertEqual(s.max_length, 4096)


class TestCheckBudget(TestCase):

    def tearDown(self):
        config.reload_settings()

    def test_within_budget(self):
        self.assertIsNone(config.check_budget('exhaustive_max_n', 7, 7))

    def test_explicit_limit(self):
        with self.assertRaises(BudgetExceededError) as cm:
            config.check_budget('max_length', 8192, 4096)
        e = cm.exception
        self.assertEqual((e.budget, e.limit, e.requested), ('max_length', 4096, 8192))
        self.assertEqual(str(e), "max_length budget exceeded: requested 8192, limit is 4096")

    def test_limit_from_session(self):
        config.get_settings().exhaustive_max_n = 4
        self.assertRaises(BudgetExceededError, config.check_budget, 'exhaustive_max_n', 5)
        config.check_budget('exhaustive_max_n', 4)
