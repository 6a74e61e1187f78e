__doc__ = """
Tests of the `traced` decorator: log output, call counts, history,
settings from keywords and files.
"""
from unittest import TestCase
import logging
import os

from plotkin_wef.tracing import CallRecord, traced

here = os.path.dirname(os.path.abspath(__file__))


class TestTraced(TestCase):

    def setUp(self):
        traced.mute = False

    def test_log_lines(self):
        @traced(logger='plotkin_wef.test_tracing')
        def f(a, b=2):
            return a + b

        with self.assertLogs('plotkin_wef.test_tracing', logging.DEBUG) as cm:
            self.assertEqual(f(1, b=5), 6)
        self.assertEqual(len(cm.output), 2)
        first, last = cm.output
        self.assertIn("f <== called by test_log_lines", first)
        self.assertIn("    arguments: a=1, {'b': 5}", first)
        self.assertIn("f ==> returning to test_log_lines  (elapsed ", last)
        self.assertIn("[secs], process ", last)

    def test_log_retval_no_args_no_elapsed(self):
        @traced(logger='plotkin_wef.test_tracing', log_args=False,
                log_retval=True, log_elapsed=False, prefix='wef.')
        def g(x):
            return [x] * 2

        with self.assertLogs('plotkin_wef.test_tracing', logging.DEBUG) as cm:
            g(3)
        self.assertEqual(cm.output, [
            "DEBUG:plotkin_wef.test_tracing:wef.g <== called by test_log_retval_no_args_no_elapsed",
            "DEBUG:plotkin_wef.test_tracing:    wef.g return value: [3, 3]",
            "DEBUG:plotkin_wef.test_tracing:wef.g ==> returning to test_log_retval_no_args_no_elapsed",
        ])

    def test_loglevel(self):
        @traced(logger='plotkin_wef.test_tracing', loglevel=logging.INFO)
        def h():
            pass

        with self.assertLogs('plotkin_wef.test_tracing', logging.INFO) as cm:
            h()
        self.assertTrue(all(line.startswith('INFO:') for line in cm.output))

    def test_mute_keeps_counting(self):
        @traced(logger='plotkin_wef.test_tracing')
        def f(x):
            return x

        logger = logging.getLogger('plotkin_wef.test_tracing')
        traced.mute = True
        try:
            with self.assertRaises(AssertionError):
                with self.assertLogs(logger, logging.DEBUG):
                    f(1)
        finally:
            traced.mute = False
        self.assertEqual(f.stats.num_calls_logged, 1)
        self.assertEqual(len(f.stats.history), 1)

    def test_disabled(self):
        @traced(enabled=False)
        def f(x):
            return x * 2

        self.assertEqual(f(4), 8)
        self.assertEqual(f.stats.num_calls_total, 1)
        self.assertEqual(f.stats.num_calls_logged, 0)
        self.assertEqual(f.stats.history, ())

        f.traced_settings.enabled = True
        f(5)
        self.assertEqual(f.stats.num_calls_total, 2)
        self.assertEqual(f.stats.num_calls_logged, 1)

    def test_unknown_keyword(self):
        with self.assertRaises(TypeError):
            traced(log_everything=True)

    def test_wraps(self):
        @traced()
        def documented(x):
            """Doc."""
            return x

        self.assertEqual(documented.__name__, 'documented')
        self.assertEqual(documented.__doc__, "Doc.")
        self.assertEqual(documented.__module__, __name__)


class TestCallStats(TestCase):

    def test_history(self):
        @traced(prefix='t.')
        def add(a, b):
            return a + b

        add(1, 2)
        add(3, b=4)
        history = add.stats.history
        self.assertEqual(len(history), 2)
        self.assertIsInstance(history[0], CallRecord)
        self.assertEqual(history[0].call_num, 1)
        self.assertEqual(history[0].argnames, ('a', 'b'))
        self.assertEqual(history[0].argvals, (1, 2))
        self.assertEqual(history[1].argnames, ('a',))
        self.assertEqual(history[1].kwargs, {'b': 4})
        self.assertEqual(history[1].retval, 7)
        self.assertEqual(history[1].prefixed_func_name, 't.add')
        self.assertEqual(history[1].caller, 'test_history')
        self.assertGreaterEqual(add.stats.elapsed_secs_logged, 0.0)

    def test_history_as_csv(self):
        @traced()
        def add(a, b):
            return a + b

        add(1, 2)
        lines = add.stats.history_as_csv.splitlines()
        self.assertEqual(lines[0], "call_num|a|b|retval|elapsed_secs|process_secs|"
                                   "timestamp|prefixed_fname|caller")
        fields = lines[1].split('|')
        self.assertEqual(fields[:4], ['1', '1', '2', '3'])
        self.assertEqual(fields[-2:], ["'add'", "'test_history_as_csv'"])

    def test_max_history(self):
        @traced(max_history=3)
        def f(x):
            return x

        for x in range(5):
            f(x)
        self.assertEqual([rec.argvals for rec in f.stats.history], [(2,), (3,), (4,)])
        self.assertEqual(f.stats.num_calls_logged, 5)
        with self.assertRaises(ValueError):
            f.traced_settings.max_history = 10

    def test_no_record_history(self):
        @traced(record_history=False)
        def f(x):
            return x

        f(1)
        self.assertEqual(f.stats.history, ())
        self.assertEqual(f.stats.num_calls_logged, 1)

    def test_clear_history(self):
        @traced()
        def f(x):
            return x

        f(1)
        f.stats.clear_history(max_history=2)
        self.assertEqual(f.stats.num_calls_total, 0)
        self.assertEqual(f.stats.elapsed_secs_logged, 0.0)
        self.assertEqual(f.traced_settings.max_history, 2)
        for x in range(4):
            f(x)
        self.assertEqual(len(f.stats.history), 2)


class TestTracedSettingsFile(TestCase):

    def test_settings_file(self):
        @traced(settings=os.path.join(here, 'traced-settings.txt'))
        def f(x):
            return x

        s = f.traced_settings
        self.assertEqual(s.log_args, False)
        self.assertEqual(s.log_retval, True)
        self.assertEqual(s.prefix, 'wef.')
        self.assertEqual(s.max_history, 5)

    def test_keywords_win_over_file(self):
        @traced(settings=os.path.join(here, 'traced-settings.txt'), prefix='kw.')
        def f(x):
            return x

        self.assertEqual(f.traced_settings.prefix, 'kw.')
        self.assertEqual(f.traced_settings.log_retval, True)

    def test_settings_dict(self):
        @traced(settings={'log_retval': True, 'not_a_setting': 1})
        def f(x):
            return x

        self.assertEqual(f.traced_settings.log_retval, True)
