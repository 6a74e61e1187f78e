__doc__ = """
`traced` -- a call-logging and profiling decorator for the library's
expensive entry points (combine, ensemble_wef, the oracles, the bound).

    @traced()
    def combine(A0, A1): ...

For each call of the wrapped function with `enabled` true, `traced` writes
    combine <== called by <caller>
        arguments: A0=..., A1=...
    combine ==> returning to <caller>  (elapsed 0.001234 [secs], process 0.001200 [secs])
through logging.getLogger(<logger setting>).log(<loglevel setting>, ...),
and appends a CallRecord to the wrapper's call history. Output never goes to
stdout; if the logger has no handlers, records go wherever logging's
last-resort handler sends them (stderr, WARNING and above only).

Every wrapper has
    wrapper.stats            -- call counts, accumulated times, history
    wrapper.traced_settings  -- the decorator's SettingsMapping (group "traced");
                                settings can be changed on the fly:
                                    combine.traced_settings.log_retval = True

Setting `traced.mute = True` silences all output of all wrappers; call
counts and history continue to accumulate.
"""
from collections import deque, namedtuple
import datetime
from functools import wraps
import inspect
import logging
import time

from .helpers import dict_to_sorted_str, prefix_multiline_str
from .settings import Setting_bool, Setting_int, Setting_str, SettingsMapping


__all__ = ['traced', 'CallRecord', 'CallStats']

GROUP = 'traced'

#-----------------------------------------------------------------------------
# CallRecord namedtuple, for history
#-----------------------------------------------------------------------------
CallRecord = namedtuple(
    "CallRecord",
    (
        'call_num',
        'argnames', 'argvals',
        'kwargs',
        'retval',
        'elapsed_secs', 'process_secs',
        'timestamp',
        'prefixed_func_name',
        'caller',
    )
)

_setting_info_list = (
    Setting_bool('enabled',        bool, True,  allow_falsy=True),
    Setting_bool('log_args',       bool, True,  allow_falsy=True),
    Setting_bool('log_retval',     bool, False, allow_falsy=True),
    Setting_bool('log_elapsed',    bool, True,  allow_falsy=True),
    Setting_bool('record_history', bool, True,  allow_falsy=True),
    Setting_int( 'max_history',    int,  100,   allow_falsy=True, mutable=False),
    Setting_str( 'prefix',         str,  '',    allow_falsy=True),
    Setting_str( 'logger',         str,  'plotkin_wef', allow_falsy=False),
    Setting_int( 'loglevel',       int,  logging.DEBUG, allow_falsy=False),
)
SettingsMapping.register_class_settings(GROUP, _setting_info_list)


def _short_repr(value, maxlen=77):
    s = repr(value)
    if len(s) > maxlen:
        s = s[:maxlen] + "..."
    return s


class CallStats():
    """Statistics and call history of one traced function.
    Only calls made while `enabled` is true count as logged."""
    def __init__(self, f, settings: SettingsMapping):
        self._f_params = inspect.signature(f).parameters
        self._settings = settings
        self.clear_history(settings.max_history)

    @property
    def num_calls_total(self):
        """All calls, logged and not logged"""
        return self._num_calls_total

    @property
    def num_calls_logged(self):
        return self._num_calls_logged

    @property
    def elapsed_secs_logged(self):
        return self._elapsed_secs_logged

    @property
    def process_secs_logged(self):
        return self._process_secs_logged

    @property
    def history(self):
        return tuple(self._call_history)

    @property
    def history_as_csv(self):
        """'|'-separated text: a heading line, then one line per CallRecord.
        Columns: call_num, one per parameter of the function, retval,
        elapsed_secs, process_secs, timestamp, prefixed_fname, caller.
        """
        csv_sep = '|'
        all_args = list(self._f_params)

        fields = ['call_num']
        fields.extend(all_args)
        fields.extend(['retval', 'elapsed_secs', 'process_secs', 'timestamp',
                       'prefixed_fname', 'caller'])
        lines = [csv_sep.join(fields)]

        for rec in self._call_history:
            arg_vals = {a: repr(v) for (a, v) in zip(rec.argnames, rec.argvals)}
            arg_vals.update({a: repr(v) for (a, v) in rec.kwargs.items()})
            fields = [str(rec.call_num)]
            fields.extend(arg_vals.get(arg, '') for arg in all_args)
            fields.append(repr(rec.retval))
            fields.append(str(rec.elapsed_secs))
            fields.append(str(rec.process_secs))
            fields.append(rec.timestamp)
            fields.append(repr(rec.prefixed_func_name))
            fields.append(repr(rec.caller))
            lines.append(csv_sep.join(fields))

        return '\n'.join(lines) + '\n'

    def clear_history(self, max_history=0):
        """Reset counters and history. max_history > 0 bounds the history;
        <= 0 leaves it unbounded."""
        self._num_calls_total = 0
        self._num_calls_logged = 0
        self._elapsed_secs_logged = 0.0
        self._process_secs_logged = 0.0

        max_history = int(max_history)
        self._call_history = deque(maxlen=(max_history if max_history > 0 else None))
        self._settings.__setitem__('max_history', max_history, _force_mutable=True)

    def _add_call(self, *, logged):
        self._num_calls_total += 1
        if logged:
            self._num_calls_logged += 1

    def _add_to_elapsed(self, elapsed_secs, process_secs):
        self._elapsed_secs_logged += elapsed_secs
        self._process_secs_logged += process_secs

    def _add_to_history(self, argnames, argvals, kwargs, retval,
                        elapsed_secs, process_secs, timestamp_secs,
                        prefixed_func_name, caller):
        timestamp = datetime.datetime.fromtimestamp(timestamp_secs).strftime('%x %X.%f')
        self._call_history.append(
            CallRecord(
                self._num_calls_logged,
                argnames, argvals,
                kwargs,
                retval,
                elapsed_secs, process_secs,
                timestamp,
                prefixed_func_name=prefixed_func_name,
                caller=caller)
        )


class traced():
    """Decorator factory; see the module docstring.

    Keyword parameters (all optional) and their factory defaults:
        enabled=True, log_args=True, log_retval=False, log_elapsed=True,
        record_history=True, max_history=100, prefix='',
        logger='plotkin_wef', loglevel=logging.DEBUG
    settings: a dict of the same, or the path of a settings file
        (or of a directory holding a `.traced` file). Keyword
        parameters passed explicitly win over `settings`.
    """
    mute = False

    def __init__(self, settings=None, **kwargs):
        unknown = set(kwargs) - set(SettingsMapping.get_group_settings_dict(GROUP))
        if unknown:
            raise TypeError("traced() got unexpected keyword argument(s): %s"
                            % ', '.join(sorted(unknown)))
        values = SettingsMapping.get_settings_dict(GROUP, settings=settings,
                                                   extra_settings_dict=kwargs)
        self._settings_mapping = SettingsMapping(GROUP, **values)

    def __call__(self, f):
        settings = self._settings_mapping
        stats = CallStats(f, settings)
        param_names = list(inspect.signature(f).parameters)
        wall_time_fn = time.perf_counter
        process_time_fn = time.process_time

        @wraps(f)
        def _traced_wrapper_(*args, **kwargs):
            if not settings.enabled:
                stats._add_call(logged=False)
                return f(*args, **kwargs)

            stats._add_call(logged=True)
            prefixed_fname = settings.prefix + f.__name__
            frame = inspect.currentframe().f_back
            caller = frame.f_code.co_name if frame is not None else '<unknown>'
            del frame

            logger = logging.getLogger(settings.logger)
            loglevel = settings.loglevel
            verbose = not traced.mute and logger.isEnabledFor(loglevel)

            if verbose:
                msg = "%s <== called by %s" % (prefixed_fname, caller)
                if settings.log_args:
                    argstrs = ["%s=%s" % (name, _short_repr(val))
                               for name, val in zip(param_names, args)]
                    if kwargs:
                        argstrs.append(dict_to_sorted_str(kwargs))
                    msg += '\n' + prefix_multiline_str(
                        '    ', "arguments: " + (', '.join(argstrs) or "<none>"))
                logger.log(loglevel, msg)

            t0 = time.time()
            t0_wall = wall_time_fn()
            t0_process = process_time_fn()
            retval = f(*args, **kwargs)
            elapsed_secs = wall_time_fn() - t0_wall
            process_secs = process_time_fn() - t0_process

            stats._add_to_elapsed(elapsed_secs, process_secs)
            if settings.record_history:
                stats._add_to_history(
                    tuple(param_names[:len(args)]), args, dict(kwargs), retval,
                    elapsed_secs, process_secs, t0, prefixed_fname, caller)

            if verbose:
                if settings.log_retval:
                    logger.log(loglevel, "    %s return value: %s"
                               % (prefixed_fname, _short_repr(retval)))
                msg = "%s ==> returning to %s" % (prefixed_fname, caller)
                if settings.log_elapsed:
                    msg += ("  (elapsed %f [secs], process %f [secs])"
                            % (elapsed_secs, process_secs))
                logger.log(loglevel, msg)

            return retval

        _traced_wrapper_.stats = stats
        _traced_wrapper_.traced_settings = settings
        return _traced_wrapper_
