__doc__ = """
SettingsMapping -- a registry of typed, documented settings, organised in
named groups. Each group is registered once, at import time of the module
that owns it:

    SettingsMapping.register_class_settings('plotkin_wef', _setting_info_list)

and instances of SettingsMapping then hold one value per setting of the
group, with both
    (*) a mapping interface -- settings['max_depth'], 'max_depth' in settings,
        len(settings), iteration over visible names, items(), update()
    (*) an attribute interface -- settings.max_depth, settings.max_depth = 8

Groups in this package:
    'plotkin_wef'  -- budgets and defaults of the library and CLI (config.py)
    'traced'       -- per-function options of the `traced` decorator (tracing.py)

Settings can also be read from a settings file. A settings file holds zero
or more lines of the form
    setting_name=setting_value
Blank lines are ignored, and so are lines whose first non-whitespace
character is '#'. String values must be quoted; `None` is accepted for
settings that allow falsy values. Lines that can't be used (no '=', unknown
setting, unparsable value) are skipped, and a warning is logged for each.
"""
from collections import OrderedDict, defaultdict
import logging
import os
import pprint

from .helpers import is_quoted_str, restrict_keys


__all__ = ['Setting', 'Setting_bool', 'Setting_int', 'Setting_str', 'Setting_choice',
           'SettingsMapping']

logger = logging.getLogger(__name__)


#----------------------------------------------------------------------------
# Setting & basic subclasses
#----------------------------------------------------------------------------

class Setting():
    """a little struct - static info about one setting, sans any value.

    Callers can add additional fields by passing additional keyword args,
    e.g. help='...'. The additional fields/keys & values are made attributes
    of this object, and a (sorted) list of the keys is saved (_user_attrs).
    """
    def __init__(self, name, final_type, default, *,
                 allow_falsy, mutable=True, visible=True,
                 **more_attributes):
        assert not default or isinstance(default, final_type)
        self.name = name                # key
        self.final_type = final_type    # bool int str ...
        self.default = default
        self.allow_falsy = allow_falsy  # is a falsy final val of setting allowed
        self.mutable = mutable
        self.visible = visible

        # fields in repr are written in the same order every time
        self._user_attrs = sorted(list(more_attributes))
        self.__dict__.update(more_attributes)

    def __repr__(self):
        if isinstance(self.final_type, tuple):      # it's a tuple of types
            final_type = '(' + ', '.join(map(lambda t: t.__name__, self.final_type)) + ')'
        else:
            final_type = self.final_type.__name__
        output = ("Setting(%r, %s, %r, allow_falsy=%s, mutable=%s, visible=%s"
                  % (self.name, final_type, self.default, self.allow_falsy,
                     self.mutable, self.visible))
        for attr in self._user_attrs:
            output += ", %s=%r" % (attr, self.__dict__[attr])
        output += ")"
        return output

    def value_from_str(self, s):
        """Virtual method for use by SettingsMapping.read_settings_file."""
        raise ValueError("can't read a value for %r from %r" % (self.name, s))

    def has_acceptable_type(self, value):
        # bool is a subclass of int; don't let True pass for a count
        if self.final_type is int and isinstance(value, bool):
            return False
        return isinstance(value, self.final_type)

    def is_acceptable(self, value):
        return (bool(value) or self.allow_falsy) and self.has_acceptable_type(value)


class Setting_bool(Setting):
    def value_from_str(self, s):
        ddict = defaultdict(lambda: None)
        ddict['TRUE'] = True
        ddict['FALSE'] = False
        val = ddict[s.upper()]
        if val is None:
            return super().value_from_str(s)
        return val


class Setting_int(Setting):
    def value_from_str(self, s):
        try:
            return int(s)
        except ValueError:
            return super().value_from_str(s)


class Setting_str(Setting):
    def value_from_str(self, s):
        """s must be enclosed in quotes (the same one on each end!)
        and then we return what's quoted... or raise ValueError"""
        if is_quoted_str(s):
            return s[1:-1]
        return super().value_from_str(s)


class Setting_choice(Setting_str):
    """A str setting restricted to the values in `choices`."""
    def __init__(self, name, default, *, choices, **kwargs):
        super().__init__(name, str, default, allow_falsy=False, choices=tuple(choices), **kwargs)

    def has_acceptable_type(self, value):
        return isinstance(value, str) and value in self.choices

    def value_from_str(self, s):
        val = super().value_from_str(s)
        if val not in self.choices:
            raise ValueError("%r: expecting one of %s, got %r"
                             % (self.name, ', '.join(self.choices), val))
        return val


#----------------------------------------------------------------------------
# SettingsMapping
#----------------------------------------------------------------------------
class SettingsMapping():
    """Mapping interface and attribute interface over the values of one
    registered group of settings."""
    # Class-level mapping: group |-> OrderedDict of group's settings (info 'structs')
    _group2SettingsData_dict = {}
    _group2SettingsDataOrigDefaults_dict = {}

    @classmethod
    def register_class_settings(cls, group, settings_iter):
        """
        Called from module level by the owner of the group, e.g.
            SettingsMapping.register_class_settings('traced', _setting_info_list)
        Only does anything the first time it's called for a group.
        settings_iter: iterable of Setting objs"""
        if group in cls._group2SettingsData_dict:
            return

        od = OrderedDict()
        for setting in settings_iter:
            od[setting.name] = setting

        cls._group2SettingsData_dict[group] = od
        cls._group2SettingsDataOrigDefaults_dict[group] = OrderedDict(
            [(name, od[name].default) for name in od]
        )

        # <<<attributes>>> Set up descriptors
        for name in od:
            if od[name].visible and not hasattr(cls, name):
                setattr(cls, name, cls.make_setting_descriptor(name))

    @classmethod
    def get_group_settings_dict(cls, group) -> OrderedDict:
        return cls._group2SettingsData_dict[group]

    @classmethod
    def get_factory_defaults_OD(cls, group) -> OrderedDict:
        group_settings = cls._group2SettingsData_dict[group]
        return OrderedDict(
            [(name, value)
             for name, value in cls._group2SettingsDataOrigDefaults_dict[group].items()
             if group_settings[name].visible]
        )

    @classmethod
    def get_defaults_OD(cls, group) -> OrderedDict:
        return OrderedDict(
            [(name, setting.default)
             for name, setting in cls._group2SettingsData_dict[group].items()
             if setting.visible]
        )

    @classmethod
    def set_defaults(cls, group, defaults: dict):
        """Change default values for all subsequently built mappings of group.

        Raises KeyError if any key in defaults isn't a visible setting of the
        group; in that case no changes are made.
        Ignores any items whose values are of incorrect type, or falsy when
        the setting has .allow_falsy == False.
        """
        group_settings = cls._group2SettingsData_dict[group]

        for setting_name in defaults:
            if setting_name not in group_settings:
                raise KeyError(
                    "set_defaults: no such setting (key) as '%s'" % setting_name)
            elif not group_settings[setting_name].visible:
                raise KeyError(
                    "set_defaults: setting (key) '%s' is not visible in group %s."
                    % (setting_name, group))

        for setting_name, new_default_val in defaults.items():
            setting = group_settings[setting_name]
            if setting.is_acceptable(new_default_val):
                setting.default = new_default_val

    @classmethod
    def reset_defaults(cls, group):
        """Revert to the defaults declared in code."""
        orig_defaults = cls._group2SettingsDataOrigDefaults_dict[group]
        settings_map = cls._group2SettingsData_dict[group]
        for name in settings_map:
            settings_map[name].default = orig_defaults[name]

    @classmethod
    def read_settings_file(cls, group, settings_path='') -> dict:
        """If settings_path names a file that exists, load settings from it.
        If settings_path names a directory, load settings from
            settings_path + '/.' + group
        If not settings_path or it doesn't exist, return {}.
        """
        if not settings_path:
            return {}

        if os.path.isdir(settings_path):
            settings_path = os.path.join(settings_path, '.' + group)
        if not os.path.isfile(settings_path):
            return {}

        d = {}      # returned
        try:
            with open(settings_path) as f:
                lines = f.readlines()
        except OSError as e:
            logger.warning("can't read settings file %s: %s", settings_path, e)
            return d

        group_settings = cls._group2SettingsData_dict[group]
        for lineno, line in enumerate(lines, 1):
            line = line.strip()
            # Allow blank lines & comments
            if not line or line[0] == '#':
                continue

            try:
                setting, val_txt = line.split('=', 1)   # only split at first '='
            except ValueError:
                logger.warning("%s:%d: ill-formed line ignored: %r", settings_path, lineno, line)
                continue
            setting = setting.strip()
            val_txt = val_txt.strip()

            if setting not in group_settings or not val_txt:
                logger.warning("%s:%d: no setting %r with a value in group %r",
                               settings_path, lineno, setting, group)
                continue

            if val_txt == 'None':
                if group_settings[setting].allow_falsy:
                    d[setting] = None
                continue

            try:
                val = group_settings[setting].value_from_str(val_txt)
            except ValueError as e:
                logger.warning("%s:%d: bad value ignored: %s", settings_path, lineno, e)
                continue

            d[setting] = val

        return d

    @classmethod
    def get_settings_dict(cls, group, *, settings=None, extra_settings_dict=None) -> dict:
        """Get settings from a dict, or read them from a file, as a dict;
        update that with extra_settings_dict and return the result.
        :param settings: dict, or str path as for read_settings_file (or None)
        :param extra_settings_dict: more settings; these win.
        """
        group_keys = set(cls._group2SettingsData_dict[group])

        settings_dict = {}
        if isinstance(settings, dict):
            settings_dict = restrict_keys(dict(settings), group_keys)
        elif isinstance(settings, str):
            settings_dict = cls.read_settings_file(group, settings_path=settings)

        if extra_settings_dict:
            settings_dict.update(restrict_keys(dict(extra_settings_dict), group_keys))
        return settings_dict

    # <<<attributes>>>
    @classmethod
    def make_setting_descriptor(cls, name):
        class SettingDescr():
            """A little data descriptor which just delegates
            to __getitem__ and __setitem__ of instance"""
            def __get__(self, instance, owner):
                if instance is None:
                    return self
                return instance[name]

            def __set__(self, instance, value):
                instance[name] = value

        return SettingDescr()

    @property
    def _group_settings_dict(self) -> OrderedDict:
        return self._group2SettingsData_dict[self.group]

    def _get_Setting(self, key) -> Setting:
        return self._group_settings_dict[key]

    def _is_visible(self, key) -> bool:
        return self._get_Setting(key).visible

    @property
    def _visible_setting_names_gen(self):
        return (name for name in self._values_dict if self._is_visible(name))

    def __init__(self, group, **values_dict):
        """group: name of a group that has already been registered by
        register_class_settings.
        values_dict: initial values; settings not given take their
        current defaults."""
        self.group = group
        group_settings = self._group_settings_dict

        self._values_dict = OrderedDict()
        for k, info in group_settings.items():
            self.__setitem__(k, values_dict.get(k, info.default),
                             info=info, _force_mutable=True, _force_visible=True)

    def __setitem__(self, key, value,
                    info=None, _force_mutable=False, _force_visible=False):
        """
        key: name of setting; must be registered in self.group
        value: new value. Values of the wrong type, or falsy values when
               falsy isn't allowed, are replaced by the setting's default.
        """
        if not info:
            if key not in self._group_settings_dict:
                raise KeyError("no such setting (key) as '%s'" % key)
            info = self._get_Setting(key)
        if not info.visible and not _force_visible:
            raise KeyError("setting (key) '%s' is not visible in group '%s'."
                           % (key, self.group))
        if not info.mutable and not _force_mutable:
            raise ValueError("%s' is write-once (current value: %r)"
                             % (key, self._values_dict[key]))

        if not info.is_acceptable(value):
            value = info.default
        self._values_dict[key] = value

    def __getitem__(self, key):
        """You can only get visible settings."""
        if key not in self._group_settings_dict:
            raise KeyError("no such setting (key) as '%s'" % key)
        if not self._is_visible(key):
            raise KeyError("setting (key) '%s' is not visible in group '%s'."
                           % (key, self.group))
        return self._values_dict[key]

    def __len__(self):
        """Return # of visible settings."""
        return len(list(self._visible_setting_names_gen))

    def __iter__(self):
        """Return iterable of names of visible settings."""
        return self._visible_setting_names_gen

    def items(self):
        """Return iterable of items of visible settings."""
        return ((name, self.__getitem__(name)) for name in self._visible_setting_names_gen)

    def __contains__(self, key):
        """True iff key is a visible setting."""
        return key in self._values_dict and self._is_visible(key)

    def __repr__(self):
        return ("SettingsMapping( \n"
                "    group=%r,\n"
                "    ** %s\n"
                ")") % (self.group, pprint.pformat(dict(self.as_OD()), indent=8))

    def __str__(self):
        return str(self.as_dict())

    def as_OD(self) -> OrderedDict:
        """Return OrderedDict of visible settings (only)."""
        return OrderedDict(self.items())

    def as_dict(self):
        """Return dict of visible settings only."""
        return dict(self.as_OD())

    def update(self, *dicts, _force_mutable=False, **d_settings):
        """Do __setitem__ for every key/value pair in every dictionary
        in dicts + (d_settings,).
        Allow but ignore attempts to write to immutable keys, so that
        the dict from as_dict() can be written back unchanged."""
        for d in dicts + (d_settings,):
            for k, v in d.items():
                info = self._group_settings_dict.get(k)
                if info and not info.mutable and not _force_mutable:
                    continue
                # if not info, KeyError from __setitem__
                self.__setitem__(k, v, info=info, _force_mutable=_force_mutable)
