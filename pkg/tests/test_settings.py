__doc__ = """
Tests of settings.py: Setting and its subclasses, SettingsMapping,
settings files.
"""
from unittest import TestCase
from collections import OrderedDict
import logging
import os

from plotkin_wef.settings import (Setting, Setting_bool, Setting_choice, Setting_int,
                                  Setting_str, SettingsMapping)

here = os.path.dirname(os.path.abspath(__file__))


##############################################################################
# Setting tests
##############################################################################
class TestSetting(TestCase):
    info_plain = None
    info_extended = None

    @classmethod
    def setUpClass(cls):
        cls.info_plain = Setting_int('set_once', int, 15,
                                     allow_falsy=True, mutable=False)
        cls.hidden = Setting_bool('hidden', bool, True,
                                  allow_falsy=True, visible=False)
        # with extra fields
        cls.info_extended = Setting_str('extended', str, 'poly',
                                        allow_falsy=False,
                                        help='output', extra1='Tom')

    def test___init__1(self):
        self.assertEqual(self.info_plain.name, 'set_once')
        self.assertEqual(self.info_plain.final_type, int)
        self.assertEqual(self.info_plain.default, 15)
        self.assertEqual(self.info_plain.allow_falsy, True)
        self.assertEqual(self.info_plain.mutable, False)
        self.assertEqual(self.info_plain.visible, True)
        self.assertEqual(self.info_plain._user_attrs, [])

    def test___init__2(self):
        self.assertEqual(self.hidden.mutable, True)
        self.assertEqual(self.hidden.visible, False)

    def test___init__3(self):
        self.assertEqual(self.info_extended._user_attrs, ['extra1', 'help'])
        self.assertEqual(self.info_extended.help, 'output')

    def test___repr__1(self):
        plain_repr = ("Setting('set_once', int, 15, allow_falsy=True, "
                      "mutable=False, visible=True)")
        self.assertEqual(repr(self.info_plain), plain_repr)

    def test___repr__2(self):
        ext_repr = ("Setting('extended', str, 'poly', allow_falsy=False, "
                    "mutable=True, visible=True, extra1='Tom', help='output')")
        self.assertEqual(repr(self.info_extended), ext_repr)

    def test_is_acceptable(self):
        self.assertTrue(self.info_plain.is_acceptable(0))
        self.assertTrue(self.info_plain.is_acceptable(8))
        self.assertFalse(self.info_plain.is_acceptable(True))     # bool isn't a count
        self.assertFalse(self.info_plain.is_acceptable('8'))
        self.assertFalse(self.info_extended.is_acceptable(''))    # falsy not allowed

    def test_value_from_str(self):
        self.assertEqual(self.info_plain.value_from_str('12'), 12)
        self.assertRaises(ValueError, self.info_plain.value_from_str, '1.5')
        self.assertEqual(self.hidden.value_from_str('false'), False)
        self.assertEqual(self.hidden.value_from_str('True'), True)
        self.assertRaises(ValueError, self.hidden.value_from_str, '1')
        self.assertEqual(self.info_extended.value_from_str("'csv'"), 'csv')
        self.assertRaises(ValueError, self.info_extended.value_from_str, 'csv')
        self.assertRaises(ValueError, self.info_extended.value_from_str, "'csv\"")

    def test_choice(self):
        fmt = Setting_choice('fmt', 'poly', choices=('poly', 'json'))
        self.assertEqual(fmt.choices, ('poly', 'json'))
        self.assertTrue(fmt.is_acceptable('json'))
        self.assertFalse(fmt.is_acceptable('xml'))
        self.assertEqual(fmt.value_from_str("'json'"), 'json')
        self.assertRaises(ValueError, fmt.value_from_str, "'xml'")


##############################################################################
# SettingsMapping tests
##############################################################################
class TestSettingsMapping(TestCase):

    _settings_mapping = None

    @classmethod
    def setUpClass(cls):
        cls._settings = (
            Setting_bool('switch_on',    bool, True,   allow_falsy=True),
            Setting_str('label',         str,  '',     allow_falsy=True),
            Setting_int('leaf_budget',   int,  64,     allow_falsy=False),
            Setting_str('frozen_label',  str,  'off',  allow_falsy=False, mutable=False),
            Setting_bool('secret',       bool, False,  allow_falsy=True, visible=False),
        )
        SettingsMapping.register_class_settings('TestSettingsMapping', cls._settings)

    def setUp(self):
        self._settings_mapping = SettingsMapping(
            'TestSettingsMapping',
            switch_on=True,
            label='bar',
            leaf_budget=32,
            frozen_label='Howdy',
            secret=True,
        )

    def test_register_class_settings(self):
        od = SettingsMapping.get_group_settings_dict('TestSettingsMapping')
        self.assertIsInstance(od, OrderedDict)
        names = tuple(s.name for s in self._settings)
        self.assertEqual(tuple(od), names)

    def test_register_twice_keeps_first(self):
        SettingsMapping.register_class_settings(
            'TestSettingsMapping', (Setting_int('other', int, 1, allow_falsy=True),))
        self.assertNotIn('other', SettingsMapping.get_group_settings_dict('TestSettingsMapping'))

    def test___getitem__(self):
        mapping = self._settings_mapping
        self.assertEqual(mapping['switch_on'], True)
        self.assertEqual(mapping['label'], 'bar')
        self.assertEqual(mapping['leaf_budget'], 32)
        self.assertEqual(mapping.frozen_label, 'Howdy')
        self.assertRaises(KeyError, mapping.__getitem__, 'secret')
        self.assertRaises(KeyError, mapping.__getitem__, 'no_such_key')

    def test___setitem__(self):
        mapping = self._settings_mapping
        mapping['switch_on'] = False
        mapping.label = 'BAR'
        self.assertEqual(mapping['switch_on'], False)
        self.assertEqual(mapping.label, 'BAR')

        with self.assertRaises(ValueError):
            mapping['frozen_label'] = "HARK! Who goes there?"
        with self.assertRaises(ValueError):
            mapping.frozen_label = "This won't work either."
        self.assertEqual(mapping.frozen_label, 'Howdy')

        mapping.__setitem__('frozen_label', 'not howdy', _force_mutable=True)
        self.assertEqual(mapping.frozen_label, 'not howdy')

        with self.assertRaises(KeyError):
            mapping['no_such_key'] = 413
        with self.assertRaises(KeyError):
            mapping['secret'] = False

    def test___setitem__bad_values_give_default(self):
        mapping = self._settings_mapping
        mapping['leaf_budget'] = 0          # falsy, not allowed
        self.assertEqual(mapping.leaf_budget, 64)
        mapping['leaf_budget'] = 12
        mapping['leaf_budget'] = 'twelve'
        self.assertEqual(mapping.leaf_budget, 64)
        mapping['leaf_budget'] = True
        self.assertEqual(mapping.leaf_budget, 64)

    def test___len__(self):
        self.assertEqual(len(self._settings_mapping), 4)

    def test___iter__(self):
        self.assertEqual(list(self._settings_mapping),
                         ['switch_on', 'label', 'leaf_budget', 'frozen_label'])

    def test_items(self):
        self.assertEqual(list(self._settings_mapping.items()),
                         [('switch_on', True), ('label', 'bar'),
                          ('leaf_budget', 32), ('frozen_label', 'Howdy')])

    def test___contains__(self):
        self.assertIn('label', self._settings_mapping)
        self.assertNotIn('secret', self._settings_mapping)
        self.assertNotIn('no_such_key', self._settings_mapping)

    def test___str__(self):
        self.assertEqual(
            str(self._settings_mapping),
            "{'switch_on': True, 'label': 'bar', 'leaf_budget': 32, 'frozen_label': 'Howdy'}")

    def test___repr__(self):
        r = repr(self._settings_mapping)
        self.assertTrue(r.startswith("SettingsMapping( \n    group='TestSettingsMapping',"))
        self.assertIn("'leaf_budget': 32", r)

    def test_update(self):
        mapping = self._settings_mapping
        d = mapping.as_dict()
        mapping.update(d)                        # immutable frozen_label ignored
        self.assertEqual(mapping.as_dict(), d)

        mapping.update({'label': 'x'}, leaf_budget=7, frozen_label='ignored')
        self.assertEqual(mapping.label, 'x')
        self.assertEqual(mapping.leaf_budget, 7)
        self.assertEqual(mapping.frozen_label, 'Howdy')

        mapping.update(frozen_label='forced', _force_mutable=True)
        self.assertEqual(mapping.frozen_label, 'forced')

        self.assertRaises(KeyError, mapping.update, no_such_key=1)

    def test_as_OD(self):
        self.assertEqual(self._settings_mapping.as_OD(),
                         OrderedDict([('switch_on', True), ('label', 'bar'),
                                      ('leaf_budget', 32), ('frozen_label', 'Howdy')]))

    def test_get_settings_dict(self):
        d = SettingsMapping.get_settings_dict(
            'TestSettingsMapping',
            settings={'label': 'from dict', 'unknown': 1},
            extra_settings_dict={'leaf_budget': 5, 'other': 2})
        self.assertEqual(d, {'label': 'from dict', 'leaf_budget': 5})
        self.assertEqual(SettingsMapping.get_settings_dict('TestSettingsMapping'), {})


class TestSettingsMapping_set_reset_defaults(TestCase):

    @classmethod
    def setUpClass(cls):
        cls._settings = (
            Setting_bool('enabled_flag',  bool, True,  allow_falsy=True),
            Setting_int('number',         int,  12,    allow_falsy=True),
            Setting_str('logger_name',    str,  'nix', allow_falsy=False),
            Setting_bool('invisible',     bool, False, allow_falsy=True, visible=False),
        )
        SettingsMapping.register_class_settings('TestSettingsMapping_set_reset_defaults',
                                                cls._settings)

    def test_set_reset_defaults(self):
        group = self.__class__.__name__
        settings_map = SettingsMapping.get_group_settings_dict(group)

        # falsy value for a setting that doesn't allow it: no effect
        SettingsMapping.set_defaults(group, {'logger_name': ''})
        self.assertEqual(settings_map['logger_name'].default, 'nix')

        # wrong type: no effect
        SettingsMapping.set_defaults(group, {'number': '500'})
        self.assertEqual(settings_map['number'].default, 12)

        self.assertRaises(KeyError, SettingsMapping.set_defaults, group, {'no_such_setting': 0})
        self.assertRaises(KeyError, SettingsMapping.set_defaults, group, {'invisible': True})

        SettingsMapping.set_defaults(group, dict(enabled_flag=False, number=17))
        self.assertEqual(settings_map['enabled_flag'].default, False)
        self.assertEqual(settings_map['number'].default, 17)
        self.assertEqual(SettingsMapping(group).number, 17)
        self.assertEqual(SettingsMapping.get_defaults_OD(group),
                         OrderedDict([('enabled_flag', False), ('number', 17),
                                      ('logger_name', 'nix')]))

        SettingsMapping.reset_defaults(group)
        self.assertEqual(SettingsMapping.get_defaults_OD(group),
                         SettingsMapping.get_factory_defaults_OD(group))
        self.assertEqual(SettingsMapping(group).number, 12)


##############################################################################
# settings files
##############################################################################
class TestReadSettingsFile(TestCase):

    def test_good_file(self):
        d = SettingsMapping.read_settings_file(
            'plotkin_wef', os.path.join(here, 'plotkin_wef-settings.txt'))
        self.assertEqual(d, {'max_depth': 8,
                             'max_length': 512,
                             'exhaustive_max_n': 5,
                             'montecarlo_max_dim': 12,
                             'memoize': False,
                             'output_format': 'json'})

    def test_bad_file(self):
        with self.assertLogs('plotkin_wef.settings', logging.WARNING) as cm:
            d = SettingsMapping.read_settings_file(
                'plotkin_wef', os.path.join(here, 'bad-settings.txt'))
        self.assertEqual(d, {})
        # one warning per bad line, except max_length=None (dropped silently)
        self.assertEqual(len(cm.output), 8)

    def test_missing_file(self):
        self.assertEqual(SettingsMapping.read_settings_file('plotkin_wef', ''), {})
        self.assertEqual(SettingsMapping.read_settings_file(
            'plotkin_wef', os.path.join(here, 'no-such-file.txt')), {})

    def test_directory(self):
        # tests/ holds no '.plotkin_wef' file
        self.assertEqual(SettingsMapping.read_settings_file('plotkin_wef', here), {})
