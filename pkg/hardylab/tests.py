from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from pathlib import Path

from django.test import SimpleTestCase

from .cli import SUBCOMMANDS, dispatch

SAMPLES = Path(__file__).resolve().parent.parent / 'documents' / 'samples'


def quiet_dispatch(*args):
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = dispatch(['hardy.py', *args])
    return code, out.getvalue(), err.getvalue()


class DispatchTests(SimpleTestCase):

    def test_no_arguments_prints_usage(self):
        code, _, err = quiet_dispatch()
        self.assertEqual(code, 2)
        self.assertIn('usage: hardy.py', err)

    def test_help(self):
        code, out, _ = quiet_dispatch('help')
        self.assertEqual(code, 0)
        for name in SUBCOMMANDS:
            self.assertIn(name, out)

    def test_unknown_subcommand(self):
        code, _, err = quiet_dispatch('prove')
        self.assertEqual(code, 2)
        self.assertIn("Unknown subcommand 'prove'", err)

    def test_unknown_flag(self):
        code, _, _ = quiet_dispatch('detect', str(SAMPLES / 'hardy.model'), '--colour')
        self.assertEqual(code, 2)

    def test_paradox_found(self):
        code, out, _ = quiet_dispatch('detect', str(SAMPLES / 'hardy.model'), '--paradox', 'hardy')
        self.assertEqual(code, 1)
        self.assertIn('hardy: 1 found', out)

    def test_check_maps_to_check_model(self):
        code, out, _ = quiet_dispatch('check', str(SAMPLES / 'table2a.model'))
        self.assertEqual(code, 0)
        self.assertIn('deterministic: yes', out)

    def test_input_error(self):
        code, _, err = quiet_dispatch('certificate', str(SAMPLES / 'table2b.model'), '--anchor', '0,0,0,0')
        self.assertEqual(code, 2)
        self.assertIn('lies on the contained grid', err)
