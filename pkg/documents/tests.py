import json
from io import StringIO
from pathlib import Path

from django.core.exceptions import ValidationError
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from locality.analysis import check_probabilistic_no_signalling, is_deterministic
from tables.catalog import (
    TABLE6_SCENARIO, TABLE6_ZEROS, deterministic_model, hardy_model, local_realistic_model, pr_box,
    signalling_model, table6_probabilistic,
)
from tables.empirical import ProbabilisticModel
from verification.models import SweepRun

from .serializers import (
    parse_document, parse_model, parse_scenario_spec, scenario_spec, serialize_model,
)

SAMPLES = Path(__file__).resolve().parent / 'samples'


def sample(name):
    return str(SAMPLES / name)


def run(*args):
    """Ejecuta un comando y devuelve (codigo de salida, salida estandar)."""
    out, err = StringIO(), StringIO()
    try:
        call_command(*args, stdout=out, stderr=err)
    except SystemExit as exc:
        return exc.code, out.getvalue()
    return 0, out.getvalue()


POSSIBILISTIC_DOC = {
    'kind': 'possibilistic',
    'outcomes_a': [2, 2],
    'outcomes_b': [2, 2],
    'table': [[[[1, 1], [1, 1]], [[1, 1], [1, 1]]], [[[1, 1], [1, 1]], [[1, 1], [1, 1]]]],
}


class ParseTests(SimpleTestCase):

    def test_samples_match_catalog(self):
        expected = {
            'hardy.model': hardy_model(),
            'table2a.model': deterministic_model(),
            'table2b.model': local_realistic_model(),
            'table2c.model': signalling_model(),
            'pr_box.model': pr_box(),
        }
        for name, model in expected.items():
            with open(sample(name), encoding='utf-8') as handle:
                self.assertEqual(parse_model(handle.read()), model, name)

    def test_deterministic_sample(self):
        with open(sample('table2a.model'), encoding='utf-8') as handle:
            self.assertTrue(is_deterministic(parse_model(handle.read())))

    def test_probabilistic_sample(self):
        with open(sample('table6b.model'), encoding='utf-8') as handle:
            document = parse_document(handle.read())
        self.assertIsInstance(document.model, ProbabilisticModel)
        self.assertEqual(document.model, table6_probabilistic())
        self.assertTrue(check_probabilistic_no_signalling(document.model).holds)
        self.assertEqual(tuple(document.possibilistic.zeros()), TABLE6_ZEROS)

    def _error_codes(self, document):
        with self.assertRaises(ValidationError) as cm:
            parse_model(json.dumps(document))
        return [error.code for error in cm.exception.error_list], cm.exception.messages

    def test_entry_two_is_rejected(self):
        document = json.loads(json.dumps(POSSIBILISTIC_DOC))
        document['table'][1][0][1][1] = 2
        codes, messages = self._error_codes(document)
        self.assertEqual(codes, ['invalid_entry'])
        self.assertIn('table[1][0][1][1]', messages[0])

    def test_dimension_mismatch_names_the_path(self):
        document = json.loads(json.dumps(POSSIBILISTIC_DOC))
        document['table'][0][1][0] = [1, 1, 1]
        codes, messages = self._error_codes(document)
        self.assertEqual(codes, ['dimension_mismatch'])
        self.assertIn('table[0][1][0]', messages[0])

    def test_malformed_rational(self):
        document = json.loads(json.dumps(POSSIBILISTIC_DOC))
        document['kind'] = 'probabilistic'
        document['table'] = [[[['1/2', '1/2'], ['1/0', '1']], [['0', '0'], ['0', '0']]]] * 2
        codes, _ = self._error_codes(document)
        self.assertEqual(codes, ['malformed_rational'])

    def test_decimal_is_not_a_rational(self):
        document = json.loads(json.dumps(POSSIBILISTIC_DOC))
        document['kind'] = 'probabilistic'
        document['table'] = [[[['0.5', '1/2'], ['1', '0']], [['0', '0'], ['0', '0']]]] * 2
        codes, _ = self._error_codes(document)
        self.assertEqual(codes, ['malformed_rational'])

    def test_unnormalized_probabilities(self):
        document = json.loads(json.dumps(POSSIBILISTIC_DOC))
        document['kind'] = 'probabilistic'
        document['table'] = [[[['1/2', '1/4'], ['1', '0']], [['0', '0'], ['0', '0']]]] * 2
        codes, _ = self._error_codes(document)
        self.assertEqual(codes, ['not_normalized'])

    def test_unknown_kind(self):
        document = dict(POSSIBILISTIC_DOC, kind='quantum')
        codes, messages = self._error_codes(document)
        self.assertEqual(codes, ['unknown_kind'])
        self.assertTrue(messages[0].startswith('kind:'))

    def test_invalid_json_reports_line(self):
        text = '# header\n# second line\n{"kind": "possibilistic",\n  "table": [1, 2,]\n}'
        with self.assertRaises(ValidationError) as cm:
            parse_model(text)
        self.assertEqual(cm.exception.code, 'invalid_json')
        self.assertIn('line 4', cm.exception.messages[0])

    def test_round_trip(self):
        for model in (hardy_model(), pr_box(), table6_probabilistic()):
            text = serialize_model(model, name='fixture')
            self.assertEqual(parse_model(text), model)
            self.assertEqual(serialize_model(parse_model(text), name='fixture'), text)

    def test_rationals_are_reduced(self):
        text = serialize_model(table6_probabilistic())
        self.assertIn('"1/16"', text)
        self.assertIn('"1/2"', text)
        self.assertNotIn('8/16', text)

    def test_scenario_spec(self):
        self.assertEqual(parse_scenario_spec('a=2,2,2;b=2,3'), TABLE6_SCENARIO)
        self.assertEqual(scenario_spec(TABLE6_SCENARIO), 'a=2,2,2;b=2,3')
        self.assertEqual(parse_scenario_spec(' a = 2, 2 ; b = 3, 3 ').outcomes_b, (3, 3))
        for bad in ('2,2;2,2', 'a=2,x;b=2', 'a=;b=2', 'a=2,0;b=2,2'):
            with self.assertRaises(ValidationError):
                parse_scenario_spec(bad)

    def test_scenario_error_names_the_bad_party(self):
        document = json.loads(json.dumps(POSSIBILISTIC_DOC))
        document['outcomes_b'] = [2, 0]
        codes, messages = self._error_codes(document)
        self.assertEqual(codes, ['invalid_scenario'])
        self.assertTrue(messages[0].startswith('outcomes_b:'))
        document = dict(POSSIBILISTIC_DOC, outcomes_a=[0, 2])
        _, messages = self._error_codes(document)
        self.assertTrue(messages[0].startswith('outcomes_a:'))

    def test_scenario_spec_rejects_empty_counts(self):
        for bad in ('a=2,,2;b=2', 'a=2,2,;b=2,2', 'a=2;b=,3'):
            with self.assertRaises(ValidationError) as cm:
                parse_scenario_spec(bad)
            self.assertEqual(cm.exception.code, 'invalid_spec')


class CommandTests(SimpleTestCase):

    def test_detect_hardy(self):
        code, out = run('detect', sample('hardy.model'), '--paradox', 'hardy')
        self.assertEqual(code, 1)
        self.assertIn('hardy: 1 found', out)

    def test_detect_all_on_local_model(self):
        code, out = run('detect', sample('table2b.model'))
        self.assertEqual(code, 0)
        self.assertIn('NH: holds', out)

    def test_detect_ladder_not_applicable(self):
        code, out = run('detect', sample('table6b.model'), '--paradox', 'ladder')
        self.assertEqual(code, 0)
        self.assertIn('not applicable', out)

    def test_check_local_model(self):
        code, out = run('check_model', sample('table2b.model'))
        self.assertEqual(code, 0)
        self.assertIn('verdict: local, cover of 2 grids', out)

    def test_check_signalling_model(self):
        code, out = run('check_model', sample('table2c.model'), '--json')
        self.assertEqual(code, 1)
        report = json.loads(out)
        self.assertFalse(report['no_signalling'])
        self.assertEqual(len(report['ns_violations']), 2)

    def test_check_probabilistic_model(self):
        code, out = run('check_model', sample('table6b.model'), '--json')
        self.assertEqual(code, 1)
        report = json.loads(out)
        self.assertTrue(report['probabilistic_no_signalling'])
        self.assertEqual(report['verdict'], 'nonlocal')
        self.assertEqual(report['witness'], '(0,0,0,0)')

    def test_collapse(self):
        code, out = run('collapse', sample('table6b.model'))
        self.assertEqual(code, 0)
        self.assertEqual(tuple(parse_model(out).zeros()), TABLE6_ZEROS)

    def test_certificate(self):
        code, out = run('certificate', sample('pr_box.model'), '--anchor', '0,0,0,0', '--json')
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)['blocking_zeros'], [[0, 0, 1, 1], [1, 0, 1, 0], [1, 1, 0, 0]])

    def test_certificate_on_coverable_anchor(self):
        with self.assertRaises(CommandError) as cm:
            run('certificate', sample('table2b.model'), '--anchor', '0,0,0,0')
        self.assertEqual(cm.exception.returncode, 2)

    def test_certificate_bad_anchor(self):
        with self.assertRaises(CommandError) as cm:
            run('certificate', sample('pr_box.model'), '--anchor', '0,0,0')
        self.assertEqual(cm.exception.returncode, 2)

    def test_missing_file(self):
        with self.assertRaises(CommandError) as cm:
            run('check_model', sample('missing.model'))
        self.assertEqual(cm.exception.returncode, 2)

    def test_generate_pr_box(self):
        code, out = run('generate', '--kind', 'pr-box', '--seed', '1')
        self.assertEqual(code, 0)
        self.assertEqual(parse_model(out), pr_box())

    def test_generate_is_reproducible(self):
        args = ('generate', '--kind', 'random-ns', '--scenario', 'a=2,3;b=3,2', '--seed', '6')
        self.assertEqual(run(*args), run(*args))

    def test_generate_pr_box_wrong_scenario(self):
        with self.assertRaises(CommandError) as cm:
            run('generate', '--kind', 'pr-box', '--scenario', 'a=2,2,2;b=2,2')
        self.assertEqual(cm.exception.returncode, 2)

    def test_sweep_exhaustive(self):
        code, out = run('sweep', '--scenario', 'a=2,2;b=2,2', '--mode', 'exhaustive')
        self.assertEqual(code, 0)
        self.assertIn('models checked: 65536', out)
        self.assertIn('mismatches: 0', out)

    def test_sweep_sampled_both_distributions(self):
        code, out = run('sweep', '--scenario', 'a=2,2;b=3,3', '--mode', 'sampled',
                        '--samples', '300', '--seed', '3', '--json')
        self.assertEqual(code, 0)
        reports = json.loads(out)
        self.assertEqual([r['distribution'] for r in reports], ['fair', 'sparse'])

    def test_sweep_outside_domain(self):
        with self.assertRaises(CommandError) as cm:
            run('sweep', '--scenario', 'a=2,2,2;b=2,3', '--mode', 'sampled', '--samples', '10', '--seed', '1')
        self.assertEqual(cm.exception.returncode, 2)

    def test_sweep_orbit_of_the_counterexample(self):
        code, out = run('sweep', '--scenario', 'a=2,2,2;b=2,3', '--mode', 'structured',
                        '--orbit', sample('table6b.model'), '--override-domain', '--json')
        self.assertEqual(code, 1)
        report = json.loads(out)[0]
        self.assertEqual(report['mismatch_count'], report['models_checked'])

    def test_sweep_orbit_scenario_mismatch(self):
        with self.assertRaises(CommandError) as cm:
            run('sweep', '--scenario', 'a=2,2;b=2,2', '--mode', 'structured', '--orbit', sample('table6b.model'))
        self.assertEqual(cm.exception.returncode, 2)

    def test_verify_table6(self):
        code, out = run('verify', 'table6')
        self.assertEqual(code, 0)
        self.assertIn('table6: passed', out)


class SavedReportTests(TestCase):

    def test_verify_save(self):
        code, _ = run('verify', 'prop1', '--trials', '50', '--save')
        self.assertEqual(code, 0)
        self.assertEqual(SweepRun.objects.count(), 2)

    def test_sweep_save(self):
        code, _ = run('sweep', '--scenario', 'a=2,2;b=2,2', '--mode', 'structured', '--max-grids', '2', '--save')
        self.assertEqual(code, 0)
        self.assertEqual(SweepRun.objects.get().mode, 'structured')
