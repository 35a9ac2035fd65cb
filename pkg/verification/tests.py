from django.conf import settings
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, TestCase

from locality.analysis import decide_local_realism
from tables.catalog import (
    SCENARIO_222, TABLE6_SCENARIO, hardy_model, local_realistic_model, pr_box, table6_pattern,
)
from tables.empirical import PossibilisticModel
from tables.scenarios import Scenario

from .models import SweepRun
from .oracle import enumerate_grids, oracle_local_realism
from .propositions import verify_ladder_implies_hardy, verify_proposition_1
from .reports import MAX_STORED_MISMATCHES, SweepReport
from .sweeps import (
    OUTSIDE_DOMAIN_NOTE, SAMPLE_BLOCK, _units, compare_deciders, sample_tables, sweep_equivalence,
    sweep_grid_unions, sweep_orbit,
)
from .table6 import verify_table6


class OracleTests(SimpleTestCase):

    def test_grid_counts(self):
        self.assertEqual(len(enumerate_grids(SCENARIO_222)), 16)
        self.assertEqual(len(enumerate_grids(TABLE6_SCENARIO)), 48)
        self.assertEqual(len(enumerate_grids(Scenario.uniform(3, 2))), 64)

    def test_fixtures(self):
        self.assertTrue(oracle_local_realism(local_realistic_model()))
        self.assertFalse(oracle_local_realism(table6_pattern()))
        self.assertFalse(oracle_local_realism(pr_box()))
        self.assertFalse(oracle_local_realism(hardy_model()))

    def test_table6_pattern_is_a_counterexample(self):
        self.assertEqual(compare_deciders(table6_pattern()), ['nh'])


class SweepTests(SimpleTestCase):

    def test_exhaustive_two_by_two(self):
        report = sweep_equivalence(SCENARIO_222, 'exhaustive')
        self.assertEqual(report.models_checked, 65536)
        self.assertEqual(report.mismatch_count, 0)
        self.assertEqual(report.mismatches, [])
        self.assertEqual(report.scenario, 'a=2,2;b=2,2')

    def test_sampled_sweeps(self):
        for scenario in (Scenario.uniform(2, 3), Scenario.uniform(3, 2)):
            for distribution in ('fair', 'sparse'):
                report = sweep_equivalence(
                    scenario, 'sampled', sample_count=3000, seed=5,
                    distribution=distribution, unit_size=1000,
                )
                self.assertEqual(report.models_checked, 3000)
                self.assertEqual(report.mismatch_count, 0, report.mismatches[:1])

    def test_sampled_sweep_is_reproducible(self):
        first = sweep_equivalence(Scenario((2, 3), (3, 3)), 'sampled', sample_count=500, seed=9, unit_size=128)
        second = sweep_equivalence(Scenario((2, 3), (3, 3)), 'sampled', sample_count=500, seed=9, unit_size=128)
        first.elapsed = second.elapsed = 0.0
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_parallel_workers_give_the_same_report(self):
        serial = sweep_equivalence(Scenario.uniform(2, 3), 'sampled', sample_count=3000, seed=2,
                                   distribution='sparse', unit_size=SAMPLE_BLOCK)
        parallel = sweep_equivalence(Scenario.uniform(2, 3), 'sampled', sample_count=3000, seed=2,
                                     distribution='sparse', unit_size=SAMPLE_BLOCK, workers=2)
        self.assertEqual(serial.models_checked, parallel.models_checked)
        self.assertEqual(serial.mismatches, parallel.mismatches)

    def test_outside_domain_is_rejected(self):
        with self.assertRaises(ValidationError) as cm:
            sweep_equivalence(TABLE6_SCENARIO, 'sampled', sample_count=10, seed=1)
        self.assertEqual(cm.exception.code, 'outside_theorem_domain')

    def test_override_runs_and_notes_the_domain(self):
        report = sweep_equivalence(
            TABLE6_SCENARIO, 'sampled', sample_count=200, seed=1, override_domain=True,
        )
        self.assertEqual(report.models_checked, 200)
        self.assertTrue(report.notes)

    def test_large_exhaustive_is_refused(self):
        with self.assertRaises(ValidationError) as cm:
            sweep_equivalence(Scenario.uniform(2, 3), 'exhaustive')
        self.assertEqual(cm.exception.code, 'exhaustive_too_large')

    def test_sampled_needs_seed(self):
        with self.assertRaises(ValidationError) as cm:
            sweep_equivalence(SCENARIO_222, 'sampled', sample_count=10)
        self.assertEqual(cm.exception.code, 'invalid_spec')

    def test_grid_unions_are_local(self):
        for scenario in (Scenario.uniform(2, 3), Scenario.uniform(3, 2)):
            report = sweep_grid_unions(scenario, max_grids=2)
            self.assertEqual(report.mismatch_count, 0)
            self.assertGreater(report.models_checked, len(enumerate_grids(scenario)))

    def test_mismatch_storage_is_capped(self):
        report = SweepReport('a=2,2;b=2,2', 'sampled')
        for _ in range(MAX_STORED_MISMATCHES + 5):
            report.record({})
        self.assertEqual(report.mismatch_count, MAX_STORED_MISMATCHES + 5)
        self.assertEqual(len(report.mismatches), MAX_STORED_MISMATCHES)

    def test_samples_do_not_depend_on_the_unit_size(self):
        whole = list(sample_tables(TABLE6_SCENARIO, 9, 'fair', 0, 4000))
        self.assertEqual(len(whole), 4000)
        for unit_size in (1000, 2048, 4096):
            pieces = []
            for start, stop in _units(TABLE6_SCENARIO, 'sampled', 4000, unit_size):
                pieces.extend(sample_tables(TABLE6_SCENARIO, 9, 'fair', start, stop))
            self.assertEqual(pieces, whole)
        self.assertEqual(list(sample_tables(TABLE6_SCENARIO, 9, 'fair', 0, 1500)), whole[:1500])

    def test_sample_ranges_start_on_a_block(self):
        with self.assertRaises(ValueError):
            list(sample_tables(TABLE6_SCENARIO, 9, 'fair', 100, 200))

    def test_report_does_not_depend_on_the_unit_size(self):
        reports = [
            sweep_equivalence(TABLE6_SCENARIO, 'sampled', sample_count=3000, seed=11,
                              override_domain=True, unit_size=size)
            for size in (1000, 4096)
        ]
        for report in reports:
            report.elapsed = 0.0
        self.assertEqual(reports[0].to_dict(), reports[1].to_dict())

    def test_sampled_throughput(self):
        # presupuesto: 10^6 muestras en 120 s, con los procesos por defecto
        samples = 20000
        for scenario in (Scenario.uniform(2, 3), Scenario.uniform(3, 2)):
            for distribution in ('fair', 'sparse'):
                report = sweep_equivalence(
                    scenario, 'sampled', sample_count=samples, seed=1,
                    distribution=distribution, workers=settings.HARDY_WORKERS,
                )
                self.assertEqual(report.models_checked, samples)
                self.assertLess(report.elapsed, 120 * samples / 10 ** 6)

    def test_override_records_the_nonlocal_counterexample(self):
        report = sweep_orbit(table6_pattern(), override_domain=True)
        self.assertGreater(report.models_checked, 1)
        self.assertEqual(report.mismatch_count, report.models_checked)
        for mismatch in report.mismatches:
            self.assertTrue(mismatch['notes'].endswith('disagreeing: nh'))
        self.assertIn(OUTSIDE_DOMAIN_NOTE, report.notes)

    def test_orbit_needs_override_outside_the_domain(self):
        with self.assertRaises(ValidationError) as cm:
            sweep_orbit(table6_pattern())
        self.assertEqual(cm.exception.code, 'outside_theorem_domain')

    def test_orbit_of_a_local_model(self):
        report = sweep_orbit(local_realistic_model())
        self.assertEqual(report.mismatch_count, 0)
        self.assertGreater(report.models_checked, 1)


class PropositionTests(SimpleTestCase):

    def test_collapse_proposition(self):
        for scenario in (SCENARIO_222, Scenario.uniform(3, 2)):
            report = verify_proposition_1(300, seed=1, scenario=scenario)
            self.assertEqual(report.models_checked, 600)
            self.assertTrue(report.passed, report.notes)

    def test_ladder_implies_hardy(self):
        report = verify_ladder_implies_hardy([3, 4, 5], 200, seed=7)
        self.assertEqual(report.models_checked, 600)
        self.assertTrue(report.passed, report.notes)

    def test_two_setting_ladders(self):
        report = verify_ladder_implies_hardy([2], 100, seed=3)
        self.assertTrue(report.passed)


class TableSixTests(SimpleTestCase):

    def test_all_steps_pass(self):
        report = verify_table6()
        self.assertEqual(len(report.steps), 6)
        self.assertTrue(report.passed, report.summary())
        self.assertIn('12 of 48 grids', report.steps[5].detail)

    def test_failed_step_is_named(self):
        from tables.catalog import probabilistic_from_rows
        swapped = probabilistic_from_rows(TABLE6_SCENARIO, [
            ['3/16', '1/16', '0', '1/8', '1/8'],
            ['3/16', '9/16', '1/2', '1/8', '1/8'],
            ['0', '1/2', '1/8', '1/4', '1/8'],
            ['1/4', '1/4', '3/8', '0', '1/8'],
            ['0', '1/2', '1/8', '1/8', '1/4'],
            ['1/4', '1/4', '3/8', '1/8', '0'],
        ])
        report = verify_table6(swapped)
        self.assertFalse(report.passed)
        self.assertEqual(report.failed_step.name, 'probabilistic no-signalling')


class SweepRunTests(TestCase):

    def test_report_is_archived(self):
        report = sweep_equivalence(SCENARIO_222, 'sampled', sample_count=100, seed=4)
        run = SweepRun.from_report(report, name='sweep')
        self.assertEqual(SweepRun.objects.count(), 1)
        self.assertEqual(run.models_checked, 100)
        self.assertEqual(run.distribution, 'fair')
        self.assertTrue(run.passed)

    def test_fixture_is_archived(self):
        run = SweepRun.from_fixture(verify_table6())
        self.assertEqual(run.mode, 'fixture')
        self.assertEqual(run.mismatch_count, 0)
        self.assertEqual(len(run.notes), 6)

    def test_mismatch_documents_replay(self):
        from documents.serializers import model_from_dict
        from .sweeps import _mismatch_document
        document = _mismatch_document(table6_pattern(), ['nh'])
        model = model_from_dict(document)
        self.assertEqual(model, table6_pattern())
        self.assertFalse(decide_local_realism(model).is_local)
        self.assertIsInstance(model, PossibilisticModel)
