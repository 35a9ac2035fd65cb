import random
from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from tables.catalog import (
    HARDY_ANCHOR, SCENARIO_222, TABLE6_ANCHOR, TABLE6_SCENARIO, deterministic_model, hardy_model,
    local_realistic_model, pr_box, probabilistic_from_rows, signalling_model, table6_pattern,
    table6_probabilistic,
)
from tables.empirical import PossibilisticModel, possibilistic_collapse
from tables.grids import convex_combination, enumerate_grids
from tables.scenarios import Cell, Scenario
from tables.symmetry import apply_symmetry, apply_symmetry_to_grid, iter_symmetries

from .analysis import (
    check_no_signalling, check_probabilistic_no_signalling, complete_to_grid,
    decide_local_realism, fast_path_22l, is_deterministic, is_no_signalling, ns_interior,
)
from .verdicts import NSViolation


class TableTwoTests(SimpleTestCase):

    def test_deterministic_model(self):
        model = deterministic_model()
        self.assertTrue(is_deterministic(model))
        self.assertTrue(check_no_signalling(model).holds)
        verdict = decide_local_realism(model)
        self.assertTrue(verdict.is_local)
        self.assertEqual([str(g) for g in verdict.cover], ['[0,0 | 0,0]'])

    def test_local_realistic_model(self):
        model = local_realistic_model()
        self.assertFalse(is_deterministic(model))
        self.assertTrue(check_no_signalling(model).holds)
        verdict = decide_local_realism(model)
        self.assertTrue(verdict.is_local)
        self.assertEqual([str(g) for g in verdict.cover], ['[0,0 | 0,0]', '[1,1 | 0,1]'])
        self.assertEqual(verdict.covered_bits(), model.bits)

    def test_signalling_model(self):
        report = check_no_signalling(signalling_model())
        self.assertFalse(report.holds)
        self.assertEqual(report.violations, (NSViolation('b', 0, 0, 1), NSViolation('b', 0, 1, 0)))
        self.assertIn('impossible when Alice measures setting 1', str(report.violations[0]))


class NoSignallingTests(SimpleTestCase):

    def test_fast_check_matches_report(self):
        rng = random.Random(4)
        for _ in range(500):
            model = PossibilisticModel(SCENARIO_222, rng.getrandbits(16) & rng.getrandbits(16))
            self.assertEqual(is_no_signalling(model), check_no_signalling(model).holds)

    def test_ns_interior_is_largest_ns_submodel(self):
        self.assertEqual(ns_interior(hardy_model()), hardy_model())
        self.assertEqual(ns_interior(signalling_model()).bits, 0)
        rng = random.Random(9)
        for _ in range(200):
            model = PossibilisticModel(TABLE6_SCENARIO, rng.getrandbits(30))
            interior = ns_interior(model)
            self.assertTrue(is_no_signalling(interior))
            self.assertEqual(interior.bits & ~model.bits, 0)

    def test_probabilistic_table6(self):
        self.assertTrue(check_probabilistic_no_signalling(table6_probabilistic()).holds)

    def test_probabilistic_marginal_mismatch(self):
        model = probabilistic_from_rows(TABLE6_SCENARIO, [
            ['3/16', '1/16', '0', '1/8', '1/8'],
            ['3/16', '9/16', '1/2', '1/8', '1/8'],
            ['0', '1/2', '1/8', '1/4', '1/8'],
            ['1/4', '1/4', '3/8', '0', '1/8'],
            ['0', '1/2', '1/8', '1/8', '1/4'],
            ['1/4', '1/4', '3/8', '1/8', '0'],
        ])
        result = check_probabilistic_no_signalling(model)
        self.assertFalse(result)
        self.assertEqual(result.mismatch.party, 'b')
        self.assertEqual((result.mismatch.reference_value, result.mismatch.value), (Fraction(3, 8), Fraction(1, 4)))

    def test_probabilistic_ns_implies_collapse_ns(self):
        rng = random.Random(14)
        models = [table6_probabilistic()]
        for sc in (SCENARIO_222, TABLE6_SCENARIO, Scenario((2, 3), (3, 2, 2))):
            grids = enumerate_grids(sc)
            for _ in range(30):
                chosen = rng.sample(grids, rng.randint(1, 4))
                models.append(convex_combination(sc, [(rng.randint(1, 9), grid) for grid in chosen]))
        # caja PR: 1/2 en cada celda posible
        models.append(probabilistic_from_rows(SCENARIO_222, [
            ['1/2', '0', '1/2', '0'],
            ['0', '1/2', '0', '1/2'],
            ['1/2', '0', '0', '1/2'],
            ['0', '1/2', '1/2', '0'],
        ]))
        models += [apply_symmetry(table6_probabilistic(), op) for op in list(iter_symmetries(TABLE6_SCENARIO))[::11]]
        for model in models:
            self.assertTrue(check_probabilistic_no_signalling(model).holds)
            self.assertTrue(check_no_signalling(possibilistic_collapse(model)).holds)


class GridCompletionTests(SimpleTestCase):

    def test_zero_cell_is_rejected(self):
        with self.assertRaises(ValidationError) as cm:
            complete_to_grid(hardy_model(), (0, 0, 1, 1))
        self.assertEqual(cm.exception.code, 'zero_cell')

    def test_hardy_anchor_has_no_grid(self):
        self.assertIsNone(complete_to_grid(hardy_model(), HARDY_ANCHOR))

    def test_completion_is_contained(self):
        model = hardy_model()
        for cell in model.ones():
            grid = complete_to_grid(model, cell)
            if grid is not None:
                self.assertTrue(grid.contained_in(model))
                self.assertTrue(grid.passes_through(cell))

    def test_completion_matches_enumeration(self):
        rng = random.Random(12)
        sc = Scenario((2, 3), (3, 2, 2))
        grids = enumerate_grids(sc)
        for _ in range(100):
            model = PossibilisticModel(sc, rng.getrandbits(sc.n_cells) | rng.getrandbits(sc.n_cells))
            for cell in model.ones():
                expected = any(g.passes_through(cell) and g.contained_in(model) for g in grids)
                grid = complete_to_grid(model, cell)
                self.assertEqual(grid is not None, expected)
                if grid is not None:
                    self.assertTrue(grid.contained_in(model))
                    self.assertTrue(grid.passes_through(cell))


class LocalRealismTests(SimpleTestCase):

    def test_hardy_is_nonlocal(self):
        verdict = decide_local_realism(hardy_model())
        self.assertFalse(verdict.is_local)
        self.assertEqual(verdict.witness_cell, HARDY_ANCHOR)

    def test_pr_box_is_nonlocal(self):
        self.assertFalse(decide_local_realism(pr_box()).is_local)

    def test_table6_pattern_is_nonlocal_at_upper_left(self):
        verdict = decide_local_realism(table6_pattern())
        self.assertFalse(verdict.is_local)
        self.assertEqual(verdict.witness_cell, TABLE6_ANCHOR)

    def test_empty_model_is_vacuously_local(self):
        verdict = decide_local_realism(PossibilisticModel.constant(SCENARIO_222, False))
        self.assertTrue(verdict.is_local)
        self.assertFalse(verdict.normalized)
        self.assertEqual(verdict.cover, ())

    def test_verdict_commutes_with_symmetry(self):
        rng = random.Random(16)
        for sc in (SCENARIO_222, TABLE6_SCENARIO):
            ops = rng.sample(list(iter_symmetries(sc)), 16)
            models = [
                PossibilisticModel(sc, rng.getrandbits(sc.n_cells) | rng.getrandbits(sc.n_cells))
                for _ in range(8)
            ]
            models += [hardy_model(), local_realistic_model(), pr_box()] if sc == SCENARIO_222 else [table6_pattern()]
            for model in models:
                verdict = decide_local_realism(model)
                for op in ops:
                    image = apply_symmetry(model, op)
                    image_verdict = decide_local_realism(image)
                    self.assertEqual(image_verdict.status, verdict.status)
                    if verdict.is_local:
                        mapped = [apply_symmetry_to_grid(grid, op) for grid in verdict.cover]
                        union = 0
                        for grid in mapped:
                            self.assertTrue(grid.contained_in(image))
                            union |= grid.mask
                        self.assertEqual(union, image.bits)
                    else:
                        self.assertIsNone(complete_to_grid(image, op.map_cell(verdict.witness_cell)))


class FastPathTests(SimpleTestCase):

    def test_agrees_on_fixtures(self):
        for model in (deterministic_model(), local_realistic_model(), hardy_model(), pr_box()):
            fast, slow = fast_path_22l(model), decide_local_realism(model)
            self.assertEqual(fast.is_local, slow.is_local)
            self.assertEqual(fast.witness_cell, slow.witness_cell)

    def test_rejects_signalling_model(self):
        with self.assertRaises(ValidationError) as cm:
            fast_path_22l(signalling_model())
        self.assertEqual(cm.exception.code, 'fast_path_domain')

    def test_rejects_three_settings(self):
        with self.assertRaises(ValidationError) as cm:
            fast_path_22l(table6_pattern())
        self.assertEqual(cm.exception.code, 'fast_path_domain')

    def test_agrees_on_random_ns_models(self):
        rng = random.Random(21)
        sc = Scenario.uniform(2, 3)
        for _ in range(300):
            model = ns_interior(PossibilisticModel(sc, rng.getrandbits(36) | rng.getrandbits(36)))
            fast = fast_path_22l(model)
            self.assertEqual(fast.is_local, decide_local_realism(model).is_local)
            if fast.is_local:
                self.assertEqual(fast.covered_bits(), model.bits)

    def test_cover_cells(self):
        grid = fast_path_22l(local_realistic_model()).cover[1]
        self.assertIn(Cell(0, 1, 1, 1), grid.cells())
