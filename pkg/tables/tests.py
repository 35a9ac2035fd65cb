import random
from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from .catalog import (
    HARDY_ANCHOR, HARDY_ZEROS, SCENARIO_222, TABLE6_SCENARIO, TABLE6_ZEROS, hardy_model,
    local_realistic_model, pr_box, probabilistic_from_rows, table6_pattern, table6_probabilistic,
)
from .empirical import (
    PossibilisticModel, ProbabilisticModel, build_possibilistic, is_normalized, mixture,
    possibilistic_collapse,
)
from .generators import generate, lr_mixture, random_ns
from .grids import DeterministicGrid, convex_combination, enumerate_grids, grid_table, grids_through
from .measurement import check_measurement_locality
from .scenarios import Cell, Scenario
from .symmetry import (
    SymmetryOp, apply_symmetry, apply_symmetry_to_grid, inverse, iter_symmetries, orbit,
)


def random_probabilistic(scenario, rng, grids=3):
    """Mezcla convexa de grillas al azar con pesos enteros."""
    chosen = rng.sample(enumerate_grids(scenario), grids)
    return convex_combination(scenario, [(rng.randint(1, 5), grid) for grid in chosen])


class ScenarioTests(SimpleTestCase):

    def test_rejects_empty_party(self):
        with self.assertRaises(ValidationError) as cm:
            Scenario((), (2,))
        self.assertEqual(cm.exception.code, 'invalid_scenario')

    def test_rejects_non_positive_count(self):
        for counts in ((0, 2), (2, -1), (2, True)):
            with self.assertRaises(ValidationError):
                Scenario(counts, (2, 2))

    def test_uniform_scenario(self):
        sc = Scenario.uniform(3, 2)
        self.assertEqual(sc.outcomes_a, (2, 2, 2))
        self.assertEqual(sc.n_cells, 36)
        self.assertTrue(sc.is_two_outcome)
        self.assertFalse(sc.is_two_setting)

    def test_canonical_order_matches_bit_order(self):
        for cell in TABLE6_SCENARIO.cells:
            self.assertEqual(TABLE6_SCENARIO.cells[TABLE6_SCENARIO.index(*cell)], cell)
        self.assertEqual(list(TABLE6_SCENARIO.cells), sorted(TABLE6_SCENARIO.cells))

    def test_theorem_domain(self):
        self.assertTrue(Scenario.uniform(2, 3).in_theorem_domain)
        self.assertTrue(Scenario.uniform(4, 2).in_theorem_domain)
        self.assertFalse(TABLE6_SCENARIO.in_theorem_domain)

    def test_validate_cell(self):
        with self.assertRaises(ValidationError) as cm:
            TABLE6_SCENARIO.validate_cell((0, 0, 0, 2))
        self.assertEqual(cm.exception.code, 'out_of_range')
        self.assertEqual(TABLE6_SCENARIO.validate_cell((0, 0, 1, 2)), Cell(0, 0, 1, 2))


class PossibilisticModelTests(SimpleTestCase):

    def test_build_from_full_map(self):
        cells = {cell: cell == HARDY_ANCHOR for cell in SCENARIO_222.cells}
        model = build_possibilistic(SCENARIO_222, cells)
        self.assertEqual(list(model.ones()), [HARDY_ANCHOR])

    def test_missing_cell(self):
        cells = {cell: 1 for cell in SCENARIO_222.cells[:-1]}
        with self.assertRaises(ValidationError) as cm:
            build_possibilistic(SCENARIO_222, cells)
        self.assertEqual(cm.exception.code, 'missing_cell')

    def test_duplicate_cell(self):
        pairs = [(cell, 1) for cell in SCENARIO_222.cells] + [((0, 0, 0, 0), 0)]
        with self.assertRaises(ValidationError) as cm:
            build_possibilistic(SCENARIO_222, pairs)
        self.assertEqual(cm.exception.code, 'duplicate_cell')

    def test_out_of_range_cell(self):
        with self.assertRaises(ValidationError) as cm:
            build_possibilistic(SCENARIO_222, [((2, 0, 0, 0), 1)])
        self.assertEqual(cm.exception.code, 'out_of_range')

    def test_entries_are_boolean(self):
        pairs = [(cell, 2 if cell == HARDY_ANCHOR else 1) for cell in SCENARIO_222.cells]
        with self.assertRaises(ValidationError) as cm:
            build_possibilistic(SCENARIO_222, pairs)
        self.assertEqual(cm.exception.code, 'invalid_entry')

    def test_hardy_zeros(self):
        self.assertEqual(tuple(hardy_model().zeros()), HARDY_ZEROS)

    def test_mixture_is_cellwise_or(self):
        first, second = enumerate_grids(SCENARIO_222)[0], enumerate_grids(SCENARIO_222)[-1]
        mixed = mixture(grid_table(first), grid_table(second))
        self.assertEqual(mixed.bits, first.mask | second.mask)

    def test_mixture_needs_same_scenario(self):
        with self.assertRaises(ValidationError) as cm:
            mixture(hardy_model(), table6_pattern())
        self.assertEqual(cm.exception.code, 'scenario_mismatch')

    def test_normalization(self):
        self.assertTrue(is_normalized(hardy_model()))
        self.assertFalse(is_normalized(PossibilisticModel.constant(SCENARIO_222, False)))


class ProbabilisticModelTests(SimpleTestCase):

    def test_table6_boxes_sum_to_one(self):
        model = table6_probabilistic()
        self.assertEqual(model.box_total(0, 0), Fraction(1, 16) + Fraction(3, 16) + Fraction(3, 16) + Fraction(9, 16))
        for i in range(3):
            for j in range(2):
                self.assertEqual(model.box_total(i, j), 1)

    def test_not_normalized(self):
        with self.assertRaises(ValidationError) as cm:
            ProbabilisticModel(SCENARIO_222, [Fraction(1, 8)] * 16)
        self.assertEqual(cm.exception.code, 'not_normalized')

    def test_negative_probability(self):
        values = [Fraction(1, 4)] * 16
        values[0], values[1] = Fraction(-1, 4), Fraction(3, 4)
        with self.assertRaises(ValidationError) as cm:
            ProbabilisticModel(SCENARIO_222, values)
        self.assertEqual(cm.exception.code, 'negative_probability')

    def test_collapse_keeps_positive_cells(self):
        collapse = possibilistic_collapse(table6_probabilistic())
        self.assertEqual(tuple(collapse.zeros()), TABLE6_ZEROS)
        self.assertEqual(collapse, table6_pattern())


class GridTests(SimpleTestCase):

    def test_grid_counts(self):
        self.assertEqual(len(enumerate_grids(SCENARIO_222)), 16)
        self.assertEqual(len(enumerate_grids(TABLE6_SCENARIO)), 48)
        self.assertEqual(len(enumerate_grids(Scenario.uniform(3, 2))), 64)

    def test_grid_has_one_cell_per_box(self):
        grid = DeterministicGrid(TABLE6_SCENARIO, (0, 1, 1), (1, 2))
        table = grid_table(grid)
        for i in range(3):
            for j in range(2):
                cells = [c for c in TABLE6_SCENARIO.box_cells(i, j) if table[c]]
                self.assertEqual(len(cells), 1)

    def test_invalid_grid_choice(self):
        with self.assertRaises(ValidationError):
            DeterministicGrid(SCENARIO_222, (0, 2), (0, 0))

    def test_grids_through_anchor(self):
        self.assertEqual(len(grids_through(TABLE6_SCENARIO, Cell(0, 0, 0, 0))), 12)

    def test_single_grid_collapse(self):
        grid = enumerate_grids(SCENARIO_222)[5]
        model = convex_combination(SCENARIO_222, [(1, grid)])
        self.assertEqual(possibilistic_collapse(model), grid_table(grid))

    def test_two_grid_collapse_is_mixture(self):
        first, second = enumerate_grids(SCENARIO_222)[1], enumerate_grids(SCENARIO_222)[14]
        model = convex_combination(SCENARIO_222, [(Fraction(1, 2), first), (Fraction(1, 2), second)])
        self.assertEqual(possibilistic_collapse(model), mixture(grid_table(first), grid_table(second)))

    def test_weights_must_be_positive(self):
        grid = enumerate_grids(SCENARIO_222)[0]
        with self.assertRaises(ValidationError):
            convex_combination(SCENARIO_222, [(0, grid), (1, grid)])


class SymmetryTests(SimpleTestCase):

    def test_symmetry_counts(self):
        self.assertEqual(len(list(iter_symmetries(SCENARIO_222))), 128)
        # Bob tiene una medicion binaria y una ternaria: sin swap ni permutacion de mediciones
        self.assertEqual(len(list(iter_symmetries(TABLE6_SCENARIO))), 48 * 12)

    def test_inverse_undoes_every_symmetry(self):
        rng = random.Random(3)
        model = PossibilisticModel(SCENARIO_222, rng.getrandbits(16))
        for op in iter_symmetries(SCENARIO_222):
            self.assertEqual(apply_symmetry(apply_symmetry(model, op), inverse(op)), model)

    def test_hardy_orbit_has_64_members(self):
        images = orbit(hardy_model())
        self.assertEqual(len(images), 64)
        self.assertTrue(all(image.count_ones() == 13 for image in images))

    def test_swap_needs_symmetric_scenario(self):
        op = SymmetryOp.identity(TABLE6_SCENARIO)
        swapped = SymmetryOp(op.perm_a_meas, op.perm_b_meas, op.perm_a_out, op.perm_b_out, swap_parties=True)
        with self.assertRaises(ValidationError) as cm:
            apply_symmetry(table6_pattern(), swapped)
        self.assertEqual(cm.exception.code, 'invalid_symmetry')

    def test_measurements_with_different_counts_cannot_swap(self):
        op = SymmetryOp((0, 1, 2), (1, 0), ((0, 1),) * 3, ((0, 1), (0, 1, 2)))
        with self.assertRaises(ValidationError):
            op.validate(TABLE6_SCENARIO)

    def test_symmetry_commutes_with_mixture(self):
        rng = random.Random(19)
        for sc in (SCENARIO_222, TABLE6_SCENARIO):
            ops = rng.sample(list(iter_symmetries(sc)), 20)
            for _ in range(10):
                first = PossibilisticModel(sc, rng.getrandbits(sc.n_cells))
                second = PossibilisticModel(sc, rng.getrandbits(sc.n_cells))
                for op in ops:
                    self.assertEqual(
                        apply_symmetry(mixture(first, second), op),
                        mixture(apply_symmetry(first, op), apply_symmetry(second, op)),
                    )

    def test_probabilistic_image_keeps_the_values(self):
        model = table6_probabilistic()
        for op in list(iter_symmetries(TABLE6_SCENARIO))[::37]:
            image = apply_symmetry(model, op)
            for cell in TABLE6_SCENARIO.cells:
                self.assertEqual(image[op.map_cell(cell)], model[cell])
            self.assertEqual(apply_symmetry(image, inverse(op)), model)

    def test_symmetry_commutes_with_collapse(self):
        rng = random.Random(21)
        for sc in (SCENARIO_222, TABLE6_SCENARIO):
            ops = rng.sample(list(iter_symmetries(sc)), 20)
            models = [random_probabilistic(sc, rng) for _ in range(5)]
            if sc == TABLE6_SCENARIO:
                models.append(table6_probabilistic())
            for model in models:
                for op in ops:
                    self.assertEqual(
                        possibilistic_collapse(apply_symmetry(model, op)),
                        apply_symmetry(possibilistic_collapse(model), op),
                    )

    def test_grid_image(self):
        for op in list(iter_symmetries(SCENARIO_222))[::9]:
            for grid in enumerate_grids(SCENARIO_222):
                image = apply_symmetry_to_grid(grid, op)
                self.assertEqual(grid_table(image), apply_symmetry(grid_table(grid), op))


class MeasurementLocalityTests(SimpleTestCase):

    def test_full_model_is_kept(self):
        report = check_measurement_locality(hardy_model())
        self.assertTrue(report.holds)
        self.assertEqual(report.reduced, hardy_model())

    def test_zero_row_is_omitted(self):
        sc = Scenario((2, 2, 2), (2, 2))
        ones = [cell for cell in sc.cells if cell.i < 2 and local_realistic_model()[cell]]
        report = check_measurement_locality(PossibilisticModel.from_cells(sc, ones))
        self.assertTrue(report.holds)
        self.assertEqual(report.omitted_a, (2,))
        self.assertEqual(report.reduced, local_realistic_model())

    def test_isolated_zero_box_violates(self):
        model = PossibilisticModel.constant(SCENARIO_222, True)
        for cell in SCENARIO_222.box_cells(1, 1):
            model = model.set(cell, False)
        report = check_measurement_locality(model)
        self.assertFalse(report.holds)
        self.assertEqual(report.isolated_boxes, ((1, 1),))


class GeneratorTests(SimpleTestCase):

    def test_pr_box_entries(self):
        box = pr_box()
        self.assertTrue(box[(1, 1, 1, 0)])
        self.assertFalse(box[(1, 1, 1, 1)])
        self.assertEqual(box.count_ones(), 8)

    def test_pr_box_needs_two_by_two(self):
        with self.assertRaises(ValidationError) as cm:
            generate('pr-box', Scenario.uniform(3, 2), random.Random(0))
        self.assertEqual(cm.exception.code, 'invalid_scenario')

    def test_unknown_kind(self):
        with self.assertRaises(ValidationError) as cm:
            generate('ghz', SCENARIO_222, random.Random(0))
        self.assertEqual(cm.exception.code, 'unknown_kind')

    def test_lr_mixture_is_union_of_grids(self):
        model = lr_mixture(Scenario.uniform(2, 3), random.Random(5), count=3)
        masks = [g.mask for g in enumerate_grids(model.scenario) if g.contained_in(model)]
        union = 0
        for mask in masks:
            union |= mask
        self.assertEqual(union, model.bits)

    def test_generation_is_reproducible(self):
        sc = Scenario((2, 3), (3, 2))
        for kind in ('grid', 'lr-mixture', 'random', 'random-ns'):
            self.assertEqual(generate(kind, sc, random.Random(11)), generate(kind, sc, random.Random(11)))

    def test_random_ns_is_not_empty(self):
        model = random_ns(SCENARIO_222, random.Random(2), 'sparse')
        self.assertNotEqual(model.bits, 0)

    def test_probabilistic_rows_layout(self):
        model = probabilistic_from_rows(SCENARIO_222, [
            ['1/2', '1/2', '1', '0'],
            ['0', '0', '0', '0'],
        ] * 2)
        self.assertEqual(model[(1, 0, 1, 0)], 1)
        self.assertEqual(model[(0, 0, 0, 1)], Fraction(1, 2))
        self.assertEqual(model[(1, 1, 0, 0)], 0)
