import random
import time
from itertools import combinations

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from locality.analysis import check_no_signalling, decide_local_realism
from tables.catalog import (
    HARDY_ANCHOR, HARDY_ZEROS, SCENARIO_222, TABLE6_ANCHOR, TABLE6_ZEROS, hardy_model,
    local_realistic_model, pr_box, signalling_model, table6_pattern,
)
from tables.empirical import PossibilisticModel, is_normalized
from tables.grids import enumerate_grids
from tables.scenarios import Cell, Scenario
from tables.symmetry import apply_symmetry, iter_symmetries

from .certificates import extract_certificate
from .hardy import (
    detect_coarse_hardy, detect_hardy, has_hardy, hardy_orbit, iter_coarse_hardy, nh_holds,
)
from .ladder import detect_ladder, has_ladder, ladder_to_hardy
from .witnesses import (
    COARSE, NORMALIZATION_VIOLATION, NS_VIOLATION, STANDARD, CoarseHardyWitness, LadderWitness,
)


def all_ones(scenario):
    return PossibilisticModel.constant(scenario, True)


def with_ladder(model, ladder):
    model = model.set(ladder.anchor_cell, True)
    for cell in ladder.zero_cells():
        model = model.set(cell, False)
    return model


def subset_witness_keys(model):
    """Busqueda por fuerza bruta de cualquier testigo con conjuntos S_A, S_B arbitrarios."""
    sc = model.scenario
    keys = set()
    for i in range(sc.k_a):
        for ip in range(sc.k_a):
            for j in range(sc.k_b):
                for jp in range(sc.k_b):
                    if i == ip or j == jp:
                        continue
                    for cell in model.ones():
                        if (cell.i, cell.j) != (i, j):
                            continue
                        n_ip, n_jp = sc.outcomes_a[ip], sc.outcomes_b[jp]
                        for m1 in range(n_ip + 1):
                            for set_a in combinations(range(n_ip), m1):
                                for m2 in range(n_jp + 1):
                                    for set_b in combinations(range(n_jp), m2):
                                        witness = CoarseHardyWitness(
                                            (i, ip), (j, jp), (cell.a, cell.b), set_a, set_b, COARSE,
                                        )
                                        if witness.holds_in(model):
                                            keys.add((i, ip, j, jp, cell.a, cell.b))
    return keys


class HardyTests(SimpleTestCase):

    def test_canonical_hardy_witness(self):
        witnesses = detect_hardy(hardy_model())
        self.assertEqual(len(witnesses), 1)
        witness = witnesses[0]
        self.assertEqual(witness.anchor_cell, HARDY_ANCHOR)
        self.assertEqual(tuple(witness.zero_cells(SCENARIO_222)), HARDY_ZEROS)
        self.assertEqual(witness.kind, STANDARD)

    def test_every_orbit_member_is_detected(self):
        orbit = hardy_orbit()
        self.assertEqual(len(orbit), 64)
        for model in orbit:
            self.assertTrue(has_hardy(model))

    def test_local_model_has_no_paradox(self):
        self.assertEqual(detect_hardy(local_realistic_model()), [])
        self.assertTrue(nh_holds(local_realistic_model()))

    def test_only_zeros_matter(self):
        self.assertEqual(detect_hardy(all_ones(SCENARIO_222)), [])
        self.assertTrue(nh_holds(all_ones(SCENARIO_222)))

    def test_witnesses_are_ordered(self):
        rng = random.Random(8)
        model = PossibilisticModel(Scenario.uniform(3, 2), rng.getrandbits(36) & rng.getrandbits(36) | 1)
        witnesses = detect_hardy(model)
        self.assertEqual(witnesses, sorted(witnesses))
        for witness in witnesses:
            self.assertTrue(witness.holds_in(model))


class CoarseHardyTests(SimpleTestCase):

    def test_canonical_hardy_is_standard(self):
        witnesses = detect_coarse_hardy(hardy_model())
        self.assertEqual(len(witnesses), 1)
        self.assertEqual(witnesses[0].kind, STANDARD)
        self.assertEqual((witnesses[0].set_a, witnesses[0].set_b), ((0,), (0,)))
        self.assertFalse(nh_holds(hardy_model()))

    def test_signalling_model_gives_ns_violation(self):
        witnesses = detect_coarse_hardy(signalling_model())
        kinds = {w.kind for w in witnesses}
        self.assertIn(NS_VIOLATION, kinds)
        first = witnesses[0]
        self.assertEqual(first.anchor_cell, Cell(0, 0, 0, 0))
        self.assertEqual(first.set_a, ())

    def test_empty_box_gives_normalization_violation(self):
        model = all_ones(SCENARIO_222)
        for cell in SCENARIO_222.box_cells(1, 1):
            model = model.set(cell, False)
        witnesses = detect_coarse_hardy(model)
        normalization = [w for w in witnesses if w.kind == NORMALIZATION_VIOLATION]
        self.assertEqual(len(normalization), 4)
        for witness in normalization:
            self.assertEqual((witness.alice_pair[1], witness.bob_pair[1]), (1, 1))
            self.assertEqual((witness.set_a, witness.set_b), ((0, 1), (0, 1)))
        # la caja vacia tambien deja sub-filas sin 1: violaciones NS
        self.assertIn(NS_VIOLATION, {w.kind for w in witnesses})

    def test_table6_pattern_has_no_coarse_paradox(self):
        self.assertEqual(detect_coarse_hardy(table6_pattern()), [])
        self.assertFalse(decide_local_realism(table6_pattern()).is_local)

    def test_maximal_witness_matches_subset_search(self):
        rng = random.Random(17)
        for sc in (Scenario.uniform(2, 3), Scenario((2, 3), (3, 2))):
            for _ in range(40):
                model = PossibilisticModel(sc, rng.getrandbits(sc.n_cells) | rng.getrandbits(sc.n_cells))
                found = {
                    w.alice_pair + w.bob_pair + w.anchor for w in detect_coarse_hardy(model)
                }
                self.assertEqual(found, subset_witness_keys(model))

    def test_hardy_witnesses_have_coarse_counterpart(self):
        rng = random.Random(23)
        for _ in range(300):
            model = PossibilisticModel(SCENARIO_222, rng.getrandbits(16) & rng.getrandbits(16))
            coarse = {(w.alice_pair, w.bob_pair, w.anchor): w for w in detect_coarse_hardy(model)}
            for witness in detect_hardy(model):
                key = (witness.alice_pair, witness.bob_pair, witness.anchor)
                self.assertIn(key, coarse)
                if (coarse[key].set_a, coarse[key].set_b) == (witness.set_a, witness.set_b):
                    self.assertEqual(coarse[key].kind, STANDARD)

    def test_nh_implies_ns_and_normalization(self):
        rng = random.Random(29)
        for _ in range(500):
            model = PossibilisticModel(SCENARIO_222, rng.getrandbits(16) | rng.getrandbits(16))
            if model.bits and nh_holds(model):
                self.assertTrue(check_no_signalling(model).holds)
                self.assertTrue(is_normalized(model))

    def test_equivariance(self):
        rng = random.Random(31)
        models = [hardy_model(), signalling_model(), pr_box()]
        models += [PossibilisticModel(SCENARIO_222, rng.getrandbits(16) & rng.getrandbits(16)) for _ in range(3)]
        for model in models:
            coarse, hardy = detect_coarse_hardy(model), detect_hardy(model)
            for op in iter_symmetries(SCENARIO_222):
                image = apply_symmetry(model, op)
                self.assertEqual(sorted(w.transformed(op) for w in coarse), detect_coarse_hardy(image))
                self.assertEqual(sorted(w.transformed(op) for w in hardy), detect_hardy(image))

    def test_scaling(self):
        rng = random.Random(37)
        for sc in (Scenario.uniform(50, 2), Scenario.uniform(2, 50)):
            model = PossibilisticModel(sc, rng.getrandbits(sc.n_cells))
            started = time.perf_counter()
            nh_holds(model)
            next(iter_coarse_hardy(model), None)
            self.assertLess(time.perf_counter() - started, 1.0)
        model = PossibilisticModel(Scenario.uniform(2, 50), rng.getrandbits(10000))
        started = time.perf_counter()
        detect_coarse_hardy(model)
        self.assertLess(time.perf_counter() - started, 2.0)


class LadderTests(SimpleTestCase):

    def test_planted_length_three_ladder(self):
        ladder = LadderWitness(((0, 0), (1, 0), (2, 1)), ((0, 0), (1, 1), (2, 0)))
        model = with_ladder(all_ones(Scenario.uniform(3, 2)), ladder)
        self.assertTrue(ladder.holds_in(model))
        ladders = detect_ladder(model)
        self.assertIn(ladder, ladders)
        self.assertEqual(max(found.length for found in ladders), 3)
        hardy = ladder_to_hardy(model, ladder)
        self.assertTrue(hardy.holds_in(model))
        self.assertIn(hardy, detect_hardy(model))

    def test_two_rung_ladder_is_hardy(self):
        ladder = LadderWitness(((0, 0), (1, 1)), ((0, 0), (1, 0)))
        model = with_ladder(all_ones(SCENARIO_222), ladder)
        hardy = detect_hardy(model)
        self.assertEqual(detect_ladder(model), [ladder])
        self.assertEqual(hardy, [ladder.rung_as_hardy(0)])
        self.assertEqual(ladder_to_hardy(model, ladder), hardy[0])
        self.assertEqual(sorted(ladder.zero_cells()), hardy[0].zero_cells(SCENARIO_222))

    def test_all_ones_has_no_ladder(self):
        self.assertEqual(detect_ladder(all_ones(Scenario.uniform(3, 2))), [])

    def test_not_applicable_outside_two_outcomes(self):
        self.assertEqual(detect_ladder(table6_pattern()), [])
        self.assertFalse(has_ladder(table6_pattern()))

    def test_ladder_implies_hardy_on_random_tables(self):
        rng = random.Random(41)
        sc = Scenario.uniform(4, 2)
        for _ in range(200):
            model = PossibilisticModel(sc, rng.getrandbits(sc.n_cells))
            if has_ladder(model):
                self.assertTrue(has_hardy(model))


class CertificateTests(SimpleTestCase):

    def test_table6_certificate_is_the_printed_zeros(self):
        certificate = extract_certificate(table6_pattern(), TABLE6_ANCHOR)
        self.assertEqual(certificate.blocking_zeros, TABLE6_ZEROS)
        self.assertTrue(certificate.blocks(enumerate_grids(table6_pattern().scenario)))
        self.assertTrue(certificate.holds_in(table6_pattern()))

    def test_pr_box_certificate(self):
        certificate = extract_certificate(pr_box(), (0, 0, 0, 0))
        self.assertEqual(certificate.blocking_zeros, (Cell(0, 0, 1, 1), Cell(1, 0, 1, 0), Cell(1, 1, 0, 0)))

    def test_hardy_certificate_uses_hardy_zeros(self):
        certificate = extract_certificate(hardy_model(), HARDY_ANCHOR)
        self.assertTrue(set(certificate.blocking_zeros) <= set(HARDY_ZEROS))

    def test_coverable_anchor_is_rejected(self):
        with self.assertRaises(ValidationError) as cm:
            extract_certificate(local_realistic_model(), (0, 0, 0, 0))
        self.assertEqual(cm.exception.code, 'coverable_anchor')

    def test_certificates_are_minimal(self):
        rng = random.Random(43)
        sc = Scenario.uniform(2, 3)
        grids = enumerate_grids(sc)
        for _ in range(60):
            model = PossibilisticModel(sc, rng.getrandbits(36))
            verdict = decide_local_realism(model)
            if verdict.is_local:
                continue
            certificate = extract_certificate(model, verdict.witness_cell)
            through = [g for g in grids if g.passes_through(certificate.anchor)]
            for zero in certificate.blocking_zeros:
                self.assertFalse(model[zero])
                rest = [z for z in certificate.blocking_zeros if z != zero]
                self.assertTrue(any(not any(g.passes_through(z) for z in rest) for g in through))
