"""Comprobaciones aleatorias de las proposiciones sobre colapso y escaleras."""
import logging
import random
import time

from documents.serializers import document_dict, scenario_spec
from locality.analysis import decide_local_realism
from paradoxes.hardy import has_hardy
from paradoxes.ladder import has_ladder, ladder_to_hardy
from paradoxes.witnesses import LadderWitness
from tables.catalog import SCENARIO_222
from tables.empirical import possibilistic_collapse
from tables.generators import lr_mixture, random_grid, random_table
from tables.grids import convex_combination
from tables.scenarios import Scenario

from .oracle import oracle_local_realism
from .reports import TRIALS, SweepReport

logger = logging.getLogger(__name__)


# ========== COLAPSO Y REALISMO LOCAL ==========

def verify_proposition_1(trials, seed, scenario=SCENARIO_222):
    """
    Ida: combinaciones convexas positivas de grillas colapsan a modelos locales.
    Vuelta: un modelo posibilistico local es el colapso de la mezcla uniforme
    de su cobertura.
    """
    report = SweepReport(scenario_spec(scenario), TRIALS, seed=seed)
    rng = random.Random(seed)
    started = time.perf_counter()

    forward_failures = 0
    for _ in range(trials):
        grids = [random_grid(scenario, rng) for _ in range(rng.randint(1, 4))]
        weights = [rng.randint(1, 16) for _ in grids]
        collapse = possibilistic_collapse(convex_combination(scenario, zip(weights, grids)))
        union = 0
        for grid in grids:
            union |= grid.mask
        report.models_checked += 1
        if not oracle_local_realism(collapse) or collapse.bits != union:
            forward_failures += 1
            report.record(document_dict(collapse, notes='forward: collapse of a grid mixture is not local'))

    converse_failures = 0
    for _ in range(trials):
        model = lr_mixture(scenario, rng)
        cover = decide_local_realism(model).cover
        collapse = possibilistic_collapse(convex_combination(scenario, [(1, grid) for grid in cover]))
        report.models_checked += 1
        if collapse != model:
            converse_failures += 1
            report.record(document_dict(model, notes='converse: uniform mixture of the cover does not collapse back'))

    report.elapsed = time.perf_counter() - started
    report.notes.append(f'forward failures: {forward_failures} of {trials}')
    report.notes.append(f'converse failures: {converse_failures} of {trials}')
    return report


# ========== ESCALERAS ==========

def plant_ladder(scenario, rng, length=None):
    """Escalera al azar sobre mediciones distintas, con su patron de ceros."""
    length = length or rng.randint(2, min(scenario.k_a, scenario.k_b))
    alice = rng.sample(range(scenario.k_a), length)
    bob = rng.sample(range(scenario.k_b), length)
    return LadderWitness(
        tuple((i, rng.randint(0, 1)) for i in alice),
        tuple((j, rng.randint(0, 1)) for j in bob),
    )


def apply_ladder(model, ladder):
    model = model.set(ladder.anchor_cell, True)
    for cell in ladder.zero_cells():
        model = model.set(cell, False)
    return model


def verify_ladder_implies_hardy(k_values, trials, seed):
    """Con una escalera plantada siempre debe aparecer una paradoja de Hardy."""
    scenarios = [Scenario.uniform(k, 2) for k in k_values]
    report = SweepReport('; '.join(f'({s.k_a} settings) {scenario_spec(s)}' for s in scenarios), TRIALS, seed=seed)
    started = time.perf_counter()
    for scenario in scenarios:
        rng = random.Random(f'{seed}:{scenario.k_a}')
        failures = 0
        for _ in range(trials):
            ladder = plant_ladder(scenario, rng)
            model = apply_ladder(random_table(scenario, rng), ladder)
            report.models_checked += 1
            hardy = ladder_to_hardy(model, ladder)
            if not (has_ladder(model) and has_hardy(model) and hardy.holds_in(model)):
                failures += 1
                report.record(document_dict(model, notes=f'planted {ladder}, no Hardy paradox found'))
        report.notes.append(f'k={scenario.k_a}: {failures} failures of {trials}')
        logger.debug('ladder trials for k=%d done', scenario.k_a)
    report.elapsed = time.perf_counter() - started
    return report
