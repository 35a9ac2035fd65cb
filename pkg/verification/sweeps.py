"""
Barridos que comparan NH, el oracle de grillas y la decision por backtracking
(y el camino rapido (2,2,l) sobre modelos NS) modelo a modelo.
"""
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from django.core.exceptions import ValidationError

from documents.serializers import document_dict, scenario_spec
from locality.analysis import decide_local_realism, fast_path_22l, is_no_signalling
from paradoxes.hardy import nh_holds
from tables.empirical import PossibilisticModel
from tables.generators import DISTRIBUTIONS, random_bits
from tables.grids import grid_masks
from tables.symmetry import orbit

from .oracle import oracle_local_realism
from .reports import EXHAUSTIVE, MODES, SAMPLED, STRUCTURED, SweepReport

logger = logging.getLogger(__name__)

# El bloque b de muestras usa su propio generador Random(f"{seed}:{b}"); las
# unidades de trabajo en modo muestreado empiezan siempre en un borde de bloque.
SAMPLE_BLOCK = 1024

UNIT_SIZE = 4096

# (2,2,2) tiene 16 celdas; escenarios mayores solo por muestreo
EXHAUSTIVE_MAX_CELLS = 16

OUTSIDE_DOMAIN_NOTE = (
    'scenario has more than two settings and more than two outcomes on some side; '
    'NH is necessary but not sufficient here, mismatches are counterexamples'
)


def compare_deciders(model):
    """Nombres de los decisores que no coinciden con el oracle; vacio si todos coinciden."""
    expected = oracle_local_realism(model)
    verdicts = {
        'nh': nh_holds(model),
        'decide': decide_local_realism(model).is_local,
    }
    if model.scenario.is_two_setting and is_no_signalling(model):
        verdicts['fast_path'] = fast_path_22l(model).is_local
    return [name for name, value in verdicts.items() if value != expected]


def _mismatch_document(model, disagreeing):
    return document_dict(
        model,
        notes=f"oracle local={oracle_local_realism(model)}; disagreeing: {', '.join(disagreeing)}",
    )


def sample_tables(scenario, seed, distribution, start, stop):
    """Muestras start..stop de la secuencia fijada por la semilla."""
    if start % SAMPLE_BLOCK:
        raise ValueError(f'sample ranges start on a multiple of {SAMPLE_BLOCK}')
    for block_start in range(start, stop, SAMPLE_BLOCK):
        rng = random.Random(f'{seed}:{block_start // SAMPLE_BLOCK}')
        for _ in range(min(SAMPLE_BLOCK, stop - block_start)):
            yield random_bits(scenario.n_cells, rng, distribution)


def _run_unit(scenario, mode, start, stop, seed, distribution):
    """Unidad de trabajo independiente: un rango de indices o de muestras."""
    report = SweepReport(scenario_spec(scenario), mode)
    if mode == EXHAUSTIVE:
        tables = range(start, stop)
    else:
        tables = sample_tables(scenario, seed, distribution, start, stop)
    for bits in tables:
        model = PossibilisticModel(scenario, bits)
        report.models_checked += 1
        disagreeing = compare_deciders(model)
        if disagreeing:
            report.record(_mismatch_document(model, disagreeing))
    return report


def _units(scenario, mode, sample_count, unit_size):
    if mode == EXHAUSTIVE:
        total = 1 << scenario.n_cells
    else:
        total = sample_count
        unit_size = -(-unit_size // SAMPLE_BLOCK) * SAMPLE_BLOCK
    for start in range(0, total, unit_size):
        yield start, min(start + unit_size, total)


def _check_domain(scenario, override_domain):
    if not scenario.in_theorem_domain and not override_domain:
        raise ValidationError(
            'scenario %(spec)s is outside the two-setting / two-outcome domain where NH is '
            'equivalent to local realism; pass --override-domain to look for counterexamples',
            code='outside_theorem_domain', params={'spec': scenario_spec(scenario)},
        )


def sweep_equivalence(scenario, mode, sample_count=None, seed=None, distribution='fair',
                      override_domain=False, workers=1, unit_size=UNIT_SIZE):
    """NH <-> realismo local sobre todas las tablas o una muestra reproducible."""
    if mode not in MODES:
        raise ValidationError('unknown sweep mode %(mode)s', code='invalid_spec', params={'mode': mode})
    _check_domain(scenario, override_domain)
    if mode == EXHAUSTIVE and scenario.n_cells > EXHAUSTIVE_MAX_CELLS:
        raise ValidationError(
            'exhaustive sweep over %(cells)d cells (2^%(cells)d tables) is refused, use sampled mode',
            code='exhaustive_too_large', params={'cells': scenario.n_cells},
        )
    if mode == SAMPLED:
        if sample_count is None or seed is None:
            raise ValidationError('sampled sweeps need a sample count and a seed', code='invalid_spec')
        if distribution not in DISTRIBUTIONS:
            raise ValidationError(
                'unknown distribution %(name)s', code='invalid_spec', params={'name': distribution},
            )

    report = SweepReport(
        scenario_spec(scenario), mode,
        seed=seed if mode == SAMPLED else None,
        distribution=distribution if mode == SAMPLED else None,
    )
    if not scenario.in_theorem_domain:
        report.notes.append(OUTSIDE_DOMAIN_NOTE)

    units = list(_units(scenario, mode, sample_count, unit_size))
    logger.info('%s sweep over %s: %d work units, %d workers', mode, report.scenario, len(units), workers)
    started = time.perf_counter()
    if workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_unit, scenario, mode, start, stop, seed, distribution)
                for start, stop in units
            ]
            for future in futures:
                report.merge(future.result())
    else:
        for start, stop in units:
            report.merge(_run_unit(scenario, mode, start, stop, seed, distribution))
            logger.debug('unit at %d done, %d models so far', start, report.models_checked)
    report.elapsed = time.perf_counter() - started

    if report.mismatch_count:
        logger.warning('%s sweep over %s: %d mismatches', mode, report.scenario, report.mismatch_count)
    return report


def sweep_grid_unions(scenario, max_grids=4):
    """Todas las uniones de hasta max_grids grillas: locales por construccion, NH debe valer."""
    report = SweepReport(scenario_spec(scenario), STRUCTURED)
    masks = grid_masks(scenario)
    seen = set()
    started = time.perf_counter()
    for size in range(1, max_grids + 1):
        for chosen in combinations(masks, size):
            bits = 0
            for mask in chosen:
                bits |= mask
            if bits in seen:
                continue
            seen.add(bits)
            model = PossibilisticModel(scenario, bits)
            report.models_checked += 1
            failing = [
                name for name, holds in (
                    ('nh', nh_holds(model)),
                    ('oracle', oracle_local_realism(model)),
                    ('decide', decide_local_realism(model).is_local),
                )
                if not holds
            ]
            if failing:
                report.record(_mismatch_document(model, failing))
    report.elapsed = time.perf_counter() - started
    report.notes.append(f'unions of up to {max_grids} of {len(masks)} grids')
    logger.info('structured sweep over %s: %d distinct unions', report.scenario, report.models_checked)
    return report


def sweep_orbit(model, override_domain=False):
    """Compara los decisores sobre cada imagen del modelo bajo las simetrias del escenario."""
    scenario = model.scenario
    _check_domain(scenario, override_domain)
    report = SweepReport(scenario_spec(scenario), STRUCTURED)
    if not scenario.in_theorem_domain:
        report.notes.append(OUTSIDE_DOMAIN_NOTE)
    started = time.perf_counter()
    images = orbit(model)
    for image in images:
        report.models_checked += 1
        disagreeing = compare_deciders(image)
        if disagreeing:
            report.record(_mismatch_document(image, disagreeing))
    report.elapsed = time.perf_counter() - started
    report.notes.append(f'symmetry orbit of {len(images)} tables')
    if report.mismatch_count:
        logger.warning('orbit sweep over %s: %d mismatches', report.scenario, report.mismatch_count)
    return report
