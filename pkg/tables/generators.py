import logging

from django.core.exceptions import ValidationError

from locality.analysis import ns_interior

from .catalog import SCENARIO_222, pr_box
from .empirical import PossibilisticModel
from .grids import enumerate_grids, grid_table

logger = logging.getLogger(__name__)

# fair: moneda por celda; sparse: cero con probabilidad 3/4
DISTRIBUTIONS = ('fair', 'sparse')

KINDS = ('grid', 'lr-mixture', 'pr-box', 'random', 'random-ns')


def random_bits(n_bits, rng, distribution='fair'):
    if distribution == 'fair':
        return rng.getrandbits(n_bits)
    if distribution == 'sparse':
        return rng.getrandbits(n_bits) & rng.getrandbits(n_bits)
    raise ValidationError('unknown distribution %(name)s', code='invalid_spec', params={'name': distribution})


def random_table(scenario, rng, distribution='fair'):
    return PossibilisticModel(scenario, random_bits(scenario.n_cells, rng, distribution))


def random_grid(scenario, rng):
    return rng.choice(enumerate_grids(scenario))


def lr_mixture(scenario, rng, count=None):
    """OR de entre 1 y 4 grillas al azar (o exactamente count)."""
    count = count or rng.randint(1, 4)
    bits = 0
    for _ in range(count):
        bits |= random_grid(scenario, rng).mask
    return PossibilisticModel(scenario, bits)


def random_ns(scenario, rng, distribution='fair', attempts=64):
    """Mayor submodelo NS de una tabla al azar; se reintenta si queda vacio."""
    for attempt in range(attempts):
        model = ns_interior(random_table(scenario, rng, distribution))
        if model.bits:
            return model
        logger.debug('random-ns attempt %d collapsed to the empty model', attempt)
    # una grilla siempre es NS
    return grid_table(random_grid(scenario, rng))


def generate(kind, scenario, rng, grids=None):
    if kind == 'grid':
        return grid_table(random_grid(scenario, rng))
    if kind == 'lr-mixture':
        return lr_mixture(scenario, rng, grids)
    if kind == 'pr-box':
        if scenario != SCENARIO_222:
            raise ValidationError(
                'the PR box lives in the scenario a=2,2;b=2,2', code='invalid_scenario',
            )
        return pr_box()
    if kind == 'random':
        return random_table(scenario, rng)
    if kind == 'random-ns':
        return random_ns(scenario, rng)
    raise ValidationError('unknown generator kind %(kind)s', code='unknown_kind', params={'kind': kind})
