import logging

from django.core.exceptions import ValidationError

from locality.analysis import complete_to_grid
from tables.grids import enumerate_grids

from .witnesses import NonlocalityCertificate

logger = logging.getLogger(__name__)


def _blocks_all(grid_masks, zeros, scenario):
    zero_mask = 0
    for cell in zeros:
        zero_mask |= scenario.bit(*cell)
    return all(mask & zero_mask for mask in grid_masks)


def extract_certificate(model, anchor):
    """
    Prueba de no localidad sin desigualdades: para cada grilla que pasa por el
    ancla se toma su primer cero (orden canonico); luego se descartan, en orden,
    los ceros que no hacen falta para seguir bloqueando todas las grillas.
    """
    sc = model.scenario
    anchor = sc.validate_cell(tuple(anchor))
    grid = complete_to_grid(model, anchor)
    if grid is not None:
        raise ValidationError(
            'anchor %(cell)s lies on the contained grid %(grid)s',
            code='coverable_anchor', params={'cell': anchor, 'grid': grid},
        )

    through = [g for g in enumerate_grids(sc) if g.passes_through(anchor)]
    blockers = []
    for g in through:
        first_zero = next(cell for cell in sorted(g.cells()) if not model[cell])
        if first_zero not in blockers:
            blockers.append(first_zero)
    blockers.sort()

    masks = [g.mask for g in through]
    kept = list(blockers)
    for cell in blockers:
        trial = [z for z in kept if z != cell]
        if _blocks_all(masks, trial, sc):
            kept = trial

    certificate = NonlocalityCertificate(anchor, tuple(kept))
    if not certificate.blocks(enumerate_grids(sc)):
        raise RuntimeError(f'certificate {certificate} misses a grid through the anchor')
    logger.debug('certificate for %s: %d of %d grids blocked by %d zeros',
                 anchor, len(through), len(enumerate_grids(sc)), len(kept))
    return certificate
