from tables.grids import enumerate_grids, grid_masks

__all__ = ['enumerate_grids', 'oracle_local_realism']


def oracle_local_realism(model):
    """Oraculo por fuerza bruta: la union de las grillas contenidas recupera todos los 1."""
    bits = model.bits
    union = 0
    for mask in grid_masks(model.scenario):
        if mask & bits == mask:
            union |= mask
    return union == bits
