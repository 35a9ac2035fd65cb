import logging
from functools import lru_cache

from tables.catalog import hardy_model
from tables.symmetry import orbit

from .witnesses import STANDARD, CoarseHardyWitness, classify

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _pairs(count):
    return tuple((x, y) for x in range(count) for y in range(count) if x != y)


# ========== HARDY ESTANDAR ==========

def iter_hardy(model):
    """
    Testigos estandar en orden (i, i', j, j', a0, b0, r, s): ancla 1 en
    (i,a0,j,b0) y ceros en (i',1-r,j,b0), (i,a0,j',1-s) y (i',r,j',s). Las
    mediciones i' y j' deben tener dos resultados; el resto de celdas es libre.
    """
    sc = model.scenario
    rows, ro, co = model.rows, sc.row_offsets, sc.col_offsets
    for i, ip in _pairs(sc.k_a):
        if sc.outcomes_a[ip] != 2:
            continue
        for j, jp in _pairs(sc.k_b):
            if sc.outcomes_b[jp] != 2:
                continue
            for a0 in range(sc.outcomes_a[i]):
                anchor_row = rows[ro[i] + a0]
                for b0 in range(sc.outcomes_b[j]):
                    if not anchor_row >> (co[j] + b0) & 1:
                        continue
                    for r in (0, 1):
                        if rows[ro[ip] + 1 - r] >> (co[j] + b0) & 1:
                            continue
                        for s in (0, 1):
                            if anchor_row >> (co[jp] + 1 - s) & 1:
                                continue
                            if rows[ro[ip] + r] >> (co[jp] + s) & 1:
                                continue
                            yield CoarseHardyWitness((i, ip), (j, jp), (a0, b0), (r,), (s,), STANDARD)


def detect_hardy(model):
    return list(iter_hardy(model))


def has_hardy(model):
    return next(iter_hardy(model), None) is not None


# ========== HARDY DE GRANO GRUESO ==========

def iter_coarse_hardy(model):
    """
    Por cada par ordenado de mediciones distintas y cada ancla 1 se toma el
    testigo maximal: R = {r : (i',r,j,b0) = 1}, C = {s : (i,a0,j',s) = 1}. Hay
    paradoja de alguna forma H(m1,m2) si y solo si el bloque R x C de la caja
    (i',j') es todo cero.
    """
    sc = model.scenario
    rows, ro, co = model.rows, sc.row_offsets, sc.col_offsets
    col_ranges = sc.bob_ranges
    subcolumns = {}

    def subcolumn(ip, column):
        """R y el OR de sus sub-filas, por (i', columna)."""
        key = (ip, column)
        if key not in subcolumns:
            set_a, union = [], 0
            for r in range(sc.outcomes_a[ip]):
                row = rows[ro[ip] + r]
                if row >> column & 1:
                    set_a.append(r)
                    union |= row
            subcolumns[key] = (tuple(set_a), union)
        return subcolumns[key]

    for i, ip in _pairs(sc.k_a):
        n_ip = sc.outcomes_a[ip]
        for j, jp in _pairs(sc.k_b):
            n_jp = sc.outcomes_b[jp]
            for a0 in range(sc.outcomes_a[i]):
                anchor_row = rows[ro[i] + a0]
                c_mask = anchor_row & col_ranges[jp]
                for b0 in range(sc.outcomes_b[j]):
                    column = co[j] + b0
                    if not anchor_row >> column & 1:
                        continue
                    set_a, union = subcolumn(ip, column)
                    if union & c_mask:
                        continue
                    set_b = tuple(s for s in range(n_jp) if c_mask >> (co[jp] + s) & 1)
                    kind = classify(len(set_a), len(set_b), n_ip, n_jp)
                    yield CoarseHardyWitness((i, ip), (j, jp), (a0, b0), set_a, set_b, kind)


def detect_coarse_hardy(model):
    witnesses = list(iter_coarse_hardy(model))
    logger.debug('%d coarse-grained witnesses found', len(witnesses))
    return witnesses


def nh_holds(model):
    """Ninguna paradoja de Hardy de grano grueso."""
    return next(iter_coarse_hardy(model), None) is None


# ========== SIMETRIAS ==========

def hardy_orbit():
    """Las versiones distintas de la tabla de Hardy bajo todas las simetrias de (2,2,2)."""
    return orbit(hardy_model())
