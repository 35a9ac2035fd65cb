import logging
from fractions import Fraction

from django.core.exceptions import ValidationError

from tables.empirical import PossibilisticModel, is_normalized
from tables.grids import DeterministicGrid

from .verdicts import (
    LOCAL, NONLOCAL, LocalityVerdict, MarginalMismatch, NSReport, NSViolation,
    ProbabilisticNSResult,
)

logger = logging.getLogger(__name__)


# ========== NO-SIGNALLING ==========

def check_no_signalling(model):
    """Lista exhaustiva de violaciones: Alice primero, luego Bob, en orden canonico."""
    sc, bits = model.scenario, model.bits
    violations = []
    for i, rows in enumerate(sc.subrow_masks):
        for a, masks in enumerate(rows):
            present = [bool(bits & mask) for mask in masks]
            if any(present):
                violations.extend(
                    NSViolation('a', i, a, j) for j, ok in enumerate(present) if not ok
                )
    for j, cols in enumerate(sc.subcol_masks):
        for b, masks in enumerate(cols):
            present = [bool(bits & mask) for mask in masks]
            if any(present):
                violations.extend(
                    NSViolation('b', j, b, i) for i, ok in enumerate(present) if not ok
                )
    return NSReport(tuple(violations))


def is_no_signalling(model):
    bits = model.bits
    for groups in (model.scenario.subrow_masks, model.scenario.subcol_masks):
        for per_measurement in groups:
            for masks in per_measurement:
                hits = sum(1 for mask in masks if bits & mask)
                if hits and hits != len(masks):
                    return False
    return True


def ns_interior(model):
    """Mayor submodelo NS: borra sub-filas/sub-columnas que senalizan hasta el punto fijo."""
    bits = model.bits
    changed = True
    while changed:
        changed = False
        for groups in (model.scenario.subrow_masks, model.scenario.subcol_masks):
            for per_measurement in groups:
                for masks in per_measurement:
                    if any(bits & mask for mask in masks) and not all(bits & mask for mask in masks):
                        for mask in masks:
                            bits &= ~mask
                        changed = True
    return PossibilisticModel(model.scenario, bits)


def check_probabilistic_no_signalling(model):
    """Marginales exactas independientes de la medicion del otro lado."""
    sc = model.scenario
    for i, n_a in enumerate(sc.outcomes_a):
        for a in range(n_a):
            marginals = [
                sum((model.probability(i, a, j, b) for b in range(n_b)), Fraction(0))
                for j, n_b in enumerate(sc.outcomes_b)
            ]
            for j, value in enumerate(marginals[1:], start=1):
                if value != marginals[0]:
                    return ProbabilisticNSResult(
                        False, MarginalMismatch('a', i, a, 0, j, marginals[0], value),
                    )
    for j, n_b in enumerate(sc.outcomes_b):
        for b in range(n_b):
            marginals = [
                sum((model.probability(i, a, j, b) for a in range(n_a)), Fraction(0))
                for i, n_a in enumerate(sc.outcomes_a)
            ]
            for i, value in enumerate(marginals[1:], start=1):
                if value != marginals[0]:
                    return ProbabilisticNSResult(
                        False, MarginalMismatch('b', j, b, 0, i, marginals[0], value),
                    )
    return ProbabilisticNSResult(True)


# ========== DETERMINISMO ==========

def is_deterministic(model):
    """A lo sumo un resultado posible por medicion en cada lado (subconjunto de una grilla)."""
    sc, bits = model.scenario, model.bits
    for rows in sc.subrow_masks:
        if sum(1 for masks in rows if any(bits & mask for mask in masks)) > 1:
            return False
    for cols in sc.subcol_masks:
        if sum(1 for masks in cols if any(bits & mask for mask in masks)) > 1:
            return False
    return True



# ========== REALISMO LOCAL ==========

def _complete(model, i0, a0, j0, b0):
    """
    Backtracking sobre las mediciones de Alice en orden. Las columnas de Bob
    aun posibles se llevan como mascara de una sub-fila; tras cada eleccion se
    intersecta con la sub-fila elegida y se poda si alguna medicion de Bob
    queda sin columnas.
    """
    sc, rows = model.scenario, model.rows
    ro, co, ranges = sc.row_offsets, sc.col_offsets, sc.bob_ranges
    anchor_bit = 1 << (co[j0] + b0)
    alice_domains = [
        [a0] if i == i0 else [r for r in range(n) if rows[ro[i] + r] & anchor_bit]
        for i, n in enumerate(sc.outcomes_a)
    ]
    bob = rows[ro[i0] + a0] & ~ranges[j0] | anchor_bit
    if not all(alice_domains) or not all(bob & mask for mask in ranges):
        return None

    choice_a = [None] * sc.k_a

    def backtrack(i, bob):
        if i == sc.k_a:
            return bob
        for r in alice_domains[i]:
            pruned = bob & rows[ro[i] + r]
            if all(pruned & mask for mask in ranges):
                choice_a[i] = r
                found = backtrack(i + 1, pruned)
                if found is not None:
                    return found
        return None

    final = backtrack(0, bob)
    if final is None:
        return None
    # con Alice fija, las mediciones de Bob son independientes entre si
    choice_b = []
    for mask, offset in zip(ranges, co):
        left = final & mask
        choice_b.append((left & -left).bit_length() - 1 - offset)
    return DeterministicGrid(sc, choice_a, choice_b)


def complete_to_grid(model, cell):
    """Busca una grilla contenida en el modelo que pase por la celda."""
    i0, a0, j0, b0 = model.scenario.validate_cell(tuple(cell))
    if not model.entry(i0, a0, j0, b0):
        raise ValidationError(
            'cell %(cell)s is 0, it cannot lie on a contained grid',
            code='zero_cell', params={'cell': cell},
        )
    return _complete(model, i0, a0, j0, b0)


def _verdict(model, uncoverable, cover):
    normalized = is_normalized(model)
    if uncoverable is not None:
        return LocalityVerdict(NONLOCAL, (), uncoverable, normalized)
    if not normalized:
        logger.debug('model is not normalized; local realism holds only vacuously on empty boxes')
    return LocalityVerdict(LOCAL, tuple(cover), None, normalized)


def decide_local_realism(model):
    """Local si cada 1 completa a una grilla contenida; si no, el primer 1 que no completa."""
    cells = model.scenario.cells
    cover, remaining = [], model.bits
    while remaining:
        low = remaining & -remaining
        cell = cells[low.bit_length() - 1]
        grid = _complete(model, *cell)
        if grid is None:
            return _verdict(model, cell, None)
        cover.append(grid)
        remaining &= ~grid.mask
    return _verdict(model, None, cover)


def fast_path_22l(model):
    """
    Escenarios con dos mediciones por lado: un 1 en (i,a0,j,b0) completa a una
    grilla si y solo si el bloque R x C de la caja opuesta tiene algun 1.
    """
    sc = model.scenario
    if not sc.is_two_setting:
        raise ValidationError(
            'the fast path needs exactly two settings per party', code='fast_path_domain',
        )
    if not is_no_signalling(model):
        raise ValidationError(
            'the fast path needs a no-signalling model', code='fast_path_domain',
        )

    rows, ro, co, ranges = model.rows, sc.row_offsets, sc.col_offsets, sc.bob_ranges
    cover, remaining = [], model.bits
    while remaining:
        low = remaining & -remaining
        cell = sc.cells[low.bit_length() - 1]
        i, a0, j, b0 = cell
        ip, jp = 1 - i, 1 - j
        column = co[j] + b0
        c_mask = rows[ro[i] + a0] & ranges[jp]
        hit = None
        for r in range(sc.outcomes_a[ip]):
            block = rows[ro[ip] + r] & c_mask
            if rows[ro[ip] + r] >> column & 1 and block:
                hit = (r, (block & -block).bit_length() - 1 - co[jp])
                break
        if hit is None:
            return _verdict(model, cell, None)
        choice_a, choice_b = [None, None], [None, None]
        choice_a[i], choice_a[ip] = a0, hit[0]
        choice_b[j], choice_b[jp] = b0, hit[1]
        grid = DeterministicGrid(sc, choice_a, choice_b)
        cover.append(grid)
        remaining &= ~grid.mask
    return _verdict(model, None, cover)
