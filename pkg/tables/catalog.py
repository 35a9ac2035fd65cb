"""
Tablas de referencia: la paradoja de Hardy, los tres ejemplos de modelos
posibilisticos, el contraejemplo (2,3,3) y la caja PR.

Las tablas se escriben como se imprimen: una lista por sub-fila (medicion y
resultado de Alice), columnas agrupadas por medicion de Bob.
"""
from fractions import Fraction

from .empirical import PossibilisticModel, ProbabilisticModel
from .scenarios import Cell, Scenario

POLARISATION, COLOUR = 0, 1
UP, DOWN = 0, 1
RED, GREEN = 0, 1

SCENARIO_222 = Scenario.uniform(2, 2)
TABLE6_SCENARIO = Scenario((2, 2, 2), (2, 3))


def _row_layout(scenario):
    rows = [(i, a) for i, n in enumerate(scenario.outcomes_a) for a in range(n)]
    cols = [(j, b) for j, n in enumerate(scenario.outcomes_b) for b in range(n)]
    return rows, cols


def possibilistic_from_rows(scenario, rows):
    row_keys, col_keys = _row_layout(scenario)
    ones = [
        Cell(i, a, j, b)
        for (i, a), row in zip(row_keys, rows)
        for (j, b), value in zip(col_keys, row)
        if value
    ]
    return PossibilisticModel.from_cells(scenario, ones)


def probabilistic_from_rows(scenario, rows):
    row_keys, col_keys = _row_layout(scenario)
    values = {
        (i, a, j, b): Fraction(value)
        for (i, a), row in zip(row_keys, rows)
        for (j, b), value in zip(col_keys, row)
    }
    return ProbabilisticModel(scenario, tuple(values[cell] for cell in scenario.cells))


# Paradoja de Hardy, casillas en blanco completadas con 1
HARDY_ANCHOR = Cell(POLARISATION, UP, POLARISATION, UP)
HARDY_ZEROS = (
    Cell(POLARISATION, UP, COLOUR, GREEN),
    Cell(COLOUR, RED, COLOUR, RED),
    Cell(COLOUR, GREEN, POLARISATION, UP),
)


def hardy_model():
    return possibilistic_from_rows(SCENARIO_222, [
        [1, 1, 1, 0],
        [1, 1, 1, 1],
        [1, 1, 0, 1],
        [0, 1, 1, 1],
    ])


def deterministic_model():
    return possibilistic_from_rows(SCENARIO_222, [
        [1, 0, 1, 0],
        [0, 0, 0, 0],
        [1, 0, 1, 0],
        [0, 0, 0, 0],
    ])


def local_realistic_model():
    return possibilistic_from_rows(SCENARIO_222, [
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
    ])


def signalling_model():
    return possibilistic_from_rows(SCENARIO_222, [
        [1, 0, 1, 0],
        [0, 0, 0, 0],
        [0, 1, 1, 0],
        [0, 0, 0, 0],
    ])


# Contraejemplo: tres mediciones binarias de Alice; Bob con una binaria y una ternaria
TABLE6_ANCHOR = Cell(0, 0, 0, 0)
TABLE6_ZEROS = (
    Cell(0, 0, 1, 0),
    Cell(1, 0, 0, 0),
    Cell(1, 1, 1, 1),
    Cell(2, 0, 0, 0),
    Cell(2, 1, 1, 2),
)


def table6_probabilistic():
    return probabilistic_from_rows(TABLE6_SCENARIO, [
        ['1/16', '3/16', '0', '1/8', '1/8'],
        ['3/16', '9/16', '1/2', '1/8', '1/8'],
        ['0', '1/2', '1/8', '1/4', '1/8'],
        ['1/4', '1/4', '3/8', '0', '1/8'],
        ['0', '1/2', '1/8', '1/8', '1/4'],
        ['1/4', '1/4', '3/8', '1/8', '0'],
    ])


def table6_pattern():
    """Los cinco ceros impresos; las demas celdas en 1."""
    model = PossibilisticModel.constant(TABLE6_SCENARIO, True)
    for cell in TABLE6_ZEROS:
        model = model.set(cell, False)
    return model


def pr_box():
    """Caja PR posibilistica: 1 exactamente donde a XOR b = x AND y."""
    return PossibilisticModel.from_cells(SCENARIO_222, [
        cell for cell in SCENARIO_222.cells
        if cell.a ^ cell.b == cell.i & cell.j
    ])
