import logging
from dataclasses import dataclass, field

from .empirical import PossibilisticModel
from .scenarios import Scenario

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasurementLocalityReport:
    holds: bool
    zero_boxes: tuple = ()
    isolated_boxes: tuple = ()
    omitted_a: tuple = ()
    omitted_b: tuple = ()
    reduced: PossibilisticModel = field(default=None, compare=False)

    @property
    def note(self):
        if not self.holds:
            boxes = ', '.join(f'({i},{j})' for i, j in self.isolated_boxes)
            return f'zero boxes outside a zero row/column: {boxes}'
        if self.reduced is None:
            return 'every box is zero; nothing remains after omitting zero rows/columns'
        if self.omitted_a or self.omitted_b:
            return f'omitted Alice settings {list(self.omitted_a)}, Bob settings {list(self.omitted_b)}'
        return 'nothing omitted'


def check_measurement_locality(raw):
    """
    ML: toda caja de ceros pertenece a una fila o columna completa de cajas de
    ceros. Si se cumple, devuelve el modelo reducido sin esas filas/columnas.
    """
    sc = raw.scenario
    zero_boxes = tuple(
        (i, j) for i in range(sc.k_a) for j in range(sc.k_b) if raw.box_is_empty(i, j)
    )
    zero_set = set(zero_boxes)
    zero_rows = tuple(i for i in range(sc.k_a) if all((i, j) in zero_set for j in range(sc.k_b)))
    zero_cols = tuple(j for j in range(sc.k_b) if all((i, j) in zero_set for i in range(sc.k_a)))
    isolated = tuple((i, j) for i, j in zero_boxes if i not in zero_rows and j not in zero_cols)

    if isolated:
        logger.debug('ML violated at boxes %s', isolated)
        return MeasurementLocalityReport(False, zero_boxes, isolated)

    keep_a = [i for i in range(sc.k_a) if i not in zero_rows]
    keep_b = [j for j in range(sc.k_b) if j not in zero_cols]
    if not keep_a or not keep_b:
        return MeasurementLocalityReport(True, zero_boxes, (), zero_rows, zero_cols, None)
    if len(keep_a) == sc.k_a and len(keep_b) == sc.k_b:
        return MeasurementLocalityReport(True, zero_boxes, (), (), (), raw)

    reduced_scenario = Scenario(
        tuple(sc.outcomes_a[i] for i in keep_a),
        tuple(sc.outcomes_b[j] for j in keep_b),
    )
    ones = [
        (new_i, a, new_j, b)
        for new_i, i in enumerate(keep_a)
        for new_j, j in enumerate(keep_b)
        for a in range(sc.outcomes_a[i])
        for b in range(sc.outcomes_b[j])
        if raw.entry(i, a, j, b)
    ]
    reduced = PossibilisticModel.from_cells(reduced_scenario, ones)
    return MeasurementLocalityReport(True, zero_boxes, (), zero_rows, zero_cols, reduced)
