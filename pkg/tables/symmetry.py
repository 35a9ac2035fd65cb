from dataclasses import dataclass
from itertools import permutations, product

from django.core.exceptions import ValidationError

from .empirical import PossibilisticModel, ProbabilisticModel
from .grids import DeterministicGrid
from .scenarios import Cell


@dataclass(frozen=True)
class SymmetryOp:
    """
    Reetiquetado de mediciones y resultados, opcionalmente intercambiando las partes.

    La celda (i, a, j, b) va a (perm_a_meas[i], perm_a_out[i][a], perm_b_meas[j],
    perm_b_out[j][b]); con swap_parties el resultado se transpone despues.
    """
    perm_a_meas: tuple
    perm_b_meas: tuple
    perm_a_out: tuple
    perm_b_out: tuple
    swap_parties: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'perm_a_meas', tuple(self.perm_a_meas))
        object.__setattr__(self, 'perm_b_meas', tuple(self.perm_b_meas))
        object.__setattr__(self, 'perm_a_out', tuple(tuple(p) for p in self.perm_a_out))
        object.__setattr__(self, 'perm_b_out', tuple(tuple(p) for p in self.perm_b_out))

    @classmethod
    def identity(cls, scenario):
        return cls(
            tuple(range(scenario.k_a)),
            tuple(range(scenario.k_b)),
            tuple(tuple(range(n)) for n in scenario.outcomes_a),
            tuple(tuple(range(n)) for n in scenario.outcomes_b),
        )

    def validate(self, scenario):
        for party, meas, outs, counts in (
            ('a', self.perm_a_meas, self.perm_a_out, scenario.outcomes_a),
            ('b', self.perm_b_meas, self.perm_b_out, scenario.outcomes_b),
        ):
            if sorted(meas) != list(range(len(counts))):
                raise ValidationError(
                    'measurement permutation of party %(party)s is not a permutation',
                    code='invalid_symmetry', params={'party': party},
                )
            if any(counts[target] != counts[source] for source, target in enumerate(meas)):
                raise ValidationError(
                    'measurement permutation of party %(party)s mixes different outcome counts',
                    code='invalid_symmetry', params={'party': party},
                )
            if len(outs) != len(counts) or any(sorted(p) != list(range(n)) for p, n in zip(outs, counts)):
                raise ValidationError(
                    'outcome permutations of party %(party)s do not match the scenario',
                    code='invalid_symmetry', params={'party': party},
                )
        if self.swap_parties and not scenario.party_symmetric:
            raise ValidationError(
                'parties can only be swapped in a party-symmetric scenario',
                code='invalid_symmetry',
            )

    def map_cell(self, cell):
        i, a, j, b = cell
        mapped = Cell(
            self.perm_a_meas[i], self.perm_a_out[i][a],
            self.perm_b_meas[j], self.perm_b_out[j][b],
        )
        if self.swap_parties:
            return Cell(mapped.j, mapped.b, mapped.i, mapped.a)
        return mapped

    def map_alice(self, i, outcomes):
        """Imagen de (medicion de Alice, conjunto de resultados) antes del posible swap."""
        return self.perm_a_meas[i], tuple(sorted(self.perm_a_out[i][r] for r in outcomes))

    def map_bob(self, j, outcomes):
        return self.perm_b_meas[j], tuple(sorted(self.perm_b_out[j][s] for s in outcomes))


def _invert(perm):
    inverse = [0] * len(perm)
    for source, target in enumerate(perm):
        inverse[target] = source
    return tuple(inverse)


def _invert_outcomes(meas, outs):
    inverse = [None] * len(meas)
    for source, target in enumerate(meas):
        inverse[target] = _invert(outs[source])
    return tuple(inverse)


def inverse(op):
    pa, pb = _invert(op.perm_a_meas), _invert(op.perm_b_meas)
    oa = _invert_outcomes(op.perm_a_meas, op.perm_a_out)
    ob = _invert_outcomes(op.perm_b_meas, op.perm_b_out)
    if not op.swap_parties:
        return SymmetryOp(pa, pb, oa, ob)
    # (swap . R)^-1 = R^-1 . swap = swap . (R^-1 con las partes intercambiadas)
    return SymmetryOp(pb, pa, ob, oa, swap_parties=True)


def apply_symmetry(model, op):
    """Imagen de un modelo posibilistico o probabilistico: cada celda lleva su valor a op(celda)."""
    scenario = model.scenario
    op.validate(scenario)
    if isinstance(model, ProbabilisticModel):
        probabilities = [None] * scenario.n_cells
        for cell, p in zip(scenario.cells, model.probabilities):
            probabilities[scenario.index(*op.map_cell(cell))] = p
        return ProbabilisticModel(scenario, tuple(probabilities))
    bits = 0
    for cell in model.ones():
        bits |= 1 << scenario.index(*op.map_cell(cell))
    return PossibilisticModel(scenario, bits)


def apply_symmetry_to_grid(grid, op):
    scenario = grid.scenario
    op.validate(scenario)
    choice_a, choice_b = [None] * scenario.k_a, [None] * scenario.k_b
    for cell in grid.cells():
        i, a, j, b = op.map_cell(cell)
        choice_a[i], choice_b[j] = a, b
    return DeterministicGrid(scenario, choice_a, choice_b)


def _party_symmetries(counts):
    """Pares (perm de mediciones, perms de resultados) que preservan los conteos."""
    for meas in permutations(range(len(counts))):
        if any(counts[target] != counts[source] for source, target in enumerate(meas)):
            continue
        for outs in product(*(permutations(range(n)) for n in counts)):
            yield meas, outs


def iter_symmetries(scenario):
    """Todas las simetrias del escenario (incluye el swap si es simetrico)."""
    swaps = (False, True) if scenario.party_symmetric else (False,)
    alice = list(_party_symmetries(scenario.outcomes_a))
    bob = list(_party_symmetries(scenario.outcomes_b))
    for swap in swaps:
        for pa, oa in alice:
            for pb, ob in bob:
                yield SymmetryOp(pa, pb, oa, ob, swap_parties=swap)


def orbit(model):
    """Modelos distintos alcanzables por simetria, ordenados por bits."""
    images = {apply_symmetry(model, op).bits for op in iter_symmetries(model.scenario)}
    return [PossibilisticModel(model.scenario, bits) for bits in sorted(images)]
