from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product

from django.core.exceptions import ValidationError

from .empirical import PossibilisticModel, ProbabilisticModel
from .scenarios import Cell


@dataclass(frozen=True)
class DeterministicGrid:
    """Un resultado elegido por medicion en cada lado."""
    scenario: object
    choice_a: tuple
    choice_b: tuple

    def __post_init__(self):
        object.__setattr__(self, 'choice_a', tuple(self.choice_a))
        object.__setattr__(self, 'choice_b', tuple(self.choice_b))
        for party, choices, counts in (
            ('a', self.choice_a, self.scenario.outcomes_a),
            ('b', self.choice_b, self.scenario.outcomes_b),
        ):
            if len(choices) != len(counts) or any(not 0 <= c < n for c, n in zip(choices, counts)):
                raise ValidationError(
                    'grid choice %(choices)s is not valid for party %(party)s',
                    code='out_of_range', params={'choices': choices, 'party': party},
                )

    def cells(self):
        return [
            Cell(i, a, j, b)
            for i, a in enumerate(self.choice_a)
            for j, b in enumerate(self.choice_b)
        ]

    @cached_property
    def mask(self):
        mask = 0
        for cell in self.cells():
            mask |= 1 << self.scenario.index(*cell)
        return mask

    def passes_through(self, cell):
        return self.choice_a[cell.i] == cell.a and self.choice_b[cell.j] == cell.b

    def contained_in(self, model):
        mask = self.mask
        return model.bits & mask == mask

    def __str__(self):
        alice = ','.join(map(str, self.choice_a))
        bob = ','.join(map(str, self.choice_b))
        return f'[{alice} | {bob}]'


def grid_table(grid):
    """Tabla con 1 exactamente en las celdas de la grilla."""
    return PossibilisticModel(grid.scenario, grid.mask)


@lru_cache(maxsize=64)
def enumerate_grids(scenario):
    """Producto cartesiano de elecciones por medicion, en orden lexicografico."""
    alice = product(*(range(n) for n in scenario.outcomes_a))
    bob = list(product(*(range(n) for n in scenario.outcomes_b)))
    return tuple(
        DeterministicGrid(scenario, choice_a, choice_b)
        for choice_a in alice
        for choice_b in bob
    )


@lru_cache(maxsize=64)
def grid_masks(scenario):
    return tuple(grid.mask for grid in enumerate_grids(scenario))


def grids_through(scenario, cell):
    return [grid for grid in enumerate_grids(scenario) if grid.passes_through(cell)]


def convex_combination(scenario, weighted_grids):
    """
    Modelo probabilistico sum_k w_k * delta(grilla_k). Los pesos se normalizan
    y deben ser positivos.
    """
    weighted_grids = [(Fraction(w), grid) for w, grid in weighted_grids]
    if not weighted_grids:
        raise ValidationError('a convex combination needs at least one grid', code='invalid_entry')
    total = sum(w for w, _ in weighted_grids)
    if any(w <= 0 for w, _ in weighted_grids):
        raise ValidationError('mixture weights must be positive', code='negative_probability')
    probabilities = [Fraction(0)] * scenario.n_cells
    for weight, grid in weighted_grids:
        for cell in grid.cells():
            probabilities[scenario.index(*cell)] += weight / total
    return ProbabilisticModel(scenario, probabilities)
