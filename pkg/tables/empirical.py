from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from django.core.exceptions import ValidationError


@dataclass(frozen=True)
class PossibilisticModel:
    """Tabla booleana totalmente definida; el bit k corresponde a scenario.cells[k]."""
    scenario: object
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits & ~self.scenario.full_mask:
            raise ValidationError('bit pattern does not fit the scenario', code='out_of_range')

    def entry(self, i, a, j, b):
        return bool(self.bits >> self.scenario.index(i, a, j, b) & 1)

    @cached_property
    def rows(self):
        """Sub-filas como enteros de n_cols bits, en el orden de las filas."""
        sc = self.scenario
        width = (1 << sc.n_cols) - 1
        return tuple(self.bits >> (row * sc.n_cols) & width for row in range(sc.n_rows))

    def __getitem__(self, cell):
        return self.entry(*cell)

    def ones(self):
        """Celdas con 1, en orden canonico."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield self.scenario.cells[low.bit_length() - 1]
            bits ^= low

    def zeros(self):
        missing = self.scenario.full_mask & ~self.bits
        while missing:
            low = missing & -missing
            yield self.scenario.cells[low.bit_length() - 1]
            missing ^= low

    def count_ones(self):
        return bin(self.bits).count('1')

    def box_is_empty(self, i, j):
        return not self.bits & self.scenario.box_masks[i][j]

    def as_table(self):
        """Arreglo anidado [i][a][j][b] con 0/1."""
        sc = self.scenario
        return [
            [
                [[int(self.entry(i, a, j, b)) for b in range(n_b)] for j, n_b in enumerate(sc.outcomes_b)]
                for a in range(n_a)
            ]
            for i, n_a in enumerate(sc.outcomes_a)
        ]

    def set(self, cell, value):
        """Copia con una celda cambiada."""
        bit = 1 << self.scenario.index(*cell)
        return PossibilisticModel(self.scenario, self.bits | bit if value else self.bits & ~bit)

    @classmethod
    def from_cells(cls, scenario, ones):
        bits = 0
        for cell in ones:
            bits |= 1 << scenario.index(*scenario.validate_cell(cell))
        return cls(scenario, bits)

    @classmethod
    def constant(cls, scenario, value):
        return cls(scenario, scenario.full_mask if value else 0)

    @classmethod
    def from_table(cls, scenario, table):
        """Construye desde un arreglo [i][a][j][b] ya validado en dimensiones."""
        bits = 0
        for cell in scenario.cells:
            i, a, j, b = cell
            if table[i][a][j][b]:
                bits |= 1 << scenario.index(*cell)
        return cls(scenario, bits)


@dataclass(frozen=True)
class ProbabilisticModel:
    """Una distribucion exacta (Fraction) por par de mediciones, en orden canonico."""
    scenario: object
    probabilities: tuple

    def __post_init__(self):
        object.__setattr__(self, 'probabilities', tuple(Fraction(p) for p in self.probabilities))
        if len(self.probabilities) != self.scenario.n_cells:
            raise ValidationError(
                'expected %(expected)d probabilities, got %(got)d',
                code='dimension_mismatch',
                params={'expected': self.scenario.n_cells, 'got': len(self.probabilities)},
            )
        for cell, p in zip(self.scenario.cells, self.probabilities):
            if p < 0:
                raise ValidationError(
                    'negative probability %(p)s at %(cell)s',
                    code='negative_probability', params={'p': p, 'cell': cell},
                )
        for i in range(self.scenario.k_a):
            for j in range(self.scenario.k_b):
                total = self.box_total(i, j)
                if total != 1:
                    raise ValidationError(
                        'box (%(i)d,%(j)d) sums to %(total)s instead of 1',
                        code='not_normalized', params={'i': i, 'j': j, 'total': total},
                    )

    def probability(self, i, a, j, b):
        return self.probabilities[self.scenario.index(i, a, j, b)]

    def __getitem__(self, cell):
        return self.probability(*cell)

    def box_total(self, i, j):
        return sum((self.probability(*cell) for cell in self.scenario.box_cells(i, j)), Fraction(0))

    def as_table(self):
        sc = self.scenario
        return [
            [
                [[self.probability(i, a, j, b) for b in range(n_b)] for j, n_b in enumerate(sc.outcomes_b)]
                for a in range(n_a)
            ]
            for i, n_a in enumerate(sc.outcomes_a)
        ]

    @classmethod
    def from_table(cls, scenario, table):
        return cls(scenario, tuple(table[i][a][j][b] for i, a, j, b in scenario.cells))


def build_possibilistic(scenario, cells):
    """
    Construye un modelo desde un mapa celda -> booleano que cubre exactamente
    el dominio del escenario. Acepta un dict o una secuencia de pares.
    """
    items = cells.items() if hasattr(cells, 'items') else cells
    seen = set()
    bits = 0
    for cell, value in items:
        cell = scenario.validate_cell(tuple(cell))
        if cell in seen:
            raise ValidationError('duplicate cell %(cell)s', code='duplicate_cell', params={'cell': cell})
        seen.add(cell)
        if value not in (0, 1, True, False):
            raise ValidationError(
                'entry at %(cell)s must be 0 or 1', code='invalid_entry', params={'cell': cell},
            )
        if value:
            bits |= 1 << scenario.index(*cell)
    for cell in scenario.cells:
        if cell not in seen:
            raise ValidationError('missing cell %(cell)s', code='missing_cell', params={'cell': cell})
    return PossibilisticModel(scenario, bits)


def possibilistic_collapse(model):
    """Toda probabilidad positiva pasa a 1."""
    bits = 0
    for index, p in enumerate(model.probabilities):
        if p > 0:
            bits |= 1 << index
    return PossibilisticModel(model.scenario, bits)


def mixture(first, second):
    """Mezcla posibilistica: OR celda a celda."""
    if first.scenario != second.scenario:
        raise ValidationError('cannot mix models of different scenarios', code='scenario_mismatch')
    return PossibilisticModel(first.scenario, first.bits | second.bits)


def is_normalized(model):
    """Cada caja tiene al menos un 1."""
    return all(
        model.bits & mask
        for row in model.scenario.box_masks
        for mask in row
    )
