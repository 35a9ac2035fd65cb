from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from django.core.exceptions import ValidationError


class Cell(NamedTuple):
    """Celda (i, a, j, b): medicion y resultado de Alice, medicion y resultado de Bob."""
    i: int
    a: int
    j: int
    b: int

    def __str__(self):
        return f'({self.i},{self.a},{self.j},{self.b})'


@dataclass(frozen=True)
class Scenario:
    """Escenario bipartito con numero de resultados por medicion."""
    outcomes_a: tuple
    outcomes_b: tuple

    def __post_init__(self):
        object.__setattr__(self, 'outcomes_a', tuple(self.outcomes_a))
        object.__setattr__(self, 'outcomes_b', tuple(self.outcomes_b))
        for party, counts in (('a', self.outcomes_a), ('b', self.outcomes_b)):
            if not counts:
                raise ValidationError(
                    'party %(party)s needs at least one measurement',
                    code='invalid_scenario', params={'party': party},
                )
            for count in counts:
                if isinstance(count, bool) or not isinstance(count, int) or count < 1:
                    raise ValidationError(
                        'outcome count %(count)r of party %(party)s must be a positive integer',
                        code='invalid_scenario', params={'count': count, 'party': party},
                    )

    @classmethod
    def uniform(cls, k, l):
        """k mediciones por parte, todas con l resultados."""
        return cls((l,) * k, (l,) * k)

    @property
    def k_a(self):
        return len(self.outcomes_a)

    @property
    def k_b(self):
        return len(self.outcomes_b)

    @cached_property
    def row_offsets(self):
        offsets, total = [], 0
        for count in self.outcomes_a:
            offsets.append(total)
            total += count
        return tuple(offsets)

    @cached_property
    def col_offsets(self):
        offsets, total = [], 0
        for count in self.outcomes_b:
            offsets.append(total)
            total += count
        return tuple(offsets)

    @cached_property
    def bob_ranges(self):
        """Por medicion de Bob, sus columnas dentro de una sub-fila."""
        return tuple(((1 << n) - 1) << offset for n, offset in zip(self.outcomes_b, self.col_offsets))

    @property
    def n_rows(self):
        return sum(self.outcomes_a)

    @property
    def n_cols(self):
        return sum(self.outcomes_b)

    @property
    def n_cells(self):
        return self.n_rows * self.n_cols

    @cached_property
    def full_mask(self):
        return (1 << self.n_cells) - 1

    @property
    def is_two_setting(self):
        return self.k_a == 2 and self.k_b == 2

    @property
    def is_two_outcome(self):
        return all(count == 2 for count in self.outcomes_a + self.outcomes_b)

    @property
    def party_symmetric(self):
        return self.outcomes_a == self.outcomes_b

    @property
    def in_theorem_domain(self):
        """(2,2,l) o (2,k,2): donde NH equivale a realismo local."""
        return self.is_two_setting or self.is_two_outcome

    def index(self, i, a, j, b):
        return (self.row_offsets[i] + a) * self.n_cols + self.col_offsets[j] + b

    def bit(self, i, a, j, b):
        return 1 << self.index(i, a, j, b)

    @cached_property
    def cells(self):
        """Todas las celdas en orden canonico (coincide con el orden de bits)."""
        return tuple(
            Cell(i, a, j, b)
            for i, n_a in enumerate(self.outcomes_a)
            for a in range(n_a)
            for j, n_b in enumerate(self.outcomes_b)
            for b in range(n_b)
        )

    def contains(self, cell):
        i, a, j, b = cell
        return (
            0 <= i < self.k_a and 0 <= j < self.k_b
            and 0 <= a < self.outcomes_a[i] and 0 <= b < self.outcomes_b[j]
        )

    def validate_cell(self, cell):
        if len(cell) != 4 or not self.contains(cell):
            raise ValidationError(
                'cell %(cell)s is out of range for this scenario',
                code='out_of_range', params={'cell': tuple(cell)},
            )
        return Cell(*cell)

    @cached_property
    def box_masks(self):
        return tuple(
            tuple(self._mask(self.box_cells(i, j)) for j in range(self.k_b))
            for i in range(self.k_a)
        )

    def box_cells(self, i, j):
        return [
            Cell(i, a, j, b)
            for a in range(self.outcomes_a[i])
            for b in range(self.outcomes_b[j])
        ]

    @cached_property
    def subrow_masks(self):
        """[i][a][j] -> bits de la sub-fila."""
        return tuple(
            tuple(
                tuple(self.subrow_mask(i, a, j) for j in range(self.k_b))
                for a in range(n_a)
            )
            for i, n_a in enumerate(self.outcomes_a)
        )

    @cached_property
    def subcol_masks(self):
        """[j][b][i] -> bits de la sub-columna."""
        return tuple(
            tuple(
                tuple(self.subcol_mask(j, b, i) for i in range(self.k_a))
                for b in range(n_b)
            )
            for j, n_b in enumerate(self.outcomes_b)
        )

    def subrow_mask(self, i, a, j):
        """Bits de la sub-fila (i, a) dentro de la caja (i, j)."""
        return self._mask(Cell(i, a, j, b) for b in range(self.outcomes_b[j]))

    def subcol_mask(self, j, b, i):
        """Bits de la sub-columna (j, b) dentro de la caja (i, j)."""
        return self._mask(Cell(i, a, j, b) for a in range(self.outcomes_a[i]))

    def _mask(self, cells):
        mask = 0
        for cell in cells:
            mask |= 1 << self.index(*cell)
        return mask
