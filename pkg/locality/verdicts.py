from dataclasses import dataclass
from typing import NamedTuple

LOCAL = 'local'
NONLOCAL = 'nonlocal'


class NSViolation(NamedTuple):
    """Sub-fila (party='a') o sub-columna (party='b') con algun 1 pero vacia frente a otra medicion."""
    party: str
    measurement: int
    outcome: int
    other_measurement: int

    def __str__(self):
        who, other = ('Alice', 'Bob') if self.party == 'a' else ('Bob', 'Alice')
        return (
            f'{who} outcome {self.outcome} of setting {self.measurement} is possible '
            f'but impossible when {other} measures setting {self.other_measurement}'
        )


@dataclass(frozen=True)
class NSReport:
    violations: tuple = ()

    @property
    def holds(self):
        return not self.violations


class MarginalMismatch(NamedTuple):
    party: str
    measurement: int
    outcome: int
    reference_measurement: int
    other_measurement: int
    reference_value: object
    value: object

    def __str__(self):
        who = 'Alice' if self.party == 'a' else 'Bob'
        return (
            f'{who} marginal of outcome {self.outcome} at setting {self.measurement} is '
            f'{self.reference_value} against setting {self.reference_measurement} '
            f'but {self.value} against setting {self.other_measurement}'
        )


@dataclass(frozen=True)
class ProbabilisticNSResult:
    holds: bool
    mismatch: MarginalMismatch = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class LocalityVerdict:
    status: str
    cover: tuple = ()
    witness_cell: tuple = None
    normalized: bool = True

    @property
    def is_local(self):
        return self.status == LOCAL

    def covered_bits(self):
        bits = 0
        for grid in self.cover:
            bits |= grid.mask
        return bits
