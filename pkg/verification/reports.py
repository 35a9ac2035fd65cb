from dataclasses import dataclass, field

EXHAUSTIVE = 'exhaustive'
SAMPLED = 'sampled'
STRUCTURED = 'structured'
TRIALS = 'trials'

MODES = (EXHAUSTIVE, SAMPLED)

# documentos de discrepancia guardados por reporte
MAX_STORED_MISMATCHES = 100


@dataclass
class SweepReport:
    scenario: str
    mode: str
    models_checked: int = 0
    mismatch_count: int = 0
    mismatches: list = field(default_factory=list)
    elapsed: float = 0.0
    seed: int = None
    distribution: str = None
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return self.mismatch_count == 0

    def record(self, document):
        """Cuenta una discrepancia y guarda su documento si queda espacio."""
        self.mismatch_count += 1
        if len(self.mismatches) < MAX_STORED_MISMATCHES:
            self.mismatches.append(document)

    def merge(self, other):
        self.models_checked += other.models_checked
        self.mismatch_count += other.mismatch_count
        room = MAX_STORED_MISMATCHES - len(self.mismatches)
        self.mismatches.extend(other.mismatches[:max(room, 0)])
        for note in other.notes:
            if note not in self.notes:
                self.notes.append(note)
        return self

    def to_dict(self):
        return {
            'scenario': self.scenario,
            'mode': self.mode,
            'distribution': self.distribution,
            'seed': self.seed,
            'models_checked': self.models_checked,
            'mismatch_count': self.mismatch_count,
            'mismatches': list(self.mismatches),
            'elapsed': round(self.elapsed, 3),
            'notes': list(self.notes),
        }

    def summary(self):
        parts = [f'{self.mode} sweep over {self.scenario}']
        if self.distribution:
            parts.append(f'distribution {self.distribution}')
        if self.seed is not None:
            parts.append(f'seed {self.seed}')
        lines = [
            ', '.join(parts),
            f'  models checked: {self.models_checked}',
            f'  mismatches: {self.mismatch_count}',
            f'  elapsed: {self.elapsed:.2f}s',
        ]
        lines.extend(f'  note: {note}' for note in self.notes)
        return '\n'.join(lines)


@dataclass
class FixtureStep:
    name: str
    passed: bool
    detail: str = ''


@dataclass
class FixtureReport:
    name: str
    steps: list = field(default_factory=list)

    @property
    def passed(self):
        return all(step.passed for step in self.steps)

    @property
    def failed_step(self):
        return next((step for step in self.steps if not step.passed), None)

    def add(self, name, passed, detail=''):
        self.steps.append(FixtureStep(name, bool(passed), detail))
        return passed

    def to_dict(self):
        return {
            'name': self.name,
            'passed': self.passed,
            'steps': [
                {'name': s.name, 'passed': s.passed, 'detail': s.detail} for s in self.steps
            ],
        }

    def summary(self):
        lines = [f'{self.name}: {"passed" if self.passed else "FAILED"}']
        for number, step in enumerate(self.steps, start=1):
            mark = 'ok' if step.passed else 'FAIL'
            line = f'  ({number}) {step.name}: {mark}'
            if step.detail:
                line += f' - {step.detail}'
            lines.append(line)
        return '\n'.join(lines)
