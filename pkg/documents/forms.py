import re
from fractions import Fraction

from django import forms
from django.core.exceptions import ValidationError

from tables.empirical import PossibilisticModel, ProbabilisticModel
from tables.scenarios import Scenario

POSSIBILISTIC = 'possibilistic'
PROBABILISTIC = 'probabilistic'
KINDS = (POSSIBILISTIC, PROBABILISTIC)

RATIONAL = re.compile(r'^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$')


def parse_rational(value, where):
    """'p/q' o 'p' con p >= 0, q > 0; tambien enteros no negativos."""
    if isinstance(value, int) and not isinstance(value, bool) and value >= 0:
        return Fraction(value)
    match = RATIONAL.match(value) if isinstance(value, str) else None
    if not match or match.group(2) is not None and int(match.group(2)) == 0:
        raise ValidationError(
            '%(where)s: %(value)r is not a rational "p/q" with p >= 0 and q > 0',
            code='malformed_rational', params={'where': where, 'value': value},
        )
    return Fraction(int(match.group(1)), int(match.group(2) or 1))


class ModelDocumentForm(forms.Form):
    kind = forms.CharField()
    outcomes_a = forms.JSONField()
    outcomes_b = forms.JSONField()
    table = forms.JSONField()
    name = forms.CharField(required=False)
    notes = forms.CharField(required=False)

    def clean_kind(self):
        kind = self.cleaned_data['kind']
        if kind not in KINDS:
            raise forms.ValidationError(
                'unknown kind %(kind)r, expected possibilistic or probabilistic',
                code='unknown_kind', params={'kind': kind},
            )
        return kind

    def clean(self):
        cleaned_data = super(ModelDocumentForm, self).clean()
        kind = cleaned_data.get('kind')
        outcomes_a = cleaned_data.get('outcomes_a')
        outcomes_b = cleaned_data.get('outcomes_b')
        table = cleaned_data.get('table')
        if None in (kind, outcomes_a, outcomes_b, table):
            return cleaned_data

        for field in ('outcomes_a', 'outcomes_b'):
            if not isinstance(cleaned_data[field], list):
                self.add_error(field, forms.ValidationError(
                    'must be a list of outcome counts', code='invalid_scenario',
                ))
                return cleaned_data
        try:
            scenario = Scenario(outcomes_a, outcomes_b)
        except ValidationError as exc:
            party = (getattr(exc, 'params', None) or {}).get('party')
            self.add_error('outcomes_b' if party == 'b' else 'outcomes_a', exc)
            return cleaned_data

        try:
            entries = self._entries(scenario, table, kind)
            if kind == POSSIBILISTIC:
                model = PossibilisticModel.from_table(scenario, entries)
            else:
                model = ProbabilisticModel.from_table(scenario, entries)
        except ValidationError as exc:
            self.add_error('table', exc)
            return cleaned_data

        cleaned_data['scenario'] = scenario
        cleaned_data['model'] = model
        return cleaned_data

    def _entries(self, scenario, table, kind):
        """Comprueba dimensiones [i][a][j][b] y convierte cada entrada."""
        def expect(value, length, where):
            if not isinstance(value, list) or len(value) != length:
                got = len(value) if isinstance(value, list) else type(value).__name__
                raise ValidationError(
                    '%(where)s has %(got)s entries, expected %(want)d',
                    code='dimension_mismatch', params={'where': where, 'got': got, 'want': length},
                )

        expect(table, scenario.k_a, 'table')
        converted = []
        for i, n_a in enumerate(scenario.outcomes_a):
            expect(table[i], n_a, f'table[{i}]')
            rows = []
            for a in range(n_a):
                expect(table[i][a], scenario.k_b, f'table[{i}][{a}]')
                boxes = []
                for j, n_b in enumerate(scenario.outcomes_b):
                    where = f'table[{i}][{a}][{j}]'
                    expect(table[i][a][j], n_b, where)
                    boxes.append([
                        self._entry(value, kind, f'{where}[{b}]')
                        for b, value in enumerate(table[i][a][j])
                    ])
                rows.append(boxes)
            converted.append(rows)
        return converted

    def _entry(self, value, kind, where):
        if kind == PROBABILISTIC:
            return parse_rational(value, where)
        if isinstance(value, bool) or value not in (0, 1):
            raise ValidationError(
                '%(where)s: possibilistic entries are 0 or 1, got %(value)r',
                code='invalid_entry', params={'where': where, 'value': value},
            )
        return value
