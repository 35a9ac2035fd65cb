"""
Formato de documento de modelo: JSON con campos kind, outcomes_a, outcomes_b,
table ([i][a][j][b]) y opcionalmente name y notes. Las lineas que empiezan con
'#' son comentarios y se ignoran.
"""
import json
import logging
import re
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from tables.empirical import PossibilisticModel, possibilistic_collapse
from tables.scenarios import Scenario

from .forms import POSSIBILISTIC, PROBABILISTIC, ModelDocumentForm

logger = logging.getLogger(__name__)

SCENARIO_SPEC = re.compile(r'^\s*a\s*=\s*([\d,\s]+?)\s*;\s*b\s*=\s*([\d,\s]+?)\s*$')


@dataclass(frozen=True)
class ModelDocument:
    kind: str
    model: object
    name: str = ''
    notes: str = ''

    @property
    def scenario(self):
        return self.model.scenario

    @property
    def possibilistic(self):
        """El modelo posibilistico (colapso si el documento es probabilistico)."""
        if self.kind == PROBABILISTIC:
            return possibilistic_collapse(self.model)
        return self.model


# ========== ESCENARIOS ==========

def parse_scenario_spec(text):
    """'a=2,2,2;b=2,3' -> Scenario((2,2,2), (2,3))."""
    match = SCENARIO_SPEC.match(text or '')
    if not match:
        raise ValidationError(
            'scenario %(text)r does not match a=N,N,...;b=N,N,...',
            code='invalid_spec', params={'text': text},
        )
    groups = [group.split(',') for group in match.groups()]
    if any(not part.strip() for parts in groups for part in parts):
        raise ValidationError('scenario %(text)r has an empty count', code='invalid_spec', params={'text': text})
    try:
        counts = [tuple(int(part) for part in parts) for parts in groups]
    except ValueError:
        raise ValidationError('scenario %(text)r has a malformed count', code='invalid_spec', params={'text': text})
    return Scenario(*counts)


def scenario_spec(scenario):
    alice = ','.join(map(str, scenario.outcomes_a))
    bob = ','.join(map(str, scenario.outcomes_b))
    return f'a={alice};b={bob}'


# ========== LECTURA ==========

def strip_comments(text):
    """Vacia las lineas '#' para que los errores JSON conserven su numero de linea."""
    return '\n'.join('' if line.lstrip().startswith('#') else line for line in text.splitlines())


def _form_errors(form):
    errors = []
    for field, field_errors in form.errors.as_data().items():
        where = 'document' if field == '__all__' else field
        for error in field_errors:
            for message in error.messages:
                errors.append(ValidationError(f'{where}: {message}', code=error.code or 'invalid_entry'))
    return ValidationError(errors)


def document_from_dict(data):
    if not isinstance(data, dict):
        raise ValidationError('a model document must be a JSON object', code='invalid_json')
    form = ModelDocumentForm(data={
        key: data.get(key) for key in ('kind', 'outcomes_a', 'outcomes_b', 'table', 'name', 'notes')
    })
    if not form.is_valid():
        raise _form_errors(form)
    cleaned = form.cleaned_data
    return ModelDocument(cleaned['kind'], cleaned['model'], cleaned.get('name') or '', cleaned.get('notes') or '')


def model_from_dict(data):
    return document_from_dict(data).model


def parse_document(text):
    try:
        data = json.loads(strip_comments(text))
    except json.JSONDecodeError as exc:
        raise ValidationError(
            'invalid JSON at line %(line)d, column %(column)d: %(msg)s',
            code='invalid_json', params={'line': exc.lineno, 'column': exc.colno, 'msg': exc.msg},
        )
    return document_from_dict(data)


def parse_model(text):
    return parse_document(text).model


def load_document(path):
    with open(path, encoding='utf-8') as handle:
        text = handle.read()
    logger.debug('loaded %s (%d bytes)', path, len(text))
    return parse_document(text)


# ========== ESCRITURA ==========

def document_dict(model, name=None, notes=None):
    """Forma canonica del documento como dict compatible con JSON."""
    if isinstance(model, PossibilisticModel):
        kind, table = POSSIBILISTIC, model.as_table()
    else:
        kind = PROBABILISTIC
        table = [[[[str(p) for p in box] for box in row] for row in rows] for rows in model.as_table()]
    document = {'kind': kind}
    if name:
        document['name'] = name
    if notes:
        document['notes'] = notes
    document['outcomes_a'] = list(model.scenario.outcomes_a)
    document['outcomes_b'] = list(model.scenario.outcomes_b)
    document['table'] = table
    return document


def render_document(document):
    """JSON con una sub-fila (i, a) por linea."""
    lines = ['{']
    for key, value in document.items():
        if key != 'table':
            lines.append(f'  {json.dumps(key)}: {json.dumps(value)},')
    lines.append('  "table": [')
    table = document['table']
    for i, rows in enumerate(table):
        lines.append('    [')
        for a, row in enumerate(rows):
            comma = ',' if a < len(rows) - 1 else ''
            lines.append(f'      {json.dumps(row)}{comma}')
        lines.append('    ]' + (',' if i < len(table) - 1 else ''))
    lines.append('  ]')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def serialize_model(model, name=None, notes=None):
    return render_document(document_dict(model, name, notes))
