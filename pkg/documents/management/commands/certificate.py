from django.core.exceptions import ValidationError

from paradoxes.certificates import extract_certificate

from documents.reporting import EXIT_VIOLATION, AnalysisCommand


def parse_anchor(text):
    try:
        cell = tuple(int(part) for part in text.split(','))
    except ValueError:
        cell = ()
    if len(cell) != 4:
        raise ValidationError('anchor %(text)r must be four integers i,a,j,b', code='invalid_spec', params={'text': text})
    return cell


class Command(AnalysisCommand):
    help = 'Extract a non-locality certificate (anchor plus blocking zeros) from a model file'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Model document')
        parser.add_argument('--anchor', required=True, help='Anchor cell i,a,j,b')
        self.add_json_argument(parser)

    def analyse(self, *args, **options):
        document = self.load(options['file'])
        certificate = extract_certificate(document.possibilistic, parse_anchor(options['anchor']))
        if options['json']:
            self.emit_json({
                'anchor': list(certificate.anchor),
                'blocking_zeros': [list(cell) for cell in certificate.blocking_zeros],
            })
        else:
            self.line(f'certificate: {certificate}')
            self.line('every deterministic grid through the anchor contains one of these zeros')
        return EXIT_VIOLATION
