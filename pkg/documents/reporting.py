import json
import logging
import sys

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from .serializers import load_document

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

APP_LOGGERS = ('hardylab', 'tables', 'locality', 'paradoxes', 'verification', 'documents')


class AnalysisCommand(BaseCommand):
    """
    Base de los subcomandos: analyse() devuelve el codigo de salida. 0 si la
    propiedad vale, 1 si hay violacion o paradoja; los errores de entrada salen con 2.
    """
    requires_system_checks = []

    def add_json_argument(self, parser):
        parser.add_argument('--json', action='store_true', help='Emit a machine-readable report')

    def handle(self, *args, **options):
        if options.get('verbosity', 1) >= 2:
            for name in APP_LOGGERS:
                logging.getLogger(name).setLevel(logging.DEBUG)
        try:
            code = self.analyse(*args, **options)
        except ValidationError as exc:
            raise CommandError('; '.join(exc.messages), returncode=EXIT_INPUT)
        except OSError as exc:
            raise CommandError(f'cannot read input: {exc}', returncode=EXIT_INPUT)
        if code:
            sys.exit(code)

    def analyse(self, *args, **options):
        raise NotImplementedError('subclasses of AnalysisCommand must provide an analyse() method')

    def load(self, path):
        return load_document(path)

    def emit_json(self, payload):
        self.stdout.write(json.dumps(payload, indent=2, default=str))

    def line(self, text=''):
        self.stdout.write(text)
