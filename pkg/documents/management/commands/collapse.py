from documents.forms import POSSIBILISTIC
from documents.reporting import EXIT_OK, AnalysisCommand
from documents.serializers import serialize_model


class Command(AnalysisCommand):
    help = 'Write the possibilistic collapse of a model file to standard output'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Model document')

    def analyse(self, *args, **options):
        document = self.load(options['file'])
        if document.kind == POSSIBILISTIC:
            self.stderr.write('input is already possibilistic; writing its canonical form')
        self.stdout.write(
            serialize_model(document.possibilistic, document.name, document.notes), ending='',
        )
        return EXIT_OK
