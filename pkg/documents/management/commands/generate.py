import random

from tables.generators import KINDS, generate

from documents.reporting import EXIT_OK, AnalysisCommand
from documents.serializers import parse_scenario_spec, serialize_model


class Command(AnalysisCommand):
    help = 'Write a generated possibilistic model document to standard output'

    def add_arguments(self, parser):
        parser.add_argument('--kind', choices=KINDS, required=True)
        parser.add_argument('--scenario', default='a=2,2;b=2,2', help='Scenario spec, e.g. a=2,2,2;b=2,3')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--grids', type=int, help='Number of grids for lr-mixture')
        parser.add_argument('--name', default='')

    def analyse(self, *args, **options):
        scenario = parse_scenario_spec(options['scenario'])
        model = generate(options['kind'], scenario, random.Random(options['seed']), options['grids'])
        notes = f"generated: kind={options['kind']} seed={options['seed']}"
        self.stdout.write(serialize_model(model, options['name'], notes), ending='')
        return EXIT_OK
