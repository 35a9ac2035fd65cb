from django.conf import settings
from django.core.exceptions import ValidationError

from tables.generators import DISTRIBUTIONS
from verification.models import SweepRun
from verification.reports import EXHAUSTIVE, SAMPLED, STRUCTURED
from verification.sweeps import sweep_equivalence, sweep_grid_unions, sweep_orbit

from documents.reporting import EXIT_OK, EXIT_VIOLATION, AnalysisCommand
from documents.serializers import parse_scenario_spec


class Command(AnalysisCommand):
    help = 'Check NH against local realism over all or sampled tables of a scenario'

    def add_arguments(self, parser):
        parser.add_argument('--scenario', required=True, help='Scenario spec, e.g. a=2,2;b=2,2')
        parser.add_argument('--mode', choices=(EXHAUSTIVE, SAMPLED, STRUCTURED), default=EXHAUSTIVE)
        parser.add_argument('--samples', type=int, help='Number of sampled tables')
        parser.add_argument('--seed', type=int, help='Seed for sampled mode')
        parser.add_argument('--distribution', choices=DISTRIBUTIONS + ('both',), default='both')
        parser.add_argument('--override-domain', action='store_true',
                            help='Run outside the two-setting / two-outcome domain')
        parser.add_argument('--max-grids', type=int, default=4, help='Largest union size in structured mode')
        parser.add_argument('--orbit', metavar='FILE',
                            help='In structured mode, sweep the symmetry orbit of this model instead')
        parser.add_argument('--workers', type=int, help='Worker processes (default HARDY_WORKERS)')
        parser.add_argument('--save', action='store_true', help='Archive the report in the database')
        self.add_json_argument(parser)

    def analyse(self, *args, **options):
        scenario = parse_scenario_spec(options['scenario'])
        mode = options['mode']
        if mode == STRUCTURED and options['orbit']:
            model = self.load(options['orbit']).possibilistic
            if model.scenario != scenario:
                raise ValidationError(
                    '%(path)s does not belong to scenario %(spec)s',
                    code='scenario_mismatch', params={'path': options['orbit'], 'spec': options['scenario']},
                )
            reports = [sweep_orbit(model, options['override_domain'])]
        elif mode == STRUCTURED:
            reports = [sweep_grid_unions(scenario, options['max_grids'])]
        else:
            distributions = [None]
            if mode == SAMPLED:
                wanted = options['distribution']
                distributions = list(DISTRIBUTIONS) if wanted == 'both' else [wanted]
            reports = [
                sweep_equivalence(
                    scenario, mode,
                    sample_count=options['samples'],
                    seed=options['seed'],
                    distribution=distribution or 'fair',
                    override_domain=options['override_domain'],
                    workers=options['workers'] or settings.HARDY_WORKERS,
                )
                for distribution in distributions
            ]

        if options['save']:
            for report in reports:
                SweepRun.from_report(report, name='sweep')
        if options['json']:
            self.emit_json([report.to_dict() for report in reports])
        else:
            for report in reports:
                self.line(report.summary())
        return EXIT_VIOLATION if any(report.mismatch_count for report in reports) else EXIT_OK
