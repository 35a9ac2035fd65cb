from tables.catalog import SCENARIO_222
from tables.scenarios import Scenario
from verification.models import SweepRun
from verification.propositions import verify_ladder_implies_hardy, verify_proposition_1
from verification.table6 import verify_table6

from documents.reporting import EXIT_OK, EXIT_VIOLATION, AnalysisCommand

TARGETS = ('prop1', 'ladder', 'table6', 'all')


class Command(AnalysisCommand):
    help = 'Run the randomized collapse and ladder checks and the nonlocal reference fixture'

    def add_arguments(self, parser):
        parser.add_argument('target', choices=TARGETS)
        parser.add_argument('--trials', type=int, default=10000)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--k', type=int, nargs='+', default=[3, 4, 5],
                            help='Settings per party for the ladder check')
        parser.add_argument('--save', action='store_true', help='Archive the reports in the database')
        self.add_json_argument(parser)

    def analyse(self, *args, **options):
        target, trials, seed = options['target'], options['trials'], options['seed']
        sweeps, fixtures = [], []
        if target in ('prop1', 'all'):
            for scenario in (SCENARIO_222, Scenario.uniform(3, 2)):
                sweeps.append(verify_proposition_1(trials, seed, scenario))
        if target in ('ladder', 'all'):
            sweeps.append(verify_ladder_implies_hardy(options['k'], trials, seed))
        if target in ('table6', 'all'):
            fixtures.append(verify_table6())

        if options['save']:
            for report in sweeps:
                SweepRun.from_report(report, name=target)
            for fixture in fixtures:
                SweepRun.from_fixture(fixture)
        if options['json']:
            self.emit_json({
                'sweeps': [report.to_dict() for report in sweeps],
                'fixtures': [fixture.to_dict() for fixture in fixtures],
            })
        else:
            for report in sweeps:
                self.line(report.summary())
            for fixture in fixtures:
                self.line(fixture.summary())

        failed = any(not report.passed for report in sweeps) or any(not f.passed for f in fixtures)
        return EXIT_VIOLATION if failed else EXIT_OK
