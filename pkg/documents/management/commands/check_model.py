from locality.analysis import check_no_signalling, check_probabilistic_no_signalling, decide_local_realism, is_deterministic
from tables.empirical import is_normalized
from tables.measurement import check_measurement_locality

from documents.forms import PROBABILISTIC
from documents.reporting import EXIT_OK, EXIT_VIOLATION, AnalysisCommand


class Command(AnalysisCommand):
    help = 'ML, NS, determinism, normalization and the local realism verdict of a model file'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Model document')
        self.add_json_argument(parser)

    def analyse(self, *args, **options):
        document = self.load(options['file'])
        report = {'name': document.name, 'kind': document.kind}

        if document.kind == PROBABILISTIC:
            ns = check_probabilistic_no_signalling(document.model)
            report['probabilistic_no_signalling'] = ns.holds
            report['marginal_mismatch'] = str(ns.mismatch) if ns.mismatch else None

        ml = check_measurement_locality(document.possibilistic)
        report['measurement_locality'] = ml.holds
        report['measurement_locality_note'] = ml.note
        violation = not ml.holds or report.get('probabilistic_no_signalling') is False

        model = ml.reduced
        if ml.holds and model is not None:
            ns_report = check_no_signalling(model)
            verdict = decide_local_realism(model)
            report.update({
                'no_signalling': ns_report.holds,
                'ns_violations': [str(v) for v in ns_report.violations],
                'deterministic': is_deterministic(model),
                'normalized': is_normalized(model),
                'verdict': verdict.status,
                'cover': [str(grid) for grid in verdict.cover],
                'witness': str(verdict.witness_cell) if verdict.witness_cell else None,
            })
            violation = violation or not ns_report.holds or not verdict.is_local

        if options['json']:
            self.emit_json(report)
        else:
            self._print(report)
        return EXIT_VIOLATION if violation else EXIT_OK

    def _print(self, report):
        if report['name']:
            self.line(f"model: {report['name']}")
        if 'probabilistic_no_signalling' in report:
            holds = report['probabilistic_no_signalling']
            self.line(f"probabilistic no-signalling: {'holds' if holds else 'violated'}")
            if not holds:
                self.line(f"  {report['marginal_mismatch']}")
        self.line(f"measurement locality: {'holds' if report['measurement_locality'] else 'violated'}"
                  f" ({report['measurement_locality_note']})")
        if 'verdict' not in report:
            return
        self.line(f"no-signalling: {'holds' if report['no_signalling'] else 'violated'}")
        for violation in report['ns_violations']:
            self.line(f'  {violation}')
        self.line(f"deterministic: {'yes' if report['deterministic'] else 'no'}")
        self.line(f"normalized: {'yes' if report['normalized'] else 'no'}")
        if report['verdict'] == 'local':
            self.line(f"verdict: local, cover of {len(report['cover'])} grids")
            for grid in report['cover']:
                self.line(f'  {grid}')
        else:
            self.line(f"verdict: nonlocal, the 1 at {report['witness']} lies on no contained grid")
