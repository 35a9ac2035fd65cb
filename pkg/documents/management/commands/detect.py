from paradoxes.hardy import detect_coarse_hardy, detect_hardy
from paradoxes.ladder import detect_ladder, ladder_applicable

from documents.reporting import EXIT_OK, EXIT_VIOLATION, AnalysisCommand

PARADOXES = ('hardy', 'coarse', 'ladder', 'all')


class Command(AnalysisCommand):
    help = 'Detect Hardy, coarse-grained Hardy and ladder paradoxes in a model file'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Model document')
        parser.add_argument('--paradox', choices=PARADOXES, default='all')
        self.add_json_argument(parser)

    def analyse(self, *args, **options):
        document = self.load(options['file'])
        model = document.possibilistic
        wanted = options['paradox']
        found, notes = {}, []

        if wanted in ('hardy', 'all'):
            found['hardy'] = detect_hardy(model)
        if wanted in ('coarse', 'all'):
            found['coarse'] = detect_coarse_hardy(model)
        if wanted in ('ladder', 'all'):
            if ladder_applicable(model.scenario):
                found['ladder'] = detect_ladder(model)
            else:
                notes.append('ladder paradoxes not applicable: they need two outcomes per measurement')

        total = sum(len(witnesses) for witnesses in found.values())
        if options['json']:
            self.emit_json({
                'name': document.name,
                'witnesses': {key: [str(w) for w in value] for key, value in found.items()},
                'nh_holds': not found['coarse'] if 'coarse' in found else None,
                'notes': notes,
            })
        else:
            for key, witnesses in found.items():
                self.line(f'{key}: {len(witnesses)} found')
                for witness in witnesses:
                    self.line(f'  {witness}')
            if 'coarse' in found:
                self.line(f"NH: {'violated' if found['coarse'] else 'holds'}")
            for note in notes:
                self.line(f'note: {note}')
        return EXIT_VIOLATION if total else EXIT_OK
