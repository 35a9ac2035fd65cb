import logging
import sys

from django.core.management import execute_from_command_line

logger = logging.getLogger(__name__)

# subcomando publico -> management command
SUBCOMMANDS = {
    'check': 'check_model',
    'detect': 'detect',
    'collapse': 'collapse',
    'certificate': 'certificate',
    'sweep': 'sweep',
    'verify': 'verify',
    'generate': 'generate',
}

USAGE = """usage: hardy.py <subcommand> [options]

subcommands:
  check FILE                         ML, NS, determinism, normalization, local realism
  detect FILE --paradox KIND         hardy | coarse | ladder | all
  collapse FILE                      probabilistic -> possibilistic document
  certificate FILE --anchor i,a,j,b  non-locality certificate for one anchor
  sweep --scenario SPEC --mode MODE  exhaustive | sampled | structured theorem sweep
  verify WHAT                        prop1 | ladder | table6 | all
  generate --kind KIND --scenario SPEC --seed S

exit codes: 0 property holds, 1 violation or paradox found, 2 input error
scenario SPEC: a=2,2,2;b=2,3 (outcome count per measurement)
run 'hardy.py <subcommand> --help' for the options of one subcommand
"""


def dispatch(argv):
    """Traduce el subcomando y devuelve el codigo de salida."""
    prog, rest = argv[0], list(argv[1:])
    if not rest:
        sys.stderr.write(USAGE)
        return 2
    if rest[0] in ('-h', '--help', 'help'):
        sys.stdout.write(USAGE)
        return 0

    name = rest[0]
    if name not in SUBCOMMANDS:
        sys.stderr.write(f"Unknown subcommand '{name}'.\n\n{USAGE}")
        return 2

    logger.debug('dispatching %s -> %s', name, SUBCOMMANDS[name])
    try:
        execute_from_command_line([prog, SUBCOMMANDS[name], *rest[1:]])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    return 0
