"""
Contraejemplo con tres mediciones de Alice y una medicion ternaria de Bob:
modelo probabilistico NS, sin paradoja de Hardy de grano grueso, y aun asi no local.
"""
import logging

from django.core.exceptions import ValidationError

from locality.analysis import check_probabilistic_no_signalling, decide_local_realism
from paradoxes.certificates import extract_certificate
from paradoxes.hardy import detect_coarse_hardy
from tables.catalog import TABLE6_ANCHOR, TABLE6_ZEROS, table6_probabilistic
from tables.empirical import possibilistic_collapse
from tables.grids import enumerate_grids, grids_through

from .reports import FixtureReport

logger = logging.getLogger(__name__)


def verify_table6(model=None):
    model = model or table6_probabilistic()
    sc = model.scenario
    report = FixtureReport('table6')

    totals = {(i, j): model.box_total(i, j) for i in range(sc.k_a) for j in range(sc.k_b)}
    report.add(
        'box normalization', all(total == 1 for total in totals.values()),
        ', '.join(f'box {i},{j} = {total}' for (i, j), total in totals.items()),
    )

    ns = check_probabilistic_no_signalling(model)
    report.add('probabilistic no-signalling', ns.holds, str(ns.mismatch) if ns.mismatch else 'all marginals agree')

    collapse = possibilistic_collapse(model)
    zeros = tuple(collapse.zeros())
    report.add('collapse zeros', zeros == TABLE6_ZEROS, ' '.join(map(str, zeros)))

    witnesses = detect_coarse_hardy(collapse)
    report.add('no coarse-grained Hardy paradox', not witnesses, f'{len(witnesses)} witnesses')

    verdict = decide_local_realism(collapse)
    report.add(
        'nonlocal at the upper-left 1',
        not verdict.is_local and verdict.witness_cell == TABLE6_ANCHOR,
        f'{verdict.status}, witness {verdict.witness_cell}',
    )

    grids = enumerate_grids(sc)
    through = len(grids_through(sc, TABLE6_ANCHOR))
    try:
        certificate = extract_certificate(collapse, TABLE6_ANCHOR)
    except ValidationError as exc:
        report.add('certificate blocks every grid through the anchor', False, '; '.join(exc.messages))
    else:
        report.add(
            'certificate blocks every grid through the anchor',
            certificate.blocks(grids),
            f'{through} of {len(grids)} grids pass through the anchor; {certificate}',
        )

    if not report.passed:
        logger.warning('table6 fixture failed at step: %s', report.failed_step.name)
    return report
