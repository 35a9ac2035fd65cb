import logging

from tables.scenarios import Cell

from .witnesses import LadderWitness

logger = logging.getLogger(__name__)


def ladder_applicable(scenario):
    """Las escaleras se definen para mediciones de dos resultados."""
    return scenario.is_two_outcome and scenario.k_a >= 2 and scenario.k_b >= 2


def iter_ladders(model):
    """
    Busqueda en profundidad sobre cadenas de mediciones distintas. Un peldano
    (A_q,x_q,B_q,y_q) -> (A_q+1,x_q+1,B_q+1,y_q+1) exige ceros en
    (A_q,x_q,B_q+1,1-y_q+1) y (A_q+1,1-x_q+1,B_q,y_q); la escalera cierra
    cuando la ultima celda (A_t,x_t,B_t,y_t) es 0.
    """
    sc = model.scenario
    if not ladder_applicable(sc):
        logger.debug('ladder search not applicable to %s', sc)
        return
    entry = model.entry

    def extend(alice, bob):
        (ai, ax), (bi, by) = alice[-1], bob[-1]
        used_a = {m for m, _ in alice}
        used_b = {m for m, _ in bob}
        for next_a in range(sc.k_a):
            if next_a in used_a:
                continue
            for x in (0, 1):
                if entry(next_a, 1 - x, bi, by):
                    continue
                for next_b in range(sc.k_b):
                    if next_b in used_b:
                        continue
                    for y in (0, 1):
                        if entry(ai, ax, next_b, 1 - y):
                            continue
                        chain_a, chain_b = alice + ((next_a, x),), bob + ((next_b, y),)
                        if not entry(next_a, x, next_b, y):
                            yield LadderWitness(chain_a, chain_b)
                        yield from extend(chain_a, chain_b)

    for anchor in model.ones():
        yield from extend(((anchor.i, anchor.a),), ((anchor.j, anchor.b),))


def detect_ladder(model):
    return sorted(iter_ladders(model))


def has_ladder(model):
    return next(iter_ladders(model), None) is not None


def ladder_to_hardy(model, ladder):
    """
    Recorre la escalera: si la celda estrellada (A_q+1,x_q+1,B_q+1,y_q+1) es 0,
    el peldano q ya es una paradoja de Hardy; si es 1, es el ancla de una
    escalera mas corta.
    """
    for q in range(ladder.length - 1):
        (ai, ax), (bi, by) = ladder.alice_chain[q + 1], ladder.bob_chain[q + 1]
        if not model[Cell(ai, ax, bi, by)]:
            return ladder.rung_as_hardy(q)
    # la ultima celda es 0 en toda escalera valida
    raise ValueError(f'{ladder} does not hold in the model')
