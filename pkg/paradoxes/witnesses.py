from dataclasses import dataclass

from tables.scenarios import Cell

STANDARD = 'standard'
COARSE = 'coarse'
NS_VIOLATION = 'ns_violation'
NORMALIZATION_VIOLATION = 'normalization_violation'

KINDS = (STANDARD, COARSE, NS_VIOLATION, NORMALIZATION_VIOLATION)


def classify(m1, m2, n_alice, n_bob):
    """Tipo de testigo segun tamanos (m1, m2) y numero de resultados de i' y j'."""
    if m1 == 0 or m2 == 0:
        return NS_VIOLATION
    if m1 == n_alice and m2 == n_bob:
        return NORMALIZATION_VIOLATION
    if m1 == m2 == 1 and n_alice == n_bob == 2:
        return STANDARD
    return COARSE


@dataclass(frozen=True, order=True)
class CoarseHardyWitness:
    """
    Ancla 1 en (i,a0,j,b0) de la caja (i,j); ceros en la sub-columna (i', r, j, b0)
    para r fuera de set_a, en la sub-fila (i, a0, j', s) para s fuera de set_b y en
    todo el bloque set_a x set_b de la caja (i', j').
    """
    alice_pair: tuple
    bob_pair: tuple
    anchor: tuple
    set_a: tuple
    set_b: tuple
    kind: str

    @property
    def m1(self):
        return len(self.set_a)

    @property
    def m2(self):
        return len(self.set_b)

    @property
    def anchor_cell(self):
        return Cell(self.alice_pair[0], self.anchor[0], self.bob_pair[0], self.anchor[1])

    def zero_cells(self, scenario):
        (i, ip), (j, jp), (a0, b0) = self.alice_pair, self.bob_pair, self.anchor
        zeros = [Cell(ip, r, j, b0) for r in range(scenario.outcomes_a[ip]) if r not in self.set_a]
        zeros += [Cell(i, a0, jp, s) for s in range(scenario.outcomes_b[jp]) if s not in self.set_b]
        zeros += [Cell(ip, r, jp, s) for r in self.set_a for s in self.set_b]
        return sorted(zeros)

    def holds_in(self, model):
        return model[self.anchor_cell] and not any(model[cell] for cell in self.zero_cells(model.scenario))

    def transformed(self, op):
        """Imagen del testigo bajo una simetria."""
        (i, ip), (j, jp), (a0, b0) = self.alice_pair, self.bob_pair, self.anchor
        new_i, (new_a0,) = op.map_alice(i, (a0,))
        new_ip, new_set_a = op.map_alice(ip, self.set_a)
        new_j, (new_b0,) = op.map_bob(j, (b0,))
        new_jp, new_set_b = op.map_bob(jp, self.set_b)
        if op.swap_parties:
            return CoarseHardyWitness(
                (new_j, new_jp), (new_i, new_ip), (new_b0, new_a0), new_set_b, new_set_a, self.kind,
            )
        return CoarseHardyWitness(
            (new_i, new_ip), (new_j, new_jp), (new_a0, new_b0), new_set_a, new_set_b, self.kind,
        )

    def __str__(self):
        (i, ip), (j, jp), (a0, b0) = self.alice_pair, self.bob_pair, self.anchor
        return (
            f'{self.kind} H({self.m1},{self.m2}): anchor {self.anchor_cell}, '
            f"Alice settings {i}->{ip} with S_A={list(self.set_a)}, "
            f"Bob settings {j}->{jp} with S_B={list(self.set_b)}"
        )


@dataclass(frozen=True, order=True)
class LadderWitness:
    """Cadenas ((A1,x1),...,(At,xt)) y ((B1,y1),...,(Bt,yt)) con configuraciones distintas."""
    alice_chain: tuple
    bob_chain: tuple

    @property
    def length(self):
        return len(self.alice_chain)

    @property
    def anchor_cell(self):
        (i, x), (j, y) = self.alice_chain[0], self.bob_chain[0]
        return Cell(i, x, j, y)

    def zero_cells(self):
        zeros = []
        for q in range(self.length - 1):
            (ai, ax), (bi, by) = self.alice_chain[q], self.bob_chain[q]
            (ai2, ax2), (bi2, by2) = self.alice_chain[q + 1], self.bob_chain[q + 1]
            zeros.append(Cell(ai, ax, bi2, 1 - by2))
            zeros.append(Cell(ai2, 1 - ax2, bi, by))
        (ai, ax), (bi, by) = self.alice_chain[-1], self.bob_chain[-1]
        zeros.append(Cell(ai, ax, bi, by))
        return zeros

    def holds_in(self, model):
        return model[self.anchor_cell] and not any(model[cell] for cell in self.zero_cells())

    def rung_as_hardy(self, q):
        """Paradoja de Hardy formada por el peldano q y la celda estrellada q+1."""
        (ai, ax), (bi, by) = self.alice_chain[q], self.bob_chain[q]
        (ai2, ax2), (bi2, by2) = self.alice_chain[q + 1], self.bob_chain[q + 1]
        return CoarseHardyWitness((ai, ai2), (bi, bi2), (ax, by), (ax2,), (by2,), STANDARD)

    def __str__(self):
        alice = ' '.join(f'A{i}:{x}' for i, x in self.alice_chain)
        bob = ' '.join(f'B{j}:{y}' for j, y in self.bob_chain)
        return f'ladder of length {self.length}: {alice} / {bob}'


@dataclass(frozen=True)
class NonlocalityCertificate:
    """Un 1 y un conjunto de ceros que toca toda grilla que pase por el."""
    anchor: tuple
    blocking_zeros: tuple

    def blocks(self, grids):
        """Toda grilla que pase por el ancla contiene algun cero bloqueante."""
        for grid in grids:
            if grid.passes_through(self.anchor) and not any(grid.passes_through(z) for z in self.blocking_zeros):
                return False
        return True

    def holds_in(self, model):
        return model[self.anchor] and not any(model[cell] for cell in self.blocking_zeros)

    def __str__(self):
        zeros = ', '.join(str(cell) for cell in self.blocking_zeros)
        return f'anchor {self.anchor} blocked by zeros {{{zeros}}}'
