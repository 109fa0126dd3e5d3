from typing import List, Optional, Tuple

from multibgg.colorized_logger import get_logger
from multibgg.core.Polynomial import Polynomial
from multibgg.diffmod.DifferentialModule import DifferentialModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule

logger = get_logger('multibgg.diffmod.minimize')


def minimize_dm(D: DifferentialModule) -> DifferentialModule:
    """
    Split off contractible summands of a free differential module until no
    entry of the differential is a unit. Each unit u = d[r][c] (r != c) is
    isolated by basis changes: first row r is cleared by column operations,
    then column c by row operations; d^2 = 0 then forces row c and column r
    to vanish, and generators r and c are dropped.
    """
    if not D.is_free():
        raise ValueError("minimize_dm works on free differential modules")
    ring = D.ring
    F = ring.field
    d: List[List[Polynomial]] = [list(row) for row in D.differential.entries]
    alive = list(range(D.rank))
    removed = 0

    while True:
        hit = _find_unit(d, alive)
        if hit is None:
            break
        r, c = hit
        u_inv = F.inv(d[r][c].constant_term)
        for j in alive:
            if j == c or not d[r][j]:
                continue
            lam = d[r][j].scale(u_inv)
            for i in alive:
                if d[i][c]:
                    d[i][j] = d[i][j] - lam * d[i][c]
            for k in alive:
                if d[j][k]:
                    d[c][k] = d[c][k] + lam * d[j][k]
        for i in alive:
            if i == r or not d[i][c]:
                continue
            mu = d[i][c].scale(u_inv)
            for k in alive:
                if d[r][k]:
                    d[i][k] = d[i][k] - mu * d[r][k]
            for k in alive:
                if d[k][i]:
                    d[k][r] = d[k][r] + mu * d[k][i]
        alive = [i for i in alive if i not in (r, c)]
        removed += 1

    logger.debug("minimize_dm: cancelled %d contractible pairs, rank %d -> %d", removed, D.rank, len(alive))
    G = D.generators.select(alive)
    rows = [[d[i][j] for j in alive] for i in alive]
    differential = GradedMatrix.of(G, G, rows, D.degree)
    return DifferentialModule(PresentedModule.free(G), differential)


def _find_unit(d, alive) -> Optional[Tuple[int, int]]:
    """First off-diagonal unit entry, lowest row first, then lowest column."""
    for i in alive:
        for j in alive:
            if i != j and d[i][j] and d[i][j].is_constant():
                return i, j
    return None
