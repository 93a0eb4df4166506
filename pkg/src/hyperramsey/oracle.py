"""Exhaustive minimization of the Ramsey cost, and the classical N-loop."""

from typing import List, Tuple

import numpy as np

from .codec import HypergraphBits
from .cost import CostParams, cost_table
from .errors import InstanceTooLarge
from .sizes import check_feasible

EXHAUSTIVE_LIMIT = 30
CHUNK_BITS = 20


def minimize(params: CostParams, limit: int = EXHAUSTIVE_LIMIT) -> Tuple[int, HypergraphBits]:
    """Global minimum of the cost over all ``2**L`` bit strings.

    Strings are scanned in integer order and the scan stops at the first
    zero-cost string.  Ties go to the smallest index.
    """
    L = params.L
    if L > limit:
        raise InstanceTooLarge(L, limit, N=params.N)
    total = 1 << L
    chunk = 1 << min(L, CHUNK_BITS)
    best, best_x = None, 0
    for start in range(0, total, chunk):
        values = cost_table(params, np.arange(start, start + chunk, dtype=np.uint64))
        i = int(np.argmin(values))
        if best is None or values[i] < best:
            best, best_x = int(values[i]), start + i
        if best == 0:
            break
    return best, HypergraphBits(params.map, best_x)


def ramsey_classical(m: int, n: int, r: int, low: int = None,
                     limit: int = EXHAUSTIVE_LIMIT) -> Tuple[int, List[Tuple[int, int]]]:
    """Least N >= low whose minimum cost is positive, with the per-N minima."""
    if low is None:
        low = max(m, n, r)
    if low < 1:
        raise ValueError(f"low must be >= 1, got {low}")
    check_feasible(m, n, r, limit)
    trace = []
    N = low
    while True:
        best, _ = minimize(CostParams(N, m, n, r), limit)
        trace.append((N, best))
        if best > 0:
            return N, trace
        N += 1
