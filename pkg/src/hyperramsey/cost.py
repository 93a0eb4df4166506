"""Clique count, independent-set count and the Ramsey cost function.

For an m-subset S of the vertices, the product of the edge bits over all
r-subsets of S is 1 exactly when every bit in S's mask is set, so each
product is evaluated as a mask test.  Independent sets use the same test on
the complemented bits.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Tuple

import numpy as np

from .codec import EdgeIndexMap, HypergraphBits
from .errors import ParameterError


def subset_masks(imap: EdgeIndexMap, size: int) -> Tuple[int, ...]:
    """One mask per ``size``-subset of vertices, in lexicographic order.

    Each mask has the bits of all r-subsets of that vertex subset set.
    """
    rank = imap.rank
    masks = []
    for sub in combinations(range(1, imap.N + 1), size):
        mask = 0
        for e in combinations(sub, imap.r):
            mask |= 1 << (rank(e) - 1)
        masks.append(mask)
    return tuple(masks)


@dataclass(frozen=True)
class CostParams:
    N: int
    m: int
    n: int
    r: int
    clique_masks: Tuple[int, ...] = field(init=False, repr=False)
    indep_masks: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.r < 1 or self.N < 0:
            raise ParameterError(f"need r >= 1 and N >= 0, got N={self.N}, r={self.r}")
        if self.m < self.r or self.n < self.r:
            raise ParameterError(
                f"clique and independent-set orders must be >= r={self.r}, "
                f"got m={self.m}, n={self.n}"
            )
        imap = self.map
        object.__setattr__(self, "clique_masks", subset_masks(imap, self.m))
        if self.n == self.m:
            object.__setattr__(self, "indep_masks", self.clique_masks)
        else:
            object.__setattr__(self, "indep_masks", subset_masks(imap, self.n))

    @property
    def map(self) -> EdgeIndexMap:
        return EdgeIndexMap(self.N, self.r)

    @property
    def L(self) -> int:
        return self.map.L

    @property
    def locality(self) -> int:
        """Largest number of edge bits in one product, max{B(m,r), B(n,r)}."""
        return max(comb(self.m, self.r), comb(self.n, self.r))

    def _check(self, hb: HypergraphBits):
        if hb.N != self.N or hb.r != self.r:
            raise ParameterError(
                f"hypergraph has (N, r) = ({hb.N}, {hb.r}), "
                f"parameters expect ({self.N}, {self.r})"
            )


def count_cliques(params: CostParams, hb: HypergraphBits) -> int:
    params._check(hb)
    x = hb.bits
    return sum(1 for mask in params.clique_masks if x & mask == mask)


def count_independent(params: CostParams, hb: HypergraphBits) -> int:
    params._check(hb)
    x = hb.bits
    return sum(1 for mask in params.indep_masks if not x & mask)


def cost(params: CostParams, hb: HypergraphBits) -> int:
    return count_cliques(params, hb) + count_independent(params, hb)


def cost_table(params: CostParams, indices=None) -> np.ndarray:
    """Vectorized cost over basis-state indices (all ``2**L`` by default).

    Requires ``L <= 63`` so that indices fit in a uint64.
    """
    L = params.L
    if L > 63:
        raise ParameterError(f"cost_table supports L <= 63, got L={L}")
    if indices is None:
        x = np.arange(1 << L, dtype=np.uint64)
    else:
        x = np.asarray(indices, dtype=np.uint64)
    out = np.zeros(x.shape, dtype=np.int64)
    for mask in params.clique_masks:
        mk = np.uint64(mask)
        out += (x & mk) == mk
    for mask in params.indep_masks:
        out += (x & np.uint64(mask)) == 0
    return out
