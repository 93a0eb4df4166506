"""Bijection between r-uniform hypergraphs on {1..N} and bit strings.

Edges are ordered lexicographically by their ascending vertex tuples, so for
r=2 the order is (1,2), (1,3), ..., (1,N), (2,3), ..., (N-1,N) and for r=3 it
starts (1,2,3), (1,2,4), ... and ends (N-2,N-1,N).  Edge indices are 1-based.

A bit string is stored as a Python int with edge ``k`` at bit position
``k - 1`` (least significant first).  The same integer is the index of the
corresponding computational basis state.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Set, Tuple

from .errors import InvalidEdgeError, ParseError

Edge = Tuple[int, ...]


def binomial(n: int, k: int, max_value: Optional[int] = None) -> int:
    """Exact binomial coefficient, zero when ``k > n``.

    Python integers never overflow, so ``max_value`` stands in for a platform
    limit: when given, an ``OverflowError`` is raised if the result exceeds it.
    """
    if k < 0 or n < 0:
        raise ValueError(f"binomial({n}, {k}) needs n, k >= 0")
    value = comb(n, k)
    if max_value is not None and value > max_value:
        raise OverflowError(f"binomial({n}, {k}) = {value} exceeds {max_value}")
    return value


@dataclass(frozen=True)
class EdgeIndexMap:
    N: int
    r: int

    def __post_init__(self):
        if self.N < 0 or self.r < 1:
            raise ValueError(f"need N >= 0 and r >= 1, got N={self.N}, r={self.r}")

    @property
    def L(self) -> int:
        return comb(self.N, self.r)

    def edges(self):
        """All r-subsets in index order."""
        return combinations(range(1, self.N + 1), self.r)

    def check_edge(self, edge: Iterable[int]) -> Edge:
        t = tuple(sorted(edge))
        if len(t) != self.r:
            raise InvalidEdgeError(f"edge {t} has {len(t)} vertices, expected {self.r}")
        if len(set(t)) != self.r:
            raise InvalidEdgeError(f"edge {t} has repeated vertices")
        if t[0] < 1 or t[-1] > self.N:
            raise InvalidEdgeError(f"edge {t} has vertices outside 1..{self.N}")
        return t

    def rank(self, edge: Iterable[int]) -> int:
        t = self.check_edge(edge)
        N, r = self.N, self.r
        # number of r-subsets lexicographically after t
        after = sum(comb(N - v, r - i) for i, v in enumerate(t))
        return comb(N, r) - after

    def unrank(self, k: int) -> Edge:
        L = self.L
        if not 1 <= k <= L:
            raise IndexError(f"edge index {k} outside 1..{L}")
        N, r = self.N, self.r
        k -= 1
        out = []
        v = 1
        for i in range(r):
            # skip every block of subsets whose i-th vertex is v
            while True:
                block = comb(N - v, r - i - 1)
                if k < block:
                    break
                k -= block
                v += 1
            out.append(v)
            v += 1
        return tuple(out)


def rank_edge(imap: EdgeIndexMap, edge: Iterable[int]) -> int:
    return imap.rank(edge)


def unrank_edge(imap: EdgeIndexMap, k: int) -> Edge:
    return imap.unrank(k)


@dataclass(frozen=True)
class HypergraphBits:
    map: EdgeIndexMap
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.map.L:
            raise ValueError(f"bits {self.bits:#x} do not fit in {self.map.L} positions")

    @property
    def N(self) -> int:
        return self.map.N

    @property
    def r(self) -> int:
        return self.map.r

    @property
    def L(self) -> int:
        return self.map.L

    def __getitem__(self, k: int) -> int:
        """Bit ``x_k`` for 1-based ``k``."""
        if not 1 <= k <= self.L:
            raise IndexError(k)
        return (self.bits >> (k - 1)) & 1

    def to_string(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.L))

    @classmethod
    def from_string(cls, imap: EdgeIndexMap, s: str) -> "HypergraphBits":
        s = s.strip()
        if len(s) != imap.L or set(s) - {"0", "1"}:
            raise ParseError(f"expected {imap.L} characters of 0/1, got {s!r}")
        # first character is bit 1, i.e. the least significant bit
        return cls(imap, int(s[::-1], 2) if s else 0)

    def complement(self) -> "HypergraphBits":
        return HypergraphBits(self.map, ((1 << self.L) - 1) ^ self.bits)

    def edges(self) -> Set[Edge]:
        return decode(self)


def encode(imap: EdgeIndexMap, edges: Iterable[Iterable[int]]) -> HypergraphBits:
    bits = 0
    for e in edges:
        bits |= 1 << (imap.rank(e) - 1)
    return HypergraphBits(imap, bits)


def decode(hb: HypergraphBits) -> Set[Edge]:
    out = set()
    bits, k = hb.bits, 1
    while bits:
        if bits & 1:
            out.add(hb.map.unrank(k))
        bits >>= 1
        k += 1
    return out


def dumps(hb: HypergraphBits) -> str:
    """Edge-list text form: ``N r`` header, then one ascending edge per line."""
    lines = [f"{hb.N} {hb.r}"]
    lines += [" ".join(map(str, e)) for e in sorted(decode(hb))]
    return "\n".join(lines) + "\n"


def loads(text: str) -> HypergraphBits:
    lines = [
        (i, ln.split("#", 1)[0].strip())
        for i, ln in enumerate(text.splitlines(), start=1)
    ]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ParseError("missing 'N r' header")
    i, header = lines[0]
    try:
        N, r = (int(tok) for tok in header.split())
        imap = EdgeIndexMap(N, r)
    except ValueError:
        raise ParseError(f"bad header {header!r}, expected 'N r'", i) from None
    edges: list = []
    for i, ln in lines[1:]:
        try:
            edges.append(imap.check_edge(int(tok) for tok in ln.split()))
        except ValueError as exc:
            raise ParseError(f"bad edge {ln!r}: {exc}", i) from None
    return encode(imap, edges)


def all_edges_bits(imap: EdgeIndexMap) -> HypergraphBits:
    return HypergraphBits(imap, (1 << imap.L) - 1)

