"""Expansion of the Ramsey cost into a polynomial of Pauli-Z operators.

Substituting ``x_k = (1 - Z_k) / 2`` turns every clique product into
``prod (1 - Z_k) / 2`` and every independent-set product into
``prod (1 + Z_k) / 2``.  Expansion is done with exact dyadic coefficients
so like terms cancel exactly; floats only appear at evaluation and output.

Qubit indices are 1-based and equal edge indices.  ``Z_k`` has eigenvalue
+1 when bit ``k - 1`` of a basis-state index is 0 and -1 when it is 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Real
from typing import Dict, Tuple

import numpy as np

from .cost import CostParams
from .errors import ParseError, TooManyTermsError

MAX_RAW_TERMS = 1 << 22

Support = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class PauliPolynomial:
    L: int
    terms: Dict[Support, Real]

    def __post_init__(self):
        clean = {}
        for support, coeff in self.terms.items():
            key = tuple(sorted(support))
            if len(set(key)) != len(key):
                raise ValueError(f"repeated qubit in term {support}")
            if key and not (1 <= key[0] and key[-1] <= self.L):
                raise ValueError(f"term {support} outside qubits 1..{self.L}")
            c = clean.get(key, 0) + coeff
            clean[key] = c
        object.__setattr__(self, "terms", {k: c for k, c in clean.items() if c != 0})

    def __eq__(self, other):
        if not isinstance(other, PauliPolynomial):
            return NotImplemented
        return self.L == other.L and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    @property
    def locality(self) -> int:
        return max((len(k) for k in self.terms), default=0)

    def __call__(self, index: int) -> float:
        return evaluate(self, index)


def _bits(mask: int) -> Tuple[int, ...]:
    out, k = [], 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def _expand_into(terms, qubits, sign):
    # prod_{q in qubits} (1 + sign*Z_q)/2 = 2^-t * sum_S sign^|S| Z_S
    t = len(qubits)
    weight = Fraction(1, 1 << t)
    for size in range(t + 1):
        c = weight if sign > 0 or size % 2 == 0 else -weight
        for support in combinations(qubits, size):
            terms[support] = terms.get(support, 0) + c


def compile_cost(params: CostParams, max_raw_terms: int = MAX_RAW_TERMS) -> PauliPolynomial:
    raw = (len(params.clique_masks) * (1 << _popcount_max(params.clique_masks))
           + len(params.indep_masks) * (1 << _popcount_max(params.indep_masks)))
    if raw > max_raw_terms:
        raise TooManyTermsError(
            f"expansion would produce {raw} terms before merging (limit {max_raw_terms})"
        )
    terms: Dict[Support, Fraction] = {}
    for mask in params.clique_masks:
        _expand_into(terms, _bits(mask), -1)
    for mask in params.indep_masks:
        _expand_into(terms, _bits(mask), +1)
    return PauliPolynomial(params.L, terms)


def _popcount_max(masks) -> int:
    return max((bin(mk).count("1") for mk in masks), default=0)


def evaluate(poly: PauliPolynomial, index: int) -> float:
    if not 0 <= index < (1 << poly.L):
        raise IndexError(f"basis index {index} outside [0, 2**{poly.L})")
    total = 0.0
    for support, coeff in poly.terms.items():
        odd = sum((index >> (q - 1)) & 1 for q in support) & 1
        total += -float(coeff) if odd else float(coeff)
    return total


def diagonal(poly: PauliPolynomial) -> np.ndarray:
    """Values of ``poly`` on every basis state, as a length ``2**L`` array."""
    x = np.arange(1 << poly.L, dtype=np.uint64)
    out = np.zeros(x.shape, dtype=float)
    for support, coeff in poly.terms.items():
        parity = np.zeros(x.shape, dtype=np.uint64)
        for q in support:
            parity ^= (x >> np.uint64(q - 1)) & np.uint64(1)
        out += float(coeff) * (1.0 - 2.0 * parity)
    return out


def emit(poly: PauliPolynomial) -> str:
    lines = [f"pauli-z L={poly.L}"]
    for support in sorted(poly.terms, key=lambda s: (len(s), s)):
        coeff = repr(float(poly.terms[support]))
        lines.append(" ".join([coeff, *map(str, support)]))
    return "\n".join(lines) + "\n"


def parse(text: str) -> PauliPolynomial:
    L = None
    terms: Dict[Support, float] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if L is None:
            head = line.split()
            if len(head) != 2 or head[0] != "pauli-z" or not head[1].startswith("L="):
                raise ParseError(f"expected header 'pauli-z L=<L>', got {line!r}", lineno)
            try:
                L = int(head[1][2:])
            except ValueError:
                raise ParseError(f"bad qubit count in {line!r}", lineno) from None
            continue
        tokens = line.split()
        try:
            coeff = float(tokens[0])
            support = tuple(int(tok) for tok in tokens[1:])
        except ValueError:
            raise ParseError(f"malformed term {line!r}", lineno) from None
        if any(b <= a for a, b in zip(support, support[1:])):
            raise ParseError(f"qubit indices must be strictly ascending in {line!r}", lineno)
        if support and not (1 <= support[0] and support[-1] <= L):
            raise ParseError(f"qubit index outside 1..{L} in {line!r}", lineno)
        if support in terms:
            raise ParseError(f"duplicate term {support}", lineno)
        terms[support] = coeff
    if L is None:
        raise ParseError("empty term list, missing 'pauli-z L=<L>' header")
    return PauliPolynomial(L, terms)
