"""Compute R(m, n; r): scan N upward until no zero-cost hypergraph can be found.

At each N the register holds ``L = B(N, r)`` qubits.  The adiabatic backend
evolves the uniform superposition under H(t), then measures the final state
up to k times; each measurement is evaluated with the exact cost.  A zero
reading is a witness that N < R(m, n; r) and is re-checked classically
before being accepted.  No zero in k readings is taken to mean the minimum
cost is positive, with confidence given by the repetition policy.

The simulated evolution is deterministic, so the k runs at one N share one
final state and differ only in the measurement seed.
"""

import math
import os
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import codec
from .codec import HypergraphBits
from .cost import CostParams, cost
from .engine import (SIMULABLE_LIMIT, DiagonalHamiltonian, Schedule, evolve,
                     measure_energy, prepare_uniform, sample)
from .errors import InstanceTooLarge
from .oracle import EXHAUSTIVE_LIMIT, minimize
from .sizes import check_feasible, qubits_required

DEFAULT_SCHEDULE = Schedule(T=100.0, steps=2000)
DEFAULT_SEED = 20120105

ZERO = "min=0"
POSITIVE = "min>0"


@dataclass(frozen=True)
class RepetitionPolicy:
    epsilon: float = 0.5
    delta: float = 0.99
    k_max: int = 100

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if not 0 < self.delta < 1:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")
        if self.k_max < 1:
            raise ValueError(f"k_max must be >= 1, got {self.k_max}")

    @property
    def k_required(self) -> int:
        """Unclamped ``ceil(ln(1 - delta) / ln(epsilon))``."""
        ratio = math.log(1 - self.delta) / math.log(self.epsilon)
        # 1 - 0.9 is not exactly 0.1 in binary; don't let that round up
        return max(1, math.ceil(round(ratio, 9)))

    @property
    def clamped(self) -> bool:
        return self.k_required > self.k_max


def repetitions(pol: RepetitionPolicy) -> int:
    return min(pol.k_required, pol.k_max)


@dataclass
class NRecord:
    N: int
    L: int
    decision: str
    best_energy: float
    witness: Optional[HypergraphBits]
    runs: int
    low_confidence: bool = False


@dataclass
class RamseyResult:
    m: int
    n: int
    r: int
    R: int
    per_n: List[NRecord]
    backend: str
    confidence: Optional[float] = None

    @property
    def low_confidence(self) -> bool:
        return any(rec.low_confidence for rec in self.per_n)

    def report(self, witness_files=None) -> str:
        """One line per N: ``N L decision bestEnergy runs witnessFile``."""
        witness_files = witness_files or {}
        lines = [f"# R({self.m},{self.n};{self.r}) = {self.R} backend={self.backend}"]
        if self.confidence is not None:
            lines[0] += f" confidence={self.confidence:.6g}"
        lines.append("# N L decision bestEnergy runs witnessFile")
        for rec in self.per_n:
            decision = rec.decision + ("?" if rec.low_confidence else "")
            lines.append(
                f"{rec.N} {rec.L} {decision} {rec.best_energy:g} {rec.runs} "
                f"{witness_files.get(rec.N, '-')}"
            )
        return "\n".join(lines) + "\n"

    def write_witnesses(self, directory) -> dict:
        """Write each witness in edge-list form; returns {N: path}."""
        os.makedirs(directory, exist_ok=True)
        paths = {}
        for rec in self.per_n:
            if rec.witness is None:
                continue
            path = os.path.join(directory, f"witness_R{self.m}{self.n}{self.r}_N{rec.N}.txt")
            with open(path, "w") as fh:
                fh.write(codec.dumps(rec.witness))
            paths[rec.N] = path
        return paths


def _verified(params: CostParams, hb: HypergraphBits) -> HypergraphBits:
    if cost(params, hb) != 0:
        raise AssertionError(f"witness {hb.to_string()} does not have zero cost")
    return hb


def _start(m, n, r, low):
    if min(m, n) < r or r < 1:
        raise ValueError(f"need m, n >= r >= 1, got m={m}, n={n}, r={r}")
    if low is None:
        low = max(m, n, r)
    if low < 1:
        raise ValueError(f"low must be >= 1, got {low}")
    return low


def ramsey_aqe(m: int, n: int, r: int, low: Optional[int] = None,
               sched: Schedule = DEFAULT_SCHEDULE,
               pol: RepetitionPolicy = RepetitionPolicy(),
               seed=DEFAULT_SEED, limit: int = SIMULABLE_LIMIT,
               trace_dir=None) -> RamseyResult:
    """Compute R(m, n; r) on the simulated adiabatic backend.

    ``low`` must be a strict lower bound for R(m, n; r); published bounds
    are tabulated in Radziszowski's dynamic survey "Small Ramsey Numbers".
    Defaults to ``max(m, n, r)``.
    """
    N = _start(m, n, r, low)
    check_feasible(m, n, r, limit)
    k = repetitions(pol)
    seeds = np.random.SeedSequence(seed)
    per_n = []
    while True:
        L = qubits_required(N, r)
        if L > limit:
            raise InstanceTooLarge(L, limit, N=N)
        params = CostParams(N, m, n, r)
        hp = DiagonalHamiltonian.from_cost(params, limit)
        trace = None if trace_dir is None else os.path.join(trace_dir, f"trace_N{N}.txt")
        if trace is not None:
            os.makedirs(trace_dir, exist_ok=True)
        psi = evolve(prepare_uniform(L, limit), hp, sched, trace=trace)
        best, witness, runs = math.inf, None, 0
        for child in seeds.spawn(k):
            runs += 1
            x = sample(psi, child)
            E = measure_energy(hp, x)
            best = min(best, E)
            if E == 0:
                witness = _verified(params, HypergraphBits(params.map, x))
                break
        if witness is not None:
            per_n.append(NRecord(N, L, ZERO, best, witness, runs))
            N += 1
            continue
        per_n.append(NRecord(N, L, POSITIVE, best, None, runs, low_confidence=pol.clamped))
        confidence = 1 - pol.epsilon ** k
        return RamseyResult(m, n, r, N, per_n, "aqe", confidence)


def ramsey_oracle(m: int, n: int, r: int, low: Optional[int] = None,
                  limit: int = EXHAUSTIVE_LIMIT) -> RamseyResult:
    """Compute R(m, n; r) with the exhaustive classical minimizer as the backend."""
    N = _start(m, n, r, low)
    check_feasible(m, n, r, limit)
    per_n = []
    while True:
        params = CostParams(N, m, n, r)
        best, witness = minimize(params, limit)
        if best == 0:
            per_n.append(NRecord(N, params.L, ZERO, 0, _verified(params, witness), 1))
            N += 1
            continue
        per_n.append(NRecord(N, params.L, POSITIVE, best, None, 1))
        return RamseyResult(m, n, r, N, per_n, "oracle", 1.0)
