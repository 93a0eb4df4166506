"""Matrix-free state-vector simulation of the interpolating Hamiltonian

    H(t) = (1 - t/T) H_i + (t/T) H_p,   H_i = sum_l (I - X_l) / 2,

with H_p diagonal in the computational basis.  Basis index bit ``l - 1`` is
qubit ``l``, matching the hypergraph bit-string layout.

Time stepping uses Strang splitting with the schedule frozen at each step's
midpoint: a diagonal half step, an exact driver step, a diagonal half step.
Both sub-propagators are exact and unitary.
"""

import os
import warnings
from contextlib import nullcontext
from dataclasses import dataclass

import numpy as np

from .cost import CostParams, cost_table
from .errors import InstanceTooLarge
from .pauli import PauliPolynomial, diagonal, parse

SIMULABLE_LIMIT = 24


@dataclass(frozen=True, eq=False)
class DiagonalHamiltonian:
    L: int
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (1 << self.L,):
            raise ValueError(f"expected {1 << self.L} diagonal values, got shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_cost(cls, params: CostParams, limit: int = SIMULABLE_LIMIT):
        _check_size(params.L, limit, params.N)
        return cls(params.L, cost_table(params).astype(float))

    @classmethod
    def from_pauli(cls, poly: PauliPolynomial, limit: int = SIMULABLE_LIMIT):
        _check_size(poly.L, limit)
        return cls(poly.L, diagonal(poly))

    @classmethod
    def load(cls, path, limit: int = SIMULABLE_LIMIT):
        """Read a ``pauli-z`` term-list file and tabulate it on every basis state."""
        with open(path) as fh:
            return cls.from_pauli(parse(fh.read()), limit)

    @classmethod
    def zero(cls, L: int):
        return cls(L, np.zeros(1 << L))

    @property
    def ground_energy(self) -> float:
        return float(self.values.min())

    def ground_mask(self, atol: float = 1e-9) -> np.ndarray:
        return self.values <= self.ground_energy + atol


@dataclass(frozen=True)
class Schedule:
    T: float
    steps: int

    def __post_init__(self):
        if not self.T > 0:
            raise ValueError(f"runtime T must be positive, got {self.T}")
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")

    @property
    def dt(self) -> float:
        return self.T / self.steps

    def s(self, t: float) -> float:
        return t / self.T


def _check_size(L, limit, N=None):
    if L > limit:
        raise InstanceTooLarge(L, limit, N=N)


def prepare_uniform(L: int, limit: int = SIMULABLE_LIMIT) -> np.ndarray:
    """Uniform superposition over ``2**L`` basis states, the ground state of H_i."""
    if L < 0:
        raise ValueError(f"L must be >= 0, got {L}")
    _check_size(L, limit)
    dim = 1 << L
    return np.full(dim, 1 / np.sqrt(dim), dtype=complex)


def _num_qubits(psi: np.ndarray) -> int:
    L = int(psi.size).bit_length() - 1
    if psi.ndim != 1 or psi.size != 1 << L:
        raise ValueError(f"state must be a flat array of length 2**L, got shape {psi.shape}")
    return L


def apply_driver(psi: np.ndarray) -> np.ndarray:
    """``H_i @ psi`` without forming the matrix."""
    psi = np.asarray(psi, dtype=complex)
    L = _num_qubits(psi)
    out = 0.5 * L * psi
    for q in range(L):
        view = psi.reshape(-1, 2, 1 << q)
        out -= 0.5 * view[:, ::-1, :].reshape(-1)
    return out


def _rotate_driver(psi: np.ndarray, theta: float) -> None:
    # exp(-i theta (I - X)/2) = alpha I + beta X on every qubit, in place
    L = _num_qubits(psi)
    phase = np.exp(-1j * theta)
    alpha, beta = 0.5 * (1 + phase), 0.5 * (1 - phase)
    for q in range(L):
        view = psi.reshape(-1, 2, 1 << q)
        a = view[:, 0, :].copy()
        b = view[:, 1, :]
        view[:, 0, :] = alpha * a + beta * b
        view[:, 1, :] = beta * a + alpha * b


def energy_expectation(psi: np.ndarray, hp: DiagonalHamiltonian) -> float:
    return float(np.dot(np.abs(psi) ** 2, hp.values))


def ground_population(psi: np.ndarray, hp: DiagonalHamiltonian) -> float:
    """Probability of measuring a basis state of minimal H_p energy."""
    return float(np.sum(np.abs(psi[hp.ground_mask()]) ** 2))


def evolve(psi: np.ndarray, hp: DiagonalHamiltonian, sched: Schedule,
           trace=None, callback=None) -> np.ndarray:
    """Integrate ``i dpsi/dt = H(t) psi`` from 0 to ``sched.T``.

    ``trace`` may be a path or a writable text file; one row
    ``step t s norm energy_expectation ground_population`` is written for the
    initial state and after every step (energy is that of H_p).
    ``callback(step, t, psi)`` is called at the same points.
    """
    psi = np.array(psi, dtype=complex)
    if psi.size != hp.values.size:
        raise ValueError(f"state has {psi.size} amplitudes, Hamiltonian {hp.values.size}")
    L = hp.L
    dt = sched.dt
    h = hp.values
    hmax = float(np.abs(h).max()) if h.size else 0.0
    if dt * max(hmax, L) > np.pi:
        warnings.warn(
            f"step dt={dt:g} allows a phase of {dt * max(hmax, L):.3g} rad per step "
            f"(> pi); increase steps to avoid aliasing",
            RuntimeWarning, stacklevel=2,
        )

    if trace is None:
        ctx = nullcontext(None)
    elif isinstance(trace, (str, os.PathLike)):
        ctx = open(trace, "w")
    else:
        ctx = nullcontext(trace)

    with ctx as fh:
        def report(step, t):
            if fh is not None:
                fh.write(
                    f"{step} {t:.10g} {sched.s(t):.10g} {np.vdot(psi, psi).real:.15f} "
                    f"{energy_expectation(psi, hp):.12g} {ground_population(psi, hp):.12g}\n"
                )
            if callback is not None:
                callback(step, t, psi)

        if fh is not None:
            fh.write("# step t s norm energy_expectation ground_population\n")
        report(0, 0.0)
        for step in range(sched.steps):
            s_mid = sched.s((step + 0.5) * dt)
            half = np.exp(-0.5j * dt * s_mid * h)
            psi *= half
            _rotate_driver(psi, dt * (1 - s_mid))
            psi *= half
            report(step + 1, (step + 1) * dt)
    return psi


def sample(psi: np.ndarray, seed, size=None):
    """Computational-basis measurement; returns an index (or array of ``size``)."""
    p = np.abs(np.asarray(psi)) ** 2
    p /= p.sum()
    rng = np.random.default_rng(seed)
    out = rng.choice(p.size, size=size, p=p)
    return int(out) if size is None else out


def measure_energy(hp: DiagonalHamiltonian, index: int) -> float:
    return float(hp.values[index])
