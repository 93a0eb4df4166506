"""Two-color hypergraph Ramsey numbers R(m, n; r) as cost minimization,
solved exhaustively or by simulated adiabatic quantum evolution."""

from .codec import (EdgeIndexMap, HypergraphBits, binomial, decode, encode,
                    rank_edge, unrank_edge)
from .cost import CostParams, cost, cost_table, count_cliques, count_independent
from .driver import RamseyResult, RepetitionPolicy, ramsey_aqe, ramsey_oracle, repetitions
from .engine import (DiagonalHamiltonian, Schedule, apply_driver, evolve,
                     ground_population, measure_energy, prepare_uniform, sample)
from .errors import (InstanceTooLarge, InvalidEdgeError, ParameterError, ParseError,
                     TooManyTermsError)
from .oracle import minimize, ramsey_classical
from .pauli import PauliPolynomial, compile_cost, emit, evaluate, parse
from .sizes import known_ramsey, qubits_required

__version__ = "0.1.0"
