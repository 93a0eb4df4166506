"""
Adiabatic evolution toward a Ramsey witness
===========================================

Start in the uniform superposition, the ground state of the transverse-field
driver, and interpolate linearly to the diagonal cost Hamiltonian over a
runtime T.  Longer runtimes leave more probability on zero-cost graphs.
"""

import io

from hyperramsey import (CostParams, DiagonalHamiltonian, Schedule, decode, evolve,
                         ground_population, prepare_uniform, sample)
from hyperramsey.codec import HypergraphBits

params = CostParams(5, 3, 3, 2)
hp = DiagonalHamiltonian.from_cost(params)
print("qubits:", hp.L, " zero-cost states:", int(hp.ground_mask().sum()))

for T in [1, 3, 10, 30, 100]:
    psi = evolve(prepare_uniform(hp.L), hp, Schedule(T, 20 * T))
    print(f"T={T:>4}  ground population {ground_population(psi, hp):.4f}")

# Trace of the T=100 run: step t s norm <H_p> ground_population
buf = io.StringIO()
psi = evolve(prepare_uniform(hp.L), hp, Schedule(100.0, 2000), trace=buf)
rows = buf.getvalue().splitlines()
print("\n".join(rows[:3] + ["..."] + rows[-2:]))

x = sample(psi, seed=3)
print("sampled graph", sorted(decode(HypergraphBits(params.map, x))), "energy", hp.values[x])
