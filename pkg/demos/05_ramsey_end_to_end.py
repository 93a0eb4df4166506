"""
Computing R(m, n; r) end to end
===============================

The search increases N from a strict lower bound, runs the adiabatic
evolution on B(N, r) qubits, and measures up to k times.  A zero-energy
reading proves N < R; no zero in k readings is taken as evidence that the
minimum is positive.  The exhaustive oracle backend gives the same answer
with certainty on small instances.
"""

from hyperramsey import (InstanceTooLarge, RepetitionPolicy, Schedule, ramsey_aqe,
                         ramsey_oracle, repetitions)

policy = RepetitionPolicy(epsilon=0.5, delta=0.99)
print("repetitions per N:", repetitions(policy))

result = ramsey_aqe(3, 3, 2, low=5, sched=Schedule(100.0, 2000), pol=policy, seed=42)
print(result.report())

print(ramsey_oracle(3, 3, 2, low=1).report())

try:
    ramsey_aqe(4, 4, 3)
except InstanceTooLarge as exc:
    print("refused:", exc)
