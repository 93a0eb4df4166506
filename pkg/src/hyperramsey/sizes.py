"""Register sizes for Ramsey instances and a pre-flight feasibility check.

A backend scanning N upward needs ``B(N, r)`` (qu)bits at every N it visits.
When the answer is already published, the final N of the loop is known in
advance, so an infeasible run can be refused up front with the exact size
it would need (for example 286 qubits for R(4,4;3) = 13).
"""

from math import comb

from .errors import InstanceTooLarge

# Published two-color values R(m, n; r) with m <= n.
KNOWN_RAMSEY = {
    (3, 3, 2): 6,
    (3, 4, 2): 9,
    (3, 5, 2): 14,
    (3, 6, 2): 18,
    (3, 7, 2): 23,
    (3, 8, 2): 28,
    (3, 9, 2): 36,
    (4, 4, 2): 18,
    (4, 5, 2): 25,
    (4, 4, 3): 13,
}


def known_ramsey(m: int, n: int, r: int):
    """Published value of R(m, n; r), or None."""
    if m > n:
        m, n = n, m
    if r == 2 and m == 2:
        return n
    return KNOWN_RAMSEY.get((m, n, r))


def qubits_required(N: int, r: int) -> int:
    return comb(N, r)


def check_feasible(m: int, n: int, r: int, limit: int):
    """Raise InstanceTooLarge if the loop is known to reach an N beyond ``limit``."""
    R = known_ramsey(m, n, r)
    if R is None:
        return
    L = qubits_required(R, r)
    if L > limit:
        raise InstanceTooLarge(
            L, limit, N=R,
            message=(
                f"R({m},{n};{r}) = {R} requires a {L}-qubit register at N={R}; "
                f"the limit is {limit}, refusing to simulate"
            ),
        )
