"""
The cost as a Pauli-Z Hamiltonian
=================================

Writing each edge bit as x = (1 - Z)/2 turns the cost into a polynomial in
Pauli-Z operators.  Every product involves at most max{B(m,r), B(n,r)}
qubits.  When m == n and that number is odd, the top-degree terms of the
clique and independent-set products cancel, so the compiled operator is one
degree lower.
"""

from hyperramsey import CostParams, compile_cost, cost_table, emit, evaluate, parse

for inst in [(4, 3, 3, 2), (4, 4, 4, 3), (5, 3, 4, 2)]:
    params = CostParams(*inst)
    poly = compile_cost(params)
    print(f"(N,m,n,r)={inst}: {len(poly)} terms, locality {poly.locality}, "
          f"bound {params.locality}, constant term {poly.terms[()]}")

params = CostParams(4, 3, 3, 2)
poly = compile_cost(params)
table = cost_table(params)
assert all(round(evaluate(poly, x)) == table[x] for x in range(1 << params.L))

text = emit(poly)
print(text)
assert parse(text) == poly
