"""
The Ramsey cost function and exhaustive minimization
====================================================

The cost of a hypergraph is the number of m-vertex complete subhypergraphs
plus the number of n-vertex independent sets.  It is zero exactly when the
hypergraph witnesses N < R(m, n; r).  Scanning N upward until the minimum
becomes positive gives R(m, n; r).
"""

from hyperramsey import (CostParams, EdgeIndexMap, cost, count_cliques, count_independent,
                         decode, encode, minimize, ramsey_classical)

params = CostParams(N=5, m=3, n=3, r=2)
cycle = encode(EdgeIndexMap(5, 2), [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
print("5-cycle: triangles", count_cliques(params, cycle),
      "independent triples", count_independent(params, cycle),
      "cost", cost(params, cycle))

# Exhaustive search over all 2^10 graphs on 5 vertices finds a zero-cost one ...
best, witness = minimize(params)
print("N=5 minimum", best, "witness edges", sorted(decode(witness)))

# ... but every 2-coloring of K6 has at least two monochromatic triangles.
best6, _ = minimize(CostParams(6, 3, 3, 2))
print("N=6 minimum", best6)

for m, n, r in [(2, 2, 2), (3, 3, 3), (3, 3, 2), (2, 4, 1)]:
    R, trace = ramsey_classical(m, n, r, low=1)
    print(f"R({m},{n};{r}) = {R}   minima per N: {trace}")
