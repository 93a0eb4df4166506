"""
Encoding hypergraphs as bit strings
===================================

An r-uniform hypergraph on vertices 1..N is a subset of the B(N, r)
possible r-edges, so it can be written as a bit string of that length once
the edges are put in a fixed order.  Edges are ordered lexicographically by
their ascending vertex tuples.
"""

from hyperramsey import EdgeIndexMap, binomial, decode, encode

# Ordinary graphs (r=2) on 5 vertices: 10 possible edges.
imap = EdgeIndexMap(5, 2)
for k in range(1, imap.L + 1):
    print(k, imap.unrank(k))

# The 5-cycle 1-2-3-4-5-1 and the pentagram 1-3-5-2-4-1 are complements.
cycle = encode(imap, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
star = encode(imap, [(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)])
print("cycle    ", cycle.to_string())
print("pentagram", star.to_string())
assert star == cycle.complement()

# The bit string doubles as the index of a basis state: edge k is bit k-1.
print("basis index of the cycle:", cycle.bits)
assert decode(cycle) == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}

# 3-uniform hypergraphs: the order starts {1,2,3}, {1,2,4}, ... and ends {3,4,5}.
imap3 = EdgeIndexMap(5, 3)
print([imap3.unrank(k) for k in range(1, imap3.L + 1)])

# Register sizes grow quickly; R(4,4;3) = 13 would need this many qubits:
print("B(13, 3) =", binomial(13, 3))
