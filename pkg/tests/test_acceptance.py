"""Exit criteria for the package, one marked group per criterion.

A pass/fail line per criterion is printed in the pytest terminal summary.
"""

import time
from itertools import combinations
from math import comb

import numpy as np
import pytest

from hyperramsey.cli import main
from hyperramsey.codec import EdgeIndexMap
from hyperramsey.cost import CostParams, cost_table
from hyperramsey.driver import RepetitionPolicy, repetitions
from hyperramsey.engine import (DiagonalHamiltonian, Schedule, evolve, ground_population,
                                prepare_uniform)
from hyperramsey.pauli import compile_cost, evaluate
from dense import dense_evolve
from naive import index_to_bits, naive_counts, suffix_edge_order


@pytest.mark.criterion(1, "codec bijection and edge order, < 1 s")
def test_codec_bijection():
    start = time.perf_counter()
    for N in range(1, 9):
        for r in range(1, 5):
            imap = EdgeIndexMap(N, r)
            edges = [imap.unrank(k) for k in range(1, imap.L + 1)]
            assert sorted(edges) == list(combinations(range(1, N + 1), r))
            assert all(imap.rank(e) == k for k, e in enumerate(edges, start=1))
    elapsed = time.perf_counter() - start

    n6 = EdgeIndexMap(6, 2)
    string_r2 = [(i, j) for j in range(1, 6) for i in range(j + 1, 7)]
    assert [tuple(reversed(n6.unrank(k))) for k in range(1, 16)] == string_r2
    n5 = EdgeIndexMap(5, 3)
    string_r3 = [(i, j, k) for k in range(1, 4) for j in range(k + 1, 5) for i in range(j + 1, 6)]
    assert [tuple(reversed(n5.unrank(k))) for k in range(1, 11)] == string_r3
    assert string_r3 == suffix_edge_order(5, 3)
    assert elapsed < 1.0


@pytest.mark.criterion(2, "mask cost equals naive products on all 2^10 strings, < 5 s")
@pytest.mark.parametrize("inst", [(5, 3, 3, 2), (5, 4, 4, 3)])
def test_cost_oracle_equivalence(inst):
    start = time.perf_counter()
    N, m, n, r = inst
    p = CostParams(*inst)
    assert p.L == 10
    table = cost_table(p)
    for x in range(1 << p.L):
        assert table[x] == sum(naive_counts(N, m, n, r, index_to_bits(x, p.L)))
    assert time.perf_counter() - start < 5.0


@pytest.mark.criterion(3, "oracle backend: R(2,2;2)=2, R(3,3;3)=3, R(3,3;2)=6, < 30 s")
def test_classical_values(capsys):
    start = time.perf_counter()
    outputs = {}
    for m, n, r in [(2, 2, 2), (3, 3, 3), (3, 3, 2)]:
        assert main(["ramsey", str(m), str(n), str(r), "--backend", "oracle", "--low", "1"]) == 0
        outputs[m, n, r] = capsys.readouterr().out.splitlines()
    assert time.perf_counter() - start < 30.0
    assert outputs[2, 2, 2][0] == "R(2,2;2) = 2"
    assert outputs[3, 3, 3][0] == "R(3,3;3) = 3"
    lines = outputs[3, 3, 2]
    assert lines[0] == "R(3,3;2) = 6"
    rows = [ln.split() for ln in lines if ln[0].isdigit()]
    assert [(int(row[0]), int(row[3])) for row in rows[-2:]] == [(5, 0), (6, 2)]


@pytest.mark.criterion(4, "Pauli expansion equals cost; locality equals max{B(m,r), B(n,r)}, < 5 s")
@pytest.mark.parametrize("inst", [(4, 3, 3, 2), (4, 4, 4, 3)])
def test_pauli_equivalence(inst):
    start = time.perf_counter()
    p = CostParams(*inst)
    poly = compile_cost(p)
    table = cost_table(p)
    for x in range(1 << p.L):
        value = evaluate(poly, x)
        assert abs(value - round(value)) <= 1e-9
        assert round(value) == table[x]
    assert time.perf_counter() - start < 5.0


@pytest.mark.criterion(4, "Pauli expansion equals cost; locality equals max{B(m,r), B(n,r)}, < 5 s")
@pytest.mark.parametrize("inst", [(4, 3, 3, 2), (4, 4, 4, 3)])
def test_pauli_locality(inst):
    N, m, n, r = inst
    poly = compile_cost(CostParams(*inst))
    assert poly.locality == max(comb(m, r), comb(n, r))


@pytest.mark.criterion(5, "norm to 1e-9 over 2000 steps at L=10; Strang error ratio >= 3.5")
def test_norm_conservation():
    hp = DiagonalHamiltonian.from_cost(CostParams(5, 3, 3, 2))
    assert hp.L == 10
    deviations = []
    evolve(prepare_uniform(10), hp, Schedule(100.0, 2000),
           callback=lambda step, t, psi: deviations.append(abs(np.vdot(psi, psi).real - 1)))
    assert len(deviations) == 2001
    assert max(deviations) <= 1e-9


@pytest.mark.criterion(5, "norm to 1e-9 over 2000 steps at L=10; Strang error ratio >= 3.5")
@pytest.mark.parametrize("inst, T", [((4, 3, 3, 2), 5.0), ((3, 2, 3, 2), 4.0), ((4, 3, 4, 3), 3.0)])
def test_second_order(inst, T):
    hp = DiagonalHamiltonian.from_cost(CostParams(*inst))
    assert hp.L <= 6
    psi0 = prepare_uniform(hp.L)
    ref = dense_evolve(psi0, hp.values, T)
    errors = [np.linalg.norm(evolve(psi0, hp, Schedule(T, s)) - ref) for s in (50, 100, 200)]
    for coarse, fine in zip(errors, errors[1:]):
        assert coarse / fine >= 3.5


@pytest.mark.criterion(6, "adiabatic success on (5,3,3;2) and aqe backend returns 6, < 2 min")
def test_adiabatic_success(capsys):
    start = time.perf_counter()
    hp = DiagonalHamiltonian.from_cost(CostParams(5, 3, 3, 2))
    slow = ground_population(evolve(prepare_uniform(10), hp, Schedule(100.0, 2000)), hp)
    fast = ground_population(evolve(prepare_uniform(10), hp, Schedule(1.0, 20)), hp)
    print(f"ground population: T=100 {slow:.4f}, T=1 {fast:.4f}")
    assert slow > fast
    capsys.readouterr()
    assert main(["ramsey", "3", "3", "2", "--backend", "aqe", "--low", "5", "--seed", "42"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "R(3,3;2) = 6"
    assert time.perf_counter() - start < 120.0


@pytest.mark.criterion(7, "R(4,4;3): report 286 qubits at N=13 and refuse")
def test_size_report(capsys):
    assert comb(13, 3) == 286
    assert EdgeIndexMap(13, 3).L == 286
    code = main(["ramsey", "4", "4", "3", "--backend", "aqe"])
    err = capsys.readouterr().err
    assert code != 0
    assert "286" in err and "N=13" in err and "refus" in err


@pytest.mark.criterion(8, "repetition count ceil(ln(1-delta)/ln(epsilon))")
def test_repetition_formula():
    assert repetitions(RepetitionPolicy(0.5, 0.99)) == 7
    assert repetitions(RepetitionPolicy(0.1, 0.9)) == 1
