"""Smoke tests for the python bindings."""

import math

import pytest

import tworoute as tr


def test_matrix_and_checkers():
    rows = [
        [0, 5, 3, 5, 2],
        [5, 0, 0, 4, 4],
        [3, 0, 0, 0, 1],
        [5, 4, 0, 0, 2],
        [2, 4, 1, 2, 0],
    ]
    m = tr.SymmetricCostMatrix(rows)
    assert m.n == 5
    assert m.cost(1, 2) == 5
    assert tr.check_kalmanson(m).holds
    assert tr.check_kalmanson_adjacent(m).holds
    assert tr.check_demidenko(m).holds

    phi = tr.Permutation([3, 2, 4, 1, 5])
    disguised = tr.permute(m, phi)
    res = tr.check_kalmanson(disguised)
    assert not res.holds
    assert res.witness is not None

    with pytest.raises(ValueError):
        tr.SymmetricCostMatrix([[0, 1], [2, 0]])


def test_generator_and_exact_solver():
    p = tr.GeneratorParams()
    p.n = 8
    p.seed = 42
    g = tr.generate_2tsp_instance(p, 2)
    assert g.known_optimum > 0

    restored = tr.permute(g.source.matrix, g.source.hidden_order)
    assert tr.check_kalmanson(restored, True).holds

    brute = tr.oracle_2tsp(g.instance)
    assert math.isclose(brute.total_length, g.known_optimum, rel_tol=1e-9)

    sol = tr.ks_heuristic(g.instance)
    assert math.isclose(sol.total_length, g.known_optimum, rel_tol=1e-9)
    assert tr.evaluate_solution(g.instance, sol).feasible


def test_low_memory_variant_matches():
    p = tr.GeneratorParams()
    p.n = 9
    p.seed = 7
    g = tr.generate_2tsp_instance(p, 3)
    a = tr.solve_balanced_2tsp(g.instance).total_length
    b = tr.solve_balanced_2tsp_lowmem(g.instance).total_length
    assert a == b


def test_pyramidal_and_belperm():
    d = tr.AsymmetricCostMatrix(
        [[0, 22, 40, 22], [22, 0, 22, 20], [40, 22, 0, 22], [22, 20, 22, 0]]
    )
    t = tr.optimal_pyramidal(d)
    assert t.length == 88
    b = tr.belperm(d, tr.Permutation([1, 3, 2, 4]))
    assert b.length == 88


def test_two_vrp_exact_vs_oracle():
    inst = tr.random_2vrp_instance(5)
    dp = tr.solve_2vrp_exact(inst)
    brute = tr.oracle_2vrp(inst)
    assert math.isclose(dp.cost, brute.cost, rel_tol=1e-12)
    assert tr.evaluate_2vrp(inst, dp).feasible


def test_mapping_and_heuristic():
    p = tr.GeneratorParams()
    p.n = 10
    p.seed = 3
    g = tr.generate_2tsp_instance(p, 4)
    mapped = tr.map_2tsp_to_2vrp(g.instance)
    assert mapped.n == 12
    assert mapped.capacity(1) == 6

    opts = tr.HeuristicOptions()
    opts.stop_at = g.known_optimum
    res = tr.two_vrp_heuristic(
        mapped,
        tr.SlidingParams(2, 1),
        tr.StartGenerator.ksh,
        3,
        1,
        source_2tsp=g.instance,
        options=opts,
    )
    assert math.isclose(res.best.cost, g.known_optimum, rel_tol=1e-9)
    assert len(res.log) > 0


def test_guard_errors_surface():
    inst = tr.random_2vrp_instance(1, tr.RandomVrpParams())
    opts = tr.VrpSolveOptions()
    opts.max_subset_bits = 3
    with pytest.raises(tr.GuardError):
        tr.solve_2vrp_exact(inst, opts)


def test_file_round_trip(tmp_path):
    inst = tr.random_2vrp_instance(9)
    path = tmp_path / "inst.2vrp"
    tr.write_2vrp_instance(path, inst)
    back = tr.read_2vrp_instance(path)
    assert back.n == inst.n
    assert back.capacity(2) == inst.capacity(2)
