"""Smoke test for the Python bindings.

Build and install first:

    pip install --no-build-isolation -e .
    python python/smoke_test.py
"""

import math

import idempotent as ip

INF = math.inf


def check_semirings():
    mp = ip.Semiring("max-plus")
    assert (mp.zero, mp.one) == (-INF, 0.0)
    assert mp.add(3, 5) == 5 and mp.mul(3, 5) == 8
    assert mp.mul(mp.zero, 7) == -INF
    assert mp.leq(3, 5) and not mp.leq(5, 3)
    assert ip.Semiring("MIN-PLUS").leq(5, 3)
    assert "arith" in ip.Semiring.names()
    report = mp.check_axioms(trials=300, seed=1)
    assert all(v == "pass" for v in report.values()), report
    report = ip.Semiring("fuzzy").check_axioms(trials=300, seed=1, interval=True)
    assert report["idempotent"] == "pass"
    assert ip.Semiring("arith").check_axioms(trials=50)["idempotent"] == "not claimed"
    try:
        mp.add(INF, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("+inf is not a max-plus element")


def check_dequantization():
    assert abs(ip.dequantized_add(0, 0, 1.0) - math.log(2)) < 1e-12
    assert ip.dequantized_add(0, 10, 0.01) > 10
    assert abs(ip.dequantize_map(2 * 3, 0.5) - (ip.dequantize_map(2, 0.5) + ip.dequantize_map(3, 0.5))) < 1e-12
    assert ip.dequantize_map(0, 1.0) == -INF


def check_matrices():
    h = ip.Matrix("min-plus", [[INF, 4, 7], [INF, INF, 1], [INF, INF, INF]])
    star = h.star()
    assert star.to_list() == [[0, 4, 5], [INF, 0, 1], [INF, INF, 0]]
    assert star == ip.Matrix.identity("min-plus", 3) + h @ star
    f = ip.Matrix("min-plus", [[INF], [INF], [0]])
    for method in ("star", "jacobi", "gauss-seidel"):
        x, _, converged = ip.solve_bellman(h, f, method=method)
        assert converged and x.to_list() == [[5], [1], [0]], method
    cycle = ip.Matrix("min-plus", [[INF, 1], [-2, INF]])
    try:
        cycle.star()
    except ip.DivergenceError:
        pass
    else:
        raise AssertionError("negative cycle must diverge")
    paths = ip.shortest_paths("max-min", "3\n0 1 4\n1 2 1\n0 2 7\n")
    assert paths.to_list()[0][2] == 7


def check_intervals():
    lo, hi = ip.solve_interval_system(
        "min-plus",
        [[INF, 3], [2, INF]],
        [[INF, 1], [2, INF]],
        [[0, INF], [INF, 0]],
        [[0, INF], [INF, 0]],
    )
    assert lo == [[0, 3], [2, 0]] and hi == [[0, 1], [2, 0]]


def check_analysis():
    assert ip.integrate("max-plus", {"a": 1, "b": 5, "c": 3}) == 5
    assert ip.integrate("max-plus", {}) == -INF
    assert ip.integrate_against("max-plus", {"a": 1, "b": 5}, {"a": 10, "b": 0}) == 11
    assert ip.integrate_against("min-plus", {"a": 1, "b": 5}, {"a": 10, "b": 0}) == 5
    assert ip.measure_of("fuzzy", {"sunny": 0.8, "rain": 0.5}, ["rain"]) == 0.5


def check_fuzzy():
    a, b = {"x": 0.2, "y": 0.9}, {"y": 0.4, "z": 0.7}
    assert ip.fuzzy_union("fuzzy", a, b) == {"x": 0.2, "y": 0.9, "z": 0.7}
    assert ip.fuzzy_intersection("fuzzy", a, b) == {"x": 0.0, "y": 0.4, "z": 0.0}
    p = ip.possibility("fuzzy", {"rain": 0.6, "storm": 1.0}, {"rain": 0.5, "storm": 0.2})
    assert p == 0.5


if __name__ == "__main__":
    for check in (check_semirings, check_dequantization, check_matrices, check_intervals, check_analysis, check_fuzzy):
        check()
        print(f"{check.__name__}: ok")
