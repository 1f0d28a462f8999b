import math

import pytest

import socdyn

SET_A = dict(alpha=2, beta=1, gamma=1, delta=1, epsilon=2, eta=0.5)
SET_B = dict(alpha=2, beta=-2, gamma=1.5, delta=1, epsilon=1, eta=0.2)
SET_D = dict(SET_A, gamma=2)


def test_payoffs_at_coexistence():
    pi = socdyn.payoff_vector([0, 1 / 3, 2 / 3, 0], SET_A)
    assert pi[1] == pytest.approx(1, abs=1e-12)
    assert pi[2] == pytest.approx(1, abs=1e-12)
    assert socdyn.coexistence_payoff(SET_B) == pytest.approx(1 / 3, abs=1e-12)


def test_classify_set_a_and_b():
    a = socdyn.classify(SET_A)
    assert [e["figure"] for e in a["edges"]] == ["2a", "3a", "4a", "5a"]
    assert [s["label"] for s in a["global"]["attractors"]] == ["O", "H", "P", "N"]
    b = socdyn.classify(SET_B)
    assert [e["figure"] for e in b["edges"]] == ["2e", "3e", "4a", "5c"]
    assert sorted(s["label"] for s in b["global"]["attractors"]) == ["HP", "N", "O"]


def test_degenerate_raises():
    with pytest.raises(socdyn.DegenerateError):
        socdyn.classify(SET_D)
    assert socdyn.validate(SET_D)["degenerate_quantities"] == ["epsilon-gamma"]


def test_integrate_threshold():
    _, states, verdict = socdyn.integrate([0, 0, 0.26, 0.74], SET_A)
    assert verdict == "converged"
    assert states[-1][2] == pytest.approx(1, abs=1e-6)


def test_sampling_deterministic():
    xs = socdyn.sample_simplex(5, seed=7)
    assert xs == socdyn.sample_simplex(5, seed=7)
    assert all(math.isclose(sum(x), 1, abs_tol=1e-12) for x in xs)


def test_basins_small():
    rep = socdyn.basins(SET_A, 50, seed=1, jobs=1)
    total = sum(a["fraction"] for a in rep["attractors"]) + rep["unresolved"]["fraction"]
    assert total == pytest.approx(1, abs=1e-12)


def test_cli_exit_codes():
    code, out, _ = socdyn.run_cli(["check"] + [f"--set={k}={v}" for k, v in SET_A.items()])
    assert code == 0 and "nash vertices: O H P N" in out
    code, _, _ = socdyn.run_cli(["check"] + [f"--set={k}={v}" for k, v in SET_D.items()])
    assert code == 3
