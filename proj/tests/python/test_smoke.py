"""Python smoke tests against the compiled extension."""

import math

import numpy as np
import pytest

import catkit


def test_ladder_and_coherent():
    space = catkit.FockSpace(32, 4)
    ops = catkit.make_ladder(space)
    assert ops.lowering[0, 1] == pytest.approx(1.0)

    state = catkit.coherent_state(space, 1.0)
    n_mean = catkit.expectation_real(state, ops.number)
    assert n_mean == pytest.approx(1.0, abs=1e-10)

    parity = catkit.expectation_real(state, catkit.parity_operator(space))
    assert parity == pytest.approx(math.exp(-2.0), abs=1e-10)


def test_cat_witness_kernel():
    space = catkit.FockSpace(48, 4)
    cat = catkit.cat_state(space, catkit.CatSpec(alpha=1.0, parity=1))
    spec = catkit.WitnessSpec(alpha=1.0, gamma=1.0, branch=1)
    value = catkit.expectation_real(cat, catkit.witness_operator(space, spec))
    assert abs(value) <= 1e-8

    # mismatch adds 2 gamma
    wrong = catkit.WitnessSpec(alpha=1.0, gamma=1.0, branch=-1)
    off = catkit.expectation_real(cat, catkit.witness_operator(space, wrong))
    assert off - value == pytest.approx(2.0, abs=1e-8)


def test_truncation_error_maps_to_python():
    space = catkit.FockSpace(16, 2)
    with pytest.raises(catkit.TruncationError):
        catkit.coherent_state(space, 3.0)


def test_su11_casimir():
    space = catkit.FockSpace(32, 4)
    gen = catkit.make_su11(space)
    cas = catkit.casimir_quadratic(gen)
    assert cas[0, 0].real == pytest.approx(-3.0 / 16.0, abs=1e-12)
    assert catkit.casimir_reduction_residual(gen) <= 1e-10


def test_fw_and_kinetic_series():
    gh = catkit.free_dirac_hamiltonian(0.2, 1.0)
    res = catkit.fw_iterate(gh)
    assert res.converged
    evals = np.linalg.eigvalsh(res.transformed.total())
    want = math.sqrt(1.04)
    assert np.allclose(np.abs(evals), want, atol=1e-8)

    assert catkit.fw_kinetic_series(0.3, 1.0, 10) == pytest.approx(
        math.sqrt(1.09), abs=1e-6
    )


def test_relativistic_catability():
    spec = catkit.DiracCatSpec(alpha=1.0, branch=1, gamma=1.0, mass=1.0, momentum=1.0)
    closed = catkit.relativistic_catability_closed_form(spec)
    assert closed == pytest.approx(1.0 - 1.0 / math.sqrt(2.0), abs=1e-12)

    space = catkit.FockSpace(64, 4)
    numeric = catkit.relativistic_catability_numeric(space, spec)
    assert numeric == pytest.approx(closed, abs=1e-8)


def test_revival_time_formula():
    assert catkit.revival_time(50.0, 1.0) == pytest.approx(200.0 * math.pi)


def test_xi_quick():
    space = catkit.FockSpace(48, 4)
    cat = catkit.cat_state(space, catkit.CatSpec(alpha=1.2, parity=1))
    res = catkit.xi_measure(space, cat, 1.2, 1)
    assert res.xi <= 1e-6

    coh = catkit.coherent_state(space, 1.2)
    res2 = catkit.xi_measure(space, coh, 1.2, 1)
    assert res2.xi >= 0.95


def test_spin_witness():
    space = catkit.FockSpace(32, 4)
    spin = catkit.make_spin_space(1.0)
    spec = catkit.SpinCatWitnessSpec(alpha=1.0, gamma=1.0, lambda_=0.3, branch=1, s=1.0)
    o = catkit.spin_cat_witness(space, spin, spec)
    evals = np.linalg.eigvalsh(o)
    assert evals.min() >= 0.3 * 2.0 - 1e-9

    closed = catkit.spin_cat_expectation_closed_form(1.0, 0.5, spec)
    chi = np.zeros(3, dtype=complex)
    chi[0] = 1.0
    numeric = catkit.spin_cat_expectation_numeric(space, spin, spec, 1.0, chi)
    closed_top = catkit.spin_cat_expectation_closed_form(1.0, 1.0, spec)
    assert numeric == pytest.approx(closed_top, abs=1e-9)
    assert closed != pytest.approx(closed_top)  # spin parity matters


def test_sweep_csv_roundtrip():
    space = catkit.FockSpace(48, 4)
    table = catkit.robustness_scan(space, 1.0, [1.0])
    assert table.columns == ["eta", "branch", "xi", "witness_expectation"]
    assert len(table.rows) == 2
    body = table.body_csv()
    assert body.splitlines()[0] == "eta,branch,xi,witness_expectation"
    assert table.body_csv() == body  # deterministic re-serialization
