import json

import numpy as np
import pytest

from chainent import entanglement as ent
from chainent import gaussian, models
from chainent.entanglement import Phase
from chainent.errors import InvalidStateError
from chainent.models import Boundary, DisorderSpec, ModelSpec


def test_mode_index():
    assert ent.mode_index((0, "a")) == 0
    assert ent.mode_index((0, "b")) == 1
    assert ent.mode_index((3, "a")) == 6


def test_same_sublattice_eta_vanishes():
    spec = ModelSpec.ssh(9, 0.4)
    for d in range(1, 5):
        assert ent.eta_analytic(spec, (0, "a"), (d, "a")).value == 0.0
        assert ent.eta_analytic(spec, (0, "b"), (d, "b")).value == 0.0


def test_eta_site_order_symmetry():
    spec = ModelSpec.ssh(9, 0.4)
    e1 = ent.eta_analytic(spec, (2, "a"), (3, "b")).value
    e2 = ent.eta_analytic(spec, (3, "b"), (2, "a")).value
    assert e1 == pytest.approx(e2, abs=1e-14)


def test_eta_finite_converges_to_thermodynamic():
    lam = 0.2
    thermo = ent.eta_thermodynamic(lam, pair="intra").value
    prev = abs(ent.eta_analytic(ModelSpec.ssh(11, lam),
                                (0, "a"), (0, "b")).value - thermo)
    for N in (101, 1001):
        spec = ModelSpec.ssh(N, lam)
        err = abs(ent.eta_analytic(spec, (0, "a"), (0, "b")).value - thermo)
        assert err < prev
        prev = err
    assert prev < 1e-5


def test_rdm_pair_routes_agree():
    """Analytic route and real-space pipeline give the same matrix."""
    spec = ModelSpec.ssh(8, 0.4)
    for pair in [((0, "a"), (0, "b")), ((0, "b"), (1, "a"))]:
        analytic = ent.rdm_pair(spec, *pair).matrix
        M = models.realspace_hamiltonian(spec)
        Mbar = gaussian.spectral_flatten(M)
        sub = gaussian.restrict(Mbar, [ent.mode_index(s) for s in pair])
        pipeline = gaussian.rdm_from_restriction(sub).matrix
        assert np.allclose(analytic, pipeline, atol=1e-12)


def test_rdm_matrix_form():
    eta = 0.6
    rho = ent.rdm_matrix_from_eta(eta)
    assert abs(np.trace(rho) - 1.0) < 1e-15
    assert rho[1, 2] == pytest.approx(-eta / 2.0)
    assert rho[0, 0] == pytest.approx((1 - eta * eta) / 4.0)
    assert rho[3, 3] == pytest.approx((1 - eta * eta) / 4.0)
    assert rho[1, 1] == pytest.approx((1 + eta * eta) / 4.0)


def test_concurrence_closed_form_matches_wootters():
    for eta in np.linspace(-0.99, 0.99, 41):
        rho = ent.rdm_matrix_from_eta(eta)
        assert ent.concurrence(rho) == pytest.approx(
            ent.concurrence_from_eta(eta), abs=1e-10)


def test_concurrence_threshold():
    assert ent.concurrence_from_eta(np.sqrt(2.0) - 1.0) == pytest.approx(
        0.0, abs=1e-12)
    assert ent.concurrence_from_eta(np.sqrt(2.0) - 1.0 + 1e-6) > 1e-7
    assert ent.concurrence_from_eta(0.3) == 0.0
    assert ent.concurrence_from_eta(1.0) == pytest.approx(1.0)


def test_concurrence_rejects_nonstate():
    with pytest.raises(InvalidStateError):
        ent.concurrence(np.eye(4))  # trace 4, not a state


def test_classify_phase():
    assert ent.classify_phase(0.5, 0.0) is Phase.P0
    assert ent.classify_phase(0.0, 0.5) is Phase.P1
    assert ent.classify_phase(0.5, 0.2) is Phase.Q0
    assert ent.classify_phase(0.2, 0.5) is Phase.Q1
    assert ent.classify_phase(0.3, 0.3) is Phase.CRITICAL


def test_entangled_graph_phases():
    for lam, phase in [(-0.5, Phase.P0), (-0.07, Phase.Q0),
                       (0.07, Phase.Q1), (0.5, Phase.P1)]:
        g = ent.entangled_graph(ModelSpec.ssh(12, lam))
        assert g.phase is phase, lam


def test_entangled_graph_edge_counts():
    # deep in P1 every cell contributes exactly one inter-cell edge
    g = ent.entangled_graph(ModelSpec.ssh(10, 0.5))
    assert len(g.edges) == 10
    assert all(s1[1] != s2[1] for s1, s2, _ in g.edges)
    # Q phases carry both bond types
    g = ent.entangled_graph(ModelSpec.ssh(10, 0.07))
    assert len(g.edges) == 20


def test_entangled_graph_json_roundtrip():
    g = ent.entangled_graph(ModelSpec.ssh(8, 0.5))
    doc = json.loads(g.to_json())
    assert doc["phase"] == "P1"
    assert doc["num_cells"] == 8
    assert len(doc["vertices"]) == 16
    assert len(doc["edges"]) == len(g.edges)


def test_entangled_graph_disordered_matches_clean_at_zero_amplitude():
    spec_clean = ModelSpec.ssh(8, 0.3)
    spec_dis = ModelSpec.ssh(8, 0.3, disorder=DisorderSpec(0.0, 5))
    g1 = ent.entangled_graph(spec_clean)
    g2 = ent.entangled_graph(spec_dis)
    assert g1.phase is g2.phase
    assert g2.c1 == pytest.approx(g1.c1, abs=1e-10)
    assert g2.c2 == pytest.approx(g1.c2, abs=1e-10)


def test_open_chain_graph():
    spec = ModelSpec.ssh(8, 0.5, boundary=Boundary.OPEN)
    g = ent.entangled_graph(spec, fill=7)
    assert g.phase is Phase.P1
    # all bulk inter-cell bonds present, no wrap bond
    inter = {(s1, s2) for s1, s2, _ in g.edges if s1[1] != s2[1]}
    for n in range(7):
        assert ((n, "b"), (n + 1, "a")) in inter
    assert ((0, "a"), (7, "b")) not in inter
