import numpy as np
import pytest

from qlocc import (
    GridSpec,
    Subspace,
    concurrence,
    make_state,
    oracle_identifiable,
    oracle_product_scan,
    random_orthogonal_set,
)
from qlocc.errors import BadCardinality
from qlocc.ueb import GeneratorParams, generate_eq1, generate_eq2

GRID = GridSpec(resolution=32)


class TestGridSpec:
    def test_defaults(self):
        g = GridSpec()
        assert g.resolution == 64 and g.rounds == 3 and g.threshold == 1e-6

    def test_rejects_tiny_resolution(self):
        with pytest.raises(ValueError):
            GridSpec(resolution=4)


class TestOracleIdentifiable:
    def test_bell_triple_positive(self, bell_triple):
        verdict = oracle_identifiable(bell_triple, 0, GRID)
        assert verdict.identifiable
        assert verdict.residual < 1e-12
        assert verdict.overlap == pytest.approx(1 / np.sqrt(2), abs=1e-6)

    def test_entangled_family_negative(self):
        ens = generate_eq1(GeneratorParams(0.3, 0.4))
        assert not oracle_identifiable(ens, 0, GRID).identifiable
        assert oracle_identifiable(ens, 1, GRID).identifiable
        assert oracle_identifiable(ens, 2, GRID).identifiable

    def test_one_product_family(self):
        ens = generate_eq2(0.2)
        assert oracle_identifiable(ens, 0, GRID).identifiable
        assert not oracle_identifiable(ens, 1, GRID).identifiable
        assert not oracle_identifiable(ens, 2, GRID).identifiable

    def test_witness_passes_exact_checks(self, bell_triple):
        verdict = oracle_identifiable(bell_triple, 1, GRID)
        w = verdict.witness
        assert concurrence(w) < 1e-9
        assert abs(w.overlap(bell_triple[0])) < 1e-9
        assert abs(w.overlap(bell_triple[2])) < 1e-9
        assert abs(w.overlap(bell_triple[1])) > 1e-7

    def test_deterministic(self):
        ens = random_orthogonal_set(31337, size=3)
        a = oracle_identifiable(ens, 0, GRID)
        b = oracle_identifiable(ens, 0, GRID)
        assert a.identifiable == b.identifiable
        np.testing.assert_array_equal(a.witness.amps, b.witness.amps)

    def test_wrong_cardinality(self, bell_basis):
        with pytest.raises(BadCardinality):
            oracle_identifiable(bell_basis, 0, GRID)

    def test_agreement_sample(self):
        from qlocc import conclusively_identifiable

        for k in range(25):
            ens = random_orthogonal_set(90_000 + k, size=3)
            for i in range(3):
                analytic, _ = conclusively_identifiable(ens, i)
                assert oracle_identifiable(ens, i, GRID).identifiable == analytic


class TestOracleProductScan:
    def test_two_cluster_case(self, bell):
        scan = oracle_product_scan(Subspace((bell["phi+"], bell["psi-"])), GRID)
        assert not scan.all_product_suspect
        assert len(scan.states) == 2

    def test_single_cluster_case(self):
        sub = Subspace(
            (make_state([0, np.sqrt(0.3), np.sqrt(0.7), 0]), make_state([0, 0, 0, 1]))
        )
        scan = oracle_product_scan(sub, GRID)
        assert len(scan.states) == 1
        np.testing.assert_allclose(np.abs(scan.states[0].amps), [0, 0, 0, 1], atol=1e-6)

    def test_saturated_detection(self):
        sub = Subspace((make_state([1, 0, 0, 0]), make_state([0, 1, 0, 0])))
        assert oracle_product_scan(sub, GRID).all_product_suspect
