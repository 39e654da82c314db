from __future__ import annotations
from context import koszulverify, lascoux, interfaces, MorphismSpec, linear33
from fractions import Fraction
import json
import unittest


def hilbert_burch_chain(seed: int = 42) -> koszulverify.RationalMatrixChain:
    spec = MorphismSpec.linear(2, 2)
    sm = koszulverify.random_specialization(spec, seed)
    return koszulverify.build_d_complex_matrices(spec, 0, sm)


class TestRandomSpecialization(unittest.TestCase):
    def test_random_specialization_is_deterministic(self):
        spec = MorphismSpec.mixed(2, 3)
        first = koszulverify.random_specialization(spec, 7)
        second = koszulverify.random_specialization(spec, 7)
        assert first.entries == second.entries
        assert first.point == second.point

    def test_random_specialization_has_full_rank(self):
        spec = linear33()
        for seed in (1, 2, 3):
            sm = koszulverify.random_specialization(spec, seed)
            assert sm.t == 3
            assert sm.ncols == 5
            assert sm.rank() == 3
            assert all(type(x) is Fraction for row in sm.entries for x in row)

    def test_random_specialization_rejects_bad_input(self):
        with self.assertRaises(TypeError):
            koszulverify.random_specialization(linear33(), '1')
        with self.assertRaises(ValueError):
            koszulverify.random_specialization(MorphismSpec(2, 2, (0, 1, 1), (0, 0)), 1)


class TestDComplexMatrices(unittest.TestCase):
    def test_RationalMatrixChain_implements_MatrixChainProtocol(self):
        assert isinstance(hilbert_burch_chain(), interfaces.MatrixChainProtocol)

    def test_RationalMatrixChain_checks_dimensions(self):
        with self.assertRaises(ValueError):
            koszulverify.RationalMatrixChain(([[Fraction(1)]],), (1, 2))
        with self.assertRaises(ValueError):
            koszulverify.RationalMatrixChain((), (1, 2))

    def test_hilbert_burch_chain_shape(self):
        chain = hilbert_burch_chain()
        assert chain.dims == (1, 3, 2)
        assert chain.differential(1).shape == (1, 3)
        assert chain.differential(2).shape == (3, 2)
        assert len(chain.basis_tags[1]) == 3

    def test_hilbert_burch_is_acyclic(self):
        report = koszulverify.verify_acyclicity(hilbert_burch_chain())
        assert report.dd_zero
        assert report.ranks == (1, 2)
        assert report.rank_conditions
        assert report.h0_corank == 0
        assert report.passed

    def test_every_d_complex_passes(self):
        for spec in (linear33(), MorphismSpec.mixed(2, 3), MorphismSpec.linear(2, 2)):
            for i in range(-1, spec.c + 1):
                for seed in (1, 2):
                    sm = koszulverify.random_specialization(spec, seed)
                    chain = koszulverify.build_d_complex_matrices(spec, i, sm)
                    expected = lascoux.eagon_northcott_family(spec, i).ranks()
                    assert list(chain.dims[:len(expected)]) == expected
                    report = koszulverify.verify_acyclicity(chain)
                    assert report.passed, report.to_json()

    def test_d_complex_grid_passes_for_three_seeds(self):
        for t in range(1, 4):
            for c in range(1, 4):
                spec = MorphismSpec.linear(t, c)
                for seed in (1, 2, 3):
                    sm = koszulverify.random_specialization(spec, seed)
                    for i in range(-1, c + 1):
                        chain = koszulverify.build_d_complex_matrices(spec, i, sm)
                        expected = lascoux.eagon_northcott_family(spec, i).ranks()
                        expected += [0] * (len(chain.dims) - len(expected))
                        assert list(chain.dims) == expected, (t, c, i, seed)
                        report = koszulverify.verify_acyclicity(chain)
                        assert report.passed, report.to_json()

    def test_flipped_sign_breaks_dd_zero(self):
        chain = hilbert_burch_chain()
        d1, d2 = chain.differential(1), chain.differential(2)
        row = next(r for r in range(3) if d1[0, r] != 0 and d2[r, 0] != 0)
        broken = chain.with_flipped_sign(2, row, 0)
        report = koszulverify.verify_acyclicity(broken)
        assert not report.dd_zero
        assert not report.passed
        assert koszulverify.verify_acyclicity(chain).passed

    def test_build_d_complex_matrices_rejects_i(self):
        spec = MorphismSpec.linear(2, 2)
        sm = koszulverify.random_specialization(spec, 1)
        with self.assertRaises(ValueError):
            koszulverify.build_d_complex_matrices(spec, 3, sm)
        with self.assertRaises(ValueError):
            koszulverify.build_d_complex_matrices(linear33(), 0, sm)


class TestAcyclicityReport(unittest.TestCase):
    def test_to_json_key_order(self):
        report = koszulverify.verify_acyclicity(hilbert_burch_chain())
        doc = json.loads(report.to_json())
        assert list(doc) == [
            'spec', 'i', 'seed', 'dd_zero', 'ranks', 'rank_conditions',
            'h0_corank', 'dims',
        ]
        assert doc['spec']['t'] == 2
        assert doc['seed'] == 42
        assert doc['ranks'] == [1, 2]
        assert report.to_json() == koszulverify.verify_acyclicity(hilbert_burch_chain()).to_json()


if __name__ == '__main__':
    unittest.main()
