from __future__ import annotations
from context import (
    lascoux, graded, errors, partitions, MorphismSpec, Partition,
    EXAMPLE_RI, EXAMPLE_SCHUR_POWER, linear33,
)
from collections import defaultdict
from math import comb
import unittest


class TestLascouxResolution(unittest.TestCase):
    def test_lascoux_resolution_reproduces_example_table(self):
        cx = lascoux.lascoux_resolution(linear33(), 2)
        assert cx.table() == EXAMPLE_RI
        assert cx.ranks() == [1, 30, 120, 210, 218, 170, 105, 40, 6]
        assert cx.resolved_name == 'R/I_2'
        assert cx.codim == 8
        assert cx.minimality == graded.CLAIMED_MINIMAL

    def test_lascoux_resolution_is_well_formed(self):
        for spec in (linear33(), MorphismSpec.mixed(2, 3), MorphismSpec.linear(3, 2)):
            for i in range(1, spec.t + 1):
                cx = lascoux.lascoux_resolution(spec, i)
                assert graded.euler_rank(cx) == 0
                assert cx.length == lascoux.lascoux_codim(spec.t, spec.c, i)
                numerator = graded.hilbert_numerator(cx)
                assert numerator.divide_by_one_minus_t(cx.codim) is not None

    def test_lascoux_resolution_of_maximal_minors_is_eagon_northcott(self):
        for spec in (linear33(), MorphismSpec.mixed(3, 2), MorphismSpec.linear(2, 4)):
            assert lascoux.lascoux_resolution(spec, spec.t).table() == \
                lascoux.eagon_northcott_family(spec, 0).table()

    def test_lascoux_resolution_of_entries_is_koszul(self):
        spec = MorphismSpec.linear(2, 2)
        cx = lascoux.lascoux_resolution(spec, 1)
        assert cx.table() == [{0: 1}, {-1: 6}, {-2: 15}, {-3: 20}, {-4: 15}, {-5: 6}, {-6: 1}]

    def test_lascoux_resolution_rejects_bad_input(self):
        with self.assertRaises(ValueError):
            lascoux.lascoux_resolution(linear33(), 4)
        with self.assertRaises(ValueError):
            lascoux.lascoux_resolution(MorphismSpec(2, 2, (0, 1, 1), (0, 0)), 1)
        with self.assertRaises(TypeError):
            lascoux.lascoux_resolution((3, 3), 2)

    def test_lascoux_terms_cover_the_table(self):
        spec = linear33()
        terms = lascoux.lascoux_terms(spec, 2)
        assert sum(term.module.rank for term in terms) == sum(EXAMPLE_RI[k][d]
            for k in range(1, 9) for d in EXAMPLE_RI[k])
        positions = [term.position for term in terms]
        assert positions == sorted(positions)
        assert terms[0].partition == Partition((0, 2))
        assert terms[-1].partition == Partition((5, 5))

    def test_lascoux_terms_first_syzygies_and_extremes(self):
        for t in range(2, 5):
            for c in (2, 3):
                spec = MorphismSpec.linear(t, c)
                for i in range(1, t + 1):
                    terms = lascoux.lascoux_terms(spec, i)
                    codim = lascoux.lascoux_codim(t, c, i)
                    by_position = defaultdict(list)
                    for term in terms:
                        by_position[term.position].append(term)
                    assert [term.partition for term in by_position[1]] == [Partition((i,))]
                    assert by_position[1][0].module.rank == comb(t, i) * comb(t + c - 1, i)
                    last, next_to_last = partitions.lascoux_extremes(t, c, i)
                    assert [term.partition for term in by_position[codim]] == [last]
                    assert [term.partition for term in by_position[codim - 1]] == [next_to_last]
                    assert max(by_position) == codim

    def test_lascoux_adjacency_blocks(self):
        blocks = lascoux.lascoux_adjacency(linear33(), 2)
        assert (6, Partition((4, 4)), Partition((3, 4)), 1) in blocks
        assert all(rho >= 1 for _, _, _, rho in blocks)
        assert all(k >= 2 for k, _, _, _ in blocks)


class TestDuals(unittest.TestCase):
    def test_schur_power_reproduces_example_table(self):
        cx = lascoux.schur_power_resolution(linear33(), 2)
        assert cx.table() == EXAMPLE_SCHUR_POWER
        assert 'S_2(∧^2 M)' in cx.resolved_name

    def test_schur_power_is_twisted_dual(self):
        spec = linear33()
        dual = graded.complex_dual_twist(lascoux.lascoux_resolution(spec, 2), -10)
        assert lascoux.schur_power_resolution(spec, 2).table() == dual.table()

    def test_schur_power_one_is_buchsbaum_rim_for_c_two(self):
        for spec in (MorphismSpec.linear(2, 2), MorphismSpec.mixed(3, 2)):
            assert lascoux.schur_power_resolution(spec, 1).table() == \
                lascoux.eagon_northcott_family(spec, 1).table()

    def test_schur_power_rejects_p_out_of_range(self):
        with self.assertRaises(ValueError):
            lascoux.schur_power_resolution(linear33(), 0)
        with self.assertRaises(ValueError):
            lascoux.schur_power_resolution(linear33(), 4)

    def test_canonical_module_resolution(self):
        spec = MorphismSpec.linear(3, 3, 11)
        cx = lascoux.canonical_module_resolution(spec, 2)
        assert cx.table() == [
            {d - 1: m for d, m in position.items()}
            for position in EXAMPLE_SCHUR_POWER
        ]
        assert cx.table()[-1] == {-11: 1}


class TestEagonNorthcottFamily(unittest.TestCase):
    def test_d_complexes_for_two_by_three(self):
        spec = MorphismSpec.linear(2, 2)
        assert lascoux.eagon_northcott_family(spec, 0).table() == [{0: 1}, {-2: 3}, {-3: 2}]
        assert lascoux.eagon_northcott_family(spec, 1).table() == [{0: 2}, {-1: 3}, {-3: 1}]
        assert lascoux.eagon_northcott_family(spec, 2).table() == [{0: 3}, {-1: 6}, {-2: 3}]
        assert lascoux.eagon_northcott_family(spec, -1).table() == [{-1: 3}, {-2: 6}, {-3: 3}]

    def test_d_complexes_are_well_formed(self):
        for spec in (linear33(), MorphismSpec.mixed(2, 3)):
            for i in range(-1, spec.c + 1):
                cx = lascoux.eagon_northcott_family(spec, i)
                assert cx.length == spec.c
                assert graded.euler_rank(cx) == 0
                assert graded.hilbert_numerator(cx).divide_by_one_minus_t(spec.c) is not None

    def test_d_complex_names_and_labels(self):
        spec = MorphismSpec.linear(2, 2)
        assert lascoux.eagon_northcott_family(spec, 0).resolved_name == 'R/I_t'
        assert lascoux.eagon_northcott_family(spec, 1).resolved_name == 'M'
        assert lascoux.eagon_northcott_family(spec, 2).resolved_name == 'S_2M'
        assert lascoux.eagon_northcott_family(spec, -1).assumptions
        assert lascoux.d_complex_label(spec, 1, 0) == '∧^0G*⊗S_1F*'
        assert lascoux.d_complex_label(spec, 1, 2) == '∧^3G*⊗S_0F⊗∧^2F'

    def test_eagon_northcott_family_rejects_i_out_of_range(self):
        with self.assertRaises(ValueError):
            lascoux.eagon_northcott_family(MorphismSpec.linear(2, 2), 3)
        with self.assertRaises(ValueError):
            lascoux.eagon_northcott_family(MorphismSpec.linear(2, 2), -2)


if __name__ == '__main__':
    unittest.main()
