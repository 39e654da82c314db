from __future__ import annotations
from context import (
    assembly, graded, lascoux, errors, MorphismSpec, GradedFreeModule,
    EXAMPLE_NORMAL, EXAMPLE_WEDGE2, linear33,
)
import unittest


def numerator_of(table: list[dict[int, int]]) -> graded.LaurentPolynomial:
    cx = graded.ComplexSpec(tuple(GradedFreeModule.from_twists(p) for p in table))
    return graded.hilbert_numerator(cx)


class TestMappingCone(unittest.TestCase):
    def test_mapping_cone3_positions(self):
        Q = graded.ComplexSpec((GradedFreeModule.free(1, 0, 'q'),))
        P = graded.ComplexSpec((GradedFreeModule.free(2, -1, 'p'), GradedFreeModule.free(1, -2, 'p')))
        F = graded.ComplexSpec((GradedFreeModule.free(3, 0, 'f'),))
        cone = assembly.mapping_cone3(Q, P, F, 'X')
        assert cone.ranks() == [3, 2, 2]
        assert cone[2].labels() == ('p', 'q')
        assert cone.minimality == graded.POSSIBLY_NON_MINIMAL
        assert assembly.CONE_ASSUMPTION in cone.assumptions

    def test_mapping_cone3_rejects_non_complexes(self):
        cx = graded.ComplexSpec((GradedFreeModule.free(1),))
        with self.assertRaises(TypeError):
            assembly.mapping_cone3(cx, cx, [GradedFreeModule.free(1)])

    def test_tensor_complex(self):
        D1 = lascoux.eagon_northcott_family(MorphismSpec.linear(2, 2), 1)
        G = MorphismSpec.linear(2, 2).G()
        cx = assembly.tensor_complex(G, D1)
        assert cx.table() == [{1: 6}, {0: 9}, {-2: 3}]


class TestNormalModule(unittest.TestCase):
    def test_normal_module_resolution_reproduces_closed_form(self):
        cx = assembly.normal_module_resolution(linear33())
        assert cx.table() == EXAMPLE_NORMAL
        assert cx.codim == 3

    def test_normal_module_cone_is_larger_than_resolution(self):
        cone = assembly.normal_module_cone(linear33())
        closed = assembly.normal_module_terms(linear33())
        assert graded.hilbert_numerator(cone) == graded.hilbert_numerator(closed)
        assert sum(cone.ranks()) > sum(closed.ranks())

    def test_normal_module_for_mixed_degrees(self):
        spec = MorphismSpec.mixed(2, 3)
        cx = assembly.normal_module_resolution(spec)
        assert graded.euler_rank(cx) == 0
        assert graded.hilbert_numerator(cx).divide_by_one_minus_t(3) is not None

    def test_normal_module_requires_codimension_three(self):
        with self.assertRaises(ValueError):
            assembly.normal_module_resolution(MorphismSpec.linear(2, 2))


class TestS2MTensorIt(unittest.TestCase):
    def test_s2m_tensor_it_for_c_three(self):
        cx = assembly.s2m_tensor_it_resolution(linear33())
        assert cx.table() == [
            {-3: 60},
            {-4: 240},
            {-4: 15, -5: 360},
            {-5: 33, -6: 240},
            {-6: 15, -7: 60, -8: 15},
            {-9: 15},
            {-10: 3},
        ]
        assert cx.resolved_name == 'S_2M⊗I_t'
        assert cx.minimality == graded.POSSIBLY_NON_MINIMAL

    def test_s2m_tensor_it_for_c_two(self):
        cx = assembly.s2m_tensor_it_resolution(MorphismSpec.linear(2, 2))
        assert graded.hilbert_numerator(cx).terms() == {2: 9, 3: -22, 4: 18, 5: -6, 6: 1}
        assert graded.euler_rank(cx) == 0

    def test_s2m_numerator_from_d_family_tables(self):
        for spec in (MorphismSpec.linear(2, 2), MorphismSpec.linear(3, 2),
                     MorphismSpec.mixed(2, 2), linear33(), MorphismSpec.mixed(3, 3)):
            D1 = graded.hilbert_numerator(lascoux.eagon_northcott_family(spec, 1))
            F_dual = graded.hilbert_numerator(graded.ComplexSpec((spec.F_dual(),)))
            G_dual = graded.hilbert_numerator(graded.ComplexSpec((spec.G_dual(),)))
            mm = graded.hilbert_numerator(assembly.tensor_mm_resolution(spec))
            s2m = graded.hilbert_numerator(assembly.s2m_tensor_it_resolution(spec))
            assert s2m == mm - F_dual * D1 + G_dual * D1, spec.describe()

    def test_s2m_tensor_it_rejects_other_c(self):
        with self.assertRaises(ValueError):
            assembly.s2m_tensor_it_resolution(MorphismSpec.linear(2, 4))


class TestExteriorSquare(unittest.TestCase):
    def test_tensor_mm_resolution_shape(self):
        cx = assembly.tensor_mm_resolution(linear33())
        assert cx[1].twists() == {-1: 30}
        assert cx[3].twists() == {-4: 240, -5: 34}
        assert cx[2].only(assembly.H_LABEL).twists() == {-4: 15}
        assert cx[3].only(assembly.H_LABEL).twists() == {-4: 15}
        assert cx[0].labels() == ('S_2F*', '∧^2F*')

    def test_wedge2_resolution_head(self):
        cx = assembly.wedge2_resolution(linear33())
        assert cx.table()[:3] == [{0: 3}, {-1: 15}, {-2: 15, -3: 60, -4: 15}]
        assert cx.resolved_name == '∧^2M'

    def test_wedge2_resolution_matches_example_numerator(self):
        cx = assembly.wedge2_resolution(linear33())
        assert graded.hilbert_numerator(cx) == numerator_of(EXAMPLE_WEDGE2)
        assert graded.hilbert_numerator(cx).divide_by_one_minus_t(3) is not None

    def test_wedge2_is_tensor_square_minus_symmetric_square(self):
        spec = linear33()
        mm = graded.hilbert_numerator(assembly.tensor_mm_resolution(spec))
        sym = graded.hilbert_numerator(lascoux.eagon_northcott_family(spec, 2))
        assert graded.hilbert_numerator(assembly.wedge2_resolution(spec)) == mm - sym

    def test_wedge2_labels_the_top_of_s2m(self):
        cx = assembly.wedge2_resolution(linear33())
        assert cx[2].only(assembly.S2_TOP_LABEL).twists() == {-3: 60}
        assert cx[2].only('S_2G*').twists() == {-2: 15}
        assert 'P_{-3}*⊗P_{-1}' not in cx.labels()

        spec = MorphismSpec.linear(3, 2)
        top = assembly.s2m_tensor_it_resolution(spec)[0]
        for cx in (assembly.tensor_mm_resolution(spec), assembly.wedge2_resolution(spec)):
            assert cx[2].only(assembly.S2_TOP_LABEL).twists() == top.twists()
            assert assembly.s2m_top_source(spec) not in cx.labels()

    def test_wedge2_resolution_logs_no_warnings(self):
        with self.assertNoLogs('schur_resolve', 'WARNING'):
            assembly.wedge2_resolution(linear33())
            assembly.wedge2_resolution(MorphismSpec.linear(3, 2))

    def test_wedge2_drop_H_removes_only_H(self):
        cx = assembly.wedge2_resolution(linear33())
        dropped = cx.without(assembly.H_LABEL)
        h_ranks = [p.only(assembly.H_LABEL).rank for p in cx.positions]
        assert h_ranks[2] == 15 and h_ranks[3] == 15
        assert [a - b for a, b in zip(cx.ranks(), dropped.ranks())] == h_ranks[:len(dropped)]
        assert assembly.H_LABEL not in dropped.labels()

    def test_wedge2_for_c_two_is_schur_power(self):
        for spec in (MorphismSpec.linear(2, 2), MorphismSpec.linear(3, 2), MorphismSpec.linear(4, 2),
                     MorphismSpec.mixed(2, 2), MorphismSpec.mixed(3, 2)):
            wedge = graded.hilbert_numerator(assembly.wedge2_resolution(spec))
            power = graded.hilbert_numerator(lascoux.schur_power_resolution(spec, 2))
            assert wedge == power, spec.describe()


class TestPredictedTerms(unittest.TestCase):
    def test_be_predicted_terms_match_wedge2_head(self):
        spec = linear33()
        predicted = [m.twists() for m in assembly.be_predicted_terms(spec, 2)]
        assert predicted == [{0: 3}, {-1: 15}, {-2: 15, -3: 60}]
        head = assembly.wedge2_resolution(spec).without(assembly.H_LABEL).table()[:3]
        assert predicted == head

    def test_be_predicted_complex(self):
        cx = assembly.be_predicted_complex(linear33(), 3)
        assert len(cx) == 3
        assert cx[0].twists() == {0: 1}
        assert cx.minimality == graded.POSSIBLY_NON_MINIMAL

    def test_be_predicted_terms_rejects_p(self):
        with self.assertRaises(ValueError):
            assembly.be_predicted_terms(linear33(), 1)
        with self.assertRaises(ValueError):
            assembly.be_predicted_terms(linear33(), 4)

    def test_a_module_rank(self):
        # rank t * C(t, p-1) - C(t, p)
        assert assembly.a_module(linear33(), 2).rank == 3 * 3 - 3


if __name__ == '__main__':
    unittest.main()
