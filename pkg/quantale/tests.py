from fractions import Fraction

from django.test import SimpleTestCase

from .laws import check_exp_condition, exp_condition_witness, verify_quantale
from .models import DIAMOND, INF, MAX, PLUS, TWO, get_quantale, hom_residual, to_extended
from .serializers import QuantaleSerializer


class ResidualTests(SimpleTestCase):
    """hom(v, w) is the largest u with u (x) v <= w"""

    def test_two_hom_top_bottom(self):
        self.assertIs(TWO.hom(True, False), False)

    def test_plus_truncated_subtraction(self):
        self.assertEqual(PLUS.hom(Fraction(3), Fraction(5)), Fraction(2))
        self.assertEqual(PLUS.hom(Fraction(5), Fraction(3)), Fraction(0))
        self.assertIs(PLUS.hom(Fraction(1), INF), INF)
        self.assertEqual(PLUS.hom(INF, INF), Fraction(0))

    def test_plus_adjunction_on_grid(self):
        grid = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(5), INF]
        for u in grid:
            for v in grid:
                for w in grid:
                    self.assertEqual(
                        PLUS.leq(u, PLUS.hom(v, w)),
                        PLUS.leq(PLUS.tensor(u, v), w),
                        (u, v, w),
                    )

    def test_diamond_atoms(self):
        left, right = (True, False), (False, True)
        self.assertEqual(DIAMOND.hom(left, right), right)

    def test_max_residual(self):
        self.assertEqual(MAX.hom(Fraction(2), Fraction(1)), Fraction(0))
        self.assertEqual(MAX.hom(Fraction(1), Fraction(2)), Fraction(2))

    def test_raw_values(self):
        self.assertEqual(hom_residual(PLUS, '1/2', 2), Fraction(3, 2))
        self.assertEqual(hom_residual(PLUS, 'inf', 3), Fraction(0))


class VerifyQuantaleTests(SimpleTestCase):

    def test_finite_quantales_pass(self):
        for q in (TWO, DIAMOND):
            report = verify_quantale(q)
            self.assertTrue(report.passed, report.as_dict())

    def test_diamond_distributivity_checked(self):
        report = verify_quantale(DIAMOND)
        self.assertTrue(report.get('meet_join_distributivity').passed)

    def test_reversed_quantales_pass_on_default_grid(self):
        for q in (PLUS, MAX):
            report = verify_quantale(q)
            self.assertTrue(report.passed, report.as_dict())

    def test_corrupted_tensor_fails_unit_law(self):
        def corrupted(u, v):
            return False if (u and v) else (u and v)

        report = verify_quantale(TWO, tensor=corrupted)
        unit = report.get('unit')
        self.assertFalse(unit.passed)
        self.assertEqual(unit.witness, ('1',))

    def test_integrality(self):
        for q in (TWO, DIAMOND, PLUS, MAX):
            self.assertEqual(q.unit, q.top)
            self.assertTrue(q.is_integral())


class ExpConditionTests(SimpleTestCase):

    def test_finite_carriers(self):
        self.assertTrue(check_exp_condition(TWO))
        self.assertTrue(check_exp_condition(DIAMOND))

    def test_plus_on_integer_grid(self):
        grid = [Fraction(0), Fraction(1), Fraction(2), Fraction(3), INF]
        self.assertIsNone(exp_condition_witness(PLUS, grid))

    def test_default_grids(self):
        self.assertTrue(check_exp_condition(PLUS))
        self.assertTrue(check_exp_condition(MAX))


class ValueParsingTests(SimpleTestCase):

    def test_extended_rationals(self):
        self.assertEqual(to_extended('3/2'), Fraction(3, 2))
        self.assertIs(to_extended('inf'), INF)
        self.assertEqual(to_extended(4), Fraction(4))

    def test_floats_rejected(self):
        from equilog.exceptions import InputError
        with self.assertRaises(InputError):
            to_extended(0.5)

    def test_infinity_ordering(self):
        self.assertTrue(Fraction(10 ** 9) < INF)
        self.assertEqual(max(Fraction(1), INF), INF)

    def test_serializer_round_trip(self):
        serializer = QuantaleSerializer(data={'type': 'quantale', 'kind': 'plus'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        q = serializer.save()
        self.assertIs(q, PLUS)
        self.assertEqual(QuantaleSerializer(q).data['kind'], 'plus')
        self.assertIs(get_quantale('two'), TWO)
