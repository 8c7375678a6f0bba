from fractions import Fraction

from django.test import SimpleTestCase

from rest_framework.exceptions import ValidationError

from equilog.exceptions import EnumerationBoundExceeded, InputError, UnsupportedBase
from equilog.serializers import load
from quantale.models import INF, PLUS, TWO
from .constructions import (
    close_matrix, hom_preorder, induced_classes, initial_structure, presheaf_embed, quotient_closure,
    separated_reflection, structure_maps, vcat_exponential, verify_vcat,
)
from .models import VCatObj, VFunctor
from .serializers import VCatObjSerializer


class VerifyVCatTests(SimpleTestCase):

    def test_chain_is_a_preorder(self):
        self.assertTrue(verify_vcat(VCatObj.chain(3)).passed)

    def test_missing_transitive_pair(self):
        x = VCatObj.from_preorder(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
        report = verify_vcat(x)
        self.assertTrue(report.get('reflexivity').passed)
        self.assertEqual(report.get('transitivity').witness, ('a', 'b', 'c'))

    def test_metric_triangle(self):
        d = VCatObj.metric(['x', 'y', 'z'], [[0, 1, 5], [1, 0, 1], [5, 1, 0]])
        self.assertFalse(verify_vcat(d).passed)
        d = VCatObj.metric(['x', 'y', 'z'], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
        self.assertTrue(verify_vcat(d).passed)

    def test_shape_is_checked(self):
        with self.assertRaises(InputError):
            VCatObj(TWO, ['a', 'b'], [[True]])


class LimitTests(SimpleTestCase):

    def test_product_is_row_major(self):
        prod, p1, p2 = VCatObj.chain(2).product(VCatObj.antichain(2))
        self.assertEqual(prod.carrier, ('(c0,a0)', '(c0,a1)', '(c1,a0)', '(c1,a1)'))
        self.assertEqual(p1, (0, 0, 1, 1))
        self.assertEqual(p2, (0, 1, 0, 1))
        self.assertTrue(prod.value('(c0,a0)', '(c1,a0)'))
        self.assertFalse(prod.value('(c0,a0)', '(c1,a1)'))

    def test_coproduct_separates_summands(self):
        total, inl, inr = VCatObj.chain(1).coproduct(VCatObj.chain(1))
        self.assertEqual(total.carrier, ('inl(c0)', 'inr(c0)'))
        self.assertFalse(total.value('inl(c0)', 'inr(c0)'))


class StructureMapTests(SimpleTestCase):

    def test_monotone_maps_of_two_chain(self):
        chain = VCatObj.chain(2)
        self.assertEqual(list(structure_maps(chain, chain)), [(0, 0), (0, 1), (1, 1)])

    def test_allowed_images(self):
        chain = VCatObj.chain(2)
        self.assertEqual(list(structure_maps(chain, chain, allowed=[[1], [0, 1]])), [(1, 1)])

    def test_bound(self):
        chain = VCatObj.chain(3)
        with self.assertRaises(EnumerationBoundExceeded):
            list(structure_maps(chain, chain, bound=10))

    def test_hom_preorder(self):
        chain = VCatObj.chain(2)
        low = VFunctor(chain, chain, [0, 0])
        high = VFunctor(chain, chain, [1, 1])
        self.assertTrue(hom_preorder(low, high))
        self.assertFalse(hom_preorder(high, low))


class LiftingTests(SimpleTestCase):

    def test_initial_structure_along_constant_map(self):
        point = VCatObj.chain(1)
        lifted = initial_structure(['a', 'b'], [((0, 0), point)])
        self.assertEqual(lifted, VCatObj.indiscrete(TWO, ['a', 'b']))

    def test_empty_source_needs_quantale(self):
        with self.assertRaises(InputError):
            initial_structure(['a'], [])
        self.assertEqual(initial_structure(['a'], [], quantale=PLUS).matrix, ((Fraction(0),),))

    def test_quotient_of_metric(self):
        d = VCatObj.metric(['x', 'y', 'z'], [[0, 1, 3], [1, 0, 2], [3, 2, 0]])
        quotient = quotient_closure(d, [0, 0, 1], ['xy', 'z'])
        self.assertEqual(quotient.value('xy', 'z'), Fraction(2))
        self.assertEqual(quotient.value('z', 'xy'), Fraction(2))

    def test_quotient_must_be_onto(self):
        with self.assertRaises(InputError):
            quotient_closure(VCatObj.chain(2), [0, 0], ['p', 'q'])

    def test_close_matrix_adds_composites(self):
        closed = close_matrix(PLUS, [[0, 1, INF], [INF, 0, 1], [INF, INF, 0]])
        self.assertEqual(closed[0][2], Fraction(2))


class SeparatedReflectionTests(SimpleTestCase):

    def test_indiscrete_collapses(self):
        sep, projection = separated_reflection(VCatObj.indiscrete(TWO, ['a', 'b']))
        self.assertEqual(sep.carrier, ('a~b',))
        self.assertEqual(projection.mapping, (0, 0))

    def test_classes_of_a_cycle(self):
        x = VCatObj.from_preorder(['a', 'b', 'c'], [('a', 'b'), ('b', 'a'), ('a', 'c'), ('b', 'c')])
        self.assertEqual(induced_classes(x), [[0, 1], [2]])

    def test_separated_object_is_fixed(self):
        chain = VCatObj.chain(3)
        sep, _ = separated_reflection(chain)
        self.assertEqual(sep.matrix, chain.matrix)


class PresheafTests(SimpleTestCase):

    def test_downsets_of_chain(self):
        hat, yoneda = presheaf_embed(VCatObj.chain(2))
        self.assertEqual(hat.size, 3)
        self.assertTrue(yoneda.is_valid())
        self.assertTrue(hat.is_separated())

    def test_downsets_of_antichain(self):
        hat, _ = presheaf_embed(VCatObj.antichain(2))
        self.assertEqual(hat.size, 4)

    def test_point_gives_two_chain(self):
        hat, yoneda = presheaf_embed(VCatObj.chain(1))
        self.assertEqual(hat.size, 2)
        self.assertTrue(hat.induced_leq(0, 1) or hat.induced_leq(1, 0))

    def test_infinite_quantale_refused(self):
        with self.assertRaises(UnsupportedBase):
            presheaf_embed(VCatObj.metric(['x'], [[0]]))


class ExponentialTests(SimpleTestCase):

    def test_two_chain_to_two_chain(self):
        chain = VCatObj.chain(2)
        exp = vcat_exponential(chain, chain)
        self.assertEqual(exp.obj.size, 3)
        self.assertTrue(exp.evaluation.is_valid())

    def test_antichain_exponent_needs_force(self):
        with self.assertRaises(InputError):
            vcat_exponential(VCatObj.antichain(2), VCatObj.chain(2))


class SerializerTests(SimpleTestCase):

    def test_metric_document(self):
        data = {'type': 'vcat', 'quantale': 'plus', 'carrier': ['x', 'y'], 'matrix': [[0, '1/2'], ['inf', 0]]}
        d = load(VCatObjSerializer, data)
        self.assertEqual(d.value('x', 'y'), Fraction(1, 2))
        self.assertIs(d.value('y', 'x'), INF)
        self.assertEqual(VCatObjSerializer(d).data['matrix'], [['0', '1/2'], ['inf', '0']])

    def test_bad_shape_rejected(self):
        with self.assertRaises(ValidationError):
            load(VCatObjSerializer, {'quantale': 'two', 'carrier': ['a'], 'matrix': [[True, False]]})
