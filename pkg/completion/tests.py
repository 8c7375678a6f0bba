from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from equ.models import EquObj, MorphClass, Partition
from equilog.exceptions import ConstructionRejected, InputError, UnsupportedBase
from equilog.serializers import load
from oracle.models import SweepConfig
from oracle.universal import (
    verify_per_reflection, verify_reflection_products, verify_triple_full_faithful,
)
from quantale.models import PLUS
from spaces.models import FinTop
from vcat.models import VCatObj, VFunctor
from .constructions import (
    equ_per_roundtrip, essential_preimage, find_witnesses, initial_lifting, kernel_pair, per_as_kernel_pair,
    per_to_equ, reflect_to_equ, span_product, triple_embed, triple_maps, verify_per,
)
from .models import PseudoEqRel, RegTriple
from .serializers import PseudoEqRelSerializer, RegTripleSerializer


def full_relation():
    return EquObj(VCatObj.antichain(2), Partition.total(2))


def collapsed_span():
    """Two points of X1 both sent to the single point of X0"""
    return PseudoEqRel(VCatObj.antichain(2), VCatObj.chain(1), [0, 0], [0, 0])


class SpanTests(SimpleTestCase):

    def test_legs_must_be_vfunctors(self):
        with self.assertRaises(InputError):
            PseudoEqRel(VCatObj.chain(2), VCatObj.chain(2), [1, 0], [0, 1])

    def test_bases_must_agree(self):
        with self.assertRaises(InputError):
            PseudoEqRel(VCatObj.indiscrete(PLUS, ['u']), VCatObj.chain(1), [0], [0])

    def test_pullback(self):
        p = equ_per_roundtrip(full_relation())
        x2, pairs = p.pullback()
        self.assertEqual(len(pairs), 8)
        self.assertEqual(x2.size, 8)


class WitnessTests(SimpleTestCase):

    def test_relation_of_an_equilogical_object(self):
        p = equ_per_roundtrip(full_relation())
        self.assertEqual(p.x1.size, 4)
        report = verify_per(p)
        self.assertTrue(report.passed, report.as_dict())
        self.assertEqual(report.get('regmono').detail, 'yes')

    def test_constant_span_is_not_reflexive(self):
        p = PseudoEqRel(VCatObj.chain(1), VCatObj.antichain(2), [0], [0])
        report = verify_per(p)
        reflexivity = report.get('reflexivity')
        self.assertFalse(reflexivity.passed)
        self.assertEqual(reflexivity.witness['search'], 'exhaustive')
        self.assertTrue(report.get('symmetry').passed)

    def test_search_is_deterministic(self):
        self.assertEqual(find_witnesses(collapsed_span())['r'], (0,))

    def test_supplied_witnesses_are_kept(self):
        p = PseudoEqRel(VCatObj.antichain(2), VCatObj.chain(1), [0, 0], [0, 0], {'r': [1]})
        self.assertEqual(find_witnesses(p)['r'], (1,))

    def test_unknown_witness(self):
        with self.assertRaises(InputError):
            PseudoEqRel(VCatObj.chain(1), VCatObj.chain(1), [0], [0], {'q': [0]})


class ConversionTests(SimpleTestCase):

    def test_roundtrip_through_spans(self):
        e = full_relation()
        self.assertEqual(per_to_equ(equ_per_roundtrip(e)), e)

    def test_non_regular_span_refused(self):
        p = collapsed_span()
        self.assertFalse(p.is_regmono())
        self.assertEqual(verify_per(p).get('regmono').detail, 'no')
        with self.assertRaises(InputError):
            per_to_equ(p)

    def test_spaces_are_not_spans(self):
        with self.assertRaises(UnsupportedBase):
            equ_per_roundtrip(EquObj.discrete(FinTop.discrete(['p'])))

    def test_kernel_pair(self):
        f = VFunctor(VCatObj.chain(2), VCatObj.chain(1), [0, 0])
        k = kernel_pair(f)
        self.assertEqual(k.pairing(), [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertTrue(verify_per(k).passed)

    def test_presented_as_kernel_pair(self):
        presentation = per_as_kernel_pair(equ_per_roundtrip(full_relation()))
        self.assertEqual(presentation.quotient.cod.carrier, ('a0~a1',))
        self.assertEqual(len(presentation.isomorphism), 4)


class ReflectionTests(SimpleTestCase):

    def test_reflection_of_a_relation(self):
        reflection = reflect_to_equ(equ_per_roundtrip(full_relation()))
        self.assertEqual(reflection.obj, full_relation())
        self.assertEqual(reflection.unit.mapping, (0, 1))

    def test_unit_is_a_class(self):
        p = equ_per_roundtrip(full_relation())
        reflection = reflect_to_equ(p)
        self.assertEqual(reflection.unit, VFunctor.identity(p.x0))
        unit = reflection.unit_class()
        self.assertIsInstance(unit, MorphClass)
        # one class, so the swap and the constant map represent the unit too
        self.assertEqual(unit, MorphClass(reflection.obj, reflection.obj, [1, 0]))
        self.assertEqual(unit, MorphClass(reflection.obj, reflection.obj, [0, 0]))

    def test_collapsed_span_reflects(self):
        reflection = reflect_to_equ(collapsed_span())
        self.assertEqual(reflection.obj.partition, Partition.total(1))

    def test_missing_witness(self):
        with self.assertRaises(InputError):
            reflect_to_equ(PseudoEqRel(VCatObj.chain(1), VCatObj.antichain(2), [0], [0]))

    def test_universal_property(self):
        p = equ_per_roundtrip(full_relation())
        verdict = verify_per_reflection(p, reflect_to_equ(p), SweepConfig(max_carrier=2))
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_products_are_preserved(self):
        p = equ_per_roundtrip(full_relation())
        q = kernel_pair(VFunctor.identity(VCatObj.chain(1)))
        self.assertEqual(span_product(p, q).x1.size, 4)
        verdict = verify_reflection_products([(p, q), (q, q)], SweepConfig(max_carrier=2))
        self.assertTrue(verdict.passed, verdict.certificate)


class TripleTests(SimpleTestCase):

    def test_point(self):
        t = triple_embed(VCatObj.chain(1))
        self.assertEqual(t.base.size, 2)
        self.assertEqual(t.elements, ('c0',))

    def test_maps_are_the_monotone_maps(self):
        t = triple_embed(VCatObj.chain(2))
        self.assertEqual(triple_maps(t, t), [(0, 0), (0, 1), (1, 1)])
        verdict = verify_triple_full_faithful(
            [(VCatObj.chain(2), VCatObj.chain(2)), (VCatObj.antichain(2), VCatObj.chain(2))],
            SweepConfig(max_carrier=2),
        )
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_initial_lifting(self):
        lifted = initial_lifting(RegTriple(VCatObj.chain(2), ['a', 'b', 'c'], [0, 1, 1]))
        self.assertTrue(lifted.value('b', 'c'))
        self.assertTrue(lifted.value('a', 'b'))
        self.assertFalse(lifted.value('b', 'a'))

    def test_essential_preimage(self):
        preimage = essential_preimage(triple_embed(VCatObj.chain(2)))
        self.assertEqual(preimage.obj, VCatObj.chain(2))

    def test_preimage_needs_an_injective_base(self):
        with self.assertRaises(ConstructionRejected) as caught:
            essential_preimage(RegTriple(VCatObj.antichain(2), ['a', 'b'], [0, 1]))
        self.assertEqual(caught.exception.certificate['missing'], 'backward square')

    def test_infinite_quantale_refused(self):
        with self.assertRaises(UnsupportedBase):
            triple_embed(VCatObj.metric(['x'], [[0]]))

    def test_sigma_in_range(self):
        with self.assertRaises(InputError):
            RegTriple(VCatObj.chain(1), ['a'], [1])


class SerializerTests(SimpleTestCase):

    def test_witnesses_survive_a_dump(self):
        p = equ_per_roundtrip(full_relation())
        data = PseudoEqRelSerializer(p).data
        self.assertEqual(set(data['witnesses']), {'r', 's', 't'})
        loaded = load(PseudoEqRelSerializer, data)
        self.assertEqual(loaded, p)
        self.assertEqual(loaded.witnesses, p.witnesses)

    def test_partial_legs_rejected(self):
        base = {'quantale': 'two', 'carrier': ['x'], 'matrix': [[True]]}
        with self.assertRaises(ValidationError):
            load(PseudoEqRelSerializer, {'x1': base, 'x0': base, 'r1': {}, 'r2': {'x': 'x'}})

    def test_triple(self):
        base = {'quantale': 'two', 'carrier': ['x', 'y'], 'matrix': [[True, True], [False, True]]}
        t = load(RegTripleSerializer, {'base': base, 'elements': ['a'], 'sigma': {'a': 'y'}})
        self.assertEqual(t.as_names(), {'a': 'y'})
        with self.assertRaises(ValidationError):
            load(RegTripleSerializer, {'base': base, 'elements': ['a'], 'sigma': {}})
