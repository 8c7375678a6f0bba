from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from rest_framework.exceptions import ValidationError

from equilog.exceptions import InputError
from equilog.serializers import load
from quantale.models import INF
from vcat.models import VCatObj
from .models import FinApp, FinTop, base_kind
from .serializers import FinAppSerializer, FinTopSerializer, parse_base
from .transfers import (
    alexandroff_roundtrip, approach_to_metric, approach_to_topology, embeddings_coincide, metric_to_approach,
    metric_to_order, order_to_metric, order_to_topology, parse_direction, topology_to_approach, topology_to_order,
    transfer_base, verify_space,
)


def sierpinski():
    return FinTop.from_names(['a', 'b'], [[], ['a'], ['a', 'b']])


class TopologyTests(SimpleTestCase):

    def test_sierpinski_axioms(self):
        self.assertTrue(verify_space(sierpinski()).passed)

    def test_union_failure(self):
        t = FinTop.from_names(['a', 'b', 'c'], [[], ['a'], ['b'], ['a', 'b', 'c']])
        report = verify_space(t)
        self.assertEqual(report.get('union_closed').witness, (['a'], ['b']))
        self.assertTrue(report.get('intersection_closed').passed)

    def test_specialization(self):
        t = sierpinski()
        self.assertTrue(t.specialization_leq(0, 1))
        self.assertFalse(t.specialization_leq(1, 0))
        self.assertTrue(t.is_separated())

    def test_product_is_alexandroff(self):
        prod, _, _ = sierpinski().product(sierpinski())
        self.assertEqual(len(prod.opens), 6)
        self.assertTrue(verify_space(prod).passed)

    def test_unknown_point(self):
        with self.assertRaises(InputError):
            FinTop.from_names(['a'], [['b']])


class ApproachTests(SimpleTestCase):

    def test_from_metric_satisfies_axioms(self):
        d = VCatObj.metric(['x', 'y'], [[0, 1], [2, 0]])
        s = FinApp.from_metric(d)
        self.assertTrue(verify_space(s).passed)
        self.assertIs(s.distance(0, 0), INF)
        self.assertEqual(s.distance(1, 0b01), Fraction(1))

    def test_point_must_be_at_distance_zero(self):
        report = verify_space(FinApp(['x'], [[INF, Fraction(1)]]))
        self.assertEqual(report.get('zero_on_members').witness, ('x', ['x']))

    @override_settings(EQUILOG_MAX_APPROACH_CARRIER=2)
    def test_carrier_cap(self):
        with self.assertRaises(InputError):
            FinApp(['x', 'y', 'z'], [])


class TransferTests(SimpleTestCase):

    def test_order_metric_roundtrip(self):
        chain = VCatObj.chain(2)
        d = order_to_metric(chain)
        self.assertEqual(d.matrix, ((Fraction(0), Fraction(0)), (INF, Fraction(0))))
        self.assertEqual(metric_to_order(d), chain)

    def test_finite_distance_becomes_order(self):
        d = VCatObj.metric(['x', 'y'], [[0, 5], ['inf', 0]])
        self.assertEqual(metric_to_order(d), VCatObj.from_preorder(['x', 'y'], [('x', 'y')]))

    def test_alexandroff_topology(self):
        t = order_to_topology(VCatObj.chain(2))
        self.assertEqual(t.open_sets(), [[], ['c0'], ['c0', 'c1']])
        self.assertEqual(topology_to_order(t), VCatObj.chain(2))
        self.assertTrue(alexandroff_roundtrip(sierpinski()))

    def test_metric_approach_roundtrip(self):
        d = VCatObj.metric(['x', 'y', 'z'], [[0, 1, 2], [1, 0, 1], ['inf', 3, 0]])
        self.assertEqual(approach_to_metric(metric_to_approach(d)), d)

    def test_topology_approach_roundtrip(self):
        t = sierpinski()
        self.assertEqual(approach_to_topology(topology_to_approach(t)), t)

    def test_embeddings_into_approach_spaces_agree(self):
        for x in (VCatObj.chain(3), VCatObj.antichain(2), VCatObj.from_preorder(['a', 'b'], [('b', 'a')])):
            self.assertTrue(embeddings_coincide(x))

    def test_base_kind_is_checked(self):
        with self.assertRaises(InputError):
            transfer_base(sierpinski(), 'ord-met', 'fwd')
        self.assertEqual(base_kind(transfer_base(sierpinski(), 'ord-top', 'bwd')), 'ord')

    def test_direction_aliases(self):
        self.assertEqual(parse_direction('fwd'), 'rightward')
        with self.assertRaises(InputError):
            parse_direction('sideways')


class SerializerTests(SimpleTestCase):

    def test_topology_document(self):
        t = load(FinTopSerializer, {'type': 'fintop', 'carrier': ['a', 'b'], 'opens': [[], ['a'], ['b', 'a']]})
        self.assertEqual(t, sierpinski())

    def test_approach_from_metric(self):
        s = load(FinAppSerializer, {'carrier': ['x', 'y'], 'metric': [[0, 1], [1, 0]]})
        self.assertEqual(s.metric().value('x', 'y'), Fraction(1))
        self.assertEqual(len(FinAppSerializer(s).data['delta']), 8)

    def test_approach_needs_one_source(self):
        with self.assertRaises(ValidationError):
            load(FinAppSerializer, {'carrier': ['x']})

    def test_parse_base_defaults_to_vcat(self):
        base = parse_base({'quantale': 'two', 'carrier': ['p0'], 'matrix': [[True]]})
        self.assertEqual(base, VCatObj.chain(1, prefix='p'))
