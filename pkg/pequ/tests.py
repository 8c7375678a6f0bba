from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from equ.models import EquObj, MorphClass, Partition
from equilog.exceptions import InputError
from equilog.serializers import load
from oracle.enumeration import find_isomorphism
from oracle.models import SweepConfig
from oracle.universal import verify_universal_property
from oracle.universe import equ_universe, pequ_universe
from quantale.models import TWO
from vcat.models import VCatObj
from .constructions import functor_R, functor_R_morphism, hat_pequ, pequ_exponential, pequ_product, verify_pequ
from .models import PEquObj, PartialEquivalence
from .serializers import PEquObjSerializer


class PartialEquivalenceTests(SimpleTestCase):

    def test_points_off_the_domain(self):
        per = PartialEquivalence.from_pairs(3, [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(per.domain(), [0, 1])
        self.assertFalse(per.same(2, 2))
        self.assertFalse(per.is_total())

    def test_symmetry_and_transitivity(self):
        with self.assertRaises(InputError):
            PartialEquivalence.from_pairs(2, [(0, 1)])
        with self.assertRaises(InputError):
            PartialEquivalence.from_pairs(3, [(0, 1), (1, 0), (1, 2), (2, 1)])

    def test_product_drops_undefined_points(self):
        prod = PartialEquivalence(2, [[0]]).product(PartialEquivalence.total(2))
        self.assertEqual(prod.domain(), [0, 1])


class FunctorRTests(SimpleTestCase):

    def test_restricts_to_the_domain(self):
        p = PEquObj(VCatObj.chain(3), PartialEquivalence(3, [[0, 1]]))
        e = functor_R(p)
        self.assertEqual(e.base, VCatObj.chain(2))
        self.assertEqual(e.partition, Partition.total(2))

    def test_morphisms(self):
        p = PEquObj(VCatObj.chain(3), PartialEquivalence(3, [[1], [2]]))
        f = functor_R_morphism(MorphClass(p, p, [0, 2, 2]))
        self.assertEqual(f.as_names(), {'c1': 'c2', 'c2': 'c2'})


class HatTests(SimpleTestCase):

    def test_point(self):
        p = hat_pequ(EquObj.discrete(VCatObj.chain(1)))
        self.assertEqual(p.base.size, 2)
        self.assertEqual(len(p.per.domain()), 1)

    def test_related_points_stay_related(self):
        p = hat_pequ(EquObj(VCatObj.antichain(2), Partition.total(2)))
        self.assertEqual(p.base.size, 4)
        self.assertEqual(p.per.count, 1)
        self.assertEqual(len(p.per.domain()), 2)

    def test_separated_base_required(self):
        with self.assertRaises(InputError):
            hat_pequ(EquObj.discrete(VCatObj.indiscrete(TWO, ['a', 'b'])))

    def test_r_undoes_hat(self):
        separated = [e for e in equ_universe('ord', SweepConfig(max_carrier=3)) if e.base.is_separated()]
        for e in separated:
            self.assertIsNotNone(find_isomorphism(functor_R(hat_pequ(e)), e), e.describe())


class ExponentialTests(SimpleTestCase):

    def test_constant_maps_survive_a_total_relation(self):
        x = PEquObj(VCatObj.chain(2), PartialEquivalence.total(2))
        y = PEquObj(VCatObj.chain(2), PartialEquivalence.discrete(2))
        exp = pequ_exponential(x, y, verify=False, sweep=SweepConfig(max_carrier=2))
        self.assertEqual(exp.obj.size, 3)
        self.assertEqual(exp.obj.per.domain(), [0, 2])
        self.assertEqual(exp.obj.per.count, 2)

    def test_universal_property_sweep(self):
        sweep = SweepConfig(max_carrier=2)
        universe = pequ_universe(TWO, sweep)
        for x in universe:
            for y in universe:
                exp = pequ_exponential(x, y, verify=False, sweep=sweep)
                verdict = verify_universal_property('exponential', exp, (x, y), sweep, universe)
                self.assertTrue(verdict.passed, (x.describe(), y.describe(), verdict.certificate))

    def test_product(self):
        x = PEquObj(VCatObj.chain(2), PartialEquivalence(2, [[0]]))
        obj, p1, p2 = pequ_product(x, x)
        self.assertEqual(obj.per.domain(), [0])
        self.assertEqual(p1.mapping, (0, 0, 1, 1))


class VerifyTests(SimpleTestCase):

    def test_chain_base_is_injective(self):
        report = verify_pequ(PEquObj(VCatObj.chain(2), PartialEquivalence.total(2)), SweepConfig(max_carrier=2))
        self.assertTrue(report.passed, report.as_dict())
        self.assertEqual(report.get('separated').detail, 'yes')

    def test_antichain_base_is_not(self):
        report = verify_pequ(PEquObj(VCatObj.antichain(2), PartialEquivalence.empty(2)), SweepConfig(max_carrier=2))
        self.assertFalse(report.get('injective_base').passed)


class SerializerTests(SimpleTestCase):

    def document(self, pairs):
        base = {'quantale': 'two', 'carrier': ['u', 'v'], 'matrix': [[True, True], [False, True]]}
        return {'type': 'pequ', 'base': base, 'pairs': pairs}

    def test_pairs(self):
        p = load(PEquObjSerializer, self.document([['u', 'u']]))
        self.assertEqual(p.per.domain(), [0])
        self.assertEqual(PEquObjSerializer(p).data['pairs'], [['u', 'u']])

    def test_empty_relation_by_default(self):
        data = self.document([])
        del data['pairs']
        self.assertEqual(load(PEquObjSerializer, data).per.count, 0)

    def test_asymmetric_pairs_rejected(self):
        with self.assertRaises(ValidationError):
            load(PEquObjSerializer, self.document([['u', 'v']]))
