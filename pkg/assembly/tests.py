from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from equ.models import MorphClass
from equilog.exceptions import EnumerationBoundExceeded, InputError
from equilog.serializers import load
from oracle.enumeration import find_isomorphism
from oracle.models import SweepConfig
from oracle.universal import verify_assembly_exponential, verify_assembly_product, verify_modest_reflection
from oracle.universe import assembly_universe, pequ_universe
from pequ.models import PEquObj, PartialEquivalence
from quantale.models import TWO
from vcat.models import VCatObj
from .constructions import (
    assembly_equalizer, assembly_image_factorization, assembly_morphism, assembly_product, assm_exponential,
    mdst_pequ_equivalence, modest_reflection, regular_subobjects, track_check, tracking_failure, transport_backward,
    transport_forward,
)
from .models import Assembly, AssemblyMorph
from .serializers import AssemblyMorphSerializer, AssemblySerializer


def two_points():
    """Elements p < q each realized by its own point of the 2-chain"""
    return Assembly(['p', 'q'], VCatObj.chain(2), [[0], [1]])


def over_a_point(n):
    """n elements all realized by the single point"""
    return Assembly([f'e{i}' for i in range(n)], VCatObj.chain(1), [[0]] * n)


def small_assemblies():
    return assembly_universe(TWO, SweepConfig(max_carrier=2))


class AssemblyTests(SimpleTestCase):

    def test_realizers_required(self):
        with self.assertRaises(InputError):
            Assembly(['a'], VCatObj.chain(1), [[]])
        with self.assertRaises(InputError):
            Assembly(['a'], VCatObj.chain(1), [[3]])

    def test_modest(self):
        self.assertTrue(two_points().is_modest())
        self.assertFalse(Assembly(['a', 'b'], VCatObj.chain(1), [[0], [0]]).is_modest())


class TrackingTests(SimpleTestCase):

    def test_identity_is_tracked(self):
        x = two_points()
        self.assertEqual(track_check([0, 1], x, x).mapping, (0, 1))

    def test_swap_is_not_tracked(self):
        x = two_points()
        self.assertIsNone(track_check([1, 0], x, x))
        with self.assertRaises(InputError):
            assembly_morphism(x, x, [1, 0])

    def test_swap_failure_certificate(self):
        x = two_points()
        certificate = tracking_failure([1, 0], x, x)
        self.assertEqual(certificate['map'], {'p': 'q', 'q': 'p'})
        # each point has a forced image, and the forced map reverses the order
        self.assertEqual(certificate['allowed'], {'c0': ['c1'], 'c1': ['c0']})
        self.assertEqual(certificate['blocked'], [])
        with self.assertRaisesMessage(InputError, "allowed images {'c0': ['c1'], 'c1': ['c0']}"):
            assembly_morphism(x, x, [1, 0])

    def test_blocked_point(self):
        x = Assembly(['a', 'b'], VCatObj.chain(1), [[0], [0]])
        y = two_points()
        self.assertIsNone(track_check([0, 1], x, y))
        self.assertEqual(tracking_failure([0, 1], x, y)['blocked'], ['c0'])

    def test_constant_map(self):
        x = two_points()
        f = assembly_morphism(x, x, [1, 1])
        self.assertEqual(f.realizer.mapping, (1, 1))


class LimitTests(SimpleTestCase):

    def test_product(self):
        x = two_points()
        obj, p1, p2 = assembly_product(x, x)
        self.assertEqual(obj.elements, ('(p,p)', '(p,q)', '(q,p)', '(q,q)'))
        self.assertEqual(obj.E(1), (1,))
        self.assertEqual(p2.mapping, (0, 1, 0, 1))
        verdict = verify_assembly_product(obj, p1, p2, x, x, SweepConfig(max_carrier=1))
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_equalizer(self):
        x = two_points()
        f = assembly_morphism(x, x, [0, 1])
        g = assembly_morphism(x, x, [1, 1])
        obj, inclusion = assembly_equalizer(f, g)
        self.assertEqual(obj.elements, ('q',))
        self.assertEqual(inclusion.mapping, (1,))

    def test_image_factorization(self):
        x = two_points()
        cover, inclusion = assembly_image_factorization(assembly_morphism(x, x, [1, 1]))
        self.assertEqual(cover.cod.elements, ('q',))
        self.assertEqual(cover.then(inclusion).mapping, (1, 1))


class ExponentialTests(SimpleTestCase):

    def test_monotone_maps(self):
        x = two_points()
        exp = assm_exponential(x, x, verify=False)
        self.assertEqual(exp.obj.elements, ('<p,p>', '<p,q>', '<q,q>'))
        self.assertTrue(exp.obj.is_modest())
        self.assertEqual(exp.evaluation.mapping, (0, 0, 0, 1, 1, 1))

    def test_bounded_enumeration(self):
        with self.assertRaises(EnumerationBoundExceeded):
            assm_exponential(over_a_point(11), over_a_point(4), verify=False)
        with self.assertRaises(EnumerationBoundExceeded):
            assm_exponential(two_points(), two_points(), verify=False, bound=3)

    def test_modest_codomain_gives_modest_exponential(self):
        universe = small_assemblies()
        modest = [y for y in universe if y.is_modest()]
        for x in universe:
            for y in modest:
                exp = assm_exponential(x, y, verify=False)
                self.assertTrue(exp.obj.is_modest(), (x.describe(), y.describe()))

    def test_universal_property_sweep(self):
        universe = small_assemblies()
        competitors = assembly_universe(TWO, SweepConfig(max_carrier=1))
        for x in universe:
            for y in universe:
                exp = assm_exponential(x, y, verify=False)
                verdict = verify_assembly_exponential(x, y, exp, SweepConfig(max_carrier=1), competitors)
                self.assertTrue(verdict.passed, (x.describe(), y.describe(), verdict.certificate))

    def test_one_point_exponent(self):
        point = Assembly(['*'], VCatObj.chain(1), [[0]])
        for y in small_assemblies():
            exp = assm_exponential(point, y, verify=False)
            self.assertIsNotNone(find_isomorphism(exp.obj, y), y.describe())


class ModestTests(SimpleTestCase):

    def test_reflection_merges_overlaps(self):
        x = Assembly(['a', 'b', 'c'], VCatObj.antichain(3), [[0, 1], [1], [2]])
        obj, unit = modest_reflection(x)
        self.assertEqual(obj.elements, ('a~b', 'c'))
        self.assertEqual(obj.realizers, ((0, 1), (2,)))
        self.assertEqual(unit.mapping, (0, 0, 1))
        verdict = verify_modest_reflection(x, obj, unit, SweepConfig(max_carrier=1))
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_reflection_sweep(self):
        competitors = assembly_universe(TWO, SweepConfig(max_carrier=1), modest_only=True)
        for x in small_assemblies():
            obj, unit = modest_reflection(x)
            verdict = verify_modest_reflection(x, obj, unit, SweepConfig(max_carrier=1), competitors)
            self.assertTrue(verdict.passed, (x.describe(), verdict.certificate))

    def test_equivalence_with_partial_equilogical_objects(self):
        p = PEquObj(VCatObj.chain(3), PartialEquivalence(3, [[0, 1]]))
        modest = mdst_pequ_equivalence('backward', p)
        self.assertEqual(modest.elements, ('c0~c1',))
        self.assertEqual(mdst_pequ_equivalence('forward', modest), p)

    def test_round_trips(self):
        for x in small_assemblies():
            if x.is_modest():
                back = mdst_pequ_equivalence('backward', mdst_pequ_equivalence('forward', x))
                self.assertIsNotNone(find_isomorphism(back, x), x.describe())
        for p in pequ_universe(TWO, SweepConfig(max_carrier=2)):
            there = mdst_pequ_equivalence('forward', mdst_pequ_equivalence('backward', p))
            self.assertEqual(there, p)

    def test_forward_needs_modest(self):
        with self.assertRaises(InputError):
            mdst_pequ_equivalence('forward', Assembly(['a', 'b'], VCatObj.chain(1), [[0], [0]]))

    def test_morphism_transport(self):
        x = two_points()
        f = assembly_morphism(x, x, [1, 1])
        moved = transport_forward(f)
        self.assertIsInstance(moved, MorphClass)
        back = transport_backward(moved)
        self.assertEqual(back.mapping, f.mapping)


class RegularSubobjectTests(SimpleTestCase):

    def test_one_per_subset(self):
        x = Assembly(['a', 'b'], VCatObj.chain(1), [[0], [0]])
        subobjects = regular_subobjects(x)
        self.assertEqual(len(subobjects), 4)
        self.assertTrue(all(s.certificate is not None for s in subobjects))

    def test_three_elements(self):
        x = Assembly(['a', 'b', 'c'], VCatObj.chain(2), [[0], [1], [0, 1]])
        self.assertEqual(len(regular_subobjects(x)), 8)


class SerializerTests(SimpleTestCase):

    def document(self, **realizers):
        base = {'quantale': 'two', 'carrier': ['c0', 'c1'], 'matrix': [[True, True], [False, True]]}
        return {'type': 'assembly', 'base': base, 'elements': ['p', 'q'], 'realizers': realizers}

    def test_assembly(self):
        x = load(AssemblySerializer, self.document(p=['c0'], q=['c1']))
        self.assertEqual(x, two_points())

    def test_missing_and_extra_elements(self):
        with self.assertRaises(ValidationError):
            load(AssemblySerializer, self.document(p=['c0']))
        with self.assertRaises(ValidationError):
            load(AssemblySerializer, self.document(p=['c0'], q=['c1'], r=['c0']))

    def test_morphism_gets_a_realizer(self):
        x = two_points()
        f = load(AssemblyMorphSerializer, {'map': {'p': 'q', 'q': 'q'}}, dom=x, cod=x)
        self.assertIsInstance(f, AssemblyMorph)
        self.assertEqual(AssemblyMorphSerializer(f).data['realizer'], {'c0': 'c1', 'c1': 'c1'})

    def test_untracked_morphism_rejected(self):
        x = two_points()
        with self.assertRaises(ValidationError):
            load(AssemblyMorphSerializer, {'map': {'p': 'q', 'q': 'p'}}, dom=x, cod=x)
