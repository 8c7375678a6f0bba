import itertools
import random

from django.test import SimpleTestCase, override_settings

from equ.constructions import Limit, classify_mono_epi, coequalizer, coproduct, equalizer, limit_colimit, product
from equ.models import EquObj, MorphClass, Partition
from equilog.exceptions import BudgetExceeded, InputError, UnsupportedBase
from pequ.constructions import functor_R
from pequ.models import PEquObj, PartialEquivalence
from quantale.models import MAX, PLUS, TWO
from vcat.constructions import separated_reflection
from vcat.models import VCatObj
from .adjunction import (
    adjoint_pair, identity_functor, sampled_universe, transfer_functor, verify_adjunction, verify_embeddings_coincide,
)
from .conditions import condition_suite, injectivity_test
from .enumeration import (
    closure_agrees, enumerate_morphclasses, epi_by_cancellation, find_isomorphism, hom_count,
    mono_by_cancellation,
)
from .models import SweepConfig
from .universal import verify_limit, verify_r_full_faithful, verify_separated_reflection, verify_universal_property
from .universe import (
    carrier_names, equ_universe, partial_equivalences, random_equ, random_vcat, set_partitions, vcat_objects,
)

SMALL = SweepConfig(max_carrier=2)


def discrete(base):
    return EquObj.discrete(base)


class SweepConfigTests(SimpleTestCase):

    def test_carrier_must_be_positive(self):
        with self.assertRaises(InputError):
            SweepConfig(max_carrier=0)

    @override_settings(EQUILOG_MAX_CARRIER=5)
    def test_defaults_from_settings(self):
        self.assertEqual(SweepConfig().max_carrier, 5)

    def test_budget(self):
        clock = SweepConfig(max_carrier=1, time_budget=-1).clock('nothing')
        with self.assertRaises(BudgetExceeded):
            clock.tick()


class UniverseTests(SimpleTestCase):

    def test_preorders_on_two_points(self):
        self.assertEqual(len(vcat_objects(TWO, 2)), 4)

    def test_relations(self):
        self.assertEqual(len(set_partitions(3)), 5)
        # empty, two singletons, and on {0, 1} either one block or two
        self.assertEqual(len(partial_equivalences(2)), 5)

    def test_sampling_is_reproducible(self):
        self.assertEqual(sampled_universe('met', 4, 2, seed=3), sampled_universe('met', 4, 2, seed=3))


class EnumerationTests(SimpleTestCase):

    def test_homs_of_two_chain(self):
        chain = discrete(VCatObj.chain(2))
        self.assertEqual(hom_count(chain, chain), 3)
        self.assertEqual(hom_count(chain, discrete(VCatObj.chain(1))), 1)

    def test_classes_are_listed_once(self):
        x = EquObj(VCatObj.antichain(2), Partition.total(2))
        self.assertEqual(hom_count(x, x), 1)

    def test_mixed_kinds_refused(self):
        p = PEquObj(VCatObj.chain(1), PartialEquivalence.total(1))
        with self.assertRaises(InputError):
            enumerate_morphclasses(discrete(VCatObj.chain(1)), p)

    def test_isomorphism_up_to_relatedness(self):
        a = EquObj(VCatObj.antichain(2), Partition.total(2))
        point = discrete(VCatObj.chain(1))
        self.assertIsNotNone(find_isomorphism(a, point))
        self.assertIsNone(find_isomorphism(discrete(VCatObj.antichain(2)), point))

    def test_cancellation(self):
        x = discrete(VCatObj.antichain(2))
        universe = equ_universe('ord', SMALL)
        self.assertTrue(mono_by_cancellation(MorphClass.identity(x), universe)[0])
        collapse = MorphClass(x, discrete(VCatObj.chain(1)), [0, 0])
        passed, certificate = mono_by_cancellation(collapse, universe)
        self.assertFalse(passed)
        self.assertIn('competitor', certificate)
        self.assertTrue(epi_by_cancellation(collapse, universe)[0])


def surjections(n, m):
    return [mapping for mapping in itertools.product(range(m), repeat=n) if len(set(mapping)) == m]


def random_surjection(n, rng):
    m = rng.randint(1, n)
    mapping = list(range(m)) + [rng.randrange(m) for _ in range(n - m)]
    rng.shuffle(mapping)
    return mapping, m


class ClosureTests(SimpleTestCase):

    def test_closures_agree_on_random_instances(self):
        for q in (TWO, PLUS, MAX):
            rng = random.Random(7)
            for _ in range(200):
                x = random_vcat(q, rng.randint(1, 4), rng)
                mapping, m = random_surjection(x.size, rng)
                self.assertTrue(closure_agrees(x, mapping, carrier_names(m, 't')), (q, x.matrix, mapping))

    def test_closures_agree_on_every_small_instance(self):
        for q, largest in ((TWO, 3), (PLUS, 2)):
            for n in range(1, largest + 1):
                for x in vcat_objects(q, n):
                    for m in range(1, n + 1):
                        for mapping in surjections(n, m):
                            self.assertTrue(
                                closure_agrees(x, mapping, carrier_names(m, 't')), (q, x.matrix, mapping),
                            )


class InjectivityTests(SimpleTestCase):

    def test_two_chain_is_injective(self):
        verdict = injectivity_test(VCatObj.chain(2), SMALL)
        self.assertTrue(verdict.passed)
        self.assertEqual(verdict.label, 'PASS at bound 2')

    def test_antichain_is_not(self):
        verdict = injectivity_test(VCatObj.antichain(2), SMALL)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.certificate['embedding'], 'yoneda')

    def test_metric_point_by_sweep(self):
        verdict = injectivity_test(VCatObj.metric(['x'], [[0]]), SMALL)
        self.assertTrue(verdict.passed)
        self.assertGreater(verdict.checked, 0)


class LimitOracleTests(SimpleTestCase):

    def test_product_passes(self):
        a = discrete(VCatObj.antichain(2))
        limit = product(a, a)
        verdict = verify_limit('product', limit, (a, a), SMALL)
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_product_with_full_relation_fails(self):
        a = discrete(VCatObj.antichain(2))
        honest = product(a, a)
        obj = EquObj(honest.obj.base, Partition.total(4))
        candidate = Limit(obj, tuple(MorphClass(obj, leg.cod, leg.mapping) for leg in honest.legs))
        verdict = verify_limit('product', candidate, (a, a), SMALL)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.label, 'FAIL')
        self.assertIn('competitor', verdict.certificate)

    def test_coequalizer_passes(self):
        x = discrete(VCatObj.chain(1))
        y = discrete(VCatObj.antichain(2))
        f, g = MorphClass(x, y, [0]), MorphClass(x, y, [1])
        verdict = verify_universal_property('coequalizer', coequalizer(f, g), (f, g), SMALL)
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_terminal_passes(self):
        x = discrete(VCatObj.chain(1))
        verdict = verify_limit('terminal', limit_colimit('terminal', x), (x,), SMALL)
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_unknown_kind(self):
        with self.assertRaises(InputError):
            verify_universal_property('pushout', None, ())


def morphisms_of(universe):
    for x in universe:
        for y in universe:
            yield x, y, enumerate_morphclasses(x, y)


class EquSweepTests(SimpleTestCase):
    """Every small preorder-based object, and a seeded sample over metrics"""

    def assert_classification(self, f, universe):
        expected = {
            'mono': mono_by_cancellation(f, universe)[0],
            'epi': epi_by_cancellation(f, universe)[0],
        }
        self.assertEqual(classify_mono_epi(f), expected, f.as_names())

    def assert_limits(self, x, y, morphisms):
        for kind, build in (('product', product), ('coproduct', coproduct)):
            verdict = verify_limit(kind, build(x, y), (x, y), SMALL)
            self.assertTrue(verdict.passed, (kind, x.describe(), y.describe(), verdict.certificate))
        for f in morphisms:
            for g in morphisms:
                for kind, build in (('equalizer', equalizer), ('coequalizer', coequalizer)):
                    verdict = verify_limit(kind, build(f, g), (f, g), SMALL)
                    self.assertTrue(verdict.passed, (kind, f.as_names(), g.as_names(), verdict.certificate))

    def test_mono_epi_match_cancellation(self):
        universe = equ_universe('ord', SMALL)
        for _, _, morphisms in morphisms_of(universe):
            for f in morphisms:
                self.assert_classification(f, universe)

    def test_limits_and_colimits(self):
        for x, y, morphisms in morphisms_of(equ_universe('ord', SMALL)):
            self.assert_limits(x, y, morphisms)

    def test_random_metric_objects(self):
        universe = equ_universe('met', SMALL)
        rng = random.Random(11)
        for _ in range(6):
            x = random_equ('met', rng.randint(1, 2), rng)
            y = random_equ('met', rng.randint(1, 2), rng)
            morphisms = enumerate_morphclasses(x, y)
            for f in morphisms:
                self.assert_classification(f, universe)
            self.assert_limits(x, y, morphisms)



class ReflectionOracleTests(SimpleTestCase):

    def test_separated_reflection(self):
        x = VCatObj.indiscrete(TWO, ['a', 'b'])
        verdict = verify_separated_reflection(x, *separated_reflection(x), SMALL)
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_r_is_full_and_faithful(self):
        base = VCatObj.chain(2)
        pairs = [
            (PEquObj(base, per), PEquObj(base, other))
            for per in partial_equivalences(2) for other in partial_equivalences(2)
        ]
        verdict = verify_r_full_faithful(pairs, SMALL)
        self.assertTrue(verdict.passed, verdict.certificate)
        self.assertEqual(verdict.checked, 25)
        self.assertEqual(functor_R(pairs[0][0]).size, 0)


class ConditionTests(SimpleTestCase):

    def test_order_base(self):
        report = condition_suite('ord', SMALL)
        self.assertTrue(report.passed, report.as_dict())
        self.assertEqual(report.bound, 2)
        self.assertEqual(len(report.checks), 6)

    def test_metric_base_skips_presheaves(self):
        report = condition_suite('met', SweepConfig(max_carrier=2))
        self.assertEqual(report.get('(c) presheaf embedding').status, 'N/A')

    def test_spaces_refused(self):
        with self.assertRaises(UnsupportedBase):
            condition_suite('top', SMALL)


class AdjunctionTests(SimpleTestCase):

    def test_order_metric(self):
        left, right = adjoint_pair('ord-met')
        self.assertEqual((left.source, left.target), ('met', 'ord'))
        verdict = verify_adjunction(left, right, SMALL)
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_order_topology(self):
        verdict = verify_adjunction(*adjoint_pair('ord-top'), SMALL)
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_flipped_pair_fails(self):
        left, right = adjoint_pair('ord-met')
        verdict = verify_adjunction(right, left, SMALL)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.certificate['check'], 'hom-bijection')

    def test_sampled_instances(self):
        left, right = adjoint_pair('met-app')
        sources = sampled_universe(left.source, 6, 2, seed=1)
        targets = sampled_universe(left.target, 6, 2, seed=2)
        verdict = verify_adjunction(left, right, SMALL, sources, targets)
        self.assertTrue(verdict.passed, verdict.certificate)

    def test_functors_must_be_opposite(self):
        with self.assertRaises(InputError):
            verify_adjunction(transfer_functor('ord-met', 'fwd'), identity_functor('ord'), SMALL)

    def test_embeddings_into_approach_spaces_agree(self):
        verdict = verify_embeddings_coincide(SMALL)
        self.assertTrue(verdict.passed, verdict.certificate)
        # 1 + 1 + 4 preorders on at most two points
        self.assertEqual(verdict.checked, 6)
