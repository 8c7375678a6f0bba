from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from equilog.exceptions import InputError
from equilog.serializers import load
from spaces.models import FinTop
from spaces.transfers import adjunction_transfer, transfer_morphism
from vcat.models import VCatObj
from .constructions import (
    classify_mono_epi, coequalizer, compose, equalizer, limit_colimit, morph_equal, product,
    verify_equ_morphism,
)
from .models import EquObj, MorphClass, Partition
from .serializers import EquObjSerializer


def antichain_equ(n, blocks):
    return EquObj(VCatObj.antichain(n), Partition(n, blocks))


class PartitionTests(SimpleTestCase):

    def test_blocks_are_normalised(self):
        self.assertEqual(Partition(3, [[2, 0], [1]]), Partition(3, [[1], [0, 2]]))
        self.assertEqual(Partition(3, [[2, 0], [1]]).blocks, ((0, 2), (1,)))

    def test_blocks_must_cover(self):
        with self.assertRaises(InputError):
            Partition(3, [[0, 1]])
        with self.assertRaises(InputError):
            Partition(2, [[0, 1], [1]])

    def test_relation_must_be_an_equivalence(self):
        with self.assertRaises(InputError):
            Partition.from_relation(2, [(0, 0), (1, 1), (0, 1)])
        self.assertEqual(Partition.from_relation(2, [(0, 0), (1, 1), (0, 1), (1, 0)]), Partition.total(2))

    def test_product_is_row_major(self):
        prod = Partition.total(2).product(Partition.discrete(2))
        self.assertEqual(prod.blocks, ((0, 2), (1, 3)))

    def test_join(self):
        self.assertEqual(Partition.discrete(3).join([(0, 2)]).blocks, ((0, 2), (1,)))


class MorphismTests(SimpleTestCase):

    def test_class_equality(self):
        x = antichain_equ(2, [[0, 1]])
        y = antichain_equ(2, [[0], [1]])
        f = MorphClass(x, y, [0, 0])
        g = MorphClass(x, y, [1, 1])
        self.assertFalse(morph_equal(f, g))
        self.assertEqual(f, MorphClass(x, y, [0, 0]))
        z = antichain_equ(2, [[0, 1]])
        self.assertEqual(MorphClass(x, z, [0, 0]), MorphClass(x, z, [1, 0]))

    def test_equivariance_failure(self):
        x = antichain_equ(2, [[0, 1]])
        y = antichain_equ(2, [[0], [1]])
        report = verify_equ_morphism(MorphClass(x, y, [0, 1]))
        self.assertTrue(report.get('base_morphism').passed)
        self.assertEqual(report.get('equivariance').witness, ('a0', 'a1'))

    def test_base_failure(self):
        chain = EquObj.discrete(VCatObj.chain(2))
        report = verify_equ_morphism(MorphClass(chain, chain, [1, 0]))
        self.assertFalse(report.get('base_morphism').passed)

    def test_mono_epi(self):
        x = antichain_equ(2, [[0], [1]])
        y = antichain_equ(3, [[0], [1], [2]])
        self.assertEqual(classify_mono_epi(MorphClass(x, y, [0, 1])), {'mono': True, 'epi': False})
        collapse = antichain_equ(2, [[0, 1]])
        self.assertEqual(classify_mono_epi(MorphClass(x, collapse, [0, 1])), {'mono': False, 'epi': True})

    def test_compose(self):
        x = antichain_equ(2, [[0], [1]])
        f = MorphClass(x, x, [1, 0])
        self.assertEqual(compose(f, f).mapping, (0, 1))
        with self.assertRaises(InputError):
            compose(f, MorphClass(antichain_equ(3, [[0, 1, 2]]), x, [0, 0, 0]))


class LimitTests(SimpleTestCase):

    def test_product_of_relations(self):
        a = antichain_equ(2, [[0, 1]])
        b = antichain_equ(2, [[0], [1]])
        limit = product(a, b)
        self.assertEqual(limit.obj.size, 4)
        self.assertEqual(limit.obj.partition.count, 2)
        self.assertTrue(all(verify_equ_morphism(leg).passed for leg in limit.legs))

    def test_equalizer_keeps_agreeing_points(self):
        x = antichain_equ(3, [[0], [1], [2]])
        y = antichain_equ(2, [[0], [1]])
        limit = equalizer(MorphClass(x, y, [0, 1, 0]), MorphClass(x, y, [0, 0, 0]))
        self.assertEqual(limit.obj.carrier, ('a0', 'a2'))
        self.assertEqual(limit.legs[0].mapping, (0, 2))

    def test_coequalizer_glues(self):
        x = antichain_equ(1, [[0]])
        y = antichain_equ(2, [[0], [1]])
        limit = coequalizer(MorphClass(x, y, [0]), MorphClass(x, y, [1]))
        self.assertEqual(limit.obj.partition, Partition.total(2))

    def test_terminal_and_initial(self):
        x = antichain_equ(2, [[0, 1]])
        self.assertEqual(limit_colimit('terminal', x).obj.size, 1)
        self.assertEqual(limit_colimit('initial', x).obj.size, 0)

    def test_arity_and_kind_are_checked(self):
        x = antichain_equ(1, [[0]])
        with self.assertRaises(InputError):
            limit_colimit('product', x)
        with self.assertRaises(InputError):
            limit_colimit('pushout', x, x)

    def test_mixed_bases_refused(self):
        t = EquObj.discrete(FinTop.discrete(['p']))
        with self.assertRaises(InputError):
            product(t, antichain_equ(1, [[0]]))


class TransferTests(SimpleTestCase):

    def test_carrier_and_equivalence_survive(self):
        x = EquObj(VCatObj.chain(2), Partition.total(2))
        moved = adjunction_transfer(x, 'ord-top', 'rightward')
        self.assertIsInstance(moved.base, FinTop)
        self.assertEqual(moved.partition, x.partition)
        self.assertEqual(moved.carrier, x.carrier)

    def test_morphism_transfer(self):
        x = EquObj.discrete(VCatObj.chain(2))
        f = MorphClass(x, x, [0, 0])
        moved = transfer_morphism(f, 'ord-met', 'fwd')
        self.assertEqual(moved.mapping, (0, 0))
        self.assertTrue(verify_equ_morphism(moved).passed)


class SerializerTests(SimpleTestCase):

    def base(self):
        return {'type': 'vcat', 'quantale': 'two', 'carrier': ['x', 'y'], 'matrix': [[True, False], [False, True]]}

    def test_blocks(self):
        e = load(EquObjSerializer, {'base': self.base(), 'blocks': [['x', 'y']]})
        self.assertEqual(e.partition, Partition.total(2))
        self.assertEqual(EquObjSerializer(e).data['blocks'], [['x', 'y']])

    def test_relation(self):
        e = load(EquObjSerializer, {'base': self.base(), 'relation': [['x', 'x'], ['y', 'y']]})
        self.assertEqual(e.partition, Partition.discrete(2))

    def test_non_equivalence_rejected(self):
        with self.assertRaises(ValidationError):
            load(EquObjSerializer, {'base': self.base(), 'relation': [['x', 'y']]})
