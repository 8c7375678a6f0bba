import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from equ.models import EquObj, Partition
from vcat.models import VCatObj
from .runners import run_check, run_per
from .serializers import dump_document, load_document

CHAIN = {'type': 'vcat', 'quantale': 'two', 'carrier': ['c0', 'c1'], 'matrix': [[True, True], [False, True]]}
ANTICHAIN = {'type': 'vcat', 'quantale': 'two', 'carrier': ['a0', 'a1'], 'matrix': [[True, False], [False, True]]}


class CommandTestCase(SimpleTestCase):
    """Writes documents to a scratch directory and runs the equilog command on them"""

    def setUp(self):
        self.scratch = tempfile.TemporaryDirectory()
        self.addCleanup(self.scratch.cleanup)

    def document(self, name, data):
        path = Path(self.scratch.name) / f'{name}.json'
        path.write_text(json.dumps(data))
        return str(path)

    def run_json(self, *args):
        out = StringIO()
        call_command('equilog', *args, '--json', stdout=out)
        return json.loads(out.getvalue())

    def run_failing(self, *args):
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command('equilog', *args, '--json', stdout=out)
        return caught.exception, out.getvalue()


class CheckCommandTests(CommandTestCase):

    def test_valid_preorder(self):
        data = self.run_json('check', self.document('chain', CHAIN))
        self.assertTrue(data['passed'])
        self.assertEqual([c['name'] for c in data['checks']], ['reflexivity', 'transitivity'])

    def test_text_report(self):
        out = StringIO()
        call_command('equilog', 'check', self.document('chain', CHAIN), stdout=out)
        self.assertIn('PASS transitivity', out.getvalue())

    def test_failed_axiom_exits_one(self):
        bad = {**CHAIN, 'carrier': ['a', 'b', 'c'],
               'matrix': [[True, True, False], [False, True, True], [False, False, True]]}
        error, output = self.run_failing('check', self.document('bad', bad))
        self.assertEqual(error.returncode, 1)
        witness = json.loads(output)['checks'][1]['witness']
        self.assertEqual(witness, ['a', 'b', 'c'])

    def test_invalid_document_exits_two(self):
        error, _ = self.run_failing('check', self.document('bad', {**CHAIN, 'matrix': [[True]]}))
        self.assertEqual(error.returncode, 2)

    def test_unknown_type_exits_two(self):
        error, _ = self.run_failing('check', self.document('bad', {'type': 'graph'}))
        self.assertEqual(error.returncode, 2)

    def test_missing_file_exits_two(self):
        error, _ = self.run_failing('check', str(Path(self.scratch.name) / 'absent.json'))
        self.assertEqual(error.returncode, 2)

    def test_malformed_json_exits_two(self):
        path = Path(self.scratch.name) / 'broken.json'
        path.write_text('{"type": ')
        error, _ = self.run_failing('check', str(path))
        self.assertEqual(error.returncode, 2)


class ConstructionCommandTests(CommandTestCase):

    def test_limit_with_audit(self):
        a = self.document('a', {'type': 'equ', 'base': ANTICHAIN, 'blocks': [['a0'], ['a1']]})
        data = self.run_json('limit', '--kind', 'product', '--verify', '--max-carrier', '2', a, a)
        self.assertEqual(len(data['object']['base']['carrier']), 4)
        self.assertEqual(data['verdict']['verdict'], 'PASS at bound 2')

    def test_exponential(self):
        chain = self.document('chain', CHAIN)
        data = self.run_json('exp', chain, chain, '--max-carrier', '2')
        self.assertEqual(len(data['object']['carrier']), 3)

    def test_exponent_must_be_injective(self):
        error, _ = self.run_failing('exp', self.document('anti', ANTICHAIN), self.document('chain', CHAIN),
                                    '--max-carrier', '2')
        self.assertEqual(error.returncode, 2)

    def test_transfer_to_metrics(self):
        e = self.document('e', {'type': 'equ', 'base': CHAIN, 'blocks': [['c0', 'c1']]})
        data = self.run_json('adj', '--pair', 'ord-met', '--dir', 'fwd', e)
        self.assertEqual(data['base']['matrix'], [['0', '0'], ['inf', '0']])
        self.assertEqual(data['blocks'], [['c0', 'c1']])

    def test_enumerate_homs(self):
        x = self.document('x', {'type': 'equ', 'base': CHAIN})
        self.assertEqual(self.run_json('enumerate-homs', x, x)['count'], 3)

    def test_hat(self):
        point = {'type': 'vcat', 'quantale': 'two', 'carrier': ['p'], 'matrix': [[True]]}
        data = self.run_json('hat', self.document('e', {'type': 'equ', 'base': point}))
        self.assertEqual(data['type'], 'pequ')
        self.assertEqual(len(data['base']['carrier']), 2)

    def test_assembly_subobjects(self):
        x = {'type': 'assembly', 'base': CHAIN, 'elements': ['p', 'q'], 'realizers': {'p': ['c0'], 'q': ['c1']}}
        data = self.run_json('assm', 'subobjects', self.document('x', x))
        self.assertEqual(data['count'], 4)

    def test_assembly_arity(self):
        x = self.document('x', {'type': 'assembly', 'base': CHAIN, 'elements': ['p'], 'realizers': {'p': ['c0']}})
        error, _ = self.run_failing('assm', 'exp', x)
        self.assertEqual(error.returncode, 2)


class SpanCommandTests(CommandTestCase):

    def span(self):
        point = {'type': 'vcat', 'quantale': 'two', 'carrier': ['u'], 'matrix': [[True]]}
        return {'type': 'pseudo_eq_rel', 'x1': point, 'x0': ANTICHAIN, 'r1': {'u': 'a0'}, 'r2': {'u': 'a0'}}

    def test_missing_reflexivity_exits_one(self):
        error, output = self.run_failing('per', 'verify', self.document('span', self.span()))
        self.assertEqual(error.returncode, 1)
        self.assertFalse(json.loads(output)['passed'])

    def test_from_equ_and_back(self):
        e = self.document('e', {'type': 'equ', 'base': ANTICHAIN, 'blocks': [['a0', 'a1']]})
        span = self.run_json('per', 'from-equ', e)
        self.assertEqual(len(span['x1']['carrier']), 4)
        back = self.run_json('per', 'to-equ', self.document('span', span))
        self.assertEqual(back['blocks'], [['a0', 'a1']])

    def test_reflection_with_audit(self):
        e = self.document('e', {'type': 'equ', 'base': ANTICHAIN, 'blocks': [['a0', 'a1']]})
        span = self.document('span', self.run_json('per', 'from-equ', e))
        data = self.run_json('per', 'reflect', span, '--verify', '--max-carrier', '2')
        self.assertTrue(data['verdict']['passed'])


class OracleCommandTests(CommandTestCase):

    def test_conditions(self):
        data = self.run_json('oracle', 'conditions', '--base', 'ord', '--max-carrier', '2')
        self.assertTrue(data['passed'])
        self.assertEqual(data['bound'], 2)

    def test_adjunction(self):
        data = self.run_json('oracle', 'adjunction', '--pair', 'ord-top', '--max-carrier', '2')
        self.assertEqual(data['verdict'], 'PASS at bound 2')

    def test_flipped_adjunction_fails(self):
        error, output = self.run_failing('oracle', 'adjunction', '--pair', 'ord-met', '--flip', '--max-carrier', '2')
        self.assertEqual(error.returncode, 1)
        self.assertEqual(json.loads(output)['verdict'], 'FAIL')

    def test_sampled_adjunction(self):
        data = self.run_json('oracle', 'adjunction', '--pair', 'met-app', '--samples', '5', '--max-carrier', '2')
        self.assertTrue(data['passed'])

    def test_embeddings(self):
        data = self.run_json('oracle', 'embeddings', '--max-carrier', '2')
        self.assertEqual(data['verdict'], 'PASS at bound 2')

    def test_inject(self):
        error, output = self.run_failing('oracle', 'inject', self.document('anti', ANTICHAIN), '--max-carrier', '2')
        self.assertEqual(error.returncode, 1)
        self.assertEqual(json.loads(output)['certificate']['embedding'], 'yoneda')

    def test_ump_separated_reflection(self):
        indiscrete = {**CHAIN, 'matrix': [[True, True], [True, True]]}
        data = self.run_json('oracle', 'ump', '--kind', 'separated_reflection', self.document('x', indiscrete),
                             '--max-carrier', '2')
        self.assertTrue(data['passed'])

    def test_ump_arity(self):
        chain = self.document('chain', CHAIN)
        error, _ = self.run_failing('oracle', 'ump', '--kind', 'vcat_exponential', chain)
        self.assertEqual(error.returncode, 2)


class DocumentTests(SimpleTestCase):

    def test_morphism_document(self):
        data = {'type': 'morphism', 'dom': CHAIN, 'cod': CHAIN, 'map': {'c0': 'c1', 'c1': 'c1'}}
        f = load_document(data)
        self.assertEqual(f.mapping, (1, 1))
        self.assertEqual(dump_document(f)['map'], data['map'])

    def test_runners_without_the_command(self):
        e = EquObj(VCatObj.chain(2), Partition.total(2))
        self.assertTrue(run_check(e, None).passed)
        self.assertEqual(run_per('from-equ', e).data['type'], 'pseudo_eq_rel')
