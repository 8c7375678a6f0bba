import json
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from cli import runners
from cli.serializers import load_document
from equ.constructions import LimitKind
from equilog.exceptions import ConstructionRejected, WorkbenchError
from oracle.models import SweepConfig
from oracle.universal import PropertyKind
from oracle.universe import BASE_QUANTALES
from spaces.transfers import DIRECTION_ALIASES, Direction, TransferPair

logger = logging.getLogger(__name__)

ASSEMBLY_ACTIONS = {'exp': 2, 'reflect': 1, 'subobjects': 1}
PER_ACTIONS = ('verify', 'from-equ', 'to-equ', 'kernel', 'as-kernel', 'reflect')


class Command(BaseCommand):
    help = 'Construct and verify equilogical objects from JSON documents'

    def add_arguments(self, parser):
        commands = parser.add_subparsers(dest='command', required=True)

        def command(group, name, help_text, sweep=False):
            sub = group.add_parser(name, help=help_text)
            sub.add_argument('--json', action='store_true', help='Print the machine-readable report')
            if sweep:
                sub.add_argument('--max-carrier', type=int, default=None,
                                 help='Largest competitor carrier (default EQUILOG_MAX_CARRIER)')
            return sub

        sub = command(commands, 'check', 'Verify the axioms of any document', sweep=True)
        sub.add_argument('file')

        sub = command(commands, 'limit', 'Finite limit or colimit of equilogical objects', sweep=True)
        sub.add_argument('--kind', required=True, choices=LimitKind.values)
        sub.add_argument('--verify', action='store_true', help='Audit the result against its universal property')
        sub.add_argument('files', nargs='+', help='Objects, or morphisms for (co)equalizers')

        sub = command(commands, 'exp', 'Exponential of V-categories or partial equilogical objects', sweep=True)
        sub.add_argument('x')
        sub.add_argument('y')
        sub.add_argument('--pequ', action='store_true')
        sub.add_argument('--force', action='store_true', help='Skip the injectivity test on the exponent')
        sub.add_argument('--no-verify', action='store_true', help='Skip the universal-property audit')

        sub = command(commands, 'hat', 'Partial equilogical object over the presheaf object')
        sub.add_argument('file')

        sub = command(commands, 'reflect-r', 'Restrict a partial equilogical object to its domain')
        sub.add_argument('file')

        sub = command(commands, 'assm', 'Constructions on assemblies')
        sub.add_argument('action', choices=list(ASSEMBLY_ACTIONS))
        sub.add_argument('files', nargs='+')

        sub = command(commands, 'per', 'Pseudo-equivalence relations', sweep=True)
        sub.add_argument('action', choices=PER_ACTIONS)
        sub.add_argument('file')
        sub.add_argument('--verify', action='store_true', help='Audit the reflection against its universal property')

        sub = command(commands, 'adj', 'Carry an object or morphism across a transfer')
        sub.add_argument('--pair', required=True, choices=TransferPair.values)
        sub.add_argument('--dir', required=True, choices=Direction.values + list(DIRECTION_ALIASES))
        sub.add_argument('file')

        oracle = commands.add_parser('oracle', help='Brute-force verifiers').add_subparsers(
            dest='oracle_command', required=True,
        )
        sub = command(oracle, 'ump', 'Build a construction and audit its universal property', sweep=True)
        sub.add_argument('--kind', required=True, choices=PropertyKind.values)
        sub.add_argument('files', nargs='+')
        sub = command(oracle, 'adjunction', 'Check a transfer pair is an adjunction', sweep=True)
        sub.add_argument('--pair', required=True, choices=TransferPair.values)
        sub.add_argument('--flip', action='store_true', help='Swap the left and right adjoints')
        sub.add_argument('--samples', type=int, default=None, help='Random instances instead of the full sweep')
        sub.add_argument('--seed', type=int, default=0)
        sub = command(oracle, 'embeddings', 'Both embeddings of preorders into approach spaces agree', sweep=True)
        sub = command(oracle, 'inject', 'Injectivity test for a V-category', sweep=True)
        sub.add_argument('file')
        sub = command(oracle, 'conditions', 'Conditions (a) to (f) over a base category', sweep=True)
        sub.add_argument('--base', required=True, choices=list(BASE_QUANTALES))

        sub = command(commands, 'enumerate-homs', 'Every morphism class between two objects')
        sub.add_argument('x')
        sub.add_argument('y')

    def handle(self, *args, **options):
        try:
            outcome = self.run(options)
        except ConstructionRejected as exc:
            self.emit({'error': str(exc), 'certificate': exc.certificate}, options)
            raise CommandError(str(exc), returncode=exc.exit_code)
        except WorkbenchError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code)
        except ValidationError as exc:
            raise CommandError(f'invalid document: {exc.detail}', returncode=2)
        self.emit(outcome.data, options)
        if not outcome.passed:
            raise CommandError('verification failed', returncode=1)

    def run(self, options):
        command = options['command']
        sweep = self.sweep(options)
        if command == 'check':
            return runners.run_check(self.load(options['file']), sweep or SweepConfig())
        if command == 'limit':
            args = [self.load(path) for path in options['files']]
            return runners.run_limit(options['kind'], args, (sweep or SweepConfig()) if options['verify'] else None)
        if command == 'exp':
            return runners.run_exp(
                self.load(options['x']), self.load(options['y']),
                pequ=options['pequ'], force=options['force'], verify=not options['no_verify'], sweep=sweep,
            )
        if command == 'hat':
            return runners.run_hat(self.load(options['file']))
        if command == 'reflect-r':
            return runners.run_reflect_r(self.load(options['file']))
        if command == 'assm':
            action = options['action']
            if len(options['files']) != ASSEMBLY_ACTIONS[action]:
                raise CommandError(f'assm {action} takes {ASSEMBLY_ACTIONS[action]} file(s)', returncode=2)
            return runners.run_assm(action, [self.load(path) for path in options['files']])
        if command == 'per':
            audit = (sweep or SweepConfig()) if options['verify'] else None
            return runners.run_per(options['action'], self.load(options['file']), audit)
        if command == 'adj':
            return runners.run_adj(options['pair'], options['dir'], self.load(options['file']))
        if command == 'enumerate-homs':
            return runners.run_enumerate_homs(self.load(options['x']), self.load(options['y']))
        return self.run_oracle(options, sweep or SweepConfig())

    def run_oracle(self, options, sweep):
        command = options['oracle_command']
        logger.info('oracle %s at bound %d', command, sweep.max_carrier)
        if command == 'ump':
            return runners.run_ump(options['kind'], [self.load(path) for path in options['files']], sweep)
        if command == 'adjunction':
            return runners.run_oracle_adjunction(
                options['pair'], sweep, flip=options['flip'], samples=options['samples'], seed=options['seed'],
            )
        if command == 'embeddings':
            return runners.run_embeddings(sweep)
        if command == 'inject':
            return runners.run_inject(self.load(options['file']), sweep)
        return runners.run_conditions(options['base'], sweep)

    def sweep(self, options):
        if options.get('max_carrier') is None:
            return None
        return SweepConfig(max_carrier=options['max_carrier'])

    def load(self, path):
        try:
            data = json.loads(Path(path).read_text())
        except OSError as exc:
            raise CommandError(f'cannot read {path}: {exc.strerror}', returncode=2)
        except json.JSONDecodeError as exc:
            raise CommandError(f'{path} is not valid JSON: {exc}', returncode=2)
        return load_document(data)

    def emit(self, data, options):
        if options.get('json'):
            self.stdout.write(json.dumps(data, indent=2, default=str))
        else:
            self.stdout.write(render(data))


def render(data):
    """Human-readable form of a report, a verdict or a document"""
    if 'checks' in data:
        lines = [f"{data['subject']}: {'PASS' if data['passed'] else 'FAIL'}"]
        for check in data['checks']:
            line = f"  {check['status']:<4} {check['name']}"
            if check.get('detail'):
                line += f" ({check['detail']})"
            if 'witness' in check and check['witness'] is not None:
                line += f" witness: {json.dumps(check['witness'], default=str)}"
            lines.append(line)
        return '\n'.join(lines)
    if 'verdict' in data and 'subject' in data:
        text = f"{data['subject']}: {data['verdict']} ({data['checked']} checked)"
        if 'certificate' in data:
            text += '\n' + json.dumps(data['certificate'], indent=2, default=str)
        return text
    return json.dumps(data, indent=2, default=str)
