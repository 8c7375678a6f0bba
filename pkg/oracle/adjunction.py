import logging
import random
from dataclasses import dataclass
from typing import Callable

from equ.models import MorphClass
from equilog.exceptions import InputError
from quantale.models import TWO
from spaces.transfers import (
    Direction, LEFT_ADJOINT, adjunction_transfer, embeddings_coincide, parse_direction, parse_pair, transfer_bases,
)
from .enumeration import enumerate_morphclasses
from .models import Verdict
from .universe import equ_universe, random_equ, vcat_objects

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Functor:
    """A functor between categories of equilogical objects that is the identity on maps"""

    name: str
    source: str
    target: str
    on_objects: Callable

    def __call__(self, obj):
        return self.on_objects(obj)


def transfer_functor(which, direction):
    which = parse_pair(which)
    direction = parse_direction(direction)
    source, target = transfer_bases(which, direction)
    return Functor(
        f'{which.value} {direction.value}', source, target,
        lambda obj: adjunction_transfer(obj, which, direction),
    )


def adjoint_pair(which):
    """(left adjoint, right adjoint) of a transfer pair"""
    which = parse_pair(which)
    left = LEFT_ADJOINT[which]
    right = Direction.RIGHTWARD if left == Direction.LEFTWARD else Direction.LEFTWARD
    return transfer_functor(which, left), transfer_functor(which, right)


def sampled_universe(kind, count, max_carrier, seed=0):
    """`count` random equilogical objects over a base kind, reproducible from the seed"""
    rng = random.Random(seed)
    return [random_equ(kind, rng.randint(0, max_carrier), rng) for _ in range(count)]


def _is_morphism(dom, cod, mapping):
    f = MorphClass(dom, cod, mapping)
    return dom.base.preserves(mapping, cod.base) and all(
        cod.same(f(i), f(j)) for i in range(dom.size) for j in range(dom.size) if dom.same(i, j)
    )


def verify_adjunction(left, right, sweep, source_universe=None, target_universe=None):
    """
    Check D(F A, B) = C(A, G B) through the identity on underlying maps.

    F = `left` runs C -> D and G = `right` runs D -> C. Naturality is
    checked as functoriality of F and G on every morphism class between
    small competitors; the unit A -> G F A and counit F G B -> B must be
    the identity maps.
    """
    if left.source != right.target or left.target != right.source:
        raise InputError(f'{left.name} and {right.name} do not form a pair of opposite functors')
    subject = f'{left.name} left adjoint to {right.name}'
    clock = sweep.clock(subject)
    sources = source_universe if source_universe is not None else equ_universe(left.source, sweep)
    targets = target_universe if target_universe is not None else equ_universe(left.target, sweep)
    checked = 0

    def fail(check, certificate):
        certificate = {'check': check, **certificate}
        logger.warning('%s failed: %s', subject, certificate)
        return Verdict(subject, False, sweep.max_carrier, checked, certificate)

    moved_sources = [left(a) for a in sources]
    moved_targets = [right(b) for b in targets]

    for a, fa in zip(sources, moved_sources):
        clock.tick()
        for b, gb in zip(targets, moved_targets):
            checked += 1
            lhs = {f.signature(): f for f in enumerate_morphclasses(fa, b)}
            rhs = {g.signature(): g for g in enumerate_morphclasses(a, gb)}
            if lhs.keys() != rhs.keys():
                only_left = sorted(lhs.keys() - rhs.keys())
                side, key = ('left', only_left[0]) if only_left else ('right', sorted(rhs.keys() - lhs.keys())[0])
                shown = (lhs if side == 'left' else rhs)[key]
                return fail('hom-bijection', {
                    'A': a.describe(), 'B': b.describe(), 'map': shown.as_names(),
                    'only_in': f'{left.target}(FA, B)' if side == 'left' else f'{left.source}(A, GB)',
                })

    # Naturality
    small_sources = [a for a in sources if a.size <= 2]
    small_targets = [b for b in targets if b.size <= 2]
    for functor, universe in ((left, small_sources), (right, small_targets)):
        for a in universe:
            clock.tick()
            for a2 in universe:
                for h in enumerate_morphclasses(a, a2):
                    checked += 1
                    if not _is_morphism(functor(a), functor(a2), h.mapping):
                        return fail('naturality', {'functor': functor.name, 'map': h.as_names()})

    # Unit and counit, with the triangle identities
    for a, fa in zip(sources, moved_sources):
        checked += 1
        unit_target = right(fa)
        if not _is_morphism(a, unit_target, range(a.size)):
            return fail('unit', {'A': a.describe()})
        if not _is_morphism(fa, left(unit_target), range(a.size)):
            return fail('triangle', {'A': a.describe()})
    for b, gb in zip(targets, moved_targets):
        checked += 1
        counit_source = left(gb)
        if not _is_morphism(counit_source, b, range(b.size)):
            return fail('counit', {'B': b.describe()})
        if not _is_morphism(gb, right(counit_source), range(b.size)):
            return fail('triangle', {'B': b.describe()})

    logger.info('%s passed on %d checks', subject, checked)
    return Verdict(subject, True, sweep.max_carrier, checked)


def identity_functor(kind):
    return Functor(f'identity on {kind}', kind, kind, lambda obj: obj)



def verify_embeddings_coincide(sweep):
    """The two full embeddings of preorders into approach spaces agree on every small preorder"""
    subject = 'Ord -> Met -> App equals Ord -> Top -> App'
    clock = sweep.clock(subject)
    checked = 0
    for n in range(sweep.max_carrier + 1):
        clock.tick()
        for x in vcat_objects(TWO, n, sweep.value_grid):
            checked += 1
            if not embeddings_coincide(x):
                logger.warning('%s failed on %r', subject, x)
                certificate = {'carrier': list(x.carrier), 'matrix': x.matrix}
                return Verdict(subject, False, sweep.max_carrier, checked, certificate)
    return Verdict(subject, True, sweep.max_carrier, checked)
