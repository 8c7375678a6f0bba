import logging
from itertools import product
from typing import NamedTuple

from django.conf import settings

from equ.models import EquObj, MorphClass, Partition
from equilog.exceptions import (
    ConstructionRejected, EnumerationBoundExceeded, InputError, UnsupportedBase,
)
from equilog.reports import Report
from vcat.constructions import (
    block_name, initial_structure, presheaf_embed, quotient_closure, require_finite_quantale,
    structure_maps,
)
from vcat.models import VFunctor, pair_index, pair_name
from .models import PseudoEqRel, RegTriple

logger = logging.getLogger(__name__)

WITNESSES = ('r', 's', 't')


# Witnesses

def _check_scale(*objects):
    bound = settings.EQUILOG_WITNESS_CARRIER_BOUND
    largest = max(obj.size for obj in objects)
    if largest > bound:
        raise EnumerationBoundExceeded('witness search (points in a carrier)', largest, bound)


def _reflexivity_options(p):
    return [
        [u for u in range(p.x1.size) if p.r1(u) == x and p.r2(u) == x]
        for x in range(p.x0.size)
    ]


def _symmetry_options(p):
    return [
        [v for v in range(p.x1.size) if p.r1(v) == p.r2(u) and p.r2(v) == p.r1(u)]
        for u in range(p.x1.size)
    ]


def _transitivity_options(p, pairs):
    return [
        [w for w in range(p.x1.size) if p.r1(w) == p.r1(u) and p.r2(w) == p.r2(v)]
        for u, v in pairs
    ]


def _fits(dom, cod, mapping, options):
    return (
        len(mapping) == dom.size
        and all(image in allowed for image, allowed in zip(mapping, options))
        and dom.preserves(mapping, cod)
    )


def find_witnesses(p):
    """
    Reflexivity, symmetry and transitivity maps for p, or None where absent.

    Witnesses carried by p are checked and kept; the others are searched
    for in lexicographic order, exhaustively at the witness carrier bound.
    """
    x2, pairs = p.pullback()
    problems = {
        'r': (p.x0, p.x1, _reflexivity_options(p)),
        's': (p.x1, p.x1, _symmetry_options(p)),
        't': (x2, p.x1, _transitivity_options(p, pairs)),
    }
    found = {}
    for name in WITNESSES:
        dom, cod, options = problems[name]
        given = p.witnesses.get(name)
        if given is not None and _fits(dom, cod, given, options):
            found[name] = given
            continue
        if given is not None:
            logger.debug('supplied %s witness does not fit; searching', name)
        _check_scale(dom, cod)
        found[name] = next(structure_maps(dom, cod, allowed=options), None)
        logger.debug('%s witness search: %s', name, 'found' if found[name] is not None else 'absent')
    return found


def _names(dom, cod, mapping):
    return {dom.carrier[i]: cod.carrier[j] for i, j in enumerate(mapping)}


def verify_per(p):
    """Witness search for reflexivity, symmetry and transitivity, plus the regular mono test"""
    report = Report(subject=f'pseudo-equivalence relation {list(p.x1.carrier)} => {list(p.x0.carrier)}')
    report.bound = settings.EQUILOG_WITNESS_CARRIER_BOUND
    found = find_witnesses(p)
    x2, _ = p.pullback()
    domains = {'r': (p.x0, p.x1), 's': (p.x1, p.x1), 't': (x2, p.x1)}
    for name, check in zip(WITNESSES, ('reflexivity', 'symmetry', 'transitivity')):
        dom, cod = domains[name]
        mapping = found[name]
        if mapping is None:
            report.add(check, False, {
                'witness': name, 'search': 'exhaustive',
                'from': list(dom.carrier), 'into': list(cod.carrier),
            })
        else:
            report.add(check, True, detail=f'{name} = {_names(dom, cod, mapping)}')
    report.add('regmono', True, detail='yes' if p.is_regmono() else 'no')
    return report


# Equilogical objects as regular mono spans

def relation_span(x0, pairs):
    """
    The span of an equivalence relation on x0 given as sorted pairs.

    X1 is the relation with the structure induced by both projections;
    the witnesses are the diagonal, the swap and composition.
    """
    pairs = list(pairs)
    position = {pair: k for k, pair in enumerate(pairs)}
    carrier = [pair_name(x0.carrier[i], x0.carrier[j]) for i, j in pairs]
    r1 = [i for i, _ in pairs]
    r2 = [j for _, j in pairs]
    x1 = initial_structure(carrier, [(r1, x0), (r2, x0)], quantale=x0.quantale)
    span = PseudoEqRel(x1, x0, r1, r2)
    _, composable = span.pullback()
    witnesses = {
        'r': [position[(i, i)] for i in range(x0.size)],
        's': [position[(j, i)] for i, j in pairs],
        't': [position[(pairs[u][0], pairs[v][1])] for u, v in composable],
    }
    return PseudoEqRel(x1, x0, r1, r2, witnesses)


def _vcat_base(e):
    if not hasattr(e.base, 'quantale'):
        raise UnsupportedBase('spans are built over V-categories')
    return e.base


def equ_per_roundtrip(e):
    """E_X: the related pairs of e with the structure lifted along both projections"""
    base = _vcat_base(e)
    pairs = [(i, j) for i in range(e.size) for j in range(e.size) if e.same(i, j)]
    return relation_span(base, pairs)


def per_to_equ(p):
    """x ~ x' iff some element of X1 is sent to x and x'"""
    if not p.is_regmono():
        raise InputError('conversion to an equilogical object needs a regular mono span')
    return EquObj(p.x0, Partition.from_relation(p.x0.size, p.pairing()))


def kernel_pair(f):
    """Ker(f) = {(x, x') | f x = f x'} with explicit witnesses"""
    dom = f.dom
    pairs = [(i, j) for i in range(dom.size) for j in range(dom.size) if f(i) == f(j)]
    return relation_span(dom, pairs)


class KernelPresentation(NamedTuple):
    quotient: VFunctor
    kernel: PseudoEqRel
    isomorphism: dict


def per_as_kernel_pair(p):
    """
    Present a regular mono span as the kernel pair of the final lifting of
    the projection onto X0 modulo its relation.
    """
    e = per_to_equ(p)
    blocks = e.partition.blocks
    mapping = [e.partition.class_of[i] for i in range(p.x0.size)]
    target = quotient_closure(p.x0, mapping, [block_name(p.x0.carrier, block) for block in blocks])
    quotient = VFunctor(p.x0, target, mapping)
    kernel = kernel_pair(quotient)
    position = {pair: k for k, pair in enumerate(kernel.pairing())}
    phi = [position.get(pair) for pair in p.pairing()]
    certificate = {'span': p.describe(), 'kernel': kernel.describe()}
    if None in phi or len(set(phi)) != kernel.x1.size:
        raise ConstructionRejected('span and kernel pair have different pairs', certificate)
    inverse = [0] * kernel.x1.size
    for u, k in enumerate(phi):
        inverse[k] = u
    if not (p.x1.preserves(phi, kernel.x1) and kernel.x1.preserves(inverse, p.x1)):
        raise ConstructionRejected('span and kernel pair carry different structures', certificate)
    return KernelPresentation(quotient, kernel, _names(p.x1, kernel.x1, phi))


# The reflection into equilogical objects

class Reflection(NamedTuple):
    """
    The reflection of a span into Equ.

    `unit` is id_X0, the representative V-functor of the unit class.
    `unit_class` is that class, with X0 read through the equivalence of obj.
    """
    obj: EquObj
    unit: VFunctor

    def unit_class(self):
        return MorphClass(self.obj, self.obj, self.unit.mapping)


def reflect_to_equ(p):
    """
    The equilogical object on X0 related by the image of <r1, r2>.

    The unit is the class of the identity of X0. The image is an
    equivalence relation because the witnesses exist; p must have them.
    """
    found = find_witnesses(p)
    missing = [name for name in WITNESSES if found[name] is None]
    if missing:
        raise InputError(f'reflection needs a pseudo-equivalence relation; missing witnesses {missing}')
    obj = EquObj(p.x0, Partition.from_relation(p.x0.size, p.image()))
    return Reflection(obj, VFunctor.identity(p.x0))


def span_product(p, q):
    """Componentwise product of two spans, with product witnesses where both factors have them"""
    x1, _, _ = p.x1.product(q.x1)
    x0, _, _ = p.x0.product(q.x0)
    width0, width1 = q.x0.size, q.x1.size
    pairs = list(product(range(p.x1.size), range(q.x1.size)))
    r1 = [pair_index(p.r1(u), q.r1(v), width0) for u, v in pairs]
    r2 = [pair_index(p.r2(u), q.r2(v), width0) for u, v in pairs]
    span = PseudoEqRel(x1, x0, r1, r2)

    left, right = find_witnesses(p), find_witnesses(q)
    witnesses = {}
    if left['r'] is not None and right['r'] is not None:
        witnesses['r'] = [pair_index(left['r'][i], right['r'][j], width1)
                          for i in range(p.x0.size) for j in range(q.x0.size)]
    if left['s'] is not None and right['s'] is not None:
        witnesses['s'] = [pair_index(left['s'][u], right['s'][v], width1) for u, v in pairs]
    if left['t'] is not None and right['t'] is not None:
        _, left_pairs = p.pullback()
        _, right_pairs = q.pullback()
        lpos = {pair: k for k, pair in enumerate(left_pairs)}
        rpos = {pair: k for k, pair in enumerate(right_pairs)}
        _, composable = span.pullback()
        witnesses['t'] = [
            pair_index(
                left['t'][lpos[(a // width1, b // width1)]],
                right['t'][rpos[(a % width1, b % width1)]],
                width1,
            )
            for a, b in composable
        ]
    return PseudoEqRel(x1, x0, r1, r2, witnesses)


# Triples

def triple_embed(x):
    """G x = (x-hat, |x|, Yoneda)"""
    require_finite_quantale(x, 'injective hull is infinite over this quantale')
    hat, yoneda = presheaf_embed(x)
    return RegTriple(hat, x.carrier, yoneda.mapping)


def triple_morphism_check(f, source, target):
    """A base V-functor g with g . sigma = sigma' . f, or None"""
    f = tuple(f)
    if len(f) != source.size or any(not 0 <= b < target.size for b in f):
        raise InputError(f'map must send each of {source.size} elements into {target.size} elements')
    allowed = [set(range(target.base.size)) for _ in range(source.base.size)]
    for a, point in enumerate(source.sigma):
        allowed[point] &= {target.sigma[f[a]]}
    if any(not options for options in allowed):
        return None
    realizer = next(structure_maps(source.base, target.base, allowed=[sorted(o) for o in allowed]), None)
    return None if realizer is None else VFunctor(source.base, target.base, realizer)


def triple_maps(source, target, bound=None):
    """Every map of elements with a commuting base square, as index tuples"""
    bound = bound or settings.EQUILOG_ENUMERATION_BOUND
    total = target.size ** source.size
    if total > bound:
        raise EnumerationBoundExceeded(f'maps from {source.size} to {target.size} elements', total, bound)
    return [
        f for f in product(range(target.size), repeat=source.size)
        if triple_morphism_check(f, source, target) is not None
    ]


def initial_lifting(t):
    """A_ini: the elements with the structure induced by sigma"""
    return initial_structure(t.elements, [(t.sigma, t.base)], quantale=t.base.quantale)


class TriplePreimage(NamedTuple):
    obj: object
    forward: VFunctor
    backward: VFunctor


def essential_preimage(t):
    """
    An object whose image under triple_embed is isomorphic to t.

    The isomorphism is the identity on elements; both base squares are
    exhibited. Fails when t's base is not injective enough to close them.
    """
    lifted = initial_lifting(t)
    image = triple_embed(lifted)
    identity = range(t.size)
    forward = triple_morphism_check(identity, t, image)
    backward = triple_morphism_check(identity, image, t)
    if forward is None or backward is None:
        raise ConstructionRejected('triple is not isomorphic to the image of its initial lifting', {
            'triple': t.as_names(),
            'missing': 'forward square' if forward is None else 'backward square',
        })
    return TriplePreimage(lifted, forward, backward)
