"""
Universal-property checks by exhaustive search over competitor universes.

Every check here works from hom enumeration and class equality only: a
candidate passes when each cone from each competitor factors through it
by exactly one morphism class.
"""
import logging
from collections import Counter

from django.db import models

from assembly.constructions import assembly_product, track_check
from completion.constructions import reflect_to_equ, span_product, triple_embed, triple_maps
from equ.constructions import Limit, product as equ_product
from equ.models import MorphClass
from equilog.exceptions import InputError
from pequ.constructions import functor_R, functor_R_morphism, pequ_product
from spaces.models import base_kind
from vcat.constructions import structure_maps
from vcat.models import pair_index
from .enumeration import enumerate_morphclasses, tracked_maps
from .models import SweepConfig, Verdict
from .universe import assembly_universe, equ_universe, pequ_universe, vcat_objects

logger = logging.getLogger(__name__)


class PropertyKind(models.TextChoices):
    PRODUCT = 'product', 'Product'
    COPRODUCT = 'coproduct', 'Coproduct'
    EQUALIZER = 'equalizer', 'Equalizer'
    COEQUALIZER = 'coequalizer', 'Coequalizer'
    TERMINAL = 'terminal', 'Terminal object'
    INITIAL = 'initial', 'Initial object'
    EXPONENTIAL = 'exponential', 'Exponential of partial equilogical objects'
    VCAT_EXPONENTIAL = 'vcat_exponential', 'Exponential of V-categories'
    SEPARATED_REFLECTION = 'separated_reflection', 'Separated reflection'
    ASSEMBLY_EXPONENTIAL = 'assembly_exponential', 'Exponential of assemblies'
    ASSEMBLY_PRODUCT = 'assembly_product', 'Product of assemblies'
    ASSEMBLY_EQUALIZER = 'assembly_equalizer', 'Equalizer of assemblies'
    MODEST_REFLECTION = 'modest_reflection', 'Modest reflection'
    PER_REFLECTION = 'per_reflection', 'Reflection of a span into equilogical objects'


def _mediation(cones, mediators, key):
    """First cone without exactly one mediator, as (cone, count), or None"""
    counts = Counter(key(u) for u in mediators)
    for cone_key, shown in cones:
        if counts[cone_key] != 1:
            return shown, counts[cone_key]
    return None


def _sweep(subject, universe, sweep, per_competitor, describe=None):
    """Run `per_competitor(z)` over the universe; it returns a certificate on failure"""
    clock = sweep.clock(subject)
    checked = 0
    for z in universe:
        clock.tick()
        checked += 1
        failure = per_competitor(z)
        if failure is not None:
            certificate = {'competitor': describe(z) if describe else _describe(z)}
            certificate.update(failure)
            logger.warning('%s failed: %s', subject, certificate)
            return Verdict(subject, False, sweep.max_carrier, checked, certificate)
    logger.info('%s passed on %d competitors at bound %d', subject, checked, sweep.max_carrier)
    return Verdict(subject, True, sweep.max_carrier, checked)


def _describe(z):
    return z.describe() if hasattr(z, 'describe') else {'carrier': list(z.carrier)}


def _failure(found):
    if found is None:
        return None
    cone, count = found
    return {'cone': cone, 'mediators': count}


def _default_universe(obj, sweep):
    from pequ.models import PEquObj

    if isinstance(obj, PEquObj):
        return pequ_universe(obj.base.quantale, sweep)
    return equ_universe(base_kind(obj.base), sweep)


# Finite limits and colimits of (partial) equilogical objects

def verify_product(limit, a, b, sweep, universe=None):
    p1, p2 = limit.legs
    obj = limit.obj

    def check(z):
        cones = [
            ((f.signature(), g.signature()), [f.as_names(), g.as_names()])
            for f in enumerate_morphclasses(z, a) for g in enumerate_morphclasses(z, b)
        ]
        mediators = enumerate_morphclasses(z, obj)
        return _failure(_mediation(cones, mediators, lambda u: (u.then(p1).signature(), u.then(p2).signature())))

    return _sweep('product', universe or _default_universe(obj, sweep), sweep, check)


def verify_coproduct(limit, a, b, sweep, universe=None):
    inl, inr = limit.legs
    obj = limit.obj

    def check(z):
        cones = [
            ((f.signature(), g.signature()), [f.as_names(), g.as_names()])
            for f in enumerate_morphclasses(a, z) for g in enumerate_morphclasses(b, z)
        ]
        mediators = enumerate_morphclasses(obj, z)
        return _failure(_mediation(cones, mediators, lambda u: (inl.then(u).signature(), inr.then(u).signature())))

    return _sweep('coproduct', universe or _default_universe(obj, sweep), sweep, check)


def verify_equalizer(limit, f, g, sweep, universe=None):
    (e,) = limit.legs
    if e.then(f) != e.then(g):
        return Verdict('equalizer', False, sweep.max_carrier, 0, {'failure': 'leg does not equalize'})

    def check(z):
        cones = [
            (h.signature(), h.as_names())
            for h in enumerate_morphclasses(z, f.dom) if h.then(f) == h.then(g)
        ]
        mediators = enumerate_morphclasses(z, limit.obj)
        return _failure(_mediation(cones, mediators, lambda u: u.then(e).signature()))

    return _sweep('equalizer', universe or _default_universe(limit.obj, sweep), sweep, check)


def verify_coequalizer(limit, f, g, sweep, universe=None):
    (c,) = limit.legs
    if f.then(c) != g.then(c):
        return Verdict('coequalizer', False, sweep.max_carrier, 0, {'failure': 'leg does not coequalize'})

    def check(z):
        cones = [
            (h.signature(), h.as_names())
            for h in enumerate_morphclasses(f.cod, z) if f.then(h) == g.then(h)
        ]
        mediators = enumerate_morphclasses(limit.obj, z)
        return _failure(_mediation(cones, mediators, lambda u: c.then(u).signature()))

    return _sweep('coequalizer', universe or _default_universe(limit.obj, sweep), sweep, check)


def verify_terminal(limit, sweep, universe=None):
    def check(z):
        count = len(enumerate_morphclasses(z, limit.obj))
        return None if count == 1 else {'morphisms': count}

    return _sweep('terminal', universe or _default_universe(limit.obj, sweep), sweep, check)


def verify_initial(limit, sweep, universe=None):
    def check(z):
        count = len(enumerate_morphclasses(limit.obj, z))
        return None if count == 1 else {'morphisms': count}

    return _sweep('initial', universe or _default_universe(limit.obj, sweep), sweep, check)


# Exponentials

def _times_identity(u, width):
    """Index map of u x 1 between products whose second factor has `width` points"""
    return [pair_index(u[c], i, width) for c in range(len(u)) for i in range(width)]


def verify_vcat_exponential(x, y, exp, sweep, universe=None):
    """Every V-functor z x X -> Y is ev . (u x 1) for exactly one u: z -> Y^X"""
    if not exp.evaluation.is_valid():
        return Verdict('exponential', False, sweep.max_carrier, 0, {'failure': 'evaluation is not a V-functor'})
    ev = exp.evaluation.mapping
    width = x.size
    if universe is None:
        universe = [z for n in range(sweep.max_carrier + 1) for z in vcat_objects(x.quantale, n, sweep.value_grid)]

    def check(z):
        zx, _, _ = z.product(x)
        cones = [(h, dict(zip(zx.carrier, (y.carrier[j] for j in h)))) for h in structure_maps(zx, y)]
        mediators = structure_maps(z, exp.obj)
        return _failure(_mediation(cones, mediators, lambda u: tuple(ev[k] for k in _times_identity(u, width))))

    return _sweep('exponential', universe, sweep, check)


def verify_pequ_exponential(x, y, exp, sweep, universe=None):
    width = x.size
    if any(not y.per.defined(j) for i, j in enumerate(exp.evaluation.mapping) if exp.product.per.defined(i)):
        return Verdict('exponential', False, sweep.max_carrier, 0, {'failure': 'evaluation is not equivariant'})

    def check(z):
        zx, _, _ = pequ_product(z, x)
        cones = [(h.signature(), h.as_names()) for h in enumerate_morphclasses(zx, y)]
        mediators = enumerate_morphclasses(z, exp.obj)

        def key(u):
            return MorphClass(zx, exp.product, _times_identity(u.mapping, width)).then(exp.evaluation).signature()

        return _failure(_mediation(cones, mediators, key))

    return _sweep('exponential', universe or pequ_universe(x.base.quantale, sweep), sweep, check)


def verify_separated_reflection(x, sep, projection, sweep, universe=None):
    if universe is None:
        universe = [
            z for n in range(sweep.max_carrier + 1)
            for z in vcat_objects(x.quantale, n, sweep.value_grid) if z.is_separated()
        ]

    def check(z):
        cones = [(h, list(h)) for h in structure_maps(x, z)]
        mediators = structure_maps(sep, z)
        return _failure(_mediation(cones, mediators, lambda u: tuple(u[j] for j in projection.mapping)))

    return _sweep('separated reflection', universe, sweep, check)


# Assemblies

def _assemblies(x, sweep, universe, modest_only=False):
    if universe is not None:
        return universe
    return assembly_universe(x.base.quantale, sweep, max_elements=min(2, sweep.max_carrier), modest_only=modest_only)


def verify_assembly_exponential(x, y, exp, sweep, universe=None):
    if track_check(exp.evaluation.mapping, exp.product, y) is None:
        return Verdict('assembly exponential', False, sweep.max_carrier, 0, {'failure': 'evaluation is not tracked'})
    ev = exp.evaluation.mapping
    width = x.size

    def check(z):
        zx, _, _ = assembly_product(z, x)
        cones = [(h.mapping, h.as_names()) for h in tracked_maps(zx, y)]
        mediators = tracked_maps(z, exp.obj)
        return _failure(_mediation(cones, mediators, lambda u: tuple(ev[k] for k in _times_identity(u.mapping, width))))

    return _sweep('assembly exponential', _assemblies(x, sweep, universe), sweep, check)


def verify_assembly_product(obj, p1, p2, x, y, sweep, universe=None):
    def check(z):
        cones = [
            ((f.mapping, g.mapping), [f.as_names(), g.as_names()])
            for f in tracked_maps(z, x) for g in tracked_maps(z, y)
        ]
        mediators = tracked_maps(z, obj)
        return _failure(_mediation(cones, mediators, lambda u: (u.then(p1).mapping, u.then(p2).mapping)))

    return _sweep('assembly product', _assemblies(x, sweep, universe), sweep, check)


def verify_assembly_equalizer(obj, inclusion, f, g, sweep, universe=None):
    if inclusion.then(f).mapping != inclusion.then(g).mapping:
        return Verdict('assembly equalizer', False, sweep.max_carrier, 0, {'failure': 'leg does not equalize'})

    def check(z):
        cones = [
            (h.mapping, h.as_names())
            for h in tracked_maps(z, f.dom) if h.then(f).mapping == h.then(g).mapping
        ]
        mediators = tracked_maps(z, obj)
        return _failure(_mediation(cones, mediators, lambda u: u.then(inclusion).mapping))

    return _sweep('assembly equalizer', _assemblies(f.dom, sweep, universe), sweep, check)


def verify_modest_reflection(x, obj, unit, sweep, universe=None):
    if not obj.is_modest():
        return Verdict('modest reflection', False, sweep.max_carrier, 0, {'failure': 'reflection is not modest'})
    if track_check(unit.mapping, x, obj) is None:
        return Verdict('modest reflection', False, sweep.max_carrier, 0, {'failure': 'unit is not tracked'})

    def check(m):
        cones = [(h.mapping, h.as_names()) for h in tracked_maps(x, m)]
        mediators = tracked_maps(obj, m)
        return _failure(_mediation(cones, mediators, lambda u: unit.then(u).mapping))

    return _sweep('modest reflection', _assemblies(x, sweep, universe, modest_only=True), sweep, check)


# The functor R

def verify_r_full_faithful(pairs, sweep):
    """R maps the classes p -> q bijectively onto the classes R(p) -> R(q)"""
    def check(pair):
        p, q = pair
        images = [functor_R_morphism(f).signature() for f in enumerate_morphclasses(p, q)]
        targets = {g.signature() for g in enumerate_morphclasses(functor_R(p), functor_R(q))}
        if len(set(images)) != len(images):
            return {'failure': 'not faithful', 'target': q.describe()}
        if set(images) != targets:
            return {'failure': 'not full', 'target': q.describe()}
        return None

    return _sweep(
        'R full and faithful', list(pairs), sweep, check,
        describe=lambda pair: [pair[0].describe(), pair[1].describe()],
    )


# Spans and triples

def verify_per_reflection(p, reflection, sweep, universe=None):
    """
    Maps from the span p into E(z) correspond exactly to classes from the
    reflection into z, through the unit.

    A map p -> E(z) is a V-functor f0 on X0 relating r1 u and r2 u for
    every u, up to pointwise relatedness in z.
    """
    obj, unit = reflection
    if universe is None:
        universe = equ_universe(base_kind(p.x0), sweep)

    def check(z):
        cones = []
        for f0 in structure_maps(p.x0, z.base):
            if all(z.same(f0[p.r1(u)], f0[p.r2(u)]) for u in range(p.x1.size)):
                signature = tuple(z.partition.class_of[j] for j in f0)
                cones.append((signature, dict(zip(p.x0.carrier, (z.carrier[j] for j in f0)))))
        cones = list(dict(cones).items())
        mediators = enumerate_morphclasses(obj, z)

        def key(u):
            return MorphClass(obj, z, [u(i) for i in unit.mapping]).signature()

        return _failure(_mediation(cones, mediators, key))

    return _sweep('reflection into equilogical objects', universe, sweep, check)


def verify_reflection_products(pairs, sweep):
    """The reflection of a product span is the product of the reflections, by the identity comparison"""
    def check(pair):
        p, q = pair
        left = reflect_to_equ(span_product(p, q)).obj
        right = equ_product(reflect_to_equ(p).obj, reflect_to_equ(q).obj).obj
        if left.base != right.base:
            return {'failure': 'product bases differ'}
        if left.partition != right.partition:
            return {'failure': 'relations differ', 'reflected': left.describe(), 'product': right.describe()}
        return None

    return _sweep(
        'reflection preserves binary products', list(pairs), sweep, check,
        describe=lambda pair: [pair[0].describe(), pair[1].describe()],
    )


def verify_triple_full_faithful(pairs, sweep):
    """Maps between triple images are exactly the V-functors between the originals"""
    def check(pair):
        x, y = pair
        originals = set(structure_maps(x, y))
        images = set(triple_maps(triple_embed(x), triple_embed(y)))
        if images - originals:
            return {'failure': 'not full', 'map': sorted(images - originals)[0]}
        if originals - images:
            return {'failure': 'not a functor', 'map': sorted(originals - images)[0]}
        return None

    return _sweep(
        'triple embedding full and faithful', list(pairs), sweep, check,
        describe=lambda pair: [list(pair[0].carrier), list(pair[1].carrier)],
    )


# Dispatch

def verify_universal_property(kind, candidate, inputs, sweep=None, universe=None):
    """
    Audit a construction against its universal property.

    `candidate` is what the construction returned and `inputs` what it
    was given; the shapes follow the construction for each kind.
    """
    sweep = sweep or SweepConfig()
    try:
        kind = PropertyKind(kind)
    except ValueError:
        raise InputError(f'unknown universal property {kind!r}')
    inputs = tuple(inputs)
    if kind == PropertyKind.PRODUCT:
        return verify_product(candidate, *inputs, sweep, universe)
    if kind == PropertyKind.COPRODUCT:
        return verify_coproduct(candidate, *inputs, sweep, universe)
    if kind == PropertyKind.EQUALIZER:
        return verify_equalizer(candidate, *inputs, sweep, universe)
    if kind == PropertyKind.COEQUALIZER:
        return verify_coequalizer(candidate, *inputs, sweep, universe)
    if kind == PropertyKind.TERMINAL:
        return verify_terminal(candidate, sweep, universe)
    if kind == PropertyKind.INITIAL:
        return verify_initial(candidate, sweep, universe)
    if kind == PropertyKind.EXPONENTIAL:
        return verify_pequ_exponential(*inputs, candidate, sweep, universe)
    if kind == PropertyKind.VCAT_EXPONENTIAL:
        return verify_vcat_exponential(*inputs, candidate, sweep, universe)
    if kind == PropertyKind.SEPARATED_REFLECTION:
        return verify_separated_reflection(*inputs, *candidate, sweep, universe)
    if kind == PropertyKind.ASSEMBLY_EXPONENTIAL:
        return verify_assembly_exponential(*inputs, candidate, sweep, universe)
    if kind == PropertyKind.ASSEMBLY_PRODUCT:
        return verify_assembly_product(*candidate, *inputs, sweep, universe)
    if kind == PropertyKind.ASSEMBLY_EQUALIZER:
        return verify_assembly_equalizer(*candidate, *inputs, sweep, universe)
    if kind == PropertyKind.PER_REFLECTION:
        return verify_per_reflection(*inputs, candidate, sweep, universe)
    return verify_modest_reflection(*inputs, *candidate, sweep, universe)


def verify_limit(kind, limit, args, sweep=None, universe=None):
    """Shortcut for the outputs of `limit_colimit`"""
    if not isinstance(limit, Limit):
        raise InputError('expected the result of limit_colimit')
    return verify_universal_property(kind, limit, args, sweep, universe)

