import logging
from itertools import product
from typing import NamedTuple

import networkx as nx
from django.conf import settings
from django.db import models

from equ.models import MorphClass
from equilog.exceptions import EnumerationBoundExceeded, InputError
from pequ.models import PEquObj, PartialEquivalence
from vcat.constructions import block_name, structure_maps, vcat_exponential
from vcat.models import VFunctor, pair_index, pair_name
from .models import Assembly, AssemblyMorph

logger = logging.getLogger(__name__)


def _shared_quantale(x, y):
    if x.base.quantale != y.base.quantale:
        raise InputError('assemblies live over different quantales')


def tracking_options(mapping, dom, cod):
    """Allowed images of each base point of dom for a realizer of `mapping`"""
    options = []
    for point in range(dom.base.size):
        allowed = set(range(cod.base.size))
        for a, realizers in enumerate(dom.realizers):
            if point in realizers:
                allowed &= set(cod.E(mapping[a]))
        options.append(sorted(allowed))
    return options


def tracking_failure(mapping, dom, cod):
    """
    Certificate that no base V-functor tracks `mapping`.

    `allowed` lists the images left to each base point of dom; every
    V-functor through them was tried. `blocked` names the points left
    with no image at all.
    """
    options = tracking_options(tuple(mapping), dom, cod)
    return {
        'map': {dom.elements[a]: cod.elements[b] for a, b in enumerate(mapping)},
        'allowed': {dom.base.carrier[p]: [cod.base.carrier[q] for q in o] for p, o in enumerate(options)},
        'blocked': [dom.base.carrier[p] for p, o in enumerate(options) if not o],
    }


def track_check(mapping, dom, cod, bound=None):
    """
    The first base V-functor g with g(E(a)) inside E(mapping[a]) for every a, or None.

    Candidates are searched lexicographically, so the answer is deterministic.
    """
    _shared_quantale(dom, cod)
    mapping = tuple(mapping)
    if len(mapping) != dom.size or any(not 0 <= b < cod.size for b in mapping):
        raise InputError(f'map must send each of {dom.size} elements into {cod.size} elements')
    options = tracking_options(mapping, dom, cod)
    realizer = None
    if all(options):
        realizer = next(structure_maps(dom.base, cod.base, bound, allowed=options), None)
    if realizer is None:
        logger.debug('no realizer: %s', tracking_failure(mapping, dom, cod))
        return None
    return VFunctor(dom.base, cod.base, realizer)


def tracks(realizer_mapping, mapping, dom, cod):
    return all(
        realizer_mapping[x] in cod.E(mapping[a])
        for a, realizers in enumerate(dom.realizers) for x in realizers
    )


def assembly_morphism(dom, cod, mapping):
    """The assembly morphism for `mapping`, or InputError when nothing tracks it"""
    realizer = track_check(mapping, dom, cod)
    if realizer is None:
        certificate = tracking_failure(mapping, dom, cod)
        raise InputError(f'no base map tracks {certificate["map"]}: allowed images {certificate["allowed"]}')
    return AssemblyMorph(dom, cod, mapping, realizer)


def identity_morphism(x):
    return AssemblyMorph(x, x, range(x.size), VFunctor.identity(x.base))


# Limits

def assembly_product(x, y):
    """Product base, elements in row-major order, E(a, b) = E(a) x E(b)"""
    _shared_quantale(x, y)
    base, p1, p2 = x.base.product(y.base)
    width = y.base.size
    elements, realizers = [], []
    for a in range(x.size):
        for b in range(y.size):
            elements.append(pair_name(x.elements[a], y.elements[b]))
            realizers.append([pair_index(i, j, width) for i in x.E(a) for j in y.E(b)])
    obj = Assembly(elements, base, realizers)
    first = AssemblyMorph(obj, x, [a for a in range(x.size) for _ in range(y.size)], VFunctor(base, x.base, p1))
    second = AssemblyMorph(obj, y, [b for _ in range(x.size) for b in range(y.size)], VFunctor(base, y.base, p2))
    return obj, first, second


def assembly_equalizer(f, g):
    """Elements where f and g agree, same base, realizers restricted"""
    if f.dom != g.dom or f.cod != g.cod:
        raise InputError('morphisms must share domain and codomain')
    x = f.dom
    keep = [a for a in range(x.size) if f(a) == g(a)]
    obj = Assembly([x.elements[a] for a in keep], x.base, [x.E(a) for a in keep])
    return obj, AssemblyMorph(obj, x, keep, VFunctor.identity(x.base))


def assembly_image_factorization(f):
    """f = m . e with e onto the image subassembly and m its inclusion"""
    y = f.cod
    image = sorted(set(f.mapping))
    sub = Assembly([y.elements[b] for b in image], y.base, [y.E(b) for b in image])
    position = {b: p for p, b in enumerate(image)}
    realizer = f.realizer or track_check(f.mapping, f.dom, y)
    cover = AssemblyMorph(f.dom, sub, [position[b] for b in f.mapping], realizer)
    inclusion = AssemblyMorph(sub, y, image, VFunctor.identity(y.base))
    return cover, inclusion


# Exponentials

class AssemblyExponential(NamedTuple):
    obj: Assembly
    evaluation: AssemblyMorph
    product: Assembly
    functions: tuple
    base: object


def assm_exponential(x, y, force=False, verify=True, bound=None):
    """
    (C, Y^X, E_C) with C the tracked maps and E_C(f) the V-functors tracking f.

    The base exponential comes from `vcat_exponential` and is audited there.
    """
    _shared_quantale(x, y)
    bound = bound or settings.EQUILOG_ENUMERATION_BOUND
    total = y.size ** x.size
    if total > bound:
        raise EnumerationBoundExceeded(f'maps from {x.size} to {y.size} elements', total, bound)
    exp = vcat_exponential(x.base, y.base, force=force, verify=verify)
    maps = [
        mapping for mapping in product(range(y.size), repeat=x.size)
        if any(tracks(alpha, mapping, x, y) for alpha in exp.functions)
    ]
    realizers = [
        [e for e, alpha in enumerate(exp.functions) if tracks(alpha, mapping, x, y)]
        for mapping in maps
    ]
    names = ['<' + ','.join(y.elements[b] for b in mapping) + '>' for mapping in maps]
    obj = Assembly(names, exp.obj, realizers)
    prod, _, _ = assembly_product(obj, x)
    evaluation = AssemblyMorph(
        prod, y,
        [maps[c][a] for c in range(obj.size) for a in range(x.size)],
        exp.evaluation,
    )
    logger.debug('assembly exponential has %d elements over %d realizers', obj.size, exp.obj.size)
    return AssemblyExponential(obj, evaluation, prod, tuple(maps), exp)


def assembly_transpose(h, z, x, exp):
    """The unique z -> C whose composite with evaluation is h: z x x -> y"""
    positions = {mapping: c for c, mapping in enumerate(exp.functions)}
    mapping = [positions[tuple(h(pair_index(c, a, x.size)) for a in range(x.size))] for c in range(z.size)]
    return AssemblyMorph(z, exp.obj, mapping, track_check(mapping, z, exp.obj))


# Modest sets

def overlap_classes(x):
    graph = nx.Graph()
    graph.add_nodes_from(range(x.size))
    graph.add_edges_from(
        (a, b) for a in range(x.size) for b in range(a + 1, x.size)
        if set(x.E(a)) & set(x.E(b))
    )
    return sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])


def modest_reflection(x):
    """Merge elements whose realizer sets overlap, closing transitively; E is the union"""
    classes = overlap_classes(x)
    obj = Assembly(
        [block_name(x.elements, block) for block in classes],
        x.base,
        [sorted({r for a in block for r in x.E(a)}) for block in classes],
    )
    mapping = [0] * x.size
    for c, block in enumerate(classes):
        for a in block:
            mapping[a] = c
    return obj, AssemblyMorph(x, obj, mapping, VFunctor.identity(x.base))


# Regular subobjects

class RegularSubobject(NamedTuple):
    obj: Assembly
    inclusion: AssemblyMorph
    certificate: dict


def regular_subobjects(x, sweep=None):
    """
    One subassembly per subset of elements, each with a regularity certificate.

    The certificate is a cofork g, h: x -> W into the two-element assembly
    over the same base, with the subassembly as their equalizer. The
    equalizer property is audited by the oracle; when it fails the
    certificate is None.
    """
    from oracle.models import SweepConfig
    from oracle.universal import verify_assembly_equalizer

    sweep = sweep or SweepConfig(max_carrier=2)
    if x.base.size == 0:
        # Only the empty assembly lives over an empty base; its one subobject is itself.
        return [RegularSubobject(x, identity_morphism(x), {'cofork': None, 'verdict': 'isomorphism'})]
    everything = tuple(range(x.base.size))
    cofork_target = Assembly(['0', '1'], x.base, [everything, everything])
    identity = VFunctor.identity(x.base)
    results = []
    for mask in range(1 << x.size):
        chosen = [a for a in range(x.size) if mask >> a & 1]
        g = AssemblyMorph(x, cofork_target, [0] * x.size, identity)
        h = AssemblyMorph(x, cofork_target, [0 if mask >> a & 1 else 1 for a in range(x.size)], identity)
        sub, inclusion = assembly_equalizer(g, h)
        verdict = verify_assembly_equalizer(sub, inclusion, g, h, sweep)
        certificate = None
        if verdict.passed:
            certificate = {'cofork': [g.as_names(), h.as_names()], 'verdict': verdict.label}
        else:
            logger.warning('regular mono certificate not found at bound %d for %s', sweep.max_carrier, chosen)
        results.append(RegularSubobject(sub, inclusion, certificate))
    return results


# Modest sets and partial equilogical objects

class EquivalenceDirection(models.TextChoices):
    FORWARD = 'forward', 'Modest sets to partial equilogical objects'
    BACKWARD = 'backward', 'Partial equilogical objects to modest sets'


def modest_to_pequ(x):
    if not x.is_modest():
        raise InputError('forward direction needs a modest set')
    return PEquObj(x.base, PartialEquivalence(x.base.size, x.realizers))


def pequ_to_modest(p):
    blocks = p.per.blocks
    return Assembly([block_name(p.carrier, block) for block in blocks], p.base, blocks)


def mdst_pequ_equivalence(direction, obj):
    direction = EquivalenceDirection(direction)
    if direction == EquivalenceDirection.FORWARD:
        return modest_to_pequ(obj)
    return pequ_to_modest(obj)


def transport_forward(f):
    """An assembly morphism of modest sets as the class of its realizer"""
    realizer = f.realizer or track_check(f.mapping, f.dom, f.cod)
    return MorphClass(modest_to_pequ(f.dom), modest_to_pequ(f.cod), realizer.mapping)


def transport_backward(f):
    """A morphism class of partial equilogical objects as a tracked map of classes"""
    dom, cod = pequ_to_modest(f.dom), pequ_to_modest(f.cod)
    mapping = [f.cod.per.class_of[f(block[0])] for block in f.dom.per.blocks]
    return AssemblyMorph(dom, cod, mapping, VFunctor(f.dom.base, f.cod.base, f.mapping))
