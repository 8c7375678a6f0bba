import logging
from itertools import permutations, product

from django.conf import settings

from assembly.constructions import track_check
from assembly.models import Assembly, AssemblyMorph
from equ.models import EquObj, MorphClass
from equilog.exceptions import EnumerationBoundExceeded, InputError
from pequ.models import PEquObj
from vcat.constructions import quotient_closure, structure_maps
from vcat.models import VCatObj

logger = logging.getLogger(__name__)


def _equivariant(x, y, mapping):
    return all(
        y.same(mapping[i], mapping[j])
        for i in range(x.size) for j in range(x.size) if x.same(i, j)
    )


def _classes(x, y, bound):
    seen = {}
    for mapping in structure_maps(x.base, y.base, bound):
        if _equivariant(x, y, mapping):
            f = MorphClass(x, y, mapping)
            seen.setdefault(f.signature(), f)
    return list(seen.values())


def tracked_maps(x, y, bound=None):
    """Every function of elements x -> y that some base V-functor tracks"""
    bound = bound or settings.EQUILOG_ENUMERATION_BOUND
    total = y.size ** x.size
    if total > bound:
        raise EnumerationBoundExceeded(f'functions from {x.size} to {y.size} elements', total, bound)
    found = []
    for mapping in product(range(y.size), repeat=x.size):
        realizer = track_check(mapping, x, y, bound)
        if realizer is not None:
            found.append(AssemblyMorph(x, y, mapping, realizer))
    return found


def enumerate_morphclasses(x, y, bound=None):
    """
    Every morphism class x -> y, each listed once.

    Equilogical and partial equilogical objects are compared by class
    signature; assembly morphisms are their underlying functions.
    """
    if isinstance(x, Assembly) and isinstance(y, Assembly):
        return tracked_maps(x, y, bound)
    if isinstance(x, (EquObj, PEquObj)) and type(x) is type(y):
        return _classes(x, y, bound)
    raise InputError(f'cannot enumerate morphisms from {type(x).__name__} to {type(y).__name__}')


def hom_count(x, y, bound=None):
    return len(enumerate_morphclasses(x, y, bound))


def is_identity(f):
    if isinstance(f, AssemblyMorph):
        return f.mapping == tuple(range(f.dom.size))
    return f.signature() == MorphClass.identity(f.dom).signature()


def find_isomorphism(a, b, bound=None):
    """A pair of morphisms f: a -> b, g: b -> a inverse up to class equality, or None"""
    forward = enumerate_morphclasses(a, b, bound)
    if not forward:
        return None
    backward = enumerate_morphclasses(b, a, bound)
    for f in forward:
        for g in backward:
            if is_identity(f.then(g)) and is_identity(g.then(f)):
                return f, g
    return None


def mono_by_cancellation(f, universe, bound=None):
    """f . g ~ f . h implies g ~ h for all g, h: z -> dom(f) with z in the universe"""
    for z in universe:
        images = {}
        for g in enumerate_morphclasses(z, f.dom, bound):
            key = g.then(f).signature()
            if key in images:
                return False, {'competitor': z.describe(), 'maps': [images[key].as_names(), g.as_names()]}
            images[key] = g
    return True, None


def epi_by_cancellation(f, universe, bound=None):
    """g . f ~ h . f implies g ~ h for all g, h: cod(f) -> z with z in the universe"""
    for z in universe:
        images = {}
        for g in enumerate_morphclasses(f.cod, z, bound):
            key = f.then(g).signature()
            if key in images:
                return False, {'competitor': z.describe(), 'maps': [images[key].as_names(), g.as_names()]}
            images[key] = g
    return True, None


def path_join_closure(x, mapping, target_carrier):
    """
    Final structure along a surjection, computed path by path.

    b(y, y') is the join over every chain y = y0, ..., yk = y' of distinct
    points of the tensor of the one-step values, each one-step value being
    the join of a(x, x') over the fibres. Integrality makes repeated points
    useless, so simple chains suffice.
    """
    q = x.quantale
    m = len(target_carrier)
    step = [[q.bottom] * m for _ in range(m)]
    for i in range(x.size):
        for j in range(x.size):
            step[mapping[i]][mapping[j]] = q.join2(step[mapping[i]][mapping[j]], x.matrix[i][j])
    matrix = [[q.unit if s == t else q.bottom for t in range(m)] for s in range(m)]
    for length in range(2, m + 1):
        for chain in permutations(range(m), length):
            value = q.unit
            for s, t in zip(chain, chain[1:]):
                value = q.tensor(value, step[s][t])
            first, last = chain[0], chain[-1]
            matrix[first][last] = q.join2(matrix[first][last], value)
    for s in range(m):
        for t in range(m):
            matrix[s][t] = q.join2(matrix[s][t], step[s][t])
    return VCatObj(q, target_carrier, matrix)


def closure_agrees(x, mapping, target_carrier):
    """quotient_closure against the path-by-path closure"""
    return quotient_closure(x, mapping, target_carrier) == path_join_closure(x, mapping, target_carrier)
