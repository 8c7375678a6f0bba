"""
Bounded universes of competitor objects for the brute-force checks.

Every universe is listed in a fixed order (by carrier size, then
lexicographically in the structure tables) so that the first
counterexample found is reproducible.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from sympy.utilities.iterables import multiset_partitions

from assembly.models import Assembly
from equ.models import EquObj, Partition
from equilog.exceptions import UnsupportedBase
from pequ.models import PEquObj, PartialEquivalence
from quantale.models import DIAMOND, INF, MAX, PLUS, TWO
from spaces.models import FinApp, FinTop
from vcat.constructions import close_matrix, verify_vcat
from vcat.models import VCatObj

logger = logging.getLogger(__name__)

# Off-diagonal values for competitor metrics; the sweep's value_grid overrides it.
COMPETITOR_GRID = (Fraction(0), Fraction(1), INF)

BASE_QUANTALES = {'ord': TWO, 'diamond': DIAMOND, 'met': PLUS, 'ultramet': MAX}
BASE_KINDS = ('ord', 'diamond', 'met', 'ultramet', 'top', 'app')


def carrier_names(n, prefix='z'):
    return [f'{prefix}{i}' for i in range(n)]


def competitor_values(q, grid=None):
    if q.is_finite:
        return q.carrier()
    return tuple(grid) if grid is not None else COMPETITOR_GRID


@lru_cache(maxsize=None)
def vcat_objects(q, n, grid=None):
    """Every V-category on n points whose off-diagonal entries come from the value grid"""
    values = competitor_values(q, grid)
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = []
    for choice in product(values, repeat=len(off)):
        matrix = [[q.unit] * n for _ in range(n)]
        for (i, j), v in zip(off, choice):
            matrix[i][j] = v
        obj = VCatObj(q, carrier_names(n), matrix)
        if verify_vcat(obj).passed:
            found.append(obj)
    logger.debug('%d V-categories over %s on %d points', len(found), q.kind, n)
    return tuple(found)


@lru_cache(maxsize=None)
def topologies(n):
    """Every topology on n points"""
    full = (1 << n) - 1
    proper = [mask for mask in range(1, full)]
    found = []
    for k in range(len(proper) + 1):
        for extra in combinations(proper, k):
            opens = {0, full, *extra}
            if all(u | v in opens and u & v in opens for u in extra for v in extra):
                found.append(FinTop(carrier_names(n), opens))
    return tuple(found)


def bases(kind, n, grid=None):
    """All base objects of a kind on exactly n points"""
    if kind in BASE_QUANTALES:
        return vcat_objects(BASE_QUANTALES[kind], n, grid)
    if kind == 'top':
        return topologies(n)
    if kind == 'app':
        return tuple(FinApp.from_metric(d) for d in vcat_objects(PLUS, n, grid))
    raise UnsupportedBase(f'no competitor universe for base {kind!r}')


def base_universe(kind, sweep, min_carrier=0):
    return [b for n in range(min_carrier, sweep.max_carrier + 1) for b in bases(kind, n, sweep.value_grid)]


@lru_cache(maxsize=None)
def set_partitions(n):
    """Every partition of range(n), as Partition objects"""
    if n == 0:
        return (Partition(0, []),)
    return tuple(Partition(n, blocks) for blocks in multiset_partitions(list(range(n))))


@lru_cache(maxsize=None)
def partial_equivalences(n):
    """Every symmetric transitive relation on range(n)"""
    found = []
    for k in range(n + 1):
        for domain in combinations(range(n), k):
            if not domain:
                found.append(PartialEquivalence.empty(n))
                continue
            for blocks in multiset_partitions(list(domain)):
                found.append(PartialEquivalence(n, blocks))
    return tuple(found)


def equ_universe(kind, sweep):
    objects = [
        EquObj(base, partition)
        for base in base_universe(kind, sweep)
        for partition in set_partitions(base.size)
    ]
    logger.info('equilogical universe over %s at bound %d: %d objects', kind, sweep.max_carrier, len(objects))
    return objects


def injective_bases(q, sweep):
    from .conditions import injectivity_test

    kind = next(k for k, v in BASE_QUANTALES.items() if v == q)
    return [b for b in base_universe(kind, sweep) if injectivity_test(b, sweep).passed]


def pequ_universe(q, sweep):
    """Partial equilogical objects over the injective bases of the sweep"""
    return [
        PEquObj(base, per)
        for base in injective_bases(q, sweep)
        for per in partial_equivalences(base.size)
    ]


def realizer_sets(n):
    return [tuple(i for i in range(n) if mask >> i & 1) for mask in range(1, 1 << n)]


def assemblies_over(base, max_elements):
    """Every assembly with at most `max_elements` elements over one base"""
    found = []
    options = realizer_sets(base.size)
    for k in range(max_elements + 1):
        if k and not options:
            break
        for choice in product(options, repeat=k):
            found.append(Assembly(carrier_names(k, 'e'), base, choice))
    return found


def assembly_universe(q, sweep, max_elements=2, modest_only=False):
    found = [
        a
        for base in injective_bases(q, sweep)
        for a in assemblies_over(base, max_elements)
        if not modest_only or a.is_modest()
    ]
    logger.info('assembly universe at bound %d: %d objects', sweep.max_carrier, len(found))
    return found


# Random instances

def random_vcat(q, n, rng, grid=None):
    """A random V-category: random entries closed under composition"""
    values = competitor_values(q, grid)
    matrix = [[q.unit if i == j else rng.choice(values) for j in range(n)] for i in range(n)]
    return VCatObj(q, carrier_names(n), close_matrix(q, matrix))


def random_partition(n, rng):
    return Partition.from_labels([rng.randrange(n) for _ in range(n)]) if n else Partition(0, [])


def random_equ(kind, n, rng, grid=None):
    if kind == 'app':
        base = FinApp.from_metric(random_vcat(PLUS, n, rng, grid))
    elif kind == 'top':
        choices = topologies(n)
        base = choices[rng.randrange(len(choices))]
    else:
        base = random_vcat(BASE_QUANTALES[kind], n, rng, grid)
    return EquObj(base, random_partition(n, rng))
