import logging
from functools import lru_cache
from itertools import combinations

from equilog.exceptions import ConstructionRejected, UnsupportedBase
from equilog.reports import Report
from quantale.laws import exp_condition_witness
from vcat.constructions import (
    FINITE_KINDS, hom_preorder, initial_structure, presheaf_embed, separated_reflection,
    structure_maps, vcat_exponential,
)
from vcat.models import VFunctor, pair_index
from .models import SweepConfig, Verdict
from .universe import BASE_QUANTALES, vcat_objects

logger = logging.getLogger(__name__)


def _equivalent(z, s, t):
    q = z.quantale
    return q.leq(q.unit, z.matrix[s][t]) and q.leq(q.unit, z.matrix[t][s])


def extension(b, subset, f, z):
    """A V-functor b -> z agreeing with f on `subset` up to the induced equivalence, or None"""
    allowed = [range(z.size)] * b.size
    for p, i in enumerate(subset):
        allowed[i] = [t for t in range(z.size) if _equivalent(z, t, f[p])]
    return next(structure_maps(b, z, allowed=allowed), None)


@lru_cache(maxsize=None)
def injectivity_test(z, sweep):
    """
    Search for an extension problem that z cannot solve.

    For finite quantales the identity of z is first extended along the
    Yoneda embedding, which decides injectivity outright; then every
    subobject S of every b in the sweep universe (S carrying the induced
    structure, so the inclusion is initial) and every V-functor S -> z
    is checked for an extension to b.
    """
    q = z.quantale
    kind = next(k for k, v in BASE_QUANTALES.items() if v == q)
    clock = sweep.clock(f'injectivity test on {z.size} points')
    checked = 0

    if q.kind in FINITE_KINDS:
        hat, yoneda = presheaf_embed(z)
        checked += 1
        if extension(hat, yoneda.mapping, tuple(range(z.size)), z) is None:
            certificate = {
                'embedding': 'yoneda',
                'into': list(hat.carrier),
                'map': {hat.carrier[yoneda(i)]: z.carrier[i] for i in range(z.size)},
            }
            logger.debug('%r is not a retract of its presheaf object', z)
            return Verdict(f'injectivity of {list(z.carrier)}', False, sweep.max_carrier, checked, certificate)

    for n in range(sweep.max_carrier + 1):
        for b in vcat_objects(q, n, sweep.value_grid):
            clock.tick()
            # S = b is solved by f itself
            for k in range(n):
                for subset in combinations(range(n), k):
                    s = b.restrict(subset)
                    for f in structure_maps(s, z):
                        checked += 1
                        if extension(b, subset, f, z) is None:
                            certificate = {
                                'embedding': {'from': list(s.carrier), 'into': list(b.carrier),
                                              'matrix': [[q.format(v) for v in row] for row in b.matrix]},
                                'map': {s.carrier[p]: z.carrier[j] for p, j in enumerate(f)},
                            }
                            return Verdict(f'injectivity of {list(z.carrier)}', False, sweep.max_carrier,
                                           checked, certificate)
    logger.debug('%s: %d extension problems solved', kind, checked)
    return Verdict(f'injectivity of {list(z.carrier)}', True, sweep.max_carrier, checked)


def is_injective(z, sweep=None):
    return injectivity_test(z, sweep or SweepConfig()).passed


# The condition suite

def _small(kind, sweep, limit=None):
    q = BASE_QUANTALES[kind]
    top = sweep.max_carrier if limit is None else min(limit, sweep.max_carrier)
    return [b for n in range(top + 1) for b in vcat_objects(q, n, sweep.value_grid)]


def condition_order(objects):
    """Hom-sets are preordered compatibly with composition; separated iff hom(1, X) is antisymmetric"""
    for x in objects:
        point = x.point()
        elements = [VFunctor(point, x, f) for f in structure_maps(point, x)]
        antisymmetric = all(
            f == g or not (hom_preorder(f, g) and hom_preorder(g, f))
            for f in elements for g in elements
        )
        if antisymmetric != x.is_separated():
            return {'object': list(x.carrier), 'separated': x.is_separated()}
        for y in objects:
            maps = [VFunctor(x, y, f) for f in structure_maps(x, y)]
            for f in maps:
                if not hom_preorder(f, f):
                    return {'reflexivity': f.as_names()}
                for g in maps:
                    if not hom_preorder(f, g):
                        continue
                    for h in maps:
                        if hom_preorder(g, h) and not hom_preorder(f, h):
                            return {'transitivity': [f.as_names(), g.as_names(), h.as_names()]}
                    for w in objects:
                        for k in structure_maps(y, w):
                            after = VFunctor(y, w, k)
                            if not hom_preorder(f.then(after), g.then(after)):
                                return {'composition': [f.as_names(), g.as_names(), after.as_names()]}
    return None


def condition_initial(objects):
    """Maps made initial by `initial_structure` reflect the induced order"""
    for y in objects:
        q = y.quantale
        for x in objects:
            for f in structure_maps(x, y):
                lifted = initial_structure(x.carrier, [(f, y)])
                # x already makes f a V-functor, so it lies below the initial structure
                if not all(q.leq(x.matrix[i][j], lifted.matrix[i][j]) for i in range(x.size) for j in range(x.size)):
                    return {'map': dict(zip(x.carrier, (y.carrier[t] for t in f))), 'failure': 'not largest'}
                for i in range(x.size):
                    for j in range(x.size):
                        image = q.leq(q.unit, y.matrix[f[i]][f[j]])
                        if image != lifted.induced_leq(i, j):
                            return {'map': dict(zip(x.carrier, (y.carrier[t] for t in f))),
                                    'pair': [x.carrier[i], x.carrier[j]]}
    return None


def condition_presheaf(objects, sweep):
    """Yoneda is initial, the presheaf object is injective and separation is preserved"""
    for x in objects:
        hat, yoneda = presheaf_embed(x)
        if initial_structure(x.carrier, [(yoneda.mapping, hat)]) != x:
            return {'object': list(x.carrier), 'failure': 'yoneda is not initial'}
        if not injectivity_test(hat, sweep).passed:
            return {'object': list(x.carrier), 'failure': 'presheaf object not injective'}
        if x.is_separated() and not hat.is_separated():
            return {'object': list(x.carrier), 'failure': 'separation lost'}
    return None


def condition_exponentials(objects, sweep):
    """Injective objects are exponentiable: the candidate exponential survives the oracle"""
    injective = [x for x in objects if injectivity_test(x, sweep).passed]
    for x in injective:
        for y in objects:
            try:
                vcat_exponential(x, y, force=True, verify=True)
            except ConstructionRejected as exc:
                return {'exponent': list(x.carrier), 'base': list(y.carrier), 'certificate': exc.certificate}
    return None


def _product_comparison(x, y):
    """The canonical map sep(X x Y) -> sep(X) x sep(Y), as (mapping, domain, codomain)"""
    prod, p1, p2 = x.product(y)
    sep_prod, projection = separated_reflection(prod)
    sep_x, qx = separated_reflection(x)
    sep_y, qy = separated_reflection(y)
    target, _, _ = sep_x.product(sep_y)
    mapping = [None] * sep_prod.size
    for point in range(prod.size):
        mapping[projection(point)] = pair_index(qx(p1[point]), qy(p2[point]), sep_y.size)
    return mapping, sep_prod, target


def condition_products(objects):
    """The separated reflection preserves binary products"""
    for x in objects:
        for y in objects:
            mapping, dom, cod = _product_comparison(x, y)
            inverse = {j: i for i, j in enumerate(mapping)}
            bijective = len(inverse) == cod.size == dom.size
            if not (bijective and dom.preserves(mapping, cod)
                    and cod.preserves([inverse[j] for j in range(cod.size)], dom)):
                return {'left': list(x.carrier), 'right': list(y.carrier)}
    return None


def condition_extensive(objects):
    """Coproducts are disjoint and pulling back along any map into X + Y splits the domain"""
    for x in objects:
        for y in objects:
            total, inl, inr = x.coproduct(y)
            if set(inl) & set(inr):
                return {'left': list(x.carrier), 'right': list(y.carrier), 'failure': 'not disjoint'}
            for w in objects:
                for f in structure_maps(w, total):
                    left = [i for i in range(w.size) if f[i] < x.size]
                    right = [i for i in range(w.size) if f[i] >= x.size]
                    summed, _, _ = w.restrict(left).coproduct(w.restrict(right))
                    reordered = left + right
                    if any(summed.matrix[p][r] != w.matrix[i][j]
                           for p, i in enumerate(reordered) for r, j in enumerate(reordered)):
                        return {'left': list(x.carrier), 'right': list(y.carrier),
                                'map': dict(zip(w.carrier, (total.carrier[t] for t in f)))}
    return None


def condition_suite(base, sweep=None):
    """
    Run conditions (a) to (f) over the base category at sweep scale.

    The composition and extensivity sweeps quantify over triples of
    objects and stay at carriers of at most two points.
    """
    sweep = sweep or SweepConfig()
    if base not in BASE_QUANTALES:
        raise UnsupportedBase(f'condition suite runs over V-categories, not {base!r}')
    q = BASE_QUANTALES[base]
    report = Report(subject=f'conditions over {base}', bound=sweep.max_carrier)
    objects = _small(base, sweep)
    pairs_scale = _small(base, sweep, limit=2)
    logger.info('condition suite over %s: %d objects', base, len(objects))

    witness = condition_order(pairs_scale)
    report.add('(a) order', witness is None, witness)
    witness = condition_initial(objects)
    report.add('(b) initial maps', witness is None, witness)
    if q.kind in FINITE_KINDS:
        witness = condition_presheaf(objects, sweep)
        report.add('(c) presheaf embedding', witness is None, witness)
    else:
        report.skip('(c) presheaf embedding', 'presheaf objects are infinite over this quantale')
    witness = exp_condition_witness(q, sweep.value_grid)
    if witness is None and q.kind in FINITE_KINDS:
        witness = condition_exponentials(pairs_scale, sweep)
    detail = '' if q.kind in FINITE_KINDS else 'quantale condition only; exponentials need a finite quantale'
    report.add('(d) exponentiable injectives', witness is None, witness, detail=detail)
    witness = condition_products(objects)
    report.add('(e) separated reflection preserves products', witness is None, witness)
    witness = condition_extensive(pairs_scale)
    report.add('(f) extensive', witness is None, witness)
    return report
