import logging
from itertools import product
from typing import NamedTuple

import networkx as nx
from django.conf import settings

from equilog.exceptions import (
    ConstructionRejected, EnumerationBoundExceeded, InputError, UnsupportedBase,
)
from equilog.reports import Report
from quantale.models import QuantaleKind
from .models import VCatObj, VFunctor, pair_index

logger = logging.getLogger(__name__)

FINITE_KINDS = (QuantaleKind.TWO, QuantaleKind.DIAMOND)


def structure_maps(dom, cod, bound=None, allowed=None):
    """
    Every structure-preserving map dom -> cod, as index tuples in lexicographic order.

    Works for any base offering `preserves`; bases offering `admits_partial`
    get their partial assignments pruned as the search goes. `allowed[k]`
    optionally restricts the candidate images of the k-th point.
    """
    bound = bound or settings.EQUILOG_ENUMERATION_BOUND
    n, m = dom.size, cod.size
    if allowed is None:
        allowed = [range(m)] * n
    allowed = [tuple(options) for options in allowed]
    total = 1
    for options in allowed:
        total *= len(options)
    if total > bound:
        raise EnumerationBoundExceeded(f'maps from {n} to {m} points', total, bound)
    partial = getattr(dom, 'admits_partial', None)
    prefix = []

    def extend(k):
        if k == n:
            mapping = tuple(prefix)
            if partial is not None or dom.preserves(mapping, cod):
                yield mapping
            return
        for j in allowed[k]:
            prefix.append(j)
            if partial is None or partial(prefix, cod):
                yield from extend(k + 1)
            prefix.pop()

    yield from extend(0)


def enumerate_vfunctors(dom, cod, bound=None):
    return [VFunctor(dom, cod, mapping) for mapping in structure_maps(dom, cod, bound)]


def verify_vcat(x):
    """Reflexivity k <= a(x,x) and transitivity a(x,y) (x) a(y,z) <= a(x,z)"""
    q = x.quantale
    report = Report(subject=f'V-category over {q.kind} on {list(x.carrier)}')
    name = x.carrier

    bad = next((i for i in range(x.size) if not q.leq(q.unit, x.matrix[i][i])), None)
    report.add('reflexivity', bad is None, None if bad is None else (name[bad],))

    witness = None
    for i, j, k in product(range(x.size), repeat=3):
        if not q.leq(q.tensor(x.matrix[i][j], x.matrix[j][k]), x.matrix[i][k]):
            witness = (name[i], name[j], name[k])
            break
    report.add('transitivity', witness is None, witness)
    return report


def initial_structure(carrier, sources, quantale=None):
    """
    The largest structure on `carrier` making every (mapping, cod) source a V-functor.

    With no sources this is the indiscrete structure.
    """
    sources = list(sources)
    if sources:
        quantale = sources[0][1].quantale
        if any(cod.quantale != quantale for _, cod in sources):
            raise InputError('initial structure needs codomains over one quantale')
    elif quantale is None:
        raise InputError('an empty source needs an explicit quantale')
    n = len(carrier)
    for mapping, cod in sources:
        if len(mapping) != n:
            raise InputError('every source map must be defined on the whole carrier')
    matrix = [
        [quantale.meet(cod.matrix[mapping[i]][mapping[j]] for mapping, cod in sources) for j in range(n)]
        for i in range(n)
    ]
    return VCatObj(quantale, carrier, matrix)


def close_matrix(quantale, matrix):
    """Reflexive-transitive closure b <- b v (b . b) under the tensor matrix product"""
    q = quantale
    n = len(matrix)
    b = [list(row) for row in matrix]
    for i in range(n):
        b[i][i] = q.join2(b[i][i], q.unit)
    rounds = 0
    while True:
        rounds += 1
        nxt = [
            [q.join2(b[i][j], q.join(q.tensor(b[i][k], b[k][j]) for k in range(n))) for j in range(n)]
            for i in range(n)
        ]
        if nxt == b:
            break
        b = nxt
        # Integrality bounds the number of squarings by log2(n) + 1.
        if rounds > n + 1:
            raise ConstructionRejected('closure did not stabilise; is the quantale integral?')
    logger.debug('closure on %d points stabilised after %d rounds', n, rounds)
    return b


def quotient_closure(x, mapping, target_carrier):
    """Final structure on `target_carrier` along the surjection `mapping`"""
    q = x.quantale
    m = len(target_carrier)
    if len(mapping) != x.size or any(not 0 <= j < m for j in mapping):
        raise InputError('quotient map must send every point into the target carrier')
    if set(mapping) != set(range(m)):
        raise InputError('quotient map must be onto')
    b0 = [[q.bottom] * m for _ in range(m)]
    for i in range(x.size):
        for j in range(x.size):
            b0[mapping[i]][mapping[j]] = q.join2(b0[mapping[i]][mapping[j]], x.matrix[i][j])
    return VCatObj(q, target_carrier, close_matrix(q, b0))


def induced_classes(x):
    """Blocks of x ~ x' iff x <= x' <= x in the induced point preorder, ordered by least member"""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(x.size))
    graph.add_edges_from(
        (i, j) for i in range(x.size) for j in range(x.size) if x.induced_leq(i, j)
    )
    return sorted((sorted(c) for c in nx.strongly_connected_components(graph)), key=lambda c: c[0])


def block_name(carrier, block):
    return '~'.join(carrier[i] for i in block)


def separated_reflection(x):
    """Quotient by the induced equivalence, with its projection"""
    classes = induced_classes(x)
    mapping = [0] * x.size
    for c, block in enumerate(classes):
        for i in block:
            mapping[i] = c
    target = quotient_closure(x, mapping, [block_name(x.carrier, block) for block in classes])
    return target, VFunctor(x, target, mapping)


def require_finite_quantale(x, message):
    if x.quantale.kind not in FINITE_KINDS:
        raise UnsupportedBase(message)


def presheaf_name(x, phi):
    q = x.quantale
    if q.kind == QuantaleKind.TWO:
        return '{' + ','.join(name for name, v in zip(x.carrier, phi) if v) + '}'
    return '<' + ','.join(f'{name}:{q.format(v)}' for name, v in zip(x.carrier, phi)) + '>'


def presheaf_embed(x):
    """
    The presheaf object of x and the Yoneda embedding y(x) = a(-, x).

    Presheaves are the maps phi with a(x', x) (x) phi(x) <= phi(x');
    the structure is [phi, psi] = meet_x hom(phi x, psi x).
    """
    require_finite_quantale(x, 'presheaf object infinite; enough-injectives restricted to finite quantales')
    q = x.quantale
    n = x.size
    total = len(q.carrier()) ** n
    if total > settings.EQUILOG_ENUMERATION_BOUND:
        raise EnumerationBoundExceeded('presheaf candidates', total, settings.EQUILOG_ENUMERATION_BOUND)
    presheaves = [
        phi for phi in product(q.carrier(), repeat=n)
        if all(q.leq(q.tensor(x.matrix[j][i], phi[i]), phi[j]) for i in range(n) for j in range(n))
    ]
    matrix = [
        [q.meet(q.hom(phi[i], psi[i]) for i in range(n)) for psi in presheaves]
        for phi in presheaves
    ]
    hat = VCatObj(q, [presheaf_name(x, phi) for phi in presheaves], matrix)
    position = {phi: p for p, phi in enumerate(presheaves)}
    yoneda = [position[tuple(x.matrix[z][i] for z in range(n))] for i in range(n)]
    logger.debug('presheaf object of %d points has %d elements', n, len(presheaves))
    return hat, VFunctor(x, hat, yoneda)


def hom_preorder(f, g):
    """f <= g iff k <= b(f x, g x) for every x"""
    q = f.cod.quantale
    return all(q.leq(q.unit, f.cod.matrix[f(i)][g(i)]) for i in range(f.dom.size))


class Exponential(NamedTuple):
    obj: VCatObj
    evaluation: VFunctor
    functions: tuple
    product: VCatObj


def function_name(cod, mapping):
    return '<' + ','.join(cod.carrier[j] for j in mapping) + '>'


def exponential_candidate(x, y, bound=None):
    """Y^X with c(f, g) = meet over x, x' of hom(a(x, x'), b(f x, g x')), and evaluation"""
    require_finite_quantale(x, 'exponentials are enumerated only over finite quantales')
    q = x.quantale
    functions = tuple(structure_maps(x, y, bound))
    n = x.size
    matrix = [
        [
            q.meet(q.hom(x.matrix[i][j], y.matrix[f[i]][g[j]]) for i in range(n) for j in range(n))
            for g in functions
        ]
        for f in functions
    ]
    obj = VCatObj(q, [function_name(y, f) for f in functions], matrix)
    prod, _, _ = obj.product(x)
    ev = [0] * prod.size
    for e, f in enumerate(functions):
        for i in range(n):
            ev[pair_index(e, i, n)] = f[i]
    return Exponential(obj, VFunctor(prod, y, ev), functions, prod)


def vcat_exponential(x, y, force=False, verify=True, sweep=None, bound=None):
    """
    Exponential Y^X of V-categories with its evaluation map.

    Unless forced, X must pass the injectivity test. With `verify` the
    candidate is audited against the exponential universal property and
    rejected (never silently accepted) if the oracle finds a competitor.
    """
    from oracle.conditions import injectivity_test
    from oracle.models import SweepConfig
    from oracle.universal import verify_vcat_exponential

    require_finite_quantale(x, 'exponentials are enumerated only over finite quantales')
    if x.quantale != y.quantale:
        raise InputError('exponential needs objects over one quantale')
    if not force:
        verdict = injectivity_test(x, sweep or SweepConfig())
        if not verdict.passed:
            raise InputError(f'exponent is not injective at bound {verdict.bound}; pass force to override')
    exp = exponential_candidate(x, y, bound)
    if verify:
        check = SweepConfig(max_carrier=settings.EQUILOG_EXPONENTIAL_CHECK_CARRIER)
        verdict = verify_vcat_exponential(x, y, exp, check)
        if not verdict.passed:
            logger.warning('exponential candidate rejected: %s', verdict.certificate)
            raise ConstructionRejected('candidate exponential rejected', verdict.certificate)
    return exp
