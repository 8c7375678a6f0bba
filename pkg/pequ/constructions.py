import logging
from typing import NamedTuple

from equ.models import EquObj, MorphClass, Partition
from equilog.exceptions import InputError
from equilog.reports import Report
from vcat.constructions import (
    initial_structure, presheaf_embed, require_finite_quantale, vcat_exponential, verify_vcat,
)
from vcat.models import pair_index, same_family
from .models import PEquObj, PartialEquivalence

logger = logging.getLogger(__name__)


def verify_pequ(p, sweep=None):
    """Base axioms, injectivity of the base, and whether the base is separated"""
    from oracle.conditions import injectivity_test
    from oracle.models import SweepConfig

    report = Report(subject=f'partial equilogical object on {list(p.carrier)}')
    base = verify_vcat(p.base)
    report.add('base_vcat', base.passed, [c.as_dict() for c in base.failures()] or None)
    verdict = injectivity_test(p.base, sweep or SweepConfig())
    report.add('injective_base', verdict.passed, verdict.certificate, detail=verdict.label)
    report.add('separated', True, detail='yes' if p.is_separated() else 'no')
    report.bound = verdict.bound
    return report


def functor_R(p):
    """The domain of the relation, with the structure induced by its inclusion"""
    domain = p.per.domain()
    carrier = [p.carrier[i] for i in domain]
    base = initial_structure(carrier, [(domain, p.base)], quantale=p.base.quantale)
    return EquObj(base, Partition(len(domain), p.per.restrict(domain).blocks))


def functor_R_morphism(f):
    """R on a morphism class: the representative restricted to the domains"""
    dom, cod = functor_R(f.dom), functor_R(f.cod)
    position = {i: k for k, i in enumerate(f.cod.per.domain())}
    return MorphClass(dom, cod, [position[f(i)] for i in f.dom.per.domain()])


def hat_pequ(e):
    """Presheaf object of the base, related exactly on the Yoneda images of related points"""
    base = e.base
    if not hasattr(base, 'quantale'):
        raise InputError('hat construction needs a V-category base')
    require_finite_quantale(base, 'presheaf object infinite; enough-injectives restricted to finite quantales')
    if not base.is_separated():
        raise InputError('hat construction needs a separated base')
    hat, yoneda = presheaf_embed(base)
    per = PartialEquivalence(hat.size, [[yoneda(i) for i in block] for block in e.partition.blocks])
    return PEquObj(hat, per)


def pequ_product(x, y):
    same_family(x.base, y.base)
    base, p1, p2 = x.base.product(y.base)
    obj = PEquObj(base, x.per.product(y.per))
    return obj, MorphClass(obj, x, p1), MorphClass(obj, y, p2)


class PEquExponential(NamedTuple):
    obj: PEquObj
    evaluation: MorphClass
    product: PEquObj
    base: object


def pequ_exponential(x, y, force=False, verify=True, sweep=None):
    """
    Exponential of partial equilogical objects over the base exponential.

    alpha ~ beta iff x ~ x' implies ev(alpha, x) ~ ev(beta, x').
    """
    exp = vcat_exponential(x.base, y.base, force=force, verify=verify, sweep=sweep)
    n = x.size
    related = [(i, j) for i in range(n) for j in range(n) if x.same(i, j)]
    pairs = [
        (a, b)
        for a, alpha in enumerate(exp.functions)
        for b, beta in enumerate(exp.functions)
        if all(y.same(alpha[i], beta[j]) for i, j in related)
    ]
    obj = PEquObj(exp.obj, PartialEquivalence.from_pairs(exp.obj.size, pairs))
    prod, _, _ = pequ_product(obj, x)
    evaluation = MorphClass(prod, y, exp.evaluation.mapping)
    logger.debug('exponential relation has %d classes on %d maps', obj.per.count, exp.obj.size)
    return PEquExponential(obj, evaluation, prod, exp)


def pequ_transpose(h, z, x, exp):
    """The class z -> Y^X currying a representative of h: z x x -> y"""
    functions = {f: e for e, f in enumerate(exp.base.functions)}
    mapping = [functions[tuple(h(pair_index(c, i, x.size)) for i in range(x.size))] for c in range(z.size)]
    return MorphClass(z, exp.obj, mapping)
