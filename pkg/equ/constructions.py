import logging
from typing import NamedTuple

from django.db import models

from equilog.exceptions import InputError
from equilog.reports import Report
from vcat.models import same_family
from .models import EquObj, MorphClass, Partition

logger = logging.getLogger(__name__)


class LimitKind(models.TextChoices):
    PRODUCT = 'product', 'Product'
    COPRODUCT = 'coproduct', 'Coproduct'
    EQUALIZER = 'equalizer', 'Equalizer'
    COEQUALIZER = 'coequalizer', 'Coequalizer'
    TERMINAL = 'terminal', 'Terminal object'
    INITIAL = 'initial', 'Initial object'


class Limit(NamedTuple):
    obj: EquObj
    legs: tuple


def _pair(f, g):
    if f.dom != g.dom or f.cod != g.cod:
        raise InputError('morphisms must share domain and codomain')


def verify_equ_morphism(f):
    """Report base-morphism and equivariance failures separately"""
    dom, cod = f.dom, f.cod
    report = Report(subject=f'morphism {f.as_names()}')
    report.add('base_morphism', dom.base.preserves(f.mapping, cod.base))
    witness = next(
        (
            (dom.carrier[i], dom.carrier[j])
            for i in range(dom.size) for j in range(dom.size)
            if dom.same(i, j) and not cod.same(f(i), f(j))
        ),
        None,
    )
    report.add('equivariance', witness is None, witness)
    return report


def morph_equal(f, g):
    """f ~ g iff x ~ x' implies f(x) ~ g(x') for all x, x'"""
    _pair(f, g)
    dom, cod = f.dom, f.cod
    return all(
        cod.same(f(i), g(j))
        for i in range(dom.size) for j in range(dom.size) if dom.same(i, j)
    )


def compose(f, g):
    """g . f"""
    if f.cod != g.dom:
        raise InputError('morphisms are not composable')
    return f.then(g)


def classify_mono_epi(f):
    dom, cod = f.dom, f.cod
    mono = all(
        dom.same(i, j) == cod.same(f(i), f(j))
        for i in range(dom.size) for j in range(dom.size)
    )
    # y ~ y' iff some x ~ x' has y ~ f(x) ~ f(x') ~ y'
    epi = all(
        cod.same(y, y2) == any(
            dom.same(i, j) and cod.same(y, f(i)) and cod.same(f(j), y2)
            for i in range(dom.size) for j in range(dom.size)
        )
        for y in range(cod.size) for y2 in range(cod.size)
    )
    return {'mono': mono, 'epi': epi}


def product(a, b):
    same_family(a.base, b.base)
    base, p1, p2 = a.base.product(b.base)
    obj = EquObj(base, a.partition.product(b.partition))
    return Limit(obj, (MorphClass(obj, a, p1), MorphClass(obj, b, p2)))


def coproduct(a, b):
    same_family(a.base, b.base)
    base, inl, inr = a.base.coproduct(b.base)
    obj = EquObj(base, a.partition.coproduct(b.partition))
    return Limit(obj, (MorphClass(a, obj, inl), MorphClass(b, obj, inr)))


def equalizer(f, g):
    """{x | f(x) ~ g(x)} with the structure induced by the inclusion"""
    _pair(f, g)
    x = f.dom
    keep = [i for i in range(x.size) if f.cod.same(f(i), g(i))]
    obj = EquObj(x.base.restrict(keep), x.partition.restrict(keep))
    return Limit(obj, (MorphClass(obj, x, keep),))


def coequalizer(f, g):
    """Codomain base with the equivalence closure of ~ and every (f x, g x)"""
    _pair(f, g)
    y = f.cod
    partition = y.partition.join((f(i), g(i)) for i in range(f.dom.size))
    obj = EquObj(y.base, partition)
    return Limit(obj, (MorphClass(y, obj, range(y.size)),))


def terminal(like):
    base = like.base if isinstance(like, EquObj) else like
    point = base.point()
    return Limit(EquObj(point, Partition.total(1)), ())


def initial(like):
    base = like.base if isinstance(like, EquObj) else like
    empty = base.empty()
    return Limit(EquObj(empty, Partition(0, [])), ())


_ARITY = {
    LimitKind.PRODUCT: (product, 2),
    LimitKind.COPRODUCT: (coproduct, 2),
    LimitKind.EQUALIZER: (equalizer, 2),
    LimitKind.COEQUALIZER: (coequalizer, 2),
    LimitKind.TERMINAL: (terminal, 1),
    LimitKind.INITIAL: (initial, 1),
}


def limit_colimit(kind, *args):
    """
    Finite limits and colimits of equilogical objects.

    Products and coproducts take two objects, (co)equalizers a parallel
    pair of morphisms, terminal and initial objects any object of the
    base family.
    """
    try:
        kind = LimitKind(kind)
    except ValueError:
        raise InputError(f'unknown limit kind {kind!r}')
    construction, arity = _ARITY[kind]
    if len(args) != arity:
        raise InputError(f'{kind.value} takes {arity} argument(s), got {len(args)}')
    expected = MorphClass if kind in (LimitKind.EQUALIZER, LimitKind.COEQUALIZER) else EquObj
    if kind in (LimitKind.TERMINAL, LimitKind.INITIAL):
        expected = object
    if not all(isinstance(arg, expected) for arg in args):
        raise InputError(f'{kind.value} expects {expected.__name__} arguments')
    result = construction(*args)
    logger.debug('%s has %d points in %d classes', kind.value, result.obj.size, result.obj.partition.count)
    return result
