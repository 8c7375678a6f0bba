"""
What each subcommand of the equilog command computes.

Runners take parsed domain objects and return an Outcome: the data to
print and whether it records a success. Errors propagate as
WorkbenchError for the command to map onto exit codes.
"""
from typing import NamedTuple

from assembly.constructions import (
    assembly_equalizer, assembly_product, assm_exponential, modest_reflection, regular_subobjects,
)
from assembly.models import Assembly, AssemblyMorph
from completion.constructions import (
    equ_per_roundtrip, kernel_pair, per_as_kernel_pair, per_to_equ, reflect_to_equ, verify_per,
)
from completion.models import PseudoEqRel, RegTriple
from equ.constructions import LimitKind, limit_colimit, verify_equ_morphism
from equ.models import EquObj, MorphClass
from equilog.exceptions import InputError
from equilog.reports import Report
from oracle.adjunction import adjoint_pair, sampled_universe, verify_adjunction, verify_embeddings_coincide
from oracle.conditions import condition_suite, injectivity_test
from oracle.enumeration import enumerate_morphclasses
from oracle.universal import PropertyKind, verify_universal_property
from pequ.constructions import functor_R, hat_pequ, pequ_exponential, verify_pequ
from pequ.models import PEquObj
from quantale.laws import verify_quantale
from quantale.models import Quantale
from spaces.models import FinApp, FinTop
from spaces.transfers import adjunction_transfer, transfer_base, transfer_morphism, verify_space
from vcat.constructions import FINITE_KINDS, separated_reflection, vcat_exponential, verify_vcat
from vcat.models import VCatObj, VFunctor
from .serializers import dump_document


class Outcome(NamedTuple):
    data: dict
    passed: bool = True


def _report(report):
    return Outcome(report.as_dict(), report.passed)


def _verdict(verdict):
    return Outcome(verdict.as_dict(), verdict.passed)


def _expect(obj, cls, what):
    if not isinstance(obj, cls):
        raise InputError(f'{what} expects a {cls.__name__} document, got {type(obj).__name__}')
    return obj


def _base_report(base):
    return verify_vcat(base) if isinstance(base, VCatObj) else verify_space(base)


def _with_base(subject, base):
    report = Report(subject=subject)
    for check in _base_report(base).checks:
        report.add(f'base_{check.name}', check.passed, check.witness, check.detail)
    return report


# check

def run_check(obj, sweep):
    if isinstance(obj, Quantale):
        return _report(verify_quantale(obj))
    if isinstance(obj, VCatObj):
        return _report(verify_vcat(obj))
    if isinstance(obj, (FinTop, FinApp)):
        return _report(verify_space(obj))
    if isinstance(obj, EquObj):
        report = _with_base(f'equilogical object on {list(obj.carrier)}', obj.base)
        report.add('equivalence', True, detail=f'{obj.partition.count} classes')
        return _report(report)
    if isinstance(obj, PEquObj):
        return _report(verify_pequ(obj, sweep))
    if isinstance(obj, Assembly):
        report = _with_base(f'assembly on {list(obj.elements)}', obj.base)
        report.add('modest', True, detail='yes' if obj.is_modest() else 'no')
        return _report(report)
    if isinstance(obj, PseudoEqRel):
        return _report(verify_per(obj))
    if isinstance(obj, RegTriple):
        report = _with_base(f'triple on {list(obj.elements)}', obj.base)
        if obj.base.quantale.kind in FINITE_KINDS:
            verdict = injectivity_test(obj.base, sweep)
            report.add('injective_base', verdict.passed, verdict.certificate, detail=verdict.label)
        else:
            report.skip('injective_base', 'injectivity is tested over finite quantales')
        return _report(report)
    if isinstance(obj, MorphClass):
        return _report(verify_equ_morphism(obj))
    if isinstance(obj, VFunctor):
        report = Report(subject=f'map {obj.as_names()}')
        report.add('base_morphism', obj.is_valid())
        return _report(report)
    if isinstance(obj, AssemblyMorph):
        report = Report(subject=f'assembly morphism {obj.as_names()}')
        report.add('tracked', True, detail=f'realizer {obj.realizer.as_names()}')
        return _report(report)
    raise InputError(f'nothing to check for {type(obj).__name__}')


# Constructions

def _legs(legs):
    return [leg.as_names() for leg in legs]


def run_limit(kind, args, sweep=None):
    """A finite limit or colimit; with a sweep it is also audited"""
    limit = limit_colimit(kind, *args)
    data = {'kind': LimitKind(kind).value, 'object': dump_document(limit.obj), 'legs': _legs(limit.legs)}
    if sweep is None:
        return Outcome(data)
    verdict = verify_universal_property(kind, limit, args, sweep)
    data['verdict'] = verdict.as_dict()
    return Outcome(data, verdict.passed)


def run_exp(x, y, pequ=False, force=False, verify=True, sweep=None):
    if pequ:
        _expect(x, PEquObj, 'exp --pequ')
        _expect(y, PEquObj, 'exp --pequ')
        exp = pequ_exponential(x, y, force=force, verify=verify, sweep=sweep)
    else:
        _expect(x, VCatObj, 'exp')
        _expect(y, VCatObj, 'exp')
        exp = vcat_exponential(x, y, force=force, verify=verify, sweep=sweep)
    return Outcome({'object': dump_document(exp.obj), 'evaluation': exp.evaluation.as_names()})


def run_hat(e):
    return Outcome(dump_document(hat_pequ(_expect(e, EquObj, 'hat'))))


def run_reflect_r(p):
    return Outcome(dump_document(functor_R(_expect(p, PEquObj, 'reflect-r'))))


def run_assm(action, args):
    if action == 'exp':
        x, y = (_expect(a, Assembly, 'assm exp') for a in args)
        exp = assm_exponential(x, y)
        return Outcome({
            'object': dump_document(exp.obj),
            'evaluation': exp.evaluation.as_names(),
            'modest': exp.obj.is_modest(),
        })
    (x,) = args
    _expect(x, Assembly, f'assm {action}')
    if action == 'reflect':
        obj, unit = modest_reflection(x)
        return Outcome({'object': dump_document(obj), 'unit': unit.as_names()})
    subobjects = regular_subobjects(x)
    return Outcome(
        {
            'count': len(subobjects),
            'subobjects': [
                {'elements': list(s.obj.elements), 'certificate': s.certificate}
                for s in subobjects
            ],
        },
        all(s.certificate is not None for s in subobjects),
    )


def run_per(action, obj, sweep=None):
    if action == 'from-equ':
        return Outcome(dump_document(equ_per_roundtrip(_expect(obj, EquObj, 'per from-equ'))))
    if action == 'kernel':
        return Outcome(dump_document(kernel_pair(_expect(obj, VFunctor, 'per kernel'))))
    p = _expect(obj, PseudoEqRel, f'per {action}')
    if action == 'verify':
        return _report(verify_per(p))
    if action == 'to-equ':
        return Outcome(dump_document(per_to_equ(p)))
    if action == 'as-kernel':
        presentation = per_as_kernel_pair(p)
        return Outcome({
            'quotient': dump_document(presentation.quotient.cod),
            'map': presentation.quotient.as_names(),
            'kernel': dump_document(presentation.kernel),
            'isomorphism': presentation.isomorphism,
        })
    reflection = reflect_to_equ(p)
    data = {'object': dump_document(reflection.obj), 'unit': reflection.unit.as_names()}
    if sweep is None:
        return Outcome(data)
    verdict = verify_universal_property(PropertyKind.PER_REFLECTION, reflection, (p,), sweep)
    data['verdict'] = verdict.as_dict()
    return Outcome(data, verdict.passed)


def run_adj(pair, direction, obj):
    if isinstance(obj, MorphClass):
        moved = transfer_morphism(obj, pair, direction)
        return Outcome(dump_document(moved))
    if isinstance(obj, EquObj):
        return Outcome(dump_document(adjunction_transfer(obj, pair, direction)))
    if isinstance(obj, (VCatObj, FinTop, FinApp)):
        return Outcome(dump_document(transfer_base(obj, pair, direction)))
    raise InputError(f'adj expects an equilogical object, a base or a morphism, got {type(obj).__name__}')


# Oracles

UMP_ARITY = {
    PropertyKind.EXPONENTIAL: 2,
    PropertyKind.VCAT_EXPONENTIAL: 2,
    PropertyKind.SEPARATED_REFLECTION: 1,
    PropertyKind.ASSEMBLY_EXPONENTIAL: 2,
    PropertyKind.ASSEMBLY_PRODUCT: 2,
    PropertyKind.ASSEMBLY_EQUALIZER: 2,
    PropertyKind.MODEST_REFLECTION: 1,
    PropertyKind.PER_REFLECTION: 1,
}


def run_ump(kind, args, sweep):
    """Build the construction named by `kind` from its inputs and audit its universal property"""
    kind = PropertyKind(kind)
    if kind.value in LimitKind.values:
        return run_limit(kind.value, args, sweep)
    if len(args) != UMP_ARITY[kind]:
        raise InputError(f'oracle ump --kind {kind.value} takes {UMP_ARITY[kind]} file(s), got {len(args)}')
    if kind == PropertyKind.EXPONENTIAL:
        candidate = pequ_exponential(*args, verify=False, sweep=sweep)
    elif kind == PropertyKind.VCAT_EXPONENTIAL:
        candidate = vcat_exponential(*args, verify=False, sweep=sweep)
    elif kind == PropertyKind.SEPARATED_REFLECTION:
        candidate = separated_reflection(*args)
    elif kind == PropertyKind.ASSEMBLY_EXPONENTIAL:
        candidate = assm_exponential(*args, verify=False)
    elif kind == PropertyKind.ASSEMBLY_PRODUCT:
        candidate = assembly_product(*args)
    elif kind == PropertyKind.ASSEMBLY_EQUALIZER:
        candidate = assembly_equalizer(*args)
    elif kind == PropertyKind.PER_REFLECTION:
        candidate = reflect_to_equ(*args)
    else:
        candidate = modest_reflection(*args)
    return _verdict(verify_universal_property(kind, candidate, args, sweep))


def run_oracle_adjunction(pair, sweep, flip=False, samples=None, seed=0):
    left, right = adjoint_pair(pair)
    if flip:
        left, right = right, left
    sources = targets = None
    if samples:
        sources = sampled_universe(left.source, samples, sweep.max_carrier, seed)
        targets = sampled_universe(left.target, samples, sweep.max_carrier, seed + 1)
    return _verdict(verify_adjunction(left, right, sweep, sources, targets))


def run_embeddings(sweep):
    return _verdict(verify_embeddings_coincide(sweep))


def run_inject(z, sweep):
    return _verdict(injectivity_test(_expect(z, VCatObj, 'oracle inject'), sweep))


def run_conditions(base, sweep):
    return _report(condition_suite(base, sweep))


def run_enumerate_homs(x, y):
    classes = enumerate_morphclasses(x, y)
    return Outcome({'count': len(classes), 'morphisms': [f.as_names() for f in classes]})
