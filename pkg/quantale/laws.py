import logging
from itertools import product

from equilog.reports import Report

logger = logging.getLogger(__name__)


def verify_quantale(q, probe=None, tensor=None):
    """
    Check the quantale laws on every tuple drawn from the probe.

    `tensor` overrides the quantale's own multiplication, which lets a
    corrupted table be audited against the same laws.
    """
    values = tuple(q.values(probe))
    times = tensor or q.tensor
    fmt = q.format
    report = Report(subject=f'quantale {q.kind}')

    def first(pairs, law):
        for args in pairs:
            if not law(*args):
                return tuple(fmt(v) for v in args)
        return None

    triples = list(product(values, repeat=3))
    pairs = list(product(values, repeat=2))

    witness = first(triples, lambda u, v, w: times(times(u, v), w) == times(u, times(v, w)))
    report.add('associativity', witness is None, witness)

    witness = first(pairs, lambda u, v: times(u, v) == times(v, u))
    report.add('commutativity', witness is None, witness)

    witness = first(((u,) for u in values), lambda u: times(q.unit, u) == u and times(u, q.unit) == u)
    report.add('unit', witness is None, witness)

    witness = first(
        triples,
        lambda u, v, w: times(u, q.join2(v, w)) == q.join2(times(u, v), times(u, w)),
    )
    if witness is None:
        witness = first(((u,) for u in values), lambda u: times(u, q.bottom) == q.bottom)
    report.add('join_preservation', witness is None, witness)

    witness = first(triples, lambda u, v, w: q.leq(times(u, v), w) == q.leq(u, q.hom(v, w)))
    report.add('tensor_residual', witness is None, witness)

    witness = first(triples, lambda u, v, w: q.leq(q.meet2(u, v), w) == q.leq(u, q.heyting(v, w)))
    report.add('heyting_meet_adjunction', witness is None, witness)

    witness = first(
        triples,
        lambda u, v, w: q.meet2(u, q.join2(v, w)) == q.join2(q.meet2(u, v), q.meet2(u, w)),
    )
    report.add('meet_join_distributivity', witness is None, witness)

    report.add('integrality', q.unit == q.top, (fmt(q.unit), fmt(q.top)))

    logger.debug('verified %s on %d probe values: %s', q.kind, len(values), report.passed)
    return report


def exp_condition_witness(q, probe=None):
    """First triple (u, v, w) violating w /\\ (u (x) v) = V{u'(x)v' | u'<=u, v'<=v, u'(x)v'<=w}"""
    values = tuple(q.values(probe))
    for u, v, w in product(values, repeat=3):
        lhs = q.meet2(w, q.tensor(u, v))
        rhs = q.join(
            q.tensor(u2, v2)
            for u2 in values if q.leq(u2, u)
            for v2 in values if q.leq(v2, v)
            if q.leq(q.tensor(u2, v2), w)
        )
        if lhs != rhs:
            return (q.format(u), q.format(v), q.format(w))
    return None


def check_exp_condition(q, probe=None):
    return exp_condition_witness(q, probe) is None
