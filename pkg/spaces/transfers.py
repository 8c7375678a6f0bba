import logging
from itertools import product

import networkx as nx
from django.db import models

from equilog.exceptions import InputError
from equilog.reports import Report
from quantale.models import INF, PLUS, TWO
from vcat.models import VCatObj
from .models import FinApp, FinTop, base_kind, members

logger = logging.getLogger(__name__)


class TransferPair(models.TextChoices):
    ORD_MET = 'ord-met', 'Ord / Met'
    ORD_TOP = 'ord-top', 'Ord / Top'
    MET_APP = 'met-app', 'Met / App'
    TOP_APP = 'top-app', 'Top / App'


class Direction(models.TextChoices):
    RIGHTWARD = 'rightward', 'Rightward'
    LEFTWARD = 'leftward', 'Leftward'


DIRECTION_ALIASES = {'fwd': Direction.RIGHTWARD, 'bwd': Direction.LEFTWARD}

# (left base, right base) of each pair; rightward goes left -> right.
PAIR_BASES = {
    TransferPair.ORD_MET: ('ord', 'met'),
    TransferPair.ORD_TOP: ('ord', 'top'),
    TransferPair.MET_APP: ('met', 'app'),
    TransferPair.TOP_APP: ('top', 'app'),
}

# The direction of each pair that is the left adjoint.
LEFT_ADJOINT = {
    TransferPair.ORD_MET: Direction.LEFTWARD,
    TransferPair.ORD_TOP: Direction.RIGHTWARD,
    TransferPair.MET_APP: Direction.RIGHTWARD,
    TransferPair.TOP_APP: Direction.LEFTWARD,
}


def parse_direction(raw):
    raw = DIRECTION_ALIASES.get(raw, raw)
    try:
        return Direction(raw)
    except ValueError:
        raise InputError(f'unknown direction {raw!r}')


def parse_pair(raw):
    try:
        return TransferPair(raw)
    except ValueError:
        raise InputError(f'unknown transfer pair {raw!r}')


# Axioms

def verify_space(s):
    if isinstance(s, FinTop):
        return _verify_topology(s)
    if isinstance(s, FinApp):
        return _verify_approach(s)
    raise InputError(f'{s!r} is not a finite space')


def _names(s, mask):
    return [s.carrier[i] for i in members(mask, s.size)]


def _verify_topology(t):
    report = Report(subject=f'finite topology on {list(t.carrier)}')
    report.add('empty_open', 0 in t.opens)
    report.add('carrier_open', t.full in t.opens)
    pairs = sorted(product(sorted(t.opens), repeat=2))
    witness = next(((_names(t, u), _names(t, v)) for u, v in pairs if u | v not in t.opens), None)
    report.add('union_closed', witness is None, witness)
    witness = next(((_names(t, u), _names(t, v)) for u, v in pairs if u & v not in t.opens), None)
    report.add('intersection_closed', witness is None, witness)
    return report


def _verify_approach(s):
    n = s.size
    masks = range(1 << n)
    report = Report(subject=f'finite approach space on {list(s.carrier)}')

    witness = next(
        ((s.carrier[i], _names(s, mask)) for i in range(n) for mask in masks
         if mask >> i & 1 and s.delta[i][mask] != 0),
        None,
    )
    report.add('zero_on_members', witness is None, witness)

    witness = next(((s.carrier[i],) for i in range(n) if s.delta[i][0] is not INF), None)
    report.add('empty_infinite', witness is None, witness)

    witness = next(
        ((s.carrier[i], _names(s, u), _names(s, v)) for i in range(n) for u in masks for v in masks
         if s.delta[i][u | v] != min(s.delta[i][u], s.delta[i][v])),
        None,
    )
    report.add('finite_union', witness is None, witness)

    epsilons = sorted({v for row in s.delta for v in row if v is not INF})
    witness = None
    for mask in masks:
        for eps in epsilons:
            blown = sum(1 << y for y in range(n) if s.delta[y][mask] <= eps)
            bad = next((i for i in range(n) if s.delta[i][mask] > PLUS.tensor(s.delta[i][blown], eps)), None)
            if bad is not None:
                witness = (s.carrier[bad], _names(s, mask), PLUS.format(eps))
                break
        if witness:
            break
    report.add('enlargement_triangle', witness is None, witness)
    return report


# Base-level transfers

def order_to_metric(x):
    """d(x, x') = 0 if x <= x' else inf"""
    return VCatObj(PLUS, x.carrier, [[PLUS.top if v else INF for v in row] for row in x.matrix])


def metric_to_order(d):
    """x <= x' iff d(x, x') < inf"""
    return VCatObj(TWO, d.carrier, [[v is not INF for v in row] for row in d.matrix])


def order_to_topology(x):
    """Alexandroff topology whose opens are the down-sets"""
    return FinTop.alexandroff(x.carrier, lambda i, j: x.matrix[i][j])


def topology_to_order(t):
    n = t.size
    return VCatObj(TWO, t.carrier, [[t.specialization_leq(i, j) for j in range(n)] for i in range(n)])


def metric_to_approach(d):
    return FinApp.from_metric(d)


def approach_to_metric(s):
    """d(x, x') = sup{delta(x', A) | x in A}, enumerated over every subset"""
    n = s.size
    masks = range(1 << n)
    return VCatObj(PLUS, s.carrier, [
        [max(s.delta[x2][mask] for mask in masks if mask >> x & 1) for x2 in range(n)]
        for x in range(n)
    ])


def topology_to_approach(t):
    """delta(x', A) = 0 if some point of A lies below x' in the specialization order, else inf"""
    n = t.size
    delta = [
        [
            PLUS.top if any(t.specialization_leq(y, x2) for y in members(mask, n)) else INF
            for mask in range(1 << n)
        ]
        for x2 in range(n)
    ]
    return FinApp(t.carrier, delta)


def approach_to_topology(s):
    """
    Reflect the convergence of a finite approach space to a topology.

    y <= x iff delta(x, {y}) < inf, closed reflexively and transitively,
    then the Alexandroff topology of that preorder.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(s.size))
    graph.add_edges_from(
        (y, x) for x in range(s.size) for y in range(s.size) if s.delta[x][1 << y] is not INF
    )
    closure = nx.transitive_closure(graph, reflexive=True)
    return FinTop.alexandroff(s.carrier, closure.has_edge)


TRANSFERS = {
    (TransferPair.ORD_MET, Direction.RIGHTWARD): order_to_metric,
    (TransferPair.ORD_MET, Direction.LEFTWARD): metric_to_order,
    (TransferPair.ORD_TOP, Direction.RIGHTWARD): order_to_topology,
    (TransferPair.ORD_TOP, Direction.LEFTWARD): topology_to_order,
    (TransferPair.MET_APP, Direction.RIGHTWARD): metric_to_approach,
    (TransferPair.MET_APP, Direction.LEFTWARD): approach_to_metric,
    (TransferPair.TOP_APP, Direction.RIGHTWARD): topology_to_approach,
    (TransferPair.TOP_APP, Direction.LEFTWARD): approach_to_topology,
}


def transfer_bases(which, direction):
    """(source base, target base) of a transfer"""
    left, right = PAIR_BASES[which]
    return (left, right) if direction == Direction.RIGHTWARD else (right, left)


def transfer_base(base, which, direction):
    which, direction = parse_pair(which), parse_direction(direction)
    source, _ = transfer_bases(which, direction)
    if base_kind(base) != source:
        raise InputError(f'{which.value} {direction.value} expects a {source} base, got {base_kind(base)}')
    return TRANSFERS[which, direction](base)


def adjunction_transfer(obj, which, direction):
    """Carry an equilogical object across a transfer; carrier and equivalence are unchanged"""
    from equ.models import EquObj

    target = transfer_base(obj.base, which, direction)
    logger.debug('transferred %r along %s %s', obj.base, which, direction)
    return EquObj(target, obj.partition)


def transfer_morphism(f, which, direction):
    """The same underlying map between the transferred objects"""
    from equ.constructions import verify_equ_morphism
    from equ.models import MorphClass

    moved = MorphClass(
        adjunction_transfer(f.dom, which, direction),
        adjunction_transfer(f.cod, which, direction),
        f.mapping,
    )
    report = verify_equ_morphism(moved)
    if not report.passed:
        raise InputError(f'transferred map is not a morphism: {report.failures()[0].witness}')
    return moved


def is_alexandroff(t):
    """Arbitrary intersections of opens are open; automatic on a finite carrier"""
    return all(u & v in t.opens for u in t.opens for v in t.opens)


def alexandroff_roundtrip(t):
    """The Alexandroff topology of the specialization preorder equals t"""
    return order_to_topology(topology_to_order(t)) == t


def embeddings_coincide(x):
    """Ord -> Met -> App and Ord -> Top -> App agree on a preorder"""
    return metric_to_approach(order_to_metric(x)) == topology_to_approach(order_to_topology(x))
