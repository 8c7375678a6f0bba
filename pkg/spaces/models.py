from itertools import product

from django.conf import settings

from equilog.exceptions import InputError
from quantale.models import INF, PLUS, QuantaleKind
from vcat.models import VCatObj, check_carrier, pair_name, same_family


def members(mask, n):
    return [i for i in range(n) if mask >> i & 1]


def mask_of(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def image_mask(mapping, mask):
    return mask_of(mapping[i] for i in range(len(mapping)) if mask >> i & 1)


def preimage_mask(mapping, mask):
    return mask_of(i for i, j in enumerate(mapping) if mask >> j & 1)


class FinTop:
    """A finite topological space; opens are stored as bitmasks over the carrier"""

    family = ('top',)

    def __init__(self, carrier, opens):
        self.carrier = check_carrier(carrier)
        self.opens = frozenset(opens)
        full = (1 << len(self.carrier)) - 1
        if any(not 0 <= u <= full for u in self.opens):
            raise InputError('open sets must be subsets of the carrier')

    def __eq__(self, other):
        return isinstance(other, FinTop) and self.carrier == other.carrier and self.opens == other.opens

    def __hash__(self):
        return hash(('top', self.carrier, self.opens))

    def __repr__(self):
        return f'FinTop({list(self.carrier)}, {len(self.opens)} opens)'

    @property
    def size(self):
        return len(self.carrier)

    @property
    def full(self):
        return (1 << self.size) - 1

    def index(self, name):
        try:
            return self.carrier.index(name)
        except ValueError:
            raise InputError(f'{name!r} is not an element of {list(self.carrier)}')

    def open_sets(self):
        """Open sets as sorted name lists, smallest first"""
        return [
            [self.carrier[i] for i in members(u, self.size)]
            for u in sorted(self.opens, key=lambda u: (bin(u).count('1'), u))
        ]

    def specialization_leq(self, i, j):
        """x_i <= x_j iff every open containing x_j contains x_i"""
        return all(u >> i & 1 for u in self.opens if u >> j & 1)

    def is_separated(self):
        return all(
            i == j or not (self.specialization_leq(i, j) and self.specialization_leq(j, i))
            for i in range(self.size) for j in range(self.size)
        )

    def closure(self, mask):
        closed = [self.full & ~u for u in self.opens]
        result = self.full
        for c in closed:
            if mask & c == mask:
                result &= c
        return result

    def preserves(self, mapping, cod):
        return all(preimage_mask(mapping, v) in self.opens for v in cod.opens)

    def restrict(self, indices):
        indices = list(indices)
        opens = {mask_of(p for p, i in enumerate(indices) if u >> i & 1) for u in self.opens}
        return FinTop([self.carrier[i] for i in indices], opens)

    def product(self, other):
        same_family(self, other)
        n, m = self.size, other.size
        pairs = list(product(range(n), range(m)))
        rectangles = {
            mask_of(p for p, (i, j) in enumerate(pairs) if u >> i & 1 and v >> j & 1)
            for u in self.opens for v in other.opens
        }
        obj = FinTop([pair_name(self.carrier[i], other.carrier[j]) for i, j in pairs], union_closure(rectangles))
        return obj, tuple(i for i, _ in pairs), tuple(j for _, j in pairs)

    def coproduct(self, other):
        same_family(self, other)
        n = self.size
        opens = {u | (v << n) for u in self.opens for v in other.opens}
        carrier = [f'inl({x})' for x in self.carrier] + [f'inr({y})' for y in other.carrier]
        return FinTop(carrier, opens), tuple(range(n)), tuple(range(n, n + other.size))

    def point(self):
        return FinTop(['*'], {0, 1})

    def empty(self):
        return FinTop([], {0})

    @classmethod
    def from_names(cls, carrier, opens):
        carrier = check_carrier(carrier)
        index = {name: i for i, name in enumerate(carrier)}
        try:
            return cls(carrier, {mask_of(index[x] for x in u) for u in opens})
        except KeyError as exc:
            raise InputError(f'open set mentions unknown point {exc.args[0]!r}')

    @classmethod
    def discrete(cls, carrier):
        return cls(carrier, set(range(1 << len(carrier))))

    @classmethod
    def alexandroff(cls, carrier, leq):
        """Opens are the down-closed sets of the preorder `leq(i, j)`"""
        n = len(carrier)
        opens = {
            mask for mask in range(1 << n)
            if all(mask >> i & 1 for j in members(mask, n) for i in range(n) if leq(i, j))
        }
        return cls(carrier, opens)


def union_closure(sets):
    result = {0} | set(sets)
    frontier = set(result)
    while frontier:
        new = {u | v for u in frontier for v in result} - result
        result |= new
        frontier = new
    return result


class FinApp:
    """
    A finite approach space (X, delta), stored on all 2^|X| subsets.

    delta[x][mask] is the distance from the point x to the subset `mask`.
    """

    family = ('app',)

    def __init__(self, carrier, delta):
        self.carrier = check_carrier(carrier)
        n = len(self.carrier)
        if n > settings.EQUILOG_MAX_APPROACH_CARRIER:
            raise InputError(
                f'approach spaces are capped at {settings.EQUILOG_MAX_APPROACH_CARRIER} points, got {n}'
            )
        self.delta = tuple(tuple(row) for row in delta)
        if len(self.delta) != n or any(len(row) != 1 << n for row in self.delta):
            raise InputError(f'delta must list {1 << n} subsets for each of {n} points')

    def __eq__(self, other):
        return isinstance(other, FinApp) and self.carrier == other.carrier and self.delta == other.delta

    def __hash__(self):
        return hash(('app', self.carrier, self.delta))

    def __repr__(self):
        return f'FinApp({list(self.carrier)})'

    @property
    def size(self):
        return len(self.carrier)

    def index(self, name):
        try:
            return self.carrier.index(name)
        except ValueError:
            raise InputError(f'{name!r} is not an element of {list(self.carrier)}')

    def distance(self, i, mask):
        return self.delta[i][mask]

    def metric(self):
        """The Lawvere metric d(a, x) = delta(x, {a}) determined by the singletons"""
        n = self.size
        return VCatObj(PLUS, self.carrier, [[self.delta[x][1 << a] for x in range(n)] for a in range(n)])

    def is_separated(self):
        return self.metric().is_separated()

    def preserves(self, mapping, cod):
        return all(
            self.delta[i][mask] >= cod.delta[mapping[i]][image_mask(mapping, mask)]
            for i in range(self.size) for mask in range(1 << self.size)
        )

    # On a finite carrier delta is determined by the singletons, so limits
    # and colimits are computed on the metric and carried back.
    def restrict(self, indices):
        return FinApp.from_metric(self.metric().restrict(indices))

    def product(self, other):
        same_family(self, other)
        obj, p1, p2 = self.metric().product(other.metric())
        return FinApp.from_metric(obj), p1, p2

    def coproduct(self, other):
        same_family(self, other)
        obj, inl, inr = self.metric().coproduct(other.metric())
        return FinApp.from_metric(obj), inl, inr

    def point(self):
        return FinApp.from_metric(self.metric().point())

    def empty(self):
        return FinApp([], [])

    @classmethod
    def from_metric(cls, d):
        """delta_d(x', A) = inf{d(x, x') | x in A}"""
        if d.quantale.kind != QuantaleKind.PLUS:
            raise InputError('approach distances are built from metrics over P+')
        n = d.size
        delta = [
            [min((d.matrix[x][x2] for x in members(mask, n)), default=INF) for mask in range(1 << n)]
            for x2 in range(n)
        ]
        return cls(d.carrier, delta)


def base_kind(base):
    """Short name of the base category an object lives in"""
    if isinstance(base, FinTop):
        return 'top'
    if isinstance(base, FinApp):
        return 'app'
    return {
        QuantaleKind.TWO: 'ord',
        QuantaleKind.PLUS: 'met',
        QuantaleKind.DIAMOND: 'diamond',
        QuantaleKind.MAX: 'ultramet',
    }[QuantaleKind(base.quantale.kind)]
