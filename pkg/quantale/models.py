from fractions import Fraction
from functools import lru_cache, reduce, total_ordering
from itertools import product

from django.db import models

from equilog.exceptions import InputError


@total_ordering
class Infinity:
    """The distinguished infinite value of the extended rationals"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash('equilog.inf')

    def __repr__(self):
        return 'inf'

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


class QuantaleKind(models.TextChoices):
    TWO = 'two', 'Two'
    DIAMOND = 'diamond', 'Diamond (2x2)'
    PLUS = 'plus', 'PlusReversed'
    MAX = 'max', 'MaxReversed'


def to_extended(raw):
    """Parse an extended nonnegative rational from int, Fraction, 'p/q' or 'inf'"""
    if raw is INF:
        return INF
    if isinstance(raw, bool):
        raise InputError(f'{raw!r} is not an extended rational')
    if isinstance(raw, str) and raw.strip().lower() in ('inf', 'infinity', '∞'):
        return INF
    if isinstance(raw, float):
        raise InputError(f'{raw!r}: floating point values are not accepted, use "p/q"')
    try:
        value = Fraction(raw)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f'{raw!r} is not an extended rational')
    if value < 0:
        raise InputError(f'{raw!r} is negative')
    return value


def format_extended(value):
    if value is INF:
        return 'inf'
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


class Quantale:
    """A commutative unital quantale whose values are exactly representable"""

    kind = None

    # Finite quantales enumerate their whole carrier; the reversed-order
    # quantales fall back to a probe grid.
    is_finite = False

    def __eq__(self, other):
        return isinstance(other, Quantale) and other.kind == self.kind

    def __hash__(self):
        return hash(('quantale', self.kind))

    def __repr__(self):
        return f'Quantale({self.kind})'

    def __str__(self):
        return QuantaleKind(self.kind).label

    # Order and lattice operations
    def leq(self, u, v):
        raise NotImplementedError

    def join2(self, u, v):
        raise NotImplementedError

    def meet2(self, u, v):
        raise NotImplementedError

    def join(self, values):
        return reduce(self.join2, values, self.bottom)

    def meet(self, values):
        return reduce(self.meet2, values, self.top)

    # Monoidal structure
    def tensor(self, u, v):
        raise NotImplementedError

    def hom(self, v, w):
        """The residual: the largest u with u (x) v <= w"""
        raise NotImplementedError

    def heyting(self, v, w):
        """The residual of binary meet: the largest u with u /\\ v <= w"""
        raise NotImplementedError

    @property
    def unit(self):
        raise NotImplementedError

    @property
    def top(self):
        raise NotImplementedError

    @property
    def bottom(self):
        raise NotImplementedError

    def carrier(self):
        return None

    def default_probe(self):
        return self.carrier()

    def values(self, probe=None):
        """Values to enumerate over: the full carrier, else the given or default probe"""
        if self.is_finite:
            return self.carrier()
        return tuple(probe) if probe is not None else self.default_probe()

    def coerce(self, raw):
        raise NotImplementedError

    def format(self, value):
        raise NotImplementedError

    def is_integral(self):
        return self.unit == self.top


class TwoQuantale(Quantale):
    """The two-element chain with conjunction; V-categories are preorders"""

    kind = QuantaleKind.TWO
    is_finite = True

    def leq(self, u, v):
        return (not u) or v

    def join2(self, u, v):
        return u or v

    def meet2(self, u, v):
        return u and v

    def tensor(self, u, v):
        return u and v

    def hom(self, v, w):
        return (not v) or w

    def heyting(self, v, w):
        return (not v) or w

    @property
    def unit(self):
        return True

    @property
    def top(self):
        return True

    @property
    def bottom(self):
        return False

    def carrier(self):
        return (False, True)

    def coerce(self, raw):
        if isinstance(raw, bool):
            return raw
        if raw in (0, 1):
            return bool(raw)
        raise InputError(f'{raw!r} is not a value of {self}')

    def format(self, value):
        return '1' if value else '0'


class DiamondQuantale(Quantale):
    """The four-element Boolean algebra 2x2, tensor is meet"""

    kind = QuantaleKind.DIAMOND
    is_finite = True

    def leq(self, u, v):
        return all((not a) or b for a, b in zip(u, v))

    def join2(self, u, v):
        return (u[0] or v[0], u[1] or v[1])

    def meet2(self, u, v):
        return (u[0] and v[0], u[1] and v[1])

    def tensor(self, u, v):
        return self.meet2(u, v)

    def hom(self, v, w):
        return ((not v[0]) or w[0], (not v[1]) or w[1])

    def heyting(self, v, w):
        return self.hom(v, w)

    @property
    def unit(self):
        return (True, True)

    @property
    def top(self):
        return (True, True)

    @property
    def bottom(self):
        return (False, False)

    def carrier(self):
        return tuple(product((False, True), repeat=2))

    def coerce(self, raw):
        if isinstance(raw, (list, tuple)) and len(raw) == 2:
            return (TWO.coerce(raw[0]), TWO.coerce(raw[1]))
        raise InputError(f'{raw!r} is not a value of {self}')

    def format(self, value):
        return TWO.format(value[0]) + TWO.format(value[1])


class _ReversedQuantale(Quantale):
    """[0, inf] ordered by >=, so joins are infima and the top element is 0"""

    DEFAULT_GRID = (
        Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), INF,
    )

    def leq(self, u, v):
        return u >= v

    def join2(self, u, v):
        return min(u, v)

    def meet2(self, u, v):
        return max(u, v)

    def heyting(self, v, w):
        return Fraction(0) if v >= w else w

    @property
    def unit(self):
        return Fraction(0)

    @property
    def top(self):
        return Fraction(0)

    @property
    def bottom(self):
        return INF

    def default_probe(self):
        return self.DEFAULT_GRID

    def coerce(self, raw):
        return to_extended(raw)

    def format(self, value):
        return format_extended(value)


class PlusQuantale(_ReversedQuantale):
    """Lawvere's quantale P+ with addition; V-categories are generalized metric spaces"""

    kind = QuantaleKind.PLUS

    def tensor(self, u, v):
        if u is INF or v is INF:
            return INF
        return u + v

    def hom(self, v, w):
        # truncated subtraction w - v
        if w is INF:
            return Fraction(0) if v is INF else INF
        if v is INF:
            return Fraction(0)
        return max(w - v, Fraction(0))


class MaxQuantale(_ReversedQuantale):
    """P_max with max as tensor; V-categories are ultrametric spaces"""

    kind = QuantaleKind.MAX

    def tensor(self, u, v):
        return max(u, v)

    def hom(self, v, w):
        return Fraction(0) if v >= w else w


TWO = TwoQuantale()
DIAMOND = DiamondQuantale()
PLUS = PlusQuantale()
MAX = MaxQuantale()

QUANTALES = {q.kind: q for q in (TWO, DIAMOND, PLUS, MAX)}


@lru_cache(maxsize=None)
def get_quantale(kind):
    try:
        return QUANTALES[QuantaleKind(kind)]
    except ValueError:
        raise InputError(f'unknown quantale kind {kind!r}')


def hom_residual(q, v, w):
    """The internal hom of q on raw values, which are coerced into its carrier first"""
    return q.hom(q.coerce(v), q.coerce(w))
