from itertools import product

from equilog.exceptions import InputError
from quantale.models import TWO, PLUS


def check_carrier(carrier):
    carrier = tuple(str(name) for name in carrier)
    if len(set(carrier)) != len(carrier):
        raise InputError(f'carrier names must be distinct: {list(carrier)}')
    return carrier


class VCatObj:
    """
    A finite V-category (X, a) for the identity monad.

    The matrix is stored by carrier index; `a(i, j)` is the value a(x_i, x_j).
    Construction only checks the shape; the reflexivity and transitivity
    axioms are audited by `verify_vcat`.
    """

    family_name = 'vcat'

    def __init__(self, quantale, carrier, matrix):
        self.quantale = quantale
        self.carrier = check_carrier(carrier)
        self.matrix = tuple(tuple(row) for row in matrix)
        n = len(self.carrier)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise InputError(f'structure matrix must be {n}x{n}')
        self._index = {name: i for i, name in enumerate(self.carrier)}

    def __eq__(self, other):
        return (
            isinstance(other, VCatObj)
            and self.quantale == other.quantale
            and self.carrier == other.carrier
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.quantale, self.carrier, self.matrix))

    def __repr__(self):
        return f'VCatObj({self.quantale.kind}, {list(self.carrier)})'

    def __str__(self):
        fmt = self.quantale.format
        rows = ['  '.join(fmt(v) for v in row) for row in self.matrix]
        return f'{self.quantale} on {list(self.carrier)}\n' + '\n'.join(rows)

    @property
    def size(self):
        return len(self.carrier)

    @property
    def family(self):
        return (self.family_name, str(self.quantale.kind))

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f'{name!r} is not an element of {list(self.carrier)}')

    def a(self, i, j):
        return self.matrix[i][j]

    def value(self, x, y):
        return self.matrix[self.index(x)][self.index(y)]

    def induced_leq(self, i, j):
        """The point preorder x <= x' iff k <= a(x, x')"""
        return self.quantale.leq(self.quantale.unit, self.matrix[i][j])

    def is_separated(self):
        return all(
            i == j or not (self.induced_leq(i, j) and self.induced_leq(j, i))
            for i in range(self.size) for j in range(self.size)
        )

    # Structure-preserving maps
    def preserves(self, mapping, cod):
        q = self.quantale
        return all(
            q.leq(self.matrix[i][j], cod.matrix[mapping[i]][mapping[j]])
            for i in range(self.size) for j in range(self.size)
        )

    def admits_partial(self, prefix, cod):
        """Check the newest assignment of a partial map against the earlier ones"""
        q = self.quantale
        k = len(prefix) - 1
        fk = prefix[k]
        for i in range(k + 1):
            fi = prefix[i]
            if not q.leq(self.matrix[k][i], cod.matrix[fk][fi]):
                return False
            if not q.leq(self.matrix[i][k], cod.matrix[fi][fk]):
                return False
        return True

    # Finite limits and colimits in V-Cat
    def restrict(self, indices):
        """Initial structure along the inclusion of a subset"""
        indices = list(indices)
        return VCatObj(
            self.quantale,
            [self.carrier[i] for i in indices],
            [[self.matrix[i][j] for j in indices] for i in indices],
        )

    def product(self, other):
        """Cartesian product (meet structure) with its projections"""
        same_family(self, other)
        q = self.quantale
        pairs = list(product(range(self.size), range(other.size)))
        obj = VCatObj(
            q,
            [pair_name(self.carrier[i], other.carrier[j]) for i, j in pairs],
            [[q.meet2(self.matrix[i][i2], other.matrix[j][j2]) for i2, j2 in pairs] for i, j in pairs],
        )
        return obj, tuple(i for i, _ in pairs), tuple(j for _, j in pairs)

    def coproduct(self, other):
        same_family(self, other)
        q = self.quantale
        n, m = self.size, other.size
        matrix = [[q.bottom] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                matrix[i][j] = self.matrix[i][j]
        for i in range(m):
            for j in range(m):
                matrix[n + i][n + j] = other.matrix[i][j]
        carrier = [f'inl({x})' for x in self.carrier] + [f'inr({y})' for y in other.carrier]
        return VCatObj(q, carrier, matrix), tuple(range(n)), tuple(range(n, n + m))

    def point(self):
        return VCatObj(self.quantale, ['*'], [[self.quantale.top]])

    def empty(self):
        return VCatObj(self.quantale, [], [])

    def relabel(self, carrier):
        return VCatObj(self.quantale, carrier, self.matrix)

    # Convenience constructors
    @classmethod
    def indiscrete(cls, quantale, carrier):
        n = len(carrier)
        return cls(quantale, carrier, [[quantale.top] * n for _ in range(n)])

    @classmethod
    def discrete(cls, quantale, carrier):
        n = len(carrier)
        return cls(quantale, carrier, [
            [quantale.top if i == j else quantale.bottom for j in range(n)] for i in range(n)
        ])

    @classmethod
    def from_preorder(cls, carrier, pairs):
        """Preorder over V=2 from (x, y) pairs meaning x <= y; the reflexive pairs are implied"""
        carrier = check_carrier(carrier)
        index = {name: i for i, name in enumerate(carrier)}
        n = len(carrier)
        matrix = [[i == j for j in range(n)] for i in range(n)]
        for x, y in pairs:
            matrix[index[x]][index[y]] = True
        return cls(TWO, carrier, matrix)

    @classmethod
    def chain(cls, n, prefix='c'):
        carrier = [f'{prefix}{i}' for i in range(n)]
        return cls(TWO, carrier, [[i <= j for j in range(n)] for i in range(n)])

    @classmethod
    def antichain(cls, n, prefix='a'):
        return cls.discrete(TWO, [f'{prefix}{i}' for i in range(n)])

    @classmethod
    def metric(cls, carrier, distances):
        """Generalized metric over P+ from a square table of raw distances"""
        return cls(PLUS, carrier, [[PLUS.coerce(v) for v in row] for row in distances])


class VFunctor:
    """A structure-preserving map between V-categories, stored by index"""

    def __init__(self, dom, cod, mapping):
        self.dom = dom
        self.cod = cod
        self.mapping = tuple(mapping)
        if len(self.mapping) != dom.size or any(not 0 <= j < cod.size for j in self.mapping):
            raise InputError(f'map must send each of {dom.size} points into {cod.size} points')

    def __eq__(self, other):
        return (
            isinstance(other, VFunctor)
            and self.dom == other.dom and self.cod == other.cod
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.dom, self.cod, self.mapping))

    def __call__(self, i):
        return self.mapping[i]

    def __repr__(self):
        pairs = ', '.join(f'{self.dom.carrier[i]}->{self.cod.carrier[j]}' for i, j in enumerate(self.mapping))
        return f'VFunctor({pairs})'

    def is_valid(self):
        return self.dom.preserves(self.mapping, self.cod)

    def then(self, other):
        """Composite other . self"""
        return VFunctor(self.dom, other.cod, [other.mapping[j] for j in self.mapping])

    def as_names(self):
        return {self.dom.carrier[i]: self.cod.carrier[j] for i, j in enumerate(self.mapping)}

    @classmethod
    def identity(cls, obj):
        return cls(obj, obj, range(obj.size))

    @classmethod
    def from_names(cls, dom, cod, names):
        return cls(dom, cod, [cod.index(names[x]) for x in dom.carrier])


def pair_name(x, y):
    return f'({x},{y})'


def pair_index(i, j, width):
    """Position of (i, j) in a product whose second factor has `width` points"""
    return i * width + j


def same_family(left, right):
    if left.family != right.family:
        raise InputError(f'objects live over different bases: {left.family} and {right.family}')
