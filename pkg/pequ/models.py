from equilog.exceptions import InputError


class PartialEquivalence:
    """
    A symmetric transitive relation on range(n), stored as the blocks of its domain.

    Points outside every block are undefined: they are related to nothing,
    not even themselves.
    """

    def __init__(self, n, blocks):
        blocks = [tuple(sorted(block)) for block in blocks if block]
        self.blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        class_of = [None] * n
        for c, block in enumerate(self.blocks):
            for i in block:
                if not 0 <= i < n:
                    raise InputError(f'block element {i} outside a carrier of {n} points')
                if class_of[i] is not None:
                    raise InputError(f'element {i} lies in two blocks')
                class_of[i] = c
        self.class_of = tuple(class_of)

    def __eq__(self, other):
        return (
            isinstance(other, PartialEquivalence)
            and self.size == other.size and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.size, self.blocks))

    def __repr__(self):
        return f'PartialEquivalence({[list(b) for b in self.blocks]} of {self.size})'

    @property
    def size(self):
        return len(self.class_of)

    @property
    def count(self):
        return len(self.blocks)

    def defined(self, i):
        return self.class_of[i] is not None

    def domain(self):
        return [i for i in range(self.size) if self.class_of[i] is not None]

    def same(self, i, j):
        return self.class_of[i] is not None and self.class_of[i] == self.class_of[j]

    def pairs(self):
        return [(i, j) for block in self.blocks for i in block for j in block]

    def restrict(self, indices):
        indices = list(indices)
        groups = {}
        for p, i in enumerate(indices):
            if self.class_of[i] is not None:
                groups.setdefault(self.class_of[i], []).append(p)
        return PartialEquivalence(len(indices), groups.values())

    def product(self, other):
        width = other.size
        groups = {}
        for i in range(self.size):
            for j in range(width):
                if self.defined(i) and other.defined(j):
                    groups.setdefault((self.class_of[i], other.class_of[j]), []).append(i * width + j)
        return PartialEquivalence(self.size * width, groups.values())

    def is_total(self):
        return all(c is not None for c in self.class_of)

    @classmethod
    def total(cls, n):
        return cls(n, [range(n)] if n else [])

    @classmethod
    def empty(cls, n):
        return cls(n, [])

    @classmethod
    def discrete(cls, n):
        return cls(n, [[i] for i in range(n)])

    @classmethod
    def from_pairs(cls, n, pairs):
        """Check symmetry and transitivity of the pairs and return the relation"""
        relation = set(pairs)
        for i, j in relation:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f'pair ({i}, {j}) outside a carrier of {n} points')
            if (j, i) not in relation:
                raise InputError(f'relation is not symmetric on ({i}, {j})')
        for i, j in relation:
            for k in range(n):
                if (j, k) in relation and (i, k) not in relation:
                    raise InputError(f'relation is not transitive on ({i}, {j}, {k})')
        blocks = {frozenset(j for j in range(n) if (i, j) in relation) for i in range(n) if (i, i) in relation}
        return cls(n, blocks)


class PEquObj:
    """
    A partial equilogical object: an injective base with a partial equivalence.

    Injectivity of the base is audited by `verify_pequ`, not on construction.
    """

    def __init__(self, base, per):
        if per.size != base.size:
            raise InputError(f'relation on {per.size} points does not match a carrier of {base.size}')
        self.base = base
        self.per = per

    def __eq__(self, other):
        return isinstance(other, PEquObj) and self.base == other.base and self.per == other.per

    def __hash__(self):
        return hash(('pequ', self.base, self.per))

    def __repr__(self):
        return f'PEquObj({list(self.carrier)}, blocks={self.blocks()})'

    @property
    def partition(self):
        return self.per

    @property
    def carrier(self):
        return self.base.carrier

    @property
    def size(self):
        return self.base.size

    @property
    def family(self):
        return self.base.family

    def same(self, i, j):
        return self.per.same(i, j)

    def blocks(self):
        return [[self.carrier[i] for i in block] for block in self.per.blocks]

    def describe(self):
        return {'carrier': list(self.carrier), 'per': self.blocks()}

    def is_separated(self):
        return self.base.is_separated()
