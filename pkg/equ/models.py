import networkx as nx

from equilog.exceptions import InputError


class Partition:
    """
    An equivalence relation on range(n), stored as its blocks.

    Blocks are sorted internally and ordered by least member, so two
    partitions of the same relation compare equal.
    """

    def __init__(self, n, blocks):
        blocks = [tuple(sorted(block)) for block in blocks if block]
        self.blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        self.class_of = [None] * n
        for c, block in enumerate(self.blocks):
            for i in block:
                if not 0 <= i < n:
                    raise InputError(f'block element {i} outside a carrier of {n} points')
                if self.class_of[i] is not None:
                    raise InputError(f'element {i} lies in two blocks')
                self.class_of[i] = c
        if any(c is None for c in self.class_of):
            missing = [i for i, c in enumerate(self.class_of) if c is None]
            raise InputError(f'blocks do not cover elements {missing}')
        self.class_of = tuple(self.class_of)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f'Partition({[list(b) for b in self.blocks]})'

    def __len__(self):
        return len(self.class_of)

    @property
    def size(self):
        return len(self.class_of)

    @property
    def count(self):
        return len(self.blocks)

    def same(self, i, j):
        return self.class_of[i] == self.class_of[j]

    def pairs(self):
        return [(i, j) for block in self.blocks for i in block for j in block]

    def restrict(self, indices):
        """The relation on the listed points, renumbered by position"""
        indices = list(indices)
        groups = {}
        for p, i in enumerate(indices):
            groups.setdefault(self.class_of[i], []).append(p)
        return Partition(len(indices), groups.values())

    def product(self, other):
        """(i, j) ~ (i', j') iff i ~ i' and j ~ j', in row-major order"""
        width = other.size
        groups = {}
        for i in range(self.size):
            for j in range(width):
                groups.setdefault((self.class_of[i], other.class_of[j]), []).append(i * width + j)
        return Partition(self.size * width, groups.values())

    def coproduct(self, other):
        n = self.size
        blocks = list(self.blocks) + [tuple(n + j for j in block) for block in other.blocks]
        return Partition(n + other.size, blocks)

    def join(self, pairs):
        """Equivalence closure of this relation together with extra pairs"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from((block[0], i) for block in self.blocks for i in block[1:])
        graph.add_edges_from(pairs)
        return Partition(self.size, nx.connected_components(graph))

    @classmethod
    def discrete(cls, n):
        return cls(n, [[i] for i in range(n)])

    @classmethod
    def total(cls, n):
        return cls(n, [range(n)] if n else [])

    @classmethod
    def from_labels(cls, labels):
        groups = {}
        for i, label in enumerate(labels):
            groups.setdefault(label, []).append(i)
        return cls(len(labels), groups.values())

    @classmethod
    def from_relation(cls, n, pairs):
        """Check that the pairs form an equivalence relation and return its blocks"""
        relation = set(pairs)
        for i in range(n):
            if (i, i) not in relation:
                raise InputError(f'relation is not reflexive at element {i}')
        for i, j in relation:
            if (j, i) not in relation:
                raise InputError(f'relation is not symmetric on ({i}, {j})')
        for i, j in relation:
            for k in range(n):
                if (j, k) in relation and (i, k) not in relation:
                    raise InputError(f'relation is not transitive on ({i}, {j}, {k})')
        blocks = {frozenset(j for j in range(n) if (i, j) in relation) for i in range(n)}
        return cls(n, blocks)


class EquObj:
    """An equilogical object: a base object with an equivalence relation on its carrier"""

    def __init__(self, base, partition):
        if partition.size != base.size:
            raise InputError(
                f'equivalence on {partition.size} points does not match a carrier of {base.size}'
            )
        self.base = base
        self.partition = partition

    def __eq__(self, other):
        return isinstance(other, EquObj) and self.base == other.base and self.partition == other.partition

    def __hash__(self):
        return hash((self.base, self.partition))

    def __repr__(self):
        return f'EquObj({list(self.carrier)}, blocks={self.blocks()})'

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
        return self.partition.same(i, j)

    def blocks(self):
        return [[self.carrier[i] for i in block] for block in self.partition.blocks]

    def describe(self):
        return {'carrier': list(self.carrier), 'blocks': self.blocks()}

    @classmethod
    def discrete(cls, base):
        return cls(base, Partition.discrete(base.size))

    @classmethod
    def total(cls, base):
        return cls(base, Partition.total(base.size))


class MorphClass:
    """
    A morphism of equilogical objects, held through one representative map.

    Equality is the semantic class equality: f == g iff x ~ x' implies
    f(x) ~ g(x'). The hash is the class signature, which is only
    meaningful for equivariant representatives.
    """

    def __init__(self, dom, cod, mapping):
        self.dom = dom
        self.cod = cod
        self.mapping = tuple(mapping)
        if len(self.mapping) != dom.size or any(not 0 <= j < cod.size for j in self.mapping):
            raise InputError(f'map must send each of {dom.size} points into {cod.size} points')

    def __call__(self, i):
        return self.mapping[i]

    def __eq__(self, other):
        from .constructions import morph_equal

        return (
            isinstance(other, MorphClass)
            and self.dom == other.dom and self.cod == other.cod
            and morph_equal(self, other)
        )

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return f'MorphClass({self.as_names()})'

    def signature(self):
        """The codomain class hit by each domain point; None off the domain of a partial relation"""
        dom_classes = self.dom.partition.class_of
        cod_classes = self.cod.partition.class_of
        return tuple(
            None if dom_classes[i] is None else cod_classes[j]
            for i, j in enumerate(self.mapping)
        )

    def then(self, other):
        """Composite other . self"""
        return MorphClass(self.dom, other.cod, [other.mapping[j] for j in self.mapping])

    def as_names(self):
        return {self.dom.carrier[i]: self.cod.carrier[j] for i, j in enumerate(self.mapping)}

    @classmethod
    def identity(cls, obj):
        return cls(obj, obj, range(obj.size))

    @classmethod
    def from_names(cls, dom, cod, names):
        try:
            return cls(dom, cod, [cod.carrier.index(names[x]) for x in dom.carrier])
        except (KeyError, ValueError) as exc:
            raise InputError(f'map is undefined or leaves the codomain at {exc.args[0]!r}')
