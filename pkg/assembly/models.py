from equilog.exceptions import InputError
from vcat.models import check_carrier


class Assembly:
    """
    A finite assembly (A, X, E): elements with nonempty sets of realizers in X.

    `realizers[a]` lists the carrier indices of the base that realize element a.
    """

    def __init__(self, elements, base, realizers):
        self.elements = check_carrier(elements)
        self.base = base
        self.realizers = tuple(tuple(sorted(set(r))) for r in realizers)
        if len(self.realizers) != len(self.elements):
            raise InputError('every element needs a realizer set')
        for name, r in zip(self.elements, self.realizers):
            if not r:
                raise InputError(f'element {name!r} has no realizers')
            if any(not 0 <= x < base.size for x in r):
                raise InputError(f'realizers of {name!r} lie outside the base carrier')

    def __eq__(self, other):
        return (
            isinstance(other, Assembly)
            and self.elements == other.elements
            and self.base == other.base
            and self.realizers == other.realizers
        )

    def __hash__(self):
        return hash(('assembly', self.elements, self.base, self.realizers))

    def __repr__(self):
        return f'Assembly({self.as_names()})'

    @property
    def size(self):
        return len(self.elements)

    @property
    def family(self):
        return self.base.family

    def E(self, a):
        return self.realizers[a]

    def is_modest(self):
        seen = set()
        for r in self.realizers:
            if seen & set(r):
                return False
            seen |= set(r)
        return True

    def realized(self):
        """Every base point that realizes some element"""
        return sorted({x for r in self.realizers for x in r})

    def as_names(self):
        return {a: [self.base.carrier[x] for x in r] for a, r in zip(self.elements, self.realizers)}

    def describe(self):
        return {'elements': list(self.elements), 'realizers': self.as_names()}

    def index(self, name):
        try:
            return self.elements.index(name)
        except ValueError:
            raise InputError(f'{name!r} is not an element of {list(self.elements)}')


class AssemblyMorph:
    """A map of elements together with one base V-functor tracking it"""

    def __init__(self, dom, cod, mapping, realizer=None):
        self.dom = dom
        self.cod = cod
        self.mapping = tuple(mapping)
        self.realizer = realizer
        if len(self.mapping) != dom.size or any(not 0 <= b < cod.size for b in self.mapping):
            raise InputError(f'map must send each of {dom.size} elements into {cod.size} elements')

    # Morphisms of assemblies are their underlying functions.
    def __eq__(self, other):
        return (
            isinstance(other, AssemblyMorph)
            and self.dom == other.dom and self.cod == other.cod
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash(self.mapping)

    def __call__(self, a):
        return self.mapping[a]

    def __repr__(self):
        return f'AssemblyMorph({self.as_names()})'

    def signature(self):
        return self.mapping

    def then(self, other):
        """Composite other . self, tracked by the composite realizer when both are known"""
        realizer = None
        if self.realizer is not None and other.realizer is not None:
            realizer = self.realizer.then(other.realizer)
        return AssemblyMorph(self.dom, other.cod, [other.mapping[b] for b in self.mapping], realizer)

    def as_names(self):
        return {self.dom.elements[a]: self.cod.elements[b] for a, b in enumerate(self.mapping)}
