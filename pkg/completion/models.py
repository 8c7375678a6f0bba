from equilog.exceptions import InputError
from vcat.constructions import initial_structure
from vcat.models import VFunctor, check_carrier, pair_name, same_family


class PseudoEqRel:
    """
    A parallel pair r1, r2: X1 -> X0 of V-functors, optionally with witnesses.

    `witnesses` maps 'r', 's' and 't' to index tuples for the reflexivity
    map X0 -> X1, the symmetry map X1 -> X1 and the transitivity map
    X2 -> X1, where X2 is the pullback returned by `pullback()`.
    """

    def __init__(self, x1, x0, r1, r2, witnesses=None):
        same_family(x1, x0)
        self.x1 = x1
        self.x0 = x0
        self.r1 = VFunctor(x1, x0, r1)
        self.r2 = VFunctor(x1, x0, r2)
        for name, leg in (('r1', self.r1), ('r2', self.r2)):
            if not leg.is_valid():
                raise InputError(f'{name} is not a V-functor')
        self.witnesses = {k: tuple(v) for k, v in (witnesses or {}).items() if v is not None}
        unknown = set(self.witnesses) - {'r', 's', 't'}
        if unknown:
            raise InputError(f'unknown witnesses {sorted(unknown)}')

    def __eq__(self, other):
        return (
            isinstance(other, PseudoEqRel)
            and self.x1 == other.x1 and self.x0 == other.x0
            and self.r1 == other.r1 and self.r2 == other.r2
        )

    def __hash__(self):
        return hash((self.x1, self.x0, self.r1.mapping, self.r2.mapping))

    def __repr__(self):
        return f'PseudoEqRel({list(self.x1.carrier)} => {list(self.x0.carrier)})'

    @property
    def quantale(self):
        return self.x0.quantale

    def pairing(self):
        return [(self.r1(u), self.r2(u)) for u in range(self.x1.size)]

    def image(self):
        return sorted(set(self.pairing()))

    def pullback(self):
        """X2 = {(u, v) | r2 u = r1 v} with the structure induced by both projections"""
        pairs = [
            (u, v) for u in range(self.x1.size) for v in range(self.x1.size)
            if self.r2(u) == self.r1(v)
        ]
        carrier = [pair_name(self.x1.carrier[u], self.x1.carrier[v]) for u, v in pairs]
        obj = initial_structure(
            carrier,
            [([u for u, _ in pairs], self.x1), ([v for _, v in pairs], self.x1)],
            quantale=self.quantale,
        )
        return obj, pairs

    def is_regmono(self):
        """<r1, r2> is injective and X1 carries the structure it induces"""
        if len(set(self.pairing())) != self.x1.size:
            return False
        induced = initial_structure(
            self.x1.carrier, [(self.r1.mapping, self.x0), (self.r2.mapping, self.x0)],
            quantale=self.quantale,
        )
        return induced == self.x1

    def describe(self):
        return {
            'x1': list(self.x1.carrier),
            'x0': list(self.x0.carrier),
            'r1': self.r1.as_names(),
            'r2': self.r2.as_names(),
        }


class RegTriple:
    """A triple (X, A, sigma) with X a V-category and sigma: A -> |X|"""

    def __init__(self, base, elements, sigma):
        self.base = base
        self.elements = check_carrier(elements)
        self.sigma = tuple(sigma)
        if len(self.sigma) != len(self.elements) or any(not 0 <= x < base.size for x in self.sigma):
            raise InputError(f'sigma must send each of {len(self.elements)} elements into the base carrier')

    def __eq__(self, other):
        return (
            isinstance(other, RegTriple)
            and self.base == other.base
            and self.elements == other.elements
            and self.sigma == other.sigma
        )

    def __hash__(self):
        return hash((self.base, self.elements, self.sigma))

    def __repr__(self):
        return f'RegTriple({list(self.elements)} -> {list(self.base.carrier)})'

    @property
    def size(self):
        return len(self.elements)

    def as_names(self):
        return {a: self.base.carrier[x] for a, x in zip(self.elements, self.sigma)}
