from rest_framework import serializers

from assembly.models import Assembly, AssemblyMorph
from assembly.serializers import AssemblyMorphSerializer, AssemblySerializer
from completion.models import PseudoEqRel, RegTriple
from completion.serializers import PseudoEqRelSerializer, RegTripleSerializer
from equ.models import EquObj, MorphClass
from equ.serializers import EquObjSerializer, MorphClassSerializer
from equilog.serializers import load
from pequ.models import PEquObj
from pequ.serializers import PEquObjSerializer
from quantale.models import Quantale
from quantale.serializers import QuantaleSerializer
from spaces.models import FinApp, FinTop
from spaces.serializers import FinAppSerializer, FinTopSerializer
from vcat.models import VCatObj, VFunctor
from vcat.serializers import VCatObjSerializer, VFunctorSerializer

DOCUMENT_SERIALIZERS = {
    'quantale': QuantaleSerializer,
    'vcat': VCatObjSerializer,
    'fintop': FinTopSerializer,
    'finapp': FinAppSerializer,
    'equ': EquObjSerializer,
    'pequ': PEquObjSerializer,
    'assembly': AssemblySerializer,
    'pseudo_eq_rel': PseudoEqRelSerializer,
    'reg_triple': RegTripleSerializer,
}

# Serializer for the map of a morphism document, by the type of its domain
MORPHISM_SERIALIZERS = {
    'vcat': VFunctorSerializer,
    'fintop': VFunctorSerializer,
    'finapp': VFunctorSerializer,
    'equ': MorphClassSerializer,
    'pequ': MorphClassSerializer,
    'assembly': AssemblyMorphSerializer,
}

_DUMPERS = [
    (Quantale, QuantaleSerializer),
    (VCatObj, VCatObjSerializer),
    (FinTop, FinTopSerializer),
    (FinApp, FinAppSerializer),
    (EquObj, EquObjSerializer),
    (PEquObj, PEquObjSerializer),
    (Assembly, AssemblySerializer),
    (PseudoEqRel, PseudoEqRelSerializer),
    (RegTriple, RegTripleSerializer),
]


def document_type(data):
    if not isinstance(data, dict):
        raise serializers.ValidationError('a document must be a JSON object')
    kind = data.get('type')
    if kind != 'morphism' and kind not in DOCUMENT_SERIALIZERS:
        raise serializers.ValidationError(f'unknown document type {kind!r}')
    return kind


def load_document(data):
    """Parse any tagged document into its domain object"""
    kind = document_type(data)
    if kind == 'morphism':
        return load_morphism(data)
    return load(DOCUMENT_SERIALIZERS[kind], data)


def load_morphism(data):
    for key in ('dom', 'cod', 'map'):
        if key not in data:
            raise serializers.ValidationError(f'morphism document needs {key!r}')
    dom_kind = document_type(data['dom'])
    if dom_kind not in MORPHISM_SERIALIZERS:
        raise serializers.ValidationError(f'no morphisms between {dom_kind!r} documents')
    dom, cod = load_document(data['dom']), load_document(data['cod'])
    if type(dom) is not type(cod):
        raise serializers.ValidationError('morphism domain and codomain must have one type')
    return load(MORPHISM_SERIALIZERS[dom_kind], {'map': data['map']}, dom=dom, cod=cod)


def dump_document(obj):
    """The tagged document of a domain object"""
    if isinstance(obj, (VFunctor, MorphClass, AssemblyMorph)):
        return {
            'type': 'morphism',
            'dom': dump_document(obj.dom),
            'cod': dump_document(obj.cod),
            'map': obj.as_names(),
        }
    for cls, serializer_class in _DUMPERS:
        if isinstance(obj, cls):
            return serializer_class(obj).data
    raise TypeError(f'no document type for {type(obj).__name__}')
