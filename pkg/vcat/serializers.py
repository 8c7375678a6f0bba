from rest_framework import serializers

from equilog.serializers import CarrierField, index_names
from quantale.models import QuantaleKind, get_quantale
from quantale.serializers import dump_value, parse_value
from .models import VCatObj, VFunctor


class VCatObjSerializer(serializers.Serializer):
    """Serializer for a finite V-category"""
    type = serializers.CharField(required=False)
    quantale = serializers.ChoiceField(choices=QuantaleKind.choices)
    carrier = CarrierField()
    matrix = serializers.ListField(child=serializers.ListField(child=serializers.JSONField()))

    def validate(self, attrs):
        q = get_quantale(attrs['quantale'])
        n = len(attrs['carrier'])
        matrix = attrs['matrix']
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise serializers.ValidationError({'matrix': f'structure matrix must be {n}x{n}'})
        attrs['matrix'] = [[parse_value(q, v) for v in row] for row in matrix]
        attrs['quantale'] = q
        return attrs

    def create(self, validated_data):
        return VCatObj(validated_data['quantale'], validated_data['carrier'], validated_data['matrix'])

    def to_representation(self, instance):
        q = instance.quantale
        return {
            'type': 'vcat',
            'quantale': str(q.kind.value),
            'carrier': list(instance.carrier),
            'matrix': [[dump_value(q, v) for v in row] for row in instance.matrix],
        }


class VFunctorSerializer(serializers.Serializer):
    """A map between two V-categories given in the serializer context"""
    map = serializers.DictField(child=serializers.CharField())

    def validate_map(self, value):
        dom, cod = self.context['dom'], self.context['cod']
        missing = [x for x in dom.carrier if x not in value]
        if missing:
            raise serializers.ValidationError(f'map is undefined on {missing}')
        return index_names(cod.carrier, [value[x] for x in dom.carrier], 'map')

    def create(self, validated_data):
        return VFunctor(self.context['dom'], self.context['cod'], validated_data['map'])

    def to_representation(self, instance):
        return {'map': instance.as_names()}
