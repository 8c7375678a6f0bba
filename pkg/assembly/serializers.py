from rest_framework import serializers

from equilog.serializers import CarrierField, index_names
from vcat.serializers import VCatObjSerializer
from .constructions import assembly_morphism
from .models import Assembly


class AssemblySerializer(serializers.Serializer):
    """Serializer for an assembly; `realizers` maps each element to base points"""
    type = serializers.CharField(required=False)
    base = VCatObjSerializer()
    elements = CarrierField()
    realizers = serializers.DictField(child=serializers.ListField(child=serializers.CharField()))

    def validate(self, attrs):
        base = VCatObjSerializer().create(attrs['base'])
        realizers = attrs['realizers']
        missing = [a for a in attrs['elements'] if a not in realizers]
        if missing:
            raise serializers.ValidationError({'realizers': f'no realizers given for {missing}'})
        extra = sorted(set(realizers) - set(attrs['elements']))
        if extra:
            raise serializers.ValidationError({'realizers': f'realizers given for unknown elements {extra}'})
        attrs['base'] = base
        attrs['realizers'] = [index_names(base.carrier, realizers[a], 'realizers') for a in attrs['elements']]
        return attrs

    def create(self, validated_data):
        return Assembly(validated_data['elements'], validated_data['base'], validated_data['realizers'])

    def to_representation(self, instance):
        return {
            'type': 'assembly',
            'base': VCatObjSerializer(instance.base).data,
            'elements': list(instance.elements),
            'realizers': instance.as_names(),
        }


class AssemblyMorphSerializer(serializers.Serializer):
    """A map of elements between assemblies in the context; a tracking realizer is searched for"""
    map = serializers.DictField(child=serializers.CharField())

    def validate_map(self, value):
        dom, cod = self.context['dom'], self.context['cod']
        missing = [a for a in dom.elements if a not in value]
        if missing:
            raise serializers.ValidationError(f'map is undefined on {missing}')
        return index_names(cod.elements, [value[a] for a in dom.elements], 'map')

    def create(self, validated_data):
        return assembly_morphism(self.context['dom'], self.context['cod'], validated_data['map'])

    def to_representation(self, instance):
        data = {'map': instance.as_names()}
        if instance.realizer is not None:
            data['realizer'] = instance.realizer.as_names()
        return data
