from rest_framework import serializers

from equilog.serializers import index_names
from spaces.serializers import dump_base, parse_base
from .models import EquObj, MorphClass, Partition


class EquObjSerializer(serializers.Serializer):
    """
    Serializer for an equilogical object.

    The equivalence is given either as blocks or as an arbitrary relation,
    which is checked to be an equivalence before it is converted.
    """
    type = serializers.CharField(required=False)
    base = serializers.JSONField()
    blocks = serializers.ListField(child=serializers.ListField(child=serializers.CharField()), required=False)
    relation = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(), min_length=2, max_length=2),
        required=False,
    )

    def validate_base(self, value):
        return parse_base(value)

    def validate(self, attrs):
        base = attrs['base']
        if 'blocks' in attrs and 'relation' in attrs:
            raise serializers.ValidationError('give blocks or relation, not both')
        if 'relation' in attrs:
            pairs = [tuple(index_names(base.carrier, pair, 'relation')) for pair in attrs['relation']]
            attrs['partition'] = Partition.from_relation(base.size, pairs)
        elif 'blocks' in attrs:
            blocks = [index_names(base.carrier, block, 'blocks') for block in attrs['blocks']]
            attrs['partition'] = Partition(base.size, blocks)
        else:
            attrs['partition'] = Partition.discrete(base.size)
        return attrs

    def create(self, validated_data):
        return EquObj(validated_data['base'], validated_data['partition'])

    def to_representation(self, instance):
        return {'type': 'equ', 'base': dump_base(instance.base), 'blocks': instance.blocks()}


class MorphClassSerializer(serializers.Serializer):
    """A morphism between two equilogical objects given in the serializer context"""
    map = serializers.DictField(child=serializers.CharField())

    def create(self, validated_data):
        return MorphClass.from_names(self.context['dom'], self.context['cod'], validated_data['map'])

    def to_representation(self, instance):
        return {'map': instance.as_names()}
