from rest_framework import serializers

from equilog.serializers import index_names
from vcat.serializers import VCatObjSerializer
from .models import PEquObj, PartialEquivalence


class PEquObjSerializer(serializers.Serializer):
    """Serializer for a partial equilogical object; the relation is a list of pairs"""
    type = serializers.CharField(required=False)
    base = VCatObjSerializer()
    pairs = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(), min_length=2, max_length=2),
        default=list,
    )

    def validate(self, attrs):
        base = VCatObjSerializer().create(attrs['base'])
        pairs = [tuple(index_names(base.carrier, pair, 'pairs')) for pair in attrs['pairs']]
        attrs['base'] = base
        attrs['per'] = PartialEquivalence.from_pairs(base.size, pairs)
        return attrs

    def create(self, validated_data):
        return PEquObj(validated_data['base'], validated_data['per'])

    def to_representation(self, instance):
        carrier = instance.carrier
        return {
            'type': 'pequ',
            'base': VCatObjSerializer(instance.base).data,
            'pairs': [[carrier[i], carrier[j]] for i, j in instance.per.pairs()],
        }
