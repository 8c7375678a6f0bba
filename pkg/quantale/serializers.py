from rest_framework import serializers

from equilog.exceptions import InputError
from .models import QuantaleKind, TwoQuantale, DiamondQuantale, get_quantale


def parse_value(q, raw):
    """Parse a JSON value into the quantale's carrier"""
    try:
        return q.coerce(raw)
    except InputError as exc:
        raise serializers.ValidationError(str(exc))


def dump_value(q, value):
    if isinstance(q, TwoQuantale):
        return bool(value)
    if isinstance(q, DiamondQuantale):
        return [bool(value[0]), bool(value[1])]
    return q.format(value)


class QuantaleSerializer(serializers.Serializer):
    """Serializer for a quantale tag"""
    type = serializers.CharField(required=False)
    kind = serializers.ChoiceField(choices=QuantaleKind.choices)

    def create(self, validated_data):
        return get_quantale(validated_data['kind'])

    def to_representation(self, instance):
        return {'type': 'quantale', 'kind': str(instance.kind.value)}
