from rest_framework import serializers

from equilog.serializers import CarrierField, index_names, load
from quantale.models import PLUS
from quantale.serializers import dump_value, parse_value
from vcat.models import VCatObj
from vcat.serializers import VCatObjSerializer
from .models import FinApp, FinTop, mask_of, members


class FinTopSerializer(serializers.Serializer):
    """Serializer for a finite topological space"""
    type = serializers.CharField(required=False)
    carrier = CarrierField()
    opens = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))

    def validate(self, attrs):
        attrs['opens'] = [mask_of(index_names(attrs['carrier'], u, 'opens')) for u in attrs['opens']]
        return attrs

    def create(self, validated_data):
        return FinTop(validated_data['carrier'], validated_data['opens'])

    def to_representation(self, instance):
        return {'type': 'fintop', 'carrier': list(instance.carrier), 'opens': instance.open_sets()}


class DistanceEntrySerializer(serializers.Serializer):
    point = serializers.CharField()
    subset = serializers.ListField(child=serializers.CharField())
    value = serializers.JSONField()


class FinAppSerializer(serializers.Serializer):
    """
    Serializer for a finite approach space.

    Either `delta` lists every (point, subset) distance, or `metric` gives a
    P+ matrix and the distances are derived from it.
    """
    type = serializers.CharField(required=False)
    carrier = CarrierField()
    delta = DistanceEntrySerializer(many=True, required=False)
    metric = serializers.ListField(child=serializers.ListField(child=serializers.JSONField()), required=False)

    def validate(self, attrs):
        carrier = attrs['carrier']
        n = len(carrier)
        if ('delta' in attrs) == ('metric' in attrs):
            raise serializers.ValidationError('give exactly one of delta or metric')
        if 'metric' in attrs:
            rows = attrs['metric']
            if len(rows) != n or any(len(row) != n for row in rows):
                raise serializers.ValidationError({'metric': f'metric must be {n}x{n}'})
            attrs['metric'] = [[parse_value(PLUS, v) for v in row] for row in rows]
            return attrs
        table = [[None] * (1 << n) for _ in range(n)]
        for entry in attrs['delta']:
            (i,) = index_names(carrier, [entry['point']], 'delta')
            mask = mask_of(index_names(carrier, entry['subset'], 'delta'))
            table[i][mask] = parse_value(PLUS, entry['value'])
        missing = [
            (carrier[i], [carrier[j] for j in members(mask, n)])
            for i in range(n) for mask in range(1 << n) if table[i][mask] is None
        ]
        if missing:
            raise serializers.ValidationError({'delta': f'distance missing for {missing[0]}'})
        attrs['delta'] = table
        return attrs

    def create(self, validated_data):
        if 'metric' in validated_data:
            return FinApp.from_metric(VCatObj(PLUS, validated_data['carrier'], validated_data['metric']))
        return FinApp(validated_data['carrier'], validated_data['delta'])

    def to_representation(self, instance):
        n = instance.size
        return {
            'type': 'finapp',
            'carrier': list(instance.carrier),
            'delta': [
                {
                    'point': instance.carrier[i],
                    'subset': [instance.carrier[j] for j in members(mask, n)],
                    'value': dump_value(PLUS, instance.delta[i][mask]),
                }
                for i in range(n) for mask in range(1 << n)
            ],
        }


BASE_SERIALIZERS = {
    'vcat': VCatObjSerializer,
    'fintop': FinTopSerializer,
    'finapp': FinAppSerializer,
}


def parse_base(data):
    """Load any base object (V-category, finite topology or approach space) from its document"""
    if not isinstance(data, dict):
        raise serializers.ValidationError('base must be a JSON object')
    kind = data.get('type', 'vcat')
    try:
        serializer_class = BASE_SERIALIZERS[kind]
    except KeyError:
        raise serializers.ValidationError(f'unknown base type {kind!r}')
    return load(serializer_class, data)


def dump_base(base):
    if isinstance(base, FinTop):
        return FinTopSerializer(base).data
    if isinstance(base, FinApp):
        return FinAppSerializer(base).data
    return VCatObjSerializer(base).data
