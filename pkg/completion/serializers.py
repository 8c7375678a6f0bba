from rest_framework import serializers

from equilog.serializers import CarrierField, index_names
from vcat.serializers import VCatObjSerializer
from .models import PseudoEqRel, RegTriple


def _total_map(value, dom, cod, what):
    missing = [x for x in dom if x not in value]
    if missing:
        raise serializers.ValidationError({what: f'map is undefined on {missing}'})
    return index_names(cod, [value[x] for x in dom], what)


class PseudoEqRelSerializer(serializers.Serializer):
    """
    Serializer for a parallel pair r1, r2: x1 -> x0.

    Optional witnesses r, s and t are maps by element name; t is keyed by
    the names of the pullback pairs, written "(u,v)".
    """
    type = serializers.CharField(required=False)
    x1 = VCatObjSerializer()
    x0 = VCatObjSerializer()
    r1 = serializers.DictField(child=serializers.CharField())
    r2 = serializers.DictField(child=serializers.CharField())
    witnesses = serializers.DictField(child=serializers.DictField(child=serializers.CharField()), required=False)

    def validate(self, attrs):
        x1 = VCatObjSerializer().create(attrs['x1'])
        x0 = VCatObjSerializer().create(attrs['x0'])
        attrs['x1'], attrs['x0'] = x1, x0
        attrs['r1'] = _total_map(attrs['r1'], x1.carrier, x0.carrier, 'r1')
        attrs['r2'] = _total_map(attrs['r2'], x1.carrier, x0.carrier, 'r2')
        given = attrs.get('witnesses', {})
        unknown = sorted(set(given) - {'r', 's', 't'})
        if unknown:
            raise serializers.ValidationError({'witnesses': f'unknown witnesses {unknown}'})
        witnesses = {}
        if 'r' in given:
            witnesses['r'] = _total_map(given['r'], x0.carrier, x1.carrier, 'witnesses')
        if 's' in given:
            witnesses['s'] = _total_map(given['s'], x1.carrier, x1.carrier, 'witnesses')
        if 't' in given:
            x2, _ = PseudoEqRel(x1, x0, attrs['r1'], attrs['r2']).pullback()
            witnesses['t'] = _total_map(given['t'], x2.carrier, x1.carrier, 'witnesses')
        attrs['witnesses'] = witnesses
        return attrs

    def create(self, validated_data):
        return PseudoEqRel(
            validated_data['x1'], validated_data['x0'],
            validated_data['r1'], validated_data['r2'], validated_data['witnesses'],
        )

    def to_representation(self, instance):
        data = {
            'type': 'pseudo_eq_rel',
            'x1': VCatObjSerializer(instance.x1).data,
            'x0': VCatObjSerializer(instance.x0).data,
            'r1': instance.r1.as_names(),
            'r2': instance.r2.as_names(),
        }
        if instance.witnesses:
            x2, _ = instance.pullback()
            domains = {'r': instance.x0, 's': instance.x1, 't': x2}
            data['witnesses'] = {
                name: {domains[name].carrier[i]: instance.x1.carrier[j] for i, j in enumerate(mapping)}
                for name, mapping in sorted(instance.witnesses.items())
            }
        return data


class RegTripleSerializer(serializers.Serializer):
    """Serializer for a triple (X, A, sigma)"""
    type = serializers.CharField(required=False)
    base = VCatObjSerializer()
    elements = CarrierField()
    sigma = serializers.DictField(child=serializers.CharField())

    def validate(self, attrs):
        base = VCatObjSerializer().create(attrs['base'])
        attrs['base'] = base
        attrs['sigma'] = _total_map(attrs['sigma'], attrs['elements'], base.carrier, 'sigma')
        return attrs

    def create(self, validated_data):
        return RegTriple(validated_data['base'], validated_data['elements'], validated_data['sigma'])

    def to_representation(self, instance):
        return {
            'type': 'reg_triple',
            'base': VCatObjSerializer(instance.base).data,
            'elements': list(instance.elements),
            'sigma': instance.as_names(),
        }
