from rest_framework import serializers

from .exceptions import InputError


def load(serializer_class, data, **context):
    """Validate a document with the given serializer and return the domain object"""
    serializer = serializer_class(data=data, context=context)
    try:
        serializer.is_valid(raise_exception=True)
        return serializer.save()
    except InputError as exc:
        raise serializers.ValidationError(str(exc))


class CarrierField(serializers.ListField):
    """A list of distinct element names"""

    child = serializers.CharField(allow_blank=False)

    def to_internal_value(self, data):
        names = super().to_internal_value(data)
        if len(set(names)) != len(names):
            raise serializers.ValidationError('carrier names must be distinct')
        return names


def index_names(carrier, names, what):
    """Map element names to carrier indices, rejecting unknown names"""
    position = {name: i for i, name in enumerate(carrier)}
    try:
        return [position[str(name)] for name in names]
    except KeyError as exc:
        raise serializers.ValidationError(f'{what} mentions unknown element {exc.args[0]!r}')
