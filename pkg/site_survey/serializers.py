import math

from rest_framework import serializers

from .models import AccessPoint, SurveyLocation, Measurement, PathLossFit
from .radio.units import MAX_LOCATION_ID_LENGTH, feet_to_meters


def _finite(value, field):
    if not math.isfinite(value):
        raise serializers.ValidationError(f'{field} must be finite')
    return value


class SurveyRowSerializer(serializers.Serializer):
    """One data row of a survey CSV file."""

    UNITS = ('m', 'ft')

    location_id = serializers.CharField(max_length=MAX_LOCATION_ID_LENGTH)
    distance = serializers.FloatField()
    unit = serializers.ChoiceField(choices=UNITS, error_messages={'invalid_choice': 'unknown unit "{input}"'})
    rssi_dbm = serializers.FloatField()

    def validate_distance(self, value):
        _finite(value, 'distance')
        if value <= 0:
            raise serializers.ValidationError('distance must be positive')
        return value

    def validate_rssi_dbm(self, value):
        return _finite(value, 'rssi_dbm')

    @property
    def distance_m(self):
        data = self.validated_data
        return feet_to_meters(data['distance']) if data['unit'] == 'ft' else data['distance']


class ModelFileSerializer(serializers.Serializer):
    """A fitted log-distance model with its provenance, as stored in JSON model files."""

    name = serializers.CharField(max_length=100)
    pl_d0_db = serializers.FloatField()
    d0_m = serializers.FloatField()
    n = serializers.FloatField()
    sigma_db = serializers.FloatField(min_value=0.0)
    tx_power_dbm = serializers.FloatField()
    frequency_mhz = serializers.FloatField()
    num_samples = serializers.IntegerField(min_value=0)
    r_squared = serializers.FloatField()
    n_std_error = serializers.FloatField(required=False, default=0.0)

    def validate_d0_m(self, value):
        if not math.isfinite(value) or value <= 0:
            raise serializers.ValidationError('d0_m must be positive')
        return value

    def validate_frequency_mhz(self, value):
        if not math.isfinite(value) or value <= 0:
            raise serializers.ValidationError('frequency_mhz must be positive')
        return value

    def validate(self, data):
        for key in ('pl_d0_db', 'n', 'tx_power_dbm', 'r_squared'):
            if not math.isfinite(data[key]):
                raise serializers.ValidationError({key: f'{key} must be finite'})
        return data


class AccessPointSerializer(serializers.ModelSerializer):
    class Meta:
        model = AccessPoint
        fields = ['id', 'name', 'tx_power_dbm', 'frequency_mhz', 'sensitivity_dbm',
                  'antenna_gain_tx', 'antenna_gain_rx', 'system_loss']


class PathLossFitSerializer(serializers.ModelSerializer):
    location = serializers.StringRelatedField(read_only=True)

    class Meta:
        model = PathLossFit
        fields = ['location', 'pl_d0_db', 'd0_m', 'n', 'sigma_db', 'r_squared', 'num_samples', 'fitted_at']
        read_only_fields = fields


class SurveyLocationSerializer(serializers.ModelSerializer):
    access_point = serializers.SlugRelatedField(slug_field='name', queryset=AccessPoint.objects.all())
    measurement_count = serializers.IntegerField(source='measurements.count', read_only=True)
    fit = PathLossFitSerializer(read_only=True, allow_null=True)

    class Meta:
        model = SurveyLocation
        fields = ['id', 'name', 'access_point', 'description', 'measurement_count', 'fit', 'created_at']
        read_only_fields = ['created_at']


class MeasurementSerializer(serializers.ModelSerializer):
    class Meta:
        model = Measurement
        fields = ['id', 'location', 'distance_m', 'rssi_dbm', 'created_at']
        read_only_fields = ['created_at']

    def validate_distance_m(self, value):
        _finite(value, 'distance_m')
        if value <= 0:
            raise serializers.ValidationError('distance must be positive')
        return value

    def validate_rssi_dbm(self, value):
        return _finite(value, 'rssi_dbm')


class FitRequestSerializer(serializers.Serializer):
    d0_m = serializers.FloatField(required=False)

    def validate_d0_m(self, value):
        if not math.isfinite(value) or value <= 0:
            raise serializers.ValidationError('d0_m must be positive')
        return value


class PlanQuerySerializer(serializers.Serializer):
    sensitivity_dbm = serializers.FloatField()
    margin_db = serializers.FloatField(required=False, min_value=0.0)

    def validate_sensitivity_dbm(self, value):
        return _finite(value, 'sensitivity_dbm')


class PlanEntrySerializer(serializers.Serializer):
    location_id = serializers.CharField()
    worst_rssi = serializers.FloatField(allow_null=True)
    margin_db = serializers.FloatField(allow_null=True)
    needs_new_ap = serializers.BooleanField()
    error = serializers.CharField(allow_null=True)


class PredictRequestSerializer(serializers.Serializer):
    pl_d0_db = serializers.FloatField()
    d0_m = serializers.FloatField(default=1.0)
    n = serializers.FloatField()
    tx_power_dbm = serializers.FloatField()
    distance_m = serializers.FloatField()

    def validate_distance_m(self, value):
        if not math.isfinite(value) or value <= 0:
            raise serializers.ValidationError('distance must be positive')
        return value

    def validate_d0_m(self, value):
        if not math.isfinite(value) or value <= 0:
            raise serializers.ValidationError('d0_m must be positive')
        return value

    def validate(self, data):
        for key in ('pl_d0_db', 'n', 'tx_power_dbm'):
            if not math.isfinite(data[key]):
                raise serializers.ValidationError({key: f'{key} must be finite'})
        return data
