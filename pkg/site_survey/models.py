from django.core.validators import MinValueValidator
from django.db import models

from .radio import ApConfig, LogDistanceModel, Sample, Survey


class AccessPoint(models.Model):
    name = models.CharField(max_length=100, unique=True, verbose_name='AP name')
    tx_power_dbm = models.FloatField(default=23.0, verbose_name='Transmit power (dBm)')
    frequency_mhz = models.FloatField(
        default=2432.0, validators=[MinValueValidator(0.001)], verbose_name='Frequency (MHz)'
    )
    sensitivity_dbm = models.FloatField(null=True, blank=True, verbose_name='Receiver sensitivity (dBm)')
    antenna_gain_tx = models.FloatField(default=1.0, validators=[MinValueValidator(1e-9)])
    antenna_gain_rx = models.FloatField(default=1.0, validators=[MinValueValidator(1e-9)])
    system_loss = models.FloatField(default=1.0, validators=[MinValueValidator(1.0)])

    class Meta:
        db_table = 'site_survey_access_point'
        ordering = ['name']
        verbose_name = 'Access point'
        verbose_name_plural = 'Access points'

    def __str__(self):
        return self.name

    def to_config(self):
        return ApConfig(
            name=self.name,
            tx_power=self.tx_power_dbm,
            frequency_mhz=self.frequency_mhz,
            sensitivity=self.sensitivity_dbm,
            antenna_gain_tx=self.antenna_gain_tx,
            antenna_gain_rx=self.antenna_gain_rx,
            system_loss=self.system_loss,
        )


class SurveyLocation(models.Model):
    name = models.CharField(max_length=100, unique=True, verbose_name='Location id')
    access_point = models.ForeignKey(
        AccessPoint, on_delete=models.CASCADE, related_name='locations', verbose_name='Access point'
    )
    description = models.TextField(blank=True)
    created_at = models.DateTimeField(auto_now_add=True, verbose_name='Created at')

    class Meta:
        db_table = 'site_survey_location'
        ordering = ['id']
        verbose_name = 'Survey location'
        verbose_name_plural = 'Survey locations'

    def __str__(self):
        return self.name

    @property
    def location_id(self):
        return self.name

    @property
    def samples(self):
        return [Sample(m.distance_m, m.rssi_dbm) for m in self.measurements.all()]

    def to_survey(self):
        return Survey(location_id=self.name, samples=self.samples, ap=self.access_point.to_config())


class Measurement(models.Model):
    location = models.ForeignKey(
        SurveyLocation, on_delete=models.CASCADE, related_name='measurements', verbose_name='Location'
    )
    distance_m = models.FloatField(verbose_name='Distance (m)')
    rssi_dbm = models.FloatField(verbose_name='RSSI (dBm)')
    created_at = models.DateTimeField(auto_now_add=True, verbose_name='Created at')

    class Meta:
        db_table = 'site_survey_measurement'
        ordering = ['id']
        verbose_name = 'Measurement'
        verbose_name_plural = 'Measurements'
        constraints = [
            models.CheckConstraint(condition=models.Q(distance_m__gt=0), name='measurement_distance_positive')
        ]

    def __str__(self):
        return f'{self.location.name}: {self.rssi_dbm} dBm at {self.distance_m} m'


class PathLossFit(models.Model):
    location = models.OneToOneField(
        SurveyLocation, on_delete=models.CASCADE, related_name='fit', verbose_name='Location'
    )
    pl_d0_db = models.FloatField(verbose_name='PL(d0) (dB)')
    d0_m = models.FloatField(verbose_name='Reference distance (m)')
    n = models.FloatField(verbose_name='Path loss exponent')
    sigma_db = models.FloatField(verbose_name='Shadowing deviation (dB)')
    r_squared = models.FloatField()
    num_samples = models.PositiveIntegerField()
    fitted_at = models.DateTimeField(auto_now=True, verbose_name='Fitted at')

    class Meta:
        db_table = 'site_survey_path_loss_fit'
        ordering = ['location__id']
        verbose_name = 'Path loss fit'
        verbose_name_plural = 'Path loss fits'

    def __str__(self):
        return f'{self.location.name}: n={self.n:.2f}, sigma={self.sigma_db:.2f} dB'

    @classmethod
    def store(cls, location, result):
        fit, _ = cls.objects.update_or_create(
            location=location,
            defaults={
                'pl_d0_db': result.model.pl_d0_db,
                'd0_m': result.model.d0,
                'n': result.model.n,
                'sigma_db': result.model.sigma_db,
                'r_squared': result.r_squared,
                'num_samples': result.num_samples,
            },
        )
        return fit

    def to_model(self):
        return LogDistanceModel(pl_d0_db=self.pl_d0_db, d0=self.d0_m, n=self.n, sigma_db=self.sigma_db)
