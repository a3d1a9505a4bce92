import django.core.validators
import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='AccessPoint',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(max_length=100, unique=True, verbose_name='AP name')),
                ('tx_power_dbm', models.FloatField(default=23.0, verbose_name='Transmit power (dBm)')),
                ('frequency_mhz', models.FloatField(default=2432.0, validators=[django.core.validators.MinValueValidator(0.001)], verbose_name='Frequency (MHz)')),
                ('sensitivity_dbm', models.FloatField(blank=True, null=True, verbose_name='Receiver sensitivity (dBm)')),
                ('antenna_gain_tx', models.FloatField(default=1.0, validators=[django.core.validators.MinValueValidator(1e-09)])),
                ('antenna_gain_rx', models.FloatField(default=1.0, validators=[django.core.validators.MinValueValidator(1e-09)])),
                ('system_loss', models.FloatField(default=1.0, validators=[django.core.validators.MinValueValidator(1.0)])),
            ],
            options={
                'verbose_name': 'Access point',
                'verbose_name_plural': 'Access points',
                'db_table': 'site_survey_access_point',
                'ordering': ['name'],
            },
        ),
        migrations.CreateModel(
            name='SurveyLocation',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(max_length=100, unique=True, verbose_name='Location id')),
                ('description', models.TextField(blank=True)),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created at')),
                ('access_point', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='locations', to='site_survey.accesspoint', verbose_name='Access point')),
            ],
            options={
                'verbose_name': 'Survey location',
                'verbose_name_plural': 'Survey locations',
                'db_table': 'site_survey_location',
                'ordering': ['id'],
            },
        ),
        migrations.CreateModel(
            name='Measurement',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('distance_m', models.FloatField(verbose_name='Distance (m)')),
                ('rssi_dbm', models.FloatField(verbose_name='RSSI (dBm)')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created at')),
                ('location', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='measurements', to='site_survey.surveylocation', verbose_name='Location')),
            ],
            options={
                'verbose_name': 'Measurement',
                'verbose_name_plural': 'Measurements',
                'db_table': 'site_survey_measurement',
                'ordering': ['id'],
                'constraints': [models.CheckConstraint(condition=models.Q(('distance_m__gt', 0)), name='measurement_distance_positive')],
            },
        ),
        migrations.CreateModel(
            name='PathLossFit',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('pl_d0_db', models.FloatField(verbose_name='PL(d0) (dB)')),
                ('d0_m', models.FloatField(verbose_name='Reference distance (m)')),
                ('n', models.FloatField(verbose_name='Path loss exponent')),
                ('sigma_db', models.FloatField(verbose_name='Shadowing deviation (dB)')),
                ('r_squared', models.FloatField()),
                ('num_samples', models.PositiveIntegerField()),
                ('fitted_at', models.DateTimeField(auto_now=True, verbose_name='Fitted at')),
                ('location', models.OneToOneField(on_delete=django.db.models.deletion.CASCADE, related_name='fit', to='site_survey.surveylocation', verbose_name='Location')),
            ],
            options={
                'verbose_name': 'Path loss fit',
                'verbose_name_plural': 'Path loss fits',
                'db_table': 'site_survey_path_loss_fit',
                'ordering': ['location__id'],
            },
        ),
    ]
