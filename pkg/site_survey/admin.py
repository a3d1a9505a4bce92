from django.contrib import admin

from .conf import default_d0
from .models import AccessPoint, SurveyLocation, Measurement, PathLossFit
from .radio import SurveyError, fit_log_distance


@admin.register(AccessPoint)
class AccessPointAdmin(admin.ModelAdmin):
    list_display = ('name', 'tx_power_dbm', 'frequency_mhz', 'sensitivity_dbm')
    search_fields = ('name',)
    fieldsets = (
        ('main info', {
            'fields': ('name', 'tx_power_dbm', 'frequency_mhz', 'sensitivity_dbm')
        }),
        ('Free-space parameters', {
            'fields': ('antenna_gain_tx', 'antenna_gain_rx', 'system_loss')
        }),
    )


class MeasurementInline(admin.TabularInline):
    model = Measurement
    extra = 1


@admin.register(SurveyLocation)
class SurveyLocationAdmin(admin.ModelAdmin):
    list_display = ('name', 'access_point', 'exponent', 'created_at')
    list_filter = ('access_point', 'created_at')
    search_fields = ('name', 'description')
    ordering = ('name',)
    list_per_page = 20
    inlines = [MeasurementInline]

    def exponent(self, obj):
        fit = getattr(obj, 'fit', None)
        return f'{fit.n:.2f}' if fit else '-'

    exponent.short_description = 'n'

    def refit(self, request, queryset):
        for location in queryset:
            try:
                PathLossFit.store(location, fit_log_distance(location.to_survey(), default_d0()))
            except SurveyError as exc:
                self.message_user(request, f'{location.name}: {exc}', level='warning')

    refit.short_description = 'Fit path loss model'
    actions = [refit]


@admin.register(PathLossFit)
class PathLossFitAdmin(admin.ModelAdmin):
    list_display = ('location', 'n', 'sigma_db', 'pl_d0_db', 'r_squared', 'num_samples', 'fitted_at')
    ordering = ('location__name',)
    list_per_page = 20
