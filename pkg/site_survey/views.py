import logging

from django.db.models import Count
from django_filters.rest_framework import DjangoFilterBackend
from rest_framework import filters, permissions, status
from rest_framework.decorators import action
from rest_framework.generics import ListCreateAPIView
from rest_framework.response import Response
from rest_framework.views import APIView
from rest_framework.viewsets import ModelViewSet

from .conf import default_d0, default_margin_db, default_region_table
from .models import AccessPoint, SurveyLocation, Measurement, PathLossFit
from .paginator import MeasurementPagination
from .radio import LogDistanceModel, SurveyError, classify_rssi, fit_log_distance, plan_surveys, predict_rssi
from .serializers import (
    AccessPointSerializer, SurveyLocationSerializer, MeasurementSerializer, PathLossFitSerializer,
    FitRequestSerializer, PlanQuerySerializer, PlanEntrySerializer, PredictRequestSerializer,
)

logger = logging.getLogger(__name__)


def survey_error_response(exc):
    return Response({'detail': str(exc)}, status=status.HTTP_400_BAD_REQUEST)


class AccessPointViewSet(ModelViewSet):
    queryset = AccessPoint.objects.all()
    serializer_class = AccessPointSerializer
    filter_backends = [filters.SearchFilter, filters.OrderingFilter]
    search_fields = ['name']
    ordering_fields = ['name', 'tx_power_dbm']


class SurveyLocationViewSet(ModelViewSet):
    queryset = SurveyLocation.objects.select_related('access_point').prefetch_related('measurements')
    serializer_class = SurveyLocationSerializer
    filter_backends = [DjangoFilterBackend, filters.SearchFilter]
    filterset_fields = ['access_point']
    search_fields = ['name', 'description']

    @action(detail=True, methods=['post'], url_path='fit')
    def fit(self, request, pk=None):
        location = self.get_object()
        params = FitRequestSerializer(data=request.data)
        params.is_valid(raise_exception=True)
        d0 = params.validated_data.get('d0_m', default_d0())
        try:
            result = fit_log_distance(location.to_survey(), d0)
        except SurveyError as exc:
            return survey_error_response(exc)

        fit = PathLossFit.store(location, result)
        logger.info('stored fit for %s: n=%.4f sigma=%.4f', location.name, fit.n, fit.sigma_db)
        return Response(PathLossFitSerializer(fit).data, status=status.HTTP_200_OK)

    @action(detail=False, methods=['get'], url_path='plan')
    def plan(self, request):
        params = PlanQuerySerializer(data=request.query_params)
        params.is_valid(raise_exception=True)
        locations = list(self.filter_queryset(self.get_queryset()))
        try:
            report = plan_surveys(
                locations,
                params.validated_data['sensitivity_dbm'],
                params.validated_data.get('margin_db', default_margin_db()),
            )
        except SurveyError as exc:
            return survey_error_response(exc)

        return Response({
            'sensitivity_dbm': report.sensitivity,
            'margin_threshold_db': report.margin_threshold_db,
            'flagged': len(report.flagged),
            'entries': PlanEntrySerializer(report.entries, many=True).data,
        }, status=status.HTTP_200_OK)

    @action(detail=False, methods=['get'], url_path='stats')
    def stats(self, request):
        locations = SurveyLocation.objects.annotate(measurement_count=Count('measurements'))
        return Response({
            'total_locations': locations.count(),
            'total_measurements': Measurement.objects.count(),
            'fitted_locations': PathLossFit.objects.count(),
            'empty_locations': locations.filter(measurement_count=0).count(),
        }, status=status.HTTP_200_OK)


class MeasurementListCreateView(ListCreateAPIView):
    queryset = Measurement.objects.select_related('location')
    serializer_class = MeasurementSerializer
    pagination_class = MeasurementPagination
    filter_backends = [DjangoFilterBackend, filters.OrderingFilter]
    filterset_fields = ['location']
    ordering_fields = ['distance_m', 'rssi_dbm', 'id']
    ordering = ['id']


class PredictView(APIView):
    permission_classes = [permissions.AllowAny]

    def post(self, request):
        params = PredictRequestSerializer(data=request.data)
        params.is_valid(raise_exception=True)
        data = params.validated_data
        try:
            model = LogDistanceModel(pl_d0_db=data['pl_d0_db'], d0=data['d0_m'], n=data['n'])
            rssi = predict_rssi(model, data['tx_power_dbm'], data['distance_m'])
            region = classify_rssi(rssi, default_region_table())
        except SurveyError as exc:
            return survey_error_response(exc)
        return Response({'rssi_dbm': rssi, 'region': region.value}, status=status.HTTP_200_OK)
