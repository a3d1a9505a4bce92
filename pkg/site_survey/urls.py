from django.urls import path, include
from rest_framework.routers import DefaultRouter

from .views import AccessPointViewSet, SurveyLocationViewSet, MeasurementListCreateView, PredictView

router = DefaultRouter()
router.register(r'access-points', AccessPointViewSet, basename='access-point')
router.register(r'locations', SurveyLocationViewSet, basename='location')

urlpatterns = [
    path('', include(router.urls)),
    path('measurements/', MeasurementListCreateView.as_view(), name='measurement-list-create'),
    path('predict/', PredictView.as_view(), name='predict'),
]
