"""OpenTelemetry for verification runs.

Spans wrap whole suites and a counter records each checked cell. Without ``OTEL_EXPORTER_OTLP_ENDPOINT`` the
API objects stay no-ops and nothing is exported.
"""

import os

from opentelemetry import metrics, trace
from opentelemetry.exporter.otlp.proto.grpc.metric_exporter import OTLPMetricExporter
from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter
from opentelemetry.sdk.metrics import MeterProvider
from opentelemetry.sdk.metrics.export import PeriodicExportingMetricReader
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor

from app.logging.logging_config import logger

INSTRUMENTATION_NAME = 'rostlab'
CELL_COUNTER = 'rostlab.cells'


def configure_telemetry(service_name: str = 'rostlab') -> tuple[TracerProvider, MeterProvider] | None:
    """Install OTLP exporters for traces and metrics when an endpoint is configured.

    Args:
        service_name: Value of the ``service.name`` resource attribute.

    Returns:
        The two providers, which the caller shuts down, or None without an endpoint.
    """
    endpoint = os.getenv('OTEL_EXPORTER_OTLP_ENDPOINT')
    if not endpoint:
        logger.debug('No OTLP endpoint, telemetry disabled')
        return None

    resource = Resource.create({'service.name': service_name})
    tracer_provider = TracerProvider(resource=resource)
    tracer_provider.add_span_processor(BatchSpanProcessor(OTLPSpanExporter(endpoint=endpoint, insecure=True)))
    reader = PeriodicExportingMetricReader(OTLPMetricExporter(endpoint=endpoint, insecure=True))
    meter_provider = MeterProvider(resource=resource, metric_readers=[reader])

    trace.set_tracer_provider(tracer_provider)
    metrics.set_meter_provider(meter_provider)
    logger.info('Exporting traces and metrics to {}', endpoint)
    return tracer_provider, meter_provider


def get_tracer() -> trace.Tracer:
    """Tracer for suite spans."""
    return trace.get_tracer(INSTRUMENTATION_NAME)


def get_cell_counter() -> metrics.Counter:
    """Counter of checked verification cells, labelled by suite and outcome."""
    return metrics.get_meter(INSTRUMENTATION_NAME).create_counter(
        CELL_COUNTER, unit='1', description='Verification cells checked'
    )
