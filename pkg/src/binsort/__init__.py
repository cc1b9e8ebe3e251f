"""Smart trash bin toolkit: imaging pipeline, sorting device, fleet telemetry."""

__version__ = "0.1.0"
