"""HTTP face of the package; run with ``uvicorn isoform.service:app``."""

from .app import app

__all__ = ["app"]
