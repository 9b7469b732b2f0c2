"""HTTP service wrapping the compute modules."""

from .app import app, create_app

__all__ = ["app", "create_app"]
