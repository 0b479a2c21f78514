"""Command-line interface and its expression language."""

from .dsl import build, parse, show
from .main import main

__all__ = ["build", "main", "parse", "show"]
