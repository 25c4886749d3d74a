"""Lazyroute CLI package for routing circuits, generating benchmarks and comparing methods."""

__version__ = "0.0.1"
