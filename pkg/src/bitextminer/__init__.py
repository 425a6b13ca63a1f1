"""Parallel-sentence mining from comparable bilingual documents."""

try:
    from ._version import version as __version__
except ImportError:  # pragma: no cover
    __version__ = "0.1.0"
