"""Framed surface braid groups: presentations, element arithmetic, maps and audits."""

__version__ = "0.1.0"
