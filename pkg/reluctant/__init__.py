"""Reluctant sorting laboratory"""

__version__ = "1.0.0"
