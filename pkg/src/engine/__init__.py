"""
Series engine initialization.
"""
from src.engine.precision import PrecisionContext
from src.engine.power_series import PowerSeries

__all__ = ['PrecisionContext', 'PowerSeries']
