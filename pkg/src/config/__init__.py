"""
Configuration module initialization.
"""
from src.config.settings import Settings

__all__ = ['Settings']
