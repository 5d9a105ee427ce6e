"""
Main package initialization for the tiny Li-Keiper coefficient toolkit.
"""
from src.config.settings import Settings

# Initialize settings
settings = Settings()

# Version info
__version__ = "1.0.0"
