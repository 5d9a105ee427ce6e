"""
Configuration settings for the application.
"""
import os
import logging
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


@dataclass
class Settings:
    """Application settings and configuration"""

    def __init__(self):
        """Initialize settings from environment variables"""
        # Load environment variables
        load_dotenv()

        # Precision settings (the published runs used 20 digits up to n=30)
        self.DIGITS: int = self._get_env_int('LIKEIPER_DIGITS', 20)
        self.GUARD_DIGITS: int = self._get_env_int('LIKEIPER_GUARD_DIGITS', 15)
        self.N_MAX: int = self._get_env_int('LIKEIPER_N_MAX', 30)

        # Caps on the Stieltjes machinery
        self.BERNOULLI_CAP: int = self._get_env_int('LIKEIPER_BERNOULLI_CAP', 60)
        self.STIELTJES_CAP: int = self._get_env_int('LIKEIPER_STIELTJES_CAP', 64)

        # Euler-Maclaurin parameters
        self.EM_CUTOFF_FACTOR: int = self._get_env_int(
            'LIKEIPER_EM_CUTOFF_FACTOR', 10)
        self.EM_MAX_TERMS: int = self._get_env_int('LIKEIPER_EM_MAX_TERMS', 30)
        self.EM_MAX_CUTOFF: int = self._get_env_int(
            'LIKEIPER_EM_MAX_CUTOFF', 20000)

        # Cross-check computed constants against the reference file when it exists
        self.VALIDATE_REFERENCE: bool = self._get_env_bool(
            'LIKEIPER_VALIDATE_REFERENCE', False)

        # Storage settings
        self.REFERENCE_TABLE: str = self._get_env(
            'LIKEIPER_REFERENCE_TABLE',
            os.path.join(PROJECT_ROOT, 'data', 'stieltjes_reference.txt'))
        self.LOG_LEVEL: str = self._get_env('LIKEIPER_LOG_LEVEL', 'WARNING')

        # Validate settings
        self._validate_settings()

    def _get_env(self, key: str, default: Optional[str] = None) -> str:
        """
        Get environment variable with validation.

        Args:
            key: Environment variable key
            default: Default value if not found

        Returns:
            str: Environment variable value

        Raises:
            ValueError: If required variable is missing
        """
        value = os.getenv(key, default)
        if value is None:
            error_msg = f"Missing required environment variable: {key}"
            logger.error(error_msg)
            raise ValueError(error_msg)
        return value

    def _get_env_bool(self, key: str, default: bool) -> bool:
        """
        Get boolean environment variable.

        Args:
            key: Environment variable key
            default: Default value

        Returns:
            bool: Environment variable value
        """
        value = os.getenv(key, str(default)).lower()
        return value in ('true', '1', 'yes', 'y', 't')

    def _get_env_int(self, key: str, default: int) -> int:
        """
        Get integer environment variable.

        Args:
            key: Environment variable key
            default: Default value

        Returns:
            int: Environment variable value
        """
        try:
            return int(os.getenv(key, str(default)))
        except ValueError:
            logger.warning(
                f"Invalid integer value for {key}, using default: {default}")
            return default

    def _validate_settings(self) -> None:
        """
        Validate all settings are properly configured.

        Raises:
            ValueError: If validation fails
        """
        floors = [
            ('LIKEIPER_DIGITS', self.DIGITS, 6),
            ('LIKEIPER_GUARD_DIGITS', self.GUARD_DIGITS, 10),
            ('LIKEIPER_N_MAX', self.N_MAX, 1),
            ('LIKEIPER_BERNOULLI_CAP', self.BERNOULLI_CAP, 4),
            ('LIKEIPER_STIELTJES_CAP', self.STIELTJES_CAP, 1),
            ('LIKEIPER_EM_CUTOFF_FACTOR', self.EM_CUTOFF_FACTOR, 1),
            ('LIKEIPER_EM_MAX_TERMS', self.EM_MAX_TERMS, 1),
        ]

        for name, value, floor in floors:
            if value < floor:
                error_msg = f"Setting {name}={value} is below its minimum {floor}"
                logger.error(error_msg)
                raise ValueError(error_msg)

        # Each correction term j consumes B_2j
        if 2 * self.EM_MAX_TERMS > self.BERNOULLI_CAP:
            logger.warning(
                f"LIKEIPER_EM_MAX_TERMS={self.EM_MAX_TERMS} needs Bernoulli numbers "
                f"beyond the cap {self.BERNOULLI_CAP}; limiting to {self.BERNOULLI_CAP // 2}")
            self.EM_MAX_TERMS = self.BERNOULLI_CAP // 2

    def get_precision_config(self) -> dict:
        """
        Get precision configuration dictionary.

        Returns:
            dict: Precision configuration
        """
        return {
            'requested_digits': self.DIGITS,
            'guard_digits': self.GUARD_DIGITS,
        }

    def get_euler_maclaurin_config(self) -> dict:
        """
        Get Euler-Maclaurin configuration dictionary.

        Returns:
            dict: Euler-Maclaurin configuration
        """
        return {
            'cutoff_factor': self.EM_CUTOFF_FACTOR,
            'max_terms': self.EM_MAX_TERMS,
            'max_cutoff': self.EM_MAX_CUTOFF,
        }
