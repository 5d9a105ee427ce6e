"""
Exact Bernoulli numbers for the Euler-Maclaurin tails.
"""
import logging
import threading
from fractions import Fraction
from math import comb
from typing import List

from src.config.constants import ERROR_MESSAGES
from src.config.settings import Settings
from src.utils.errors import BernoulliRangeError

logger = logging.getLogger(__name__)


class BernoulliService:
    """Memoized B_0..B_K by the recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0 (B_1 = -1/2)"""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.cap: int = settings.BERNOULLI_CAP
        self._values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def bernoulli(self, k: int) -> Fraction:
        """
        Return B_k exactly.

        Args:
            k: Non-negative index, at most the configured cap

        Returns:
            Fraction: B_k

        Raises:
            BernoulliRangeError: If k is negative or above the cap
        """
        if k < 0 or k > self.cap:
            raise BernoulliRangeError(ERROR_MESSAGES["bernoulli_cap"].format(k=k, cap=self.cap))
        values = self._values
        if k < len(values):
            return values[k]
        with self._lock:
            self._extend(k)
            return self._values[k]

    def _extend(self, k: int) -> None:
        values = list(self._values)
        for m in range(len(values), k + 1):
            if m > 1 and m % 2 == 1:
                values.append(Fraction(0))
                continue
            total = sum((comb(m + 1, j) * values[j] for j in range(m)), Fraction(0))
            values.append(-total / (m + 1))
        logger.debug(f"Bernoulli cache extended to B_{k}")
        # Publish the longer list in one assignment so readers never see a partial list
        self._values = values

    def cached(self) -> List[Fraction]:
        return list(self._values)
