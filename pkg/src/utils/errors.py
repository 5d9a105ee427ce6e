"""
Error types raised by the computation stages.
"""
from typing import Optional


class LiKeiperError(ValueError):
    """Base error; `stage` names the pipeline stage that failed"""

    stage = "computation"

    def __init__(self, message: str, stage: Optional[str] = None):
        super().__init__(message)
        if stage is not None:
            self.stage = stage


class PrecisionError(LiKeiperError):
    stage = "precision"


class SeriesMismatchError(LiKeiperError):
    stage = "series"


class SeriesDomainError(LiKeiperError):
    stage = "series"


class BernoulliRangeError(LiKeiperError):
    stage = "bernoulli"


class StieltjesPrecisionError(LiKeiperError):
    """Euler-Maclaurin could not reach the target under its caps"""

    stage = "stieltjes"

    def __init__(self, message: str, achievable_digits: int, stage: Optional[str] = None):
        super().__init__(message, stage=stage)
        self.achievable_digits = achievable_digits


class ReferenceTableError(LiKeiperError):
    stage = "reference"


class SequenceRangeError(LiKeiperError):
    stage = "sequence"


class PlotError(LiKeiperError):
    stage = "plot"
