"""
Services module initialization.
"""
from src.services.bernoulli_service import BernoulliService
from src.services.stieltjes_service import StieltjesService
from src.services.tiny_service import TinyService

__all__ = ['BernoulliService', 'StieltjesService', 'TinyService']
