"""
CLI module initialization.
"""
from src.cli.commands import CommandHandler
from src.cli.parser import RunConfig

__all__ = ['CommandHandler', 'RunConfig']
