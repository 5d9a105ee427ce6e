"""
Utility modules for the tiny Li-Keiper coefficient toolkit.
"""
from src.utils.output_utils import OutputUtils
from src.utils.plot_utils import PlotUtils
from src.utils.reference_utils import ReferenceUtils

__all__ = ['OutputUtils', 'PlotUtils', 'ReferenceUtils']
