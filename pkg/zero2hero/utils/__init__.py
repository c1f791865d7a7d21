"""
Utility functions for the command line.
"""

from zero2hero.utils.decorators import handle_errors
from zero2hero.utils.file_manager import FileManager
from zero2hero.utils.logger import get_logger

__all__ = ['FileManager', 'get_logger', 'handle_errors']
