"""mtcdef: exact modular tensor categories with surface defects"""

__version__ = "1.0.0"
