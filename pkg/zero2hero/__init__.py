"""
zero2hero: rewrite every equation of a LaTeX document into a complicated-looking
but value-equivalent form.
"""

__version__ = '1.0.0'
