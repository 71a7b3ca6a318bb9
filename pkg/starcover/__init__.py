"""
starcover: non-crossing K_{1,3} star coverings of bicolored planar point sets.
"""

__version__ = "0.3.0"
