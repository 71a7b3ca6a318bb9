"""
starcover - Exporters Module
SVG drawings of point sets and coverings, and CSV bench reports
"""

from .bench import BenchCase, BenchRow, growth_exponents, plan, run_bench, run_case, to_csv, write_csv
from .svg import SvgCanvas, render_svg, write_svg

__all__ = [
    "BenchCase",
    "BenchRow",
    "growth_exponents",
    "plan",
    "run_bench",
    "run_case",
    "to_csv",
    "write_csv",
    "SvgCanvas",
    "render_svg",
    "write_svg",
]
