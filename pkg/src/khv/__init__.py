"""Khovanov homology ranks and the two-variable polynomials v_n(K)(t, x)."""

from .diagram import Crossing, Diagram, mirror, parse_pd, writhe

__all__ = ["Crossing", "Diagram", "mirror", "parse_pd", "writhe"]
