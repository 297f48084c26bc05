"""Exact computations in bracket algebras, Nichols algebras and
Grothendieck calculus on flag varieties."""

from .core import AlgebraElement, AlgebraError, Gen, GradedQuotient, bar, letter, pair, parse_gen, qparam, single
from .presentations import Presentation, get_presentation, presentation_A, presentation_B, presentation_D, presentation_G2

__version__ = "0.1.0"
