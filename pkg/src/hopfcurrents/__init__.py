"""Finitely supported currents on a Lie group as a differential graded Hopf algebra.

The algebra (U(h) (x) Wedge(h^-))[H] in exact rational arithmetic, its
four-slot presentation, its tensor-algebra lift, property suites and a CLI.
"""

from .bimodule import FourSlotElement, derived_convolution
from .currents import (
    CurrentElement,
    TensorPower,
    antipode,
    boundary,
    convolve,
    coproduct,
    counit,
    current,
    groupring_convolve,
    smash_product,
    term,
    unit,
)
from .expr import evaluate, parse
from .foundations import AlgebraError, Context, builtin_context
from .tensor_lift import TensorLiftElement, phi

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "Context", "builtin_context", "CurrentElement", "TensorPower", "current", "term", "unit",
    "boundary", "coproduct", "counit", "convolve", "antipode", "groupring_convolve", "smash_product",
    "FourSlotElement", "derived_convolution", "TensorLiftElement", "phi", "evaluate", "parse",
]
