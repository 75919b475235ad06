"""WRT invariants of surgeries on torus knots and their asymptotic expansion."""

__version__ = "0.1.0"
