"""Moduli n whose multiplication table has 1's only on the diagonal."""

from .errors import DomainError, Inconclusive, RangeError, SizeError, TheoremViolation
from .modring import ResidueRing, make_ring
from .primes import DirichletQuery, PrimeTable, sieve
from .proofs import ProofVerdict
from .tables_cubes import CubeReport, DiagonalReport
from .unit_group import AbelianGroupStructure, Factorization

__all__ = [
    "AbelianGroupStructure",
    "CubeReport",
    "DiagonalReport",
    "DirichletQuery",
    "DomainError",
    "Factorization",
    "Inconclusive",
    "PrimeTable",
    "ProofVerdict",
    "RangeError",
    "ResidueRing",
    "SizeError",
    "TheoremViolation",
    "make_ring",
    "sieve",
]

__version__ = "0.1.0"
