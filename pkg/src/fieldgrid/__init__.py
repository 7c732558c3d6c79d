"""Manhattan grid norms on Z[i], Z[i]/(m) and F_{p^2}, the quadratic residue
tournament on F_p, and exhaustive checkers for the inequalities relating them."""

from fieldgrid.gaussian import GaussianInt, grid_norm
from fieldgrid.modring import Fp2Elem, Modulus, manhattan_norm, project
from fieldgrid.hermitian import HVector, cs_difference, inner_product, vector_norm
from fieldgrid.order import (
    KustaanheimoCertificate,
    Verdict,
    find_kustaanheimo_prime,
    legendre_is_residue,
    tournament_compare,
)

__all__ = [
    "GaussianInt",
    "grid_norm",
    "Fp2Elem",
    "Modulus",
    "manhattan_norm",
    "project",
    "HVector",
    "cs_difference",
    "inner_product",
    "vector_norm",
    "KustaanheimoCertificate",
    "Verdict",
    "find_kustaanheimo_prime",
    "legendre_is_residue",
    "tournament_compare",
]
