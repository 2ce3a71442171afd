"""Exact computation of the space of hypersurfaces singular along a curve.

Given a homogeneous radical ideal I of S = k[x_0..x_n] cutting out a
reduced curve C, the package computes degree by degree the forms that are
singular along C, the ideal square, the degree-l piece of Omega_C, their
Hilbert polynomials, and the invariants d, p_a and g~ + mu(C).
"""

from .field import DEFAULT_PRIME, Field, ZeroInverse
from .invariants import (
    CheckReport,
    CurveInvariants,
    DomainError,
    HilbertRecord,
    LeadingMismatch,
    NoStabilization,
    NotACurve,
    TheoremViolation,
    analyze_curve,
    beta_bruteforce,
    beta_closed_form,
    curve_invariants,
    default_window,
    hilbert_data,
    lci_check,
    mu_given_genus,
    mu_plus_gtilde,
    nesting_check,
    omega_hilbert,
    quotient_hilbert,
    verify_codim_formula,
    verify_plane_theorem,
)
from .linalg import DimensionMismatch, Subspace, kernel_basis, rank, rref, subspace_contains
from .parser import PolynomialSyntaxError, UnknownVariable, parse_polynomial
from .polynomial import (
    IdealPresentation,
    NonHomogeneousGenerator,
    Polynomial,
    monomials_of_degree,
    multiply,
    partial_derivative,
    render,
)
from .slices import (
    CharDividesDegree,
    DegreeSlice,
    euler_kernel,
    ideal_slice,
    ideal_square_slice,
    omega_slice_dim,
    quotient_slice,
    singular_slice,
)

__version__ = "0.1.0"
