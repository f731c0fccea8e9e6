"""Exact solutions of a x^2 - b y^2 + c = 0 and general binary quadratic equations."""

from .arith import QuadraticNumber, squarefree_core
from .automorphism import Automorphism, build_automorphism, cf_sqrt, pell_fundamental
from .classifier import classify, solve_definite, solve_square_case
from .closedform import ClosedForm, derive_closed_form, eval_closed_form
from .general import Family, GeneralSolutionSet, solve_general
from .genquad import AffineTransform, Reduction, reduce
from .model import Classification, GeneralQuadratic, Kind, PellEquation, Solution
from .oracle import brute_force, brute_force_general
from .orbits import (SolutionOrbit, SolutionSet, descend, enumerate_orbit, fundamental_search,
                     solve, verify_completeness)

__all__ = [
    "AffineTransform", "Automorphism", "Classification", "ClosedForm", "Family",
    "GeneralQuadratic", "GeneralSolutionSet", "Kind", "PellEquation", "QuadraticNumber",
    "Reduction", "Solution", "SolutionOrbit", "SolutionSet", "brute_force",
    "brute_force_general", "build_automorphism", "cf_sqrt", "classify", "derive_closed_form",
    "descend", "enumerate_orbit", "eval_closed_form", "fundamental_search", "pell_fundamental",
    "reduce", "solve", "solve_definite", "solve_general", "solve_square_case",
    "squarefree_core", "verify_completeness",
]
