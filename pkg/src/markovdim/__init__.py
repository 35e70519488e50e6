"""Certified numerics for the Markov and Lagrange spectra.

Exact continued fraction words, quadratic surd arithmetic, admissible word
enumeration, pressure-equation dimension brackets and the classical exact
landmarks, all with directed rounding or exact integer arithmetic.
"""

from .admissible import (AdmissibleFamily, PruneVerdict, certify_under, count_table,
                         enumerate_admissible, prune_over)
from .admissible import enumerate_admissible as enumerate
from .cli import RunConfig, main, parse_blocks, parse_value
from .dimension import (DimensionBracket, ModulusBound, TowerExpr, cantor_bracket,
                        d_lower, d_upper, modulus_delta_lower, pressure_root,
                        spectrum_dimension, tower, tower_compare)
from .errors import (BracketCrossingError, ComparisonUnresolved, DomainError,
                     FieldMixError, ResourceCapError)
from .facts import (ExactOrderPlan, ExactOrderReport, HallCoverage, MarkovTriple,
                    exact_order_verify, exact_order_word, freiman_constant,
                    hall_coverage, hall_decompose, jarnik_lower,
                    markov_spectrum_below_3, markov_triples)
from .surds import (QuadraticSurd, as_surd, decimal_bounds, floor_of,
                    sign_of_combination, surd_compare, surd_from_quadratic)
from .symbolic import (PeriodicWord, WindowBound, alphabet_sum_bound, digit_cap,
                       lagrange_value_eventually_periodic, markov_value_periodic,
                       nonessentially_affine_certificate, periodic_value,
                       tail_extremes, window_bounds)
from .words import (ConvergentMatrix, CylinderInterval, Mobius, Word, cf_value,
                    convergents, cylinder, derivative_range, evaluate_with_tail,
                    matrix_for, mobius_branch, r_floor, size, size_inverse,
                    transpose)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleFamily", "BracketCrossingError", "ComparisonUnresolved",
    "ConvergentMatrix", "CylinderInterval", "DimensionBracket", "DomainError",
    "ExactOrderPlan", "ExactOrderReport", "FieldMixError", "HallCoverage",
    "MarkovTriple", "Mobius", "ModulusBound", "PeriodicWord", "PruneVerdict",
    "QuadraticSurd", "ResourceCapError", "RunConfig", "TowerExpr", "WindowBound",
    "Word", "alphabet_sum_bound", "as_surd", "cantor_bracket", "certify_under",
    "cf_value", "convergents", "count_table", "cylinder", "d_lower", "d_upper",
    "decimal_bounds", "derivative_range", "digit_cap", "enumerate",
    "enumerate_admissible", "evaluate_with_tail", "exact_order_verify",
    "exact_order_word", "floor_of", "freiman_constant", "hall_coverage",
    "hall_decompose", "jarnik_lower", "lagrange_value_eventually_periodic",
    "main", "markov_spectrum_below_3", "markov_triples", "markov_value_periodic",
    "matrix_for", "mobius_branch", "modulus_delta_lower",
    "nonessentially_affine_certificate", "parse_blocks", "parse_value",
    "periodic_value", "pressure_root", "prune_over", "r_floor", "sign_of_combination",
    "size", "size_inverse", "spectrum_dimension", "surd_compare",
    "surd_from_quadratic", "tail_extremes", "tower", "tower_compare", "transpose",
    "window_bounds",
]
