"""Exact characters of reductive groups at finite-order torus elements.

The fixed-point side (``fixedlocus``, ``lefschetz``) and the weight-multiplicity
side (``oracle``) are independent routes to the same numbers.
"""
from .exactnum import CycNum, EpsSeries, NPoly, Rat, cyclotomic_polynomial
from .fixedlocus import (FixedComponent, compute_YS, component_data, fixed_components,
                         orbit_partition_crosscheck, verify_counting)
from .jobs import Job, JobError, fit_polynomial, load_job, parse_job, run_job
from .lefschetz import (CharPolynomial, LocalizationContext, character_via_lefschetz,
                        component_polynomial, degree_integral, degree_report,
                        leading_coefficient, localization_context, total_polynomial)
from .oracle import char_at, char_at_regular, dominant_character, weyl_dim
from .rootdata import (CapExceeded, ParabolicSpec, RootDatum, WeylElement, build_root_datum,
                       enumerate_weyl, group, inversion_set, minimal_coset_reps,
                       parabolic_for_lambda)
from .torus import TorsionElement, centralizer, eval_weight, invert, is_regular

__version__ = "0.1.0"
