"""Factorization in monoids equipped with a preorder.

Finite premonoids with unit/quark/irreducible/atom classification and
heights, two generic factorization engines, constructive factorizers for
transformation monoids, symmetric groups and rational orthogonal groups,
and brute-force oracles that check them.
"""
from .core import (Factorization, HeightTable, Premonoid, atoms, factor_into_irreducibles,
                   factor_into_quarks_bounded, height, irreducibles, is_atom, is_irreducible,
                   is_quark, is_unit, quark_bound, quarks, units)
from .factorizers import (cartan_dieudonne_factor, howie_factor, howie_split, normalize,
                          transposition_factor)
from .linear import QMatrix
from .monoids import (FiniteMonoid, TransformationMonoid, divisibility_preorder,
                      full_transformation_monoid, reduced_power_monoid, singular_submonoid,
                      symmetric_group)
from .oracle import OracleResult, SweepReport, min_factorization_length
from .preorder import FinitePreorder, validate_preorder
from .rfix import fix_preorder, rfix_preorder, singular_rfix_premonoid, permutation_rfix_premonoid

__version__ = "0.1.0"
