"""Metaplectic Whittaker functions as crystal sums, with Gelfand-Tsetlin and p-adic cross-checks."""
from .algebra import CoefElem, GaussNumeric, XPolynomial, gauss_numeric, gauss_token, specialize
from .crystal import enumerate_bzl, gk_lhs, gk_rhs, gkw, weight_w, whittaker_sum
from .errors import (InvalidArgument, InvalidContext, InvalidWord, ResourceLimit,
                     UnsupportedConfiguration)
from .gt import compare_crystal_gt, enumerate_gt, gt_ppart
from .lusztig import BzlTuple, local_transition, transition
from .roots import CartanCase, ReducedWord, RootSystemA, gt_word, kostant_partition

__version__ = "0.1.0"

__all__ = [
    "BzlTuple", "CartanCase", "CoefElem", "GaussNumeric", "InvalidArgument", "InvalidContext",
    "InvalidWord", "ReducedWord", "ResourceLimit", "RootSystemA", "UnsupportedConfiguration",
    "XPolynomial", "compare_crystal_gt", "enumerate_bzl", "enumerate_gt", "gauss_numeric",
    "gauss_token", "gk_lhs", "gk_rhs", "gkw", "gt_ppart", "gt_word", "kostant_partition",
    "local_transition", "specialize", "transition", "weight_w", "whittaker_sum",
]
