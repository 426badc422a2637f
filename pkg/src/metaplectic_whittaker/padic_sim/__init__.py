"""Exact simulator over F_p(t): field arithmetic, Iwasawa decomposition and cell integrals."""
from .field import LaurentElem
from .integrate import cell_measures, closed_form, integrate_cell
from .iwasawa import classify_cell_sl3, f_value, hilbert, iwasawa, psi, psi_lambda, psi_product_formula

__all__ = [
    "LaurentElem", "cell_measures", "classify_cell_sl3", "closed_form", "f_value", "hilbert",
    "integrate_cell", "iwasawa", "psi", "psi_lambda", "psi_product_formula",
]
