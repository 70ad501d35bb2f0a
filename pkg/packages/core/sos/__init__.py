"""Sums-of-squares formulas: the defining ideal, explicit formulas and the classical catalog."""
from packages.core.sos.catalog import CATALOG_SIZES, catalog, structure_constants
from packages.core.sos.existence import exists_over
from packages.core.sos.formula import (
    SosFormula,
    expansion_residual,
    restrict_formula,
    vanishes_on_ideal,
    verify_formula,
)
from packages.core.sos.ideal import FAMILIES, SosIdealSpec, SosType, gen_sos_ideal, sos_ring
from packages.core.sos.reduction import reduce_formula_mod_p

__all__ = [
    "CATALOG_SIZES",
    "FAMILIES",
    "SosFormula",
    "SosIdealSpec",
    "SosType",
    "catalog",
    "exists_over",
    "expansion_residual",
    "gen_sos_ideal",
    "reduce_formula_mod_p",
    "restrict_formula",
    "sos_ring",
    "structure_constants",
    "vanishes_on_ideal",
    "verify_formula",
]
