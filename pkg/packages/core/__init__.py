# Core package - pure algebra: fields, polynomials, Groebner bases, formulas, search, zeta, bounds
