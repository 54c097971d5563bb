#! /usr/bin/env python3
"""The exact series kernel on its own.

Coefficients of rational generating functions are read off by expanding
each factor only as far as needed.  Nothing is ever rounded.
"""
from parahiggs.series import T, X, Y, Factor, extract_coeff
from parahiggs.strata import macdonald_sym

# =============================================================================
# Symmetric products of a genus-g curve:  [x^m] (1+xt)^2g / ((1-x)(1-xt^2))

for g in range(4):
    print(f"g={g}:", [str(macdonald_sym(g, m)) for m in range(3)])

# =============================================================================
# Monomial prefactors just move the index.  x^-2 times the series above
# asks for the x^3 coefficient of the rest.

fs = [Factor(X**-2), Factor(1 + T * X, 4), Factor(1 - X, -1), Factor(1 - T**2 * X, -1)]
assert extract_coeff(fs, 1) == macdonald_sym(2, 3)

# Two variables, with a numerator that mixes them.
fs = [Factor(1 + T**2 * X * Y), Factor(1 - X, -1), Factor(1 - T**4 * Y, -1)]
print("[x^2 y^2]:", extract_coeff(fs, 2, 2))

# Denominators in t alone are divided out exactly at the end.
fs = [Factor((1 + T) ** 3), Factor(1 + T, -1), Factor(1 - X, -1)]
print("[x^5]:", extract_coeff(fs, 5))
