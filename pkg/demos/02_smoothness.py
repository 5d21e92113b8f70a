# %% [markdown]
# # Deciding smoothness with Groebner bases
#
# A quartic is smooth exactly when the ideal of its partials has a
# finite-dimensional quotient.  Here are a few smooth and singular examples.

# %%
from quartic_torsion import Polynomial, parse_polynomial
from quartic_torsion.groebner import quotient_is_finite_dimensional, singular_ideal_basis

X, Y, Z = (Polynomial.variable(v) for v in "XYZ")

examples = {
    "Fermat": parse_polynomial("X^4 + Y^4 + Z^4"),
    "Klein": parse_polynomial("X^3*Y + Y^3*Z + Z^3*X"),
    "cone over 4 points": parse_polynomial("X^4 + Y^4"),
    "double conic": (X**2 + Y**2 + Z**2) ** 2,
    "line + cubic": (X + Y) * (X**3 + Y**3 + Z**3),
}

# %%
for name, f in examples.items():
    gb = singular_ideal_basis(f)
    print(f"{name:20s} smooth={quotient_is_finite_dimensional(gb)!s:5s}  {gb}")
