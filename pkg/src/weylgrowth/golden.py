"""Frozen reference values used by ``verify-paper`` and the acceptance suite.

The growth coefficients are the known reference series for the
over-extended HA algebras; the factor lists are the known factored forms
of the polynomial quotients P(finite)/P(hyperbolic), stored as coefficient
tuples and expanded on demand.
"""

# dim W^i for HA3, word lengths 0..27.
HA3_GROWTH_REFERENCE = (
    1, 5, 15, 36, 75, 142, 252, 428, 704, 1132, 1791, 2800, 4339, 6680,
    10234, 15621, 23778, 36119, 54779, 82981, 125590, 189949, 287142,
    433899, 655471, 989971, 1494923, 2257149,
)

# Factored forms of the quotient polynomials, one coefficient tuple per
# factor.  Quotient degree in the key suffix.
QUOTIENT_FACTORS = {
    # P(D5) / growth(HA3): degree 19, (1 + t^4) times a degree-15 factor.
    ("HA3", "D5"): (
        (1, 0, 0, 0, 1),
        (1, 0, -1, -1, -2, -1, 0, 1, 3, 2, 2, 1, -1, -1, -1, -1),
    ),
    # P(D4) / growth(HA2): degree 11, (1-t)(1+t)^3(1+t^2)(1-t+t^2)(1-t-t^3).
    ("HA2", "D4"): (
        (1, -1),
        (1, 1), (1, 1), (1, 1),
        (1, 0, 1),
        (1, -1, 1),
        (1, -1, 0, -1),
    ),
    # P(A3) / growth(HA2): degree 5, (1-t^2)(1-t-t^3).
    ("HA2", "A3"): (
        (1, 0, -1),
        (1, -1, 0, -1),
    ),
    # P(A4) / growth(HA2): degree 9, (1-t^2)(1-t-t^3)(1+t+t^2+t^3+t^4).
    ("HA2", "A4"): (
        (1, 0, -1),
        (1, -1, 0, -1),
        (1, 1, 1, 1, 1),
    ),
}

# Cyclotomic content of the degree-11 quotient for (HA2, D4):
# (1-t)(1+t)^3(1+t^2)(1-t+t^2) extracted, residual 1 - t - t^3.
HA2_D4_CYCLOTOMIC_FACTORS = ((1, 1), (2, 3), (4, 1), (6, 1))
HA2_D4_CYCLOTOMIC_RESIDUAL = (1, -1, 0, -1)

# Candidates for which no finite polynomial quotient exists.
NON_TERMINATING_CANDIDATES = (("HA3", "A4"), ("HA3", "A5"))
