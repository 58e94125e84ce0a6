"""Filtration growth and the empirical GK dimension of several algebras.

dim V^n counts the span of products of at most n generators; the fitted
exponent estimates the GK dimension.  For the centers, dims are taken from
the degree-bounded center.  When the table is too short for the estimator
to separate the growth rate from periodic effects, it says so instead of
guessing, and the hypothesis verdict becomes "unknown".
"""

from skewpbw import build, center_growth, estimate_gkdim, filtration_dims, hypothesis_check

N = D = 12

CASES = [
    ("quantum_plane", {}),
    ("weyl", {"field": "fp:3"}),
    ("jordan", {}),
    ("usl2_char2", {}),
    ("shift_differential", {}),
    ("quantum_polynomials", {"n": 3}),
]


def fitted(table):
    try:
        est = estimate_gkdim(table)
    except ValueError as exc:
        return f"no estimate ({exc})"
    return f"{est:.3f} (stride {table.stride})"


for name, params in CASES:
    alg = build(name, **params).algebra
    ta = filtration_dims(alg, N)
    tz = center_growth(alg, D)
    print(f"{name}")
    print(f"  dim V^n    : {ta.values()}  -> {fitted(ta)}")
    print(f"  dim Z(A)<=e: {tz.values()}  -> {fitted(tz)}")
    print(f"  hypothesis : {hypothesis_check(alg, N, D).describe()}")

# a short center table for the quantum plane: three periods of growth are not enough
short = center_growth(build("quantum_plane").algebra, 10)
print(f"\nquantum_plane with D=10: {fitted(short)}")
