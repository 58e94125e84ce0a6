import math

import pytest

from skewpbw import (
    BaseRing,
    Field,
    GrowthTable,
    SkewPBWAlgebra,
    build,
    center_growth,
    estimate_gkdim,
    filtration_dims,
    hypothesis_check,
)


def table(f, N=12):
    return GrowthTable([(n, f(n)) for n in range(1, N + 1)])


def binom2(n):
    return math.comb(n + 2, 2)


# -- filtration dims -----------------------------------------------------------------


def test_quantum_plane_filtration():
    A = build("quantum_plane", field="fp:7", q=2).algebra
    assert filtration_dims(A, 6).dims == [(n, binom2(n)) for n in range(1, 7)]


def test_weyl_filtration():
    A = build("weyl", field="fp:3").algebra
    assert filtration_dims(A, 4).values() == [binom2(n) for n in range(1, 5)]


def test_trivial_algebra_filtration():
    A = SkewPBWAlgebra(BaseRing.of_field(Field.prime(5)), [])
    assert filtration_dims(A, 5).values() == [1] * 5


@pytest.mark.parametrize(
    "name,params,count",
    [
        ("quantum_polynomials", {"n": 3}, lambda n: math.comb(n + 3, 3)),
        ("shift_operators", {}, binom2),
        ("weyl", {"n": 2}, lambda n: math.comb(n + 4, 4)),
        ("jordan", {}, binom2),
        ("usl2_char2", {}, lambda n: math.comb(n + 3, 3)),
    ],
)
def test_filtration_matches_standard_monomial_count(name, params, count):
    A = build(name, **params).algebra
    N = 5 if A.n > 3 else 7
    assert filtration_dims(A, N).values() == [count(n) for n in range(1, N + 1)]


@pytest.mark.parametrize("name", ["quantum_plane", "weyl", "jordan", "shift_differential", "skew_poly_extension"])
def test_filtration_growth_bounds(name):
    A = build(name).algebra
    vals = filtration_dims(A, 7).values()
    dim_v = vals[0]
    for a, b in zip(vals, vals[1:]):
        assert a <= b <= a * dim_v


# -- estimator ------------------------------------------------------------------


def test_estimate_examples():
    assert 1.8 <= estimate_gkdim(table(binom2)) <= 2.2
    assert estimate_gkdim(table(lambda n: 7)) == 0
    assert 0.85 <= estimate_gkdim(table(lambda n: n + 1)) <= 1.15


@pytest.mark.parametrize("d", [1, 2, 3])
def test_pure_power_sequences(d):
    assert abs(estimate_gkdim(table(lambda n: n**d)) - d) <= 0.2


@pytest.mark.parametrize("d", [1, 2, 3])
def test_binomial_sequences(d):
    assert abs(estimate_gkdim(table(lambda n: math.comb(n + d, d))) - d) <= 0.2


def test_staircase_sequence():
    # center of a quantum plane with q of order 3: C(floor(e/3)+2, 2)
    t = table(lambda e: binom2(e // 3))
    assert abs(estimate_gkdim(t) - 2) <= 0.2
    assert t.stride == 3


def test_estimate_records_window():
    t = table(binom2)
    estimate_gkdim(t)
    assert t.estimate is not None and t.window is not None


def test_estimate_needs_four_points():
    with pytest.raises(ValueError):
        estimate_gkdim(GrowthTable([(1, 3), (2, 6), (3, 10)]))


# -- center growth and the hypothesis -----------------------------------------------


def test_center_growth_examples():
    A = build("quantum_plane", field="fp:7", q=2).algebra
    g = dict(center_growth(A, 9).dims)
    assert (g[3], g[6], g[9]) == (3, 6, 10)
    Aq = build("quantum_plane", field="q", q=2).algebra
    assert center_growth(Aq, 8).values() == [1] * 8
    comm = build("quantum_plane", field="fp:7", q=1).algebra
    assert center_growth(comm, 4).values() == [binom2(e) for e in range(1, 5)]


def test_center_growth_monotone_in_degree_bound():
    A = build("weyl", field="fp:3").algebra
    small, large = center_growth(A, 6).values(), center_growth(A, 9).values()
    assert large[: len(small)] == small


def test_center_growth_rejects_small_bound():
    with pytest.raises(ValueError):
        center_growth(build("weyl").algebra, 1)


@pytest.mark.parametrize(
    "name,params,holds",
    [
        ("quantum_plane", {"field": "fp:7", "q": 2}, True),
        ("weyl", {"field": "fp:3"}, True),
        ("quantum_plane", {"field": "q", "q": 2}, False),
    ],
)
def test_hypothesis_examples(name, params, holds):
    v = hypothesis_check(build(name, **params).algebra, 12, 12)
    assert v.holds is holds
    assert abs(v.gk_A - 2) <= 0.2
    assert abs(v.gk_Z - (2 if holds else 0)) <= 0.25
    assert "empirical" in v.caveat
    assert v.describe().startswith("holds" if holds else "fails")


def test_hypothesis_describe_text():
    v = hypothesis_check(build("quantum_plane").algebra)
    assert v.describe() == "holds (2 < 2+1)"


def test_hypothesis_rejects_small_bounds():
    with pytest.raises(ValueError):
        hypothesis_check(build("weyl").algebra, 3, 12)


def test_too_few_periods_raises():
    with pytest.raises(ValueError, match="fewer than four periods"):
        estimate_gkdim(table(lambda e: binom2(e // 3), N=10))


def test_poor_fit_raises():
    # center of three generic quantum variables: cubes plus x1*x2^2*x3 and x1^2*x2*x3^2
    dims = [1, 1, 4, 5, 6, 12, 15, 18, 28, 34]
    with pytest.raises(ValueError, match="no stride fits"):
        estimate_gkdim(GrowthTable(list(enumerate(dims, 1))))


def test_short_center_table_gives_unknown_verdict():
    v = hypothesis_check(build("quantum_plane", field="fp:7", q=2).algebra, 12, 10)
    assert v.holds is None
    assert v.describe().startswith("unknown (") and "increase the bound" in v.describe()


def test_unresolved_center_growth_is_never_a_wrong_verdict():
    A = build("quantum_polynomials", field="fp:7", q=2, n=3).algebra
    for D in (8, 10, 12):
        assert hypothesis_check(A, 10, D).holds is not False
