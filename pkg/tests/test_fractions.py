import random

import pytest

from skewpbw import (
    CapExceeded,
    NotCentral,
    build,
    central_multiple,
    central_space,
    frac,
    frac_add,
    frac_eq,
    frac_mul,
    frac_neg,
    is_central,
    is_central_fraction,
    membership_characterization,
    membership_roundtrip,
    ore_solve,
    central_fraction_suite,
    random_element,
)

QP = build("quantum_plane", field="fp:7", q=2).algebra
WEYL3 = build("weyl", field="fp:3").algebra
x, y = QP.gens()


# -- Ore solver ------------------------------------------------------------------


def test_ore_solve_examples():
    u, v = ore_solve(x, y)
    assert x * u == y * v and u and v
    assert (u, v) == (y, QP("4*x"))
    rng = random.Random(0)
    a = random_element(QP, rng)
    assert ore_solve(a, QP.one()) == (QP.one(), a)
    assert ore_solve(a, a) == (QP.one(), QP.one())


@pytest.mark.parametrize("alg", [QP, WEYL3], ids=["quantum_plane", "weyl"])
def test_ore_solve_random_pairs(alg):
    rng = random.Random(1)
    for _ in range(30):
        a, s = random_element(alg, rng, 3), random_element(alg, rng, 3)
        u, v = ore_solve(a, s, 12)
        assert u and v and a * u == s * v
        assert u.total_degree() <= 12 and v.total_degree() <= 12


def test_ore_solve_cap_exceeded():
    A = build("quantum_plane", field="q", q=2).algebra
    with pytest.raises(CapExceeded) as err:
        central_multiple(A("x + y"), 4)
    assert err.value.cap == 4


def test_ore_solve_rejects_zero():
    with pytest.raises(ValueError):
        ore_solve(QP.zero(), x)


# -- central multiples ------------------------------------------------------------------


def test_central_multiple_examples():
    assert central_multiple(x) == (QP("x^2"), QP("x^3"))
    p, q = central_multiple(x + y, 8)
    assert (x + y) * p == q and is_central(q) and q
    assert central_multiple(QP.one()) == (QP.one(), QP.one())


@pytest.mark.parametrize("alg", [QP, WEYL3], ids=["quantum_plane", "weyl"])
def test_central_multiple_random(alg):
    rng = random.Random(2)
    for _ in range(15):
        a = random_element(alg, rng, 2)
        p, q = central_multiple(a)
        assert a * p == q and is_central(q) and q


# -- equality and arithmetic -----------------------------------------------------------


def test_frac_eq_examples():
    rng = random.Random(3)
    basis = central_space(QP, 6).basis
    for _ in range(20):
        p = random_element(QP, rng)
        q = rng.choice(basis)
        s = random_element(QP, rng)
        assert frac_eq(frac(p, q), frac(p * s, q * s))
    assert not frac_eq(frac(x), frac(y))
    assert frac_eq(frac(QP.zero(), QP("x^3")), frac(QP.zero()))


def test_frac_arithmetic_examples():
    rng = random.Random(4)
    q = QP("x^3 + y^3")
    for _ in range(10):
        p = random_element(QP, rng)
        assert frac_add(frac(p, q), frac(-p, q)) == frac(QP.zero())
        assert frac_mul(frac(p, q), frac(q)) == frac(p)
    total = frac_add(frac(QP.one(), QP("x^3")), frac(QP.one(), QP("y^3")))
    assert frac_eq(total, frac(QP("y^3 + x^3"), QP("x^3 * y^3")))
    # clear denominators by hand: (1/x^3 + 1/y^3) x^3 y^3 = y^3 + x^3
    cleared = frac_mul(total, frac(QP("x^3*y^3")))
    assert cleared == frac(QP("x^3 + y^3"))


def test_frac_neg_and_operators():
    f = frac(x, QP("y^3"))
    assert frac_neg(f) + f == 0
    assert f * frac(QP("y^3")) == x
    assert f - f == 0


def _central_fracs(alg, rng, basis, k):
    out = []
    for _ in range(k):
        q = QP.zero()
        while not q:
            q = sum((rng.randrange(1, 7) * z for z in rng.sample(basis, 2)), alg.zero())
        out.append(frac(random_element(alg, rng, 2), q))
    return out


def test_central_denominator_field_axioms():
    rng = random.Random(5)
    basis = central_space(QP, 6).basis[1:]
    for _ in range(100):
        f, g, h = _central_fracs(QP, rng, basis, 3)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h
        assert (f + g) + h == f + (g + h)


def test_central_inverse_pair():
    rng = random.Random(6)
    basis = central_space(QP, 6).basis[1:]
    for _ in range(20):
        p, q = rng.choice(basis), rng.choice(basis)
        assert frac(p, q) * frac(q, p) == frac(QP.one())


def test_general_path_agrees_with_fast_path():
    rng = random.Random(7)
    basis = central_space(QP, 6).basis[1:]
    agree = 0
    for _ in range(100):
        f, g = _central_fracs(QP, rng, basis, 2)
        if rng.random() < 0.3:
            s = random_element(QP, rng, 1)
            g = frac(f.num * s, f.den * s)
        fast = frac_eq(f, g)
        assert fast == frac_eq(f, g, general=True)
        agree += fast
    assert agree > 0


def test_general_multiplication_path():
    rng = random.Random(8)
    checked = 0
    for _ in range(20):
        s, b = random_element(QP, rng, 2), random_element(QP, rng, 2)
        f = frac(QP.one(), s)
        if f.central_den:
            continue
        # s^-1 b = b1 s1^-1 must satisfy b s1 = s b1
        prod = f * frac(b)
        assert b * prod.den == s * prod.num
        checked += 1
    assert checked


def test_general_fraction_associativity():
    rng = random.Random(10)
    for _ in range(10):
        f, g, h = (frac(random_element(QP, rng, 1), random_element(QP, rng, 1)) for _ in range(3))
        assert frac_eq((f * g) * h, f * (g * h), cap=16)
        assert frac_eq(f * (g + h), f * g + f * h, cap=16)


# -- centrality of fractions ------------------------------------------------------------


def test_is_central_fraction_examples():
    assert not is_central_fraction(frac(x, y))
    assert is_central_fraction(frac(QP("x^3"), QP("y^3")))
    assert is_central_fraction(frac(QP("5")))
    assert not is_central_fraction(frac(x))


def test_noncentral_denominator_path():
    s = QP("x + y")
    f = frac(QP("x^3") * s, QP("y^3") * s)
    assert not f.central_den
    assert is_central_fraction(f)
    assert not is_central_fraction(frac(x * s, s * y))


def test_membership_examples():
    rng = random.Random(9)
    for _ in range(10):
        s = random_element(QP, rng, 2)
        f = frac(QP("x^3") * s, QP("y^3") * s)
        p, q = membership_characterization(f)
        assert is_central(p) and is_central(q) and q
        assert frac_eq(frac(p, q), frac(QP("x^3"), QP("y^3")))
    with pytest.raises(NotCentral):
        membership_characterization(frac(x))
    assert membership_characterization(frac(QP("5"))) == (QP("5"), QP.one())


# -- suites -------------------------------------------------------------------------


@pytest.mark.parametrize("alg", [QP, WEYL3], ids=["quantum_plane", "weyl"])
def test_central_fraction_suite(alg):
    report = central_fraction_suite(alg, trials=40, seed=0)
    assert report.passed, str(report)
    assert report.seed == 0
    assert report.counts.pop("negative control") == "witnessed"
    assert all(v == 40 for v in report.counts.values())


def test_membership_roundtrip_suite():
    report = membership_roundtrip(QP, trials=30, noncentral_trials=15, seed=1)
    assert report.passed, str(report)
    assert report.counts == {"central round-trips": 30, "rejected non-central": 15}


def test_suite_report_serializes():
    d = central_fraction_suite(QP, trials=2).to_dict()
    assert set(d) == {"name", "passed", "seed", "trials", "counts", "failure"}
