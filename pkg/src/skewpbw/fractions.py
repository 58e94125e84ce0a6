"""Right fractions a * s^-1 and the degree-bounded right Ore solver.

Fractions are never reduced; equality is decided semantically.  Whenever a
denominator is central the cheap formulas apply (a central element commutes
with every fraction), otherwise common right multiples are found by
``ore_solve``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .algebra import Element, IncompatibleAlgebras, SkewPBWAlgebra, random_element
from .center import central_space, is_central
from .linalg import Echelon, sparse_nullspace

DEFAULT_CAP = 12


class CapExceeded(RuntimeError):
    def __init__(self, what: str, cap: int, reached: int):
        super().__init__(f"{what}: no solution with degree <= {cap} (searched up to degree {reached})")
        self.cap = cap
        self.reached = reached


class NotCentral(ValueError):
    pass


# -- linear solvers ----------------------------------------------------------------


def _monos_up_to(alg: SkewPBWAlgebra, d: int) -> list:
    return alg.ext_monomials(d) if d >= 0 else []


def _least_solution(field, kernel: list[dict], ncols: int) -> dict:
    """The kernel vector with the smallest leading (highest) column, scaled so that entry is 1."""
    top = ncols - 1
    ech = Echelon(field)
    for v in kernel:
        ech.add({top - c: x for c, x in v.items()})
    rows = ech.reduced_rows()
    return {top - c: x for c, x in rows[-1].items()}


def _check_pair(a: Element, s: Element):
    if a.algebra != s.algebra:
        raise IncompatibleAlgebras(f"{a.algebra!r} vs {s.algebra!r}")
    if not a or not s:
        raise ValueError("ore_solve needs nonzero a and s")


def ore_solve(a: Element, s: Element, cap: int = DEFAULT_CAP) -> tuple[Element, Element]:
    """Nonzero (u, v) with a*u = s*v, searching the degree D of a*u upward from max(deg a, deg s)."""
    _check_pair(a, s)
    alg = a.algebra
    F = alg.field
    da, ds = a.total_degree(), s.total_degree()
    D = max(da, ds)
    while D - min(da, ds) <= cap:
        umonos = _monos_up_to(alg, D - da)
        vmonos = _monos_up_to(alg, D - ds)
        # columns: v-part first, then u-part, so the leading entry of a solution sits in u
        cols = [("v", m) for m in vmonos] + [("u", m) for m in umonos]
        rows: dict = {}
        for c, (side, m) in enumerate(cols):
            prod = a * alg.ext_element(m) if side == "u" else -(s * alg.ext_element(m))
            for coord, x in prod.coords().items():
                rows.setdefault(coord, {})[c] = x
        kernel = sparse_nullspace(rows.values(), len(cols), F)
        if kernel:
            sol = _least_solution(F, kernel, len(cols))
            u = alg.from_coords({cols[c][1]: x for c, x in sol.items() if cols[c][0] == "u"})
            v = alg.from_coords({cols[c][1]: x for c, x in sol.items() if cols[c][0] == "v"})
            if not u or not v or a * u != s * v:
                raise ArithmeticError("ore_solve produced an invalid witness")
            return u, v
        D += 1
    raise CapExceeded("ore_solve", cap, D - 1 - min(da, ds))


def central_multiple(a: Element, cap: int = DEFAULT_CAP) -> tuple[Element, Element]:
    """(p, q) with a*p = q, q central and nonzero, deg q <= cap.

    At each degree D the image of p -> a*p is intersected with the central
    subspace of degree <= D.  q is scaled to have leading coefficient 1.
    """
    if not a:
        raise ValueError("central_multiple needs a nonzero element")
    alg = a.algebra
    F = alg.field
    da = a.total_degree()
    for D in range(da, cap + 1):
        zbasis = central_space(alg, D).basis
        pmonos = alg.ext_monomials(D - da)
        ncols = len(zbasis) + len(pmonos)
        rows: dict = {}
        for k, z in enumerate(zbasis):
            for coord, x in z.coords().items():
                rows.setdefault(coord, {})[k] = F.neg(x)
        for k, m in enumerate(pmonos, start=len(zbasis)):
            for coord, x in (a * alg.ext_element(m)).coords().items():
                rows.setdefault(coord, {})[k] = x
        kernel = sparse_nullspace(rows.values(), ncols, F)
        if not kernel:
            continue
        sol = _least_solution(F, kernel, ncols)
        p = alg.from_coords({pmonos[k - len(zbasis)]: x for k, x in sol.items() if k >= len(zbasis)})
        q = a * p
        lead = max(q.coords().items(), key=lambda kv: alg.ext_key(kv[0]))[1]
        inv = F.inv(lead)
        p, q = p.scale(inv), q.scale(inv)
        if not p or not q or not is_central(q):
            raise ArithmeticError("central_multiple produced an invalid witness")
        return p, q
    raise CapExceeded("central_multiple", cap, cap)


# -- fractions -----------------------------------------------------------------------


class RightFraction:
    """num * den^-1 in the right ring of fractions."""

    __slots__ = ("num", "den", "central_den", "cap")

    def __init__(self, num: Element, den: Element | None = None, central_den: bool | None = None, cap: int = DEFAULT_CAP):
        if den is None:
            den = num.algebra.one()
        if num.algebra != den.algebra:
            raise IncompatibleAlgebras(f"{num.algebra!r} vs {den.algebra!r}")
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den
        self.central_den = is_central(den) if central_den is None else central_den
        self.cap = cap

    @property
    def algebra(self) -> SkewPBWAlgebra:
        return self.num.algebra

    def _lift(self, other) -> RightFraction:
        if isinstance(other, RightFraction):
            return other
        return RightFraction(self.algebra(other) if not isinstance(other, Element) else other, cap=self.cap)

    def __add__(self, other):
        return frac_add(self, self._lift(other), self.cap)

    __radd__ = __add__

    def __neg__(self):
        return frac_neg(self)

    def __sub__(self, other):
        return frac_add(self, frac_neg(self._lift(other)), self.cap)

    def __mul__(self, other):
        return frac_mul(self, self._lift(other), self.cap)

    def __rmul__(self, other):
        return frac_mul(self._lift(other), self, self.cap)

    def __eq__(self, other):
        if not isinstance(other, (RightFraction, Element, int)):
            return NotImplemented
        return frac_eq(self, self._lift(other), self.cap)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.num

    def __str__(self):
        if self.den == self.algebra.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RightFraction({self})"


def frac(num: Element, den: Element | None = None, cap: int = DEFAULT_CAP) -> RightFraction:
    return RightFraction(num, den, cap=cap)


def frac_eq(f: RightFraction, g: RightFraction, cap: int = DEFAULT_CAP, general: bool = False) -> bool:
    """Semantic equality.  With ``general=True`` the Ore path is used even for central denominators."""
    if not general and (f.central_den or g.central_den):
        # one central denominator commutes past the other inverse
        return f.num * g.den == g.num * f.den
    if f.den == g.den:
        return f.num == g.num
    u, v = ore_solve(f.den, g.den, cap)
    return f.num * u == g.num * v


def frac_neg(f: RightFraction) -> RightFraction:
    return RightFraction(-f.num, f.den, f.central_den, f.cap)


def frac_add(f: RightFraction, g: RightFraction, cap: int = DEFAULT_CAP) -> RightFraction:
    if f.den == g.den:
        return RightFraction(f.num + g.num, f.den, f.central_den, cap)
    if f.central_den and g.central_den:
        return RightFraction(f.num * g.den + g.num * f.den, f.den * g.den, True, cap)
    u, v = ore_solve(f.den, g.den, cap)
    return RightFraction(f.num * u + g.num * v, f.den * u, cap=cap)


def frac_mul(f: RightFraction, g: RightFraction, cap: int = DEFAULT_CAP) -> RightFraction:
    """(a s^-1)(b t^-1).  If s is central this is (a b)(t s)^-1; otherwise s^-1 b = b1 s1^-1."""
    if f.central_den:
        return RightFraction(f.num * g.num, g.den * f.den, True if g.central_den else None, cap)
    if not g.num:
        return RightFraction(g.num, g.den, g.central_den, cap)
    s1, b1 = ore_solve(g.num, f.den, cap)
    return RightFraction(f.num * b1, g.den * s1, cap=cap)


def _commutes_with_generators(f: RightFraction, cap: int, general: bool) -> bool:
    alg = f.algebra
    for g in alg.algebra_generators():
        gf = RightFraction(g, alg.one(), True, cap)
        if not frac_eq(frac_mul(f, gf, cap), frac_mul(gf, f, cap), cap, general=general):
            return False
    return True


def is_central_fraction(f: RightFraction, cap: int = DEFAULT_CAP) -> bool:
    """Whether f commutes with g/1 for every algebra generator g.

    With a central denominator s, a s^-1 commutes with g exactly when a does,
    so the test reduces to is_central(a).
    """
    if f.central_den:
        return is_central(f.num)
    return _commutes_with_generators(f, cap, general=False)


def membership_characterization(f: RightFraction, cap: int = DEFAULT_CAP) -> tuple[Element, Element]:
    """Central (p, q), q != 0, with f = p/q; raises NotCentral if f is not central."""
    if not is_central_fraction(f, cap):
        raise NotCentral(f"{f} is not central")
    c, q = central_multiple(f.den, cap)
    p = f.num * c
    if not is_central(p):
        raise ArithmeticError(f"numerator {p} of a central fraction over central {q} is not central")
    return p, q


# -- property suites -----------------------------------------------------------------


@dataclass
class SuiteReport:
    name: str
    passed: bool
    seed: int
    trials: int
    counts: dict = dc_field(default_factory=dict)
    failure: str | None = None

    def __str__(self):
        verdict = "pass" if self.passed else "FAIL"
        tallies = ", ".join(f"{k}={v}" for k, v in self.counts.items())
        text = f"{self.name}: {verdict} (seed {self.seed}, {self.trials} trials; {tallies})"
        if self.failure:
            text += f"\n  first violation: {self.failure}"
        return text

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "seed": self.seed,
            "trials": self.trials,
            "counts": dict(self.counts),
            "failure": self.failure,
        }


def _random_central(rng, basis: list[Element], nonzero: bool) -> Element:
    alg = basis[0].algebra
    F = alg.field
    while True:
        z = alg.zero()
        for b in rng.sample(basis, min(len(basis), rng.randint(1, 3))):
            z = z + b.scale(F.random(rng))
        if z or not nonzero:
            return z


def _random_noncentral(rng, alg: SkewPBWAlgebra, max_degree: int) -> Element:
    for _ in range(200):
        a = random_element(alg, rng, max_degree)
        if not is_central(a):
            return a
    raise ValueError("algebra appears to be commutative; no non-central element found")


def central_fraction_suite(
    alg: SkewPBWAlgebra, trials: int = 100, seed: int = 0, center_degree: int = 6, sample_degree: int = 2
) -> SuiteReport:
    """Identities satisfied by central fractions p/q with p, q central.

    Per trial: p q = q p; p s q = q s p for random s != 0; p/1 is central iff
    p is (tested on both central and random p, via the Ore path); and for the
    central fraction (p s)/(q s) the numerator is central iff the
    denominator is.  A negative control checks that a non-central p with
    central q gives p s q != q s p for some s.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    basis = central_space(alg, center_degree).basis
    counts = {"pq=qp": 0, "psq=qsp": 0, "p/1 central iff p central": 0, "num central iff den central": 0}
    report = SuiteReport("central fraction identities", True, seed, trials, counts)

    def fail(msg):
        report.passed = False
        report.failure = msg
        return report

    for t in range(trials):
        p = _random_central(rng, basis, nonzero=False)
        q = _random_central(rng, basis, nonzero=True)
        s = random_element(alg, rng, sample_degree)
        if p * q != q * p:
            return fail(f"trial {t}: p q != q p for p = {p}, q = {q}")
        counts["pq=qp"] += 1
        if p * s * q != q * s * p:
            return fail(f"trial {t}: p s q != q s p for p = {p}, q = {q}, s = {s}")
        counts["psq=qsp"] += 1
        r = p if t % 2 == 0 else random_element(alg, rng, sample_degree)
        as_fraction = _commutes_with_generators(RightFraction(r, alg.one(), True), DEFAULT_CAP, general=True)
        if as_fraction != is_central(r):
            return fail(f"trial {t}: centrality of {r}/1 disagrees with centrality of {r}")
        counts["p/1 central iff p central"] += 1
        f = RightFraction(p * s, q * s)
        if p and is_central(f.num) != is_central(f.den):
            return fail(f"trial {t}: ({f.num})/({f.den}) has exactly one central part")
        counts["num central iff den central"] += 1

    # negative control: non-central p, central q
    p = _random_noncentral(rng, alg, sample_degree)
    q = _random_central(rng, basis, nonzero=True)
    for _ in range(200):
        s = random_element(alg, rng, sample_degree)
        if p * s * q != q * s * p:
            counts["negative control"] = "witnessed"
            return report
    return fail(f"negative control: no s found with p s q != q s p for non-central p = {p}")


def membership_roundtrip(
    alg: SkewPBWAlgebra,
    trials: int = 100,
    noncentral_trials: int = 50,
    seed: int = 0,
    center_degree: int = 3,
    sample_degree: int = 2,
    cap: int = DEFAULT_CAP,
) -> SuiteReport:
    """f = (p s)/(q s) with p, q central must be central and be recovered as a central pair.

    Non-central a/s inputs must be rejected with NotCentral.
    """
    rng = random.Random(seed)
    basis = central_space(alg, center_degree).basis
    counts = {"central round-trips": 0, "rejected non-central": 0}
    report = SuiteReport("central fraction membership", True, seed, trials + noncentral_trials, counts)

    def fail(msg):
        report.passed = False
        report.failure = msg
        return report

    for t in range(trials):
        p = _random_central(rng, basis, nonzero=False)
        q = _random_central(rng, basis, nonzero=True)
        s = random_element(alg, rng, sample_degree)
        f = RightFraction(p * s, q * s, cap=cap)
        if not is_central_fraction(f, cap):
            return fail(f"trial {t}: ({f.num})/({f.den}) not recognized as central")
        p2, q2 = membership_characterization(f, cap)
        if not (is_central(p2) and is_central(q2) and q2):
            return fail(f"trial {t}: recovered pair ({p2}, {q2}) is not central")
        if not frac_eq(RightFraction(p2, q2, True), RightFraction(p, q, True)):
            return fail(f"trial {t}: recovered {p2}/{q2} differs from {p}/{q}")
        counts["central round-trips"] += 1

    done = 0
    attempts = 0
    while done < noncentral_trials:
        attempts += 1
        if attempts > 50 * noncentral_trials:
            return fail("could not sample enough non-central fractions")
        a = _random_noncentral(rng, alg, sample_degree)
        s = random_element(alg, rng, sample_degree)
        f = RightFraction(a, s, cap=cap)
        c, _ = central_multiple(s, cap)
        if is_central(a * c):
            continue
        try:
            membership_characterization(f, cap)
        except NotCentral:
            done += 1
            counts["rejected non-central"] += 1
            continue
        return fail(f"{f} was accepted as central")
    return report
