"""Skew PBW extensions and their normal-form arithmetic.

An algebra ``A = sigma(R)<x_1, ..., x_n>`` is stored as its defining data:

* ``x_i * r = sigma_i(r) * x_i + delta_i(r)`` for r in R, and
* ``x_j * x_i = c_ij * x_i * x_j + tail0_ij + sum_k tail_ij[k] * x_k`` for i < j.

Elements are finite maps from exponent vectors (standard monomials
``x_1^a_1 ... x_n^a_n``) to left coefficients in R.  Products are normalized
by moving generators rightward past coefficients and swapping out-of-order
generator pairs; the normal form of ``x_i * x^alpha`` is memoized per
algebra, so repeated products get cheap quickly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .coeff import (
    FIELD_ITSELF,
    SIMPLE_EXTENSION,
    UNIVARIATE_POLY,
    BaseElement,
    BaseRing,
    Endomorphism,
    Field,
    SigmaDerivation,
)


class IncompatibleAlgebras(ValueError):
    pass


class InvalidPresentation(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    """Right-hand side of ``x_j x_i`` (i < j): ``c x_i x_j + tail0 + sum tail[k] x_k``."""

    c: tuple
    tail0: tuple = ()
    tail: tuple = ()

    def is_plain(self) -> bool:
        return not self.tail0 and not any(self.tail)


class SkewPBWAlgebra:
    """A bijective skew PBW extension of a base ring.

    Parameters
    ----------
    base : BaseRing
    gen_names : list of generator names, in PBW order ``x_1 < ... < x_n``
    sigma, delta : optional per-generator maps (default: identity / zero)
    relations : ``{(i, j): Relation}`` for i < j (0-based); missing pairs commute
    """

    def __init__(self, base: BaseRing, gen_names, sigma=None, delta=None, relations=None, name=None):
        self.base = base
        self.field: Field = base.field
        self.gen_names = tuple(gen_names)
        self.n = n = len(self.gen_names)
        self.name = name
        ident = Endomorphism.identity(base)
        self.sigma = tuple(sigma) if sigma is not None else (ident,) * n
        self.delta = tuple(delta) if delta is not None else tuple(SigmaDerivation(s) for s in self.sigma)
        rels = {}
        for i in range(n):
            for j in range(i + 1, n):
                rels[(i, j)] = Relation(base.one, (), ((),) * n)
        for (i, j), rel in (relations or {}).items():
            if not 0 <= i < j < n:
                raise InvalidPresentation(f"relation index ({i}, {j}) must satisfy 0 <= i < j < n")
            tail = tuple(rel.tail) + ((),) * (n - len(rel.tail))
            rels[(i, j)] = Relation(base.coerce(rel.c), base.coerce(rel.tail0), tuple(base.coerce(t) for t in tail))
        self.relations = rels
        self._validate()
        self._trivial_coeffs = base.kind == FIELD_ITSELF
        self._gen_cache: dict = {}
        self._mono_cache: dict = {}
        self.cache: dict = {}

    def _validate(self):
        base, n = self.base, self.n
        names = set(self.gen_names)
        if len(names) != n:
            raise InvalidPresentation("generator names must be distinct")
        if base.gen is not None and base.gen in names:
            raise InvalidPresentation(f"{base.gen!r} names both a generator and the base-ring generator")
        if len(self.sigma) != n or len(self.delta) != n:
            raise InvalidPresentation("need one sigma and one delta per generator")
        for i, (s, d) in enumerate(zip(self.sigma, self.delta)):
            if s.ring != base or d.ring != base:
                raise InvalidPresentation(f"maps for {self.gen_names[i]} live on a different ring")
            if d.sigma != s:
                raise InvalidPresentation(f"delta for {self.gen_names[i]} is not paired with its sigma")
            if not s.is_bijective:
                raise InvalidPresentation(f"sigma for {self.gen_names[i]} is not bijective")
        for (i, j), rel in self.relations.items():
            if not base.is_unit(rel.c):
                raise InvalidPresentation(
                    f"c for {self.gen_names[j]}*{self.gen_names[i]} is not a unit: {base.fmt(rel.c)}"
                )

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (
            self.base,
            self.gen_names,
            tuple(s.image for s in self.sigma),
            tuple(d.image for d in self.delta),
            tuple(sorted(self.relations.items())),
        )

    def __eq__(self, other):
        return isinstance(other, SkewPBWAlgebra) and (self is other or self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        label = self.name or "SkewPBWAlgebra"
        return f"<{label}: {self.base}<{', '.join(self.gen_names)}>>"

    def with_relation(self, i: int, j: int, c=None, tail0=None, tail=None) -> SkewPBWAlgebra:
        """A copy with the relation for ``x_j x_i`` replaced (used for mutation tests)."""
        old = self.relations[(i, j)]
        new = Relation(
            old.c if c is None else self.base.coerce(c),
            old.tail0 if tail0 is None else self.base.coerce(tail0),
            old.tail if tail is None else tuple(self.base.coerce(t) for t in tail),
        )
        rels = dict(self.relations)
        rels[(i, j)] = new
        return SkewPBWAlgebra(self.base, self.gen_names, self.sigma, self.delta, rels, name=self.name)

    # -- element constructors ------------------------------------------------

    @property
    def unit_mono(self) -> tuple:
        return (0,) * self.n

    def element(self, terms: dict) -> Element:
        return Element(self, {m: c for m, c in terms.items() if c})

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {self.unit_mono: self.base.one})

    def scalar(self, c) -> Element:
        r = self.base.coerce(c)
        return Element(self, {self.unit_mono: r} if r else {})

    def gen(self, i) -> Element:
        if isinstance(i, str):
            i = self.gen_index(i)
        return self.monomial(tuple(1 if k == i else 0 for k in range(self.n)))

    def gens(self) -> list[Element]:
        return [self.gen(i) for i in range(self.n)]

    def gen_index(self, name: str) -> int:
        try:
            return self.gen_names.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def base_gen(self) -> Element:
        return self.scalar(self.base.gen_tuple())

    def monomial(self, alpha, coeff=None) -> Element:
        r = self.base.one if coeff is None else self.base.coerce(coeff)
        return Element(self, {tuple(alpha): r} if r else {})

    def algebra_generators(self) -> list[Element]:
        """Generators of A as a K-algebra: the x_i plus the base-ring generator."""
        out = self.gens()
        if self.base.kind != FIELD_ITSELF:
            out.append(self.base_gen())
        return out

    def __call__(self, x) -> Element:
        if isinstance(x, Element):
            if x.algebra != self:
                raise IncompatibleAlgebras(f"{x.algebra!r} vs {self!r}")
            return x
        if isinstance(x, str):
            from .parser import parse_element

            return parse_element(x, self)
        return self.scalar(x)

    # -- coordinates over K ----------------------------------------------------

    def coeff_weight(self) -> int:
        """Filtration weight of the base-ring generator (1 for K[t], else 0)."""
        return 1 if self.base.kind == UNIVARIATE_POLY else 0

    def coeff_range(self, budget: int) -> range:
        kind = self.base.kind
        if kind == FIELD_ITSELF:
            return range(1)
        if kind == SIMPLE_EXTENSION:
            return range(self.base.ext_degree)
        return range(budget + 1)

    def ext_monomials(self, d: int) -> list[tuple]:
        """K-basis monomials ``(alpha, j)`` = t^j x^alpha of filtration degree <= d, ascending."""
        out = []
        w = self.coeff_weight()
        for deg in range(d + 1):
            for alpha in _compositions(deg, self.n):
                for j in self.coeff_range(d - deg):
                    if deg + w * j <= d:
                        out.append((alpha, j))
        out.sort(key=self.ext_key)
        return out

    def ext_key(self, m) -> tuple:
        alpha, j = m
        return (sum(alpha) + self.coeff_weight() * j, alpha, j)

    def ext_element(self, m) -> Element:
        alpha, j = m
        return self.monomial(alpha, self.base.monomial(j))

    # -- core rewriting ------------------------------------------------------------

    def _add_scaled(self, acc: dict, r: tuple, terms: dict):
        """acc += r * terms (left multiplication by r in R), in place."""
        R = self.base
        if not r:
            return
        for m, c in terms.items():
            v = R.mul(r, c)
            if not v:
                continue
            old = acc.get(m)
            if old is None:
                acc[m] = v
            else:
                s = R.add(old, v)
                if s:
                    acc[m] = s
                else:
                    del acc[m]

    def _gen_mono(self, i: int, alpha: tuple) -> dict:
        """Normal form of x_i * x^alpha."""
        key = (i, alpha)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        j = next((k for k, a in enumerate(alpha) if a), self.n)
        if j >= i:
            beta = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1 :]
            out = {beta: self.base.one}
        else:
            # x_i x_j = c x_j x_i + tail0 + sum_k tail[k] x_k   (j < i)
            rest = alpha[:j] + (alpha[j] - 1,) + alpha[j + 1 :]
            rel = self.relations[(j, i)]
            out = {}
            swapped = self._gen_terms(j, self._gen_mono(i, rest))
            self._add_scaled(out, rel.c, swapped)
            if rel.tail0:
                self._add_scaled(out, rel.tail0, {rest: self.base.one})
            for k, tk in enumerate(rel.tail):
                if tk:
                    self._add_scaled(out, tk, self._gen_mono(k, rest))
        self._gen_cache[key] = out
        return out

    def _gen_terms(self, i: int, terms: dict) -> dict:
        """Normal form of x_i * (sum r x^beta), using x_i r = sigma_i(r) x_i + delta_i(r)."""
        sigma, delta = self.sigma[i], self.delta[i]
        plain = sigma.is_identity and delta.is_zero
        out: dict = {}
        for beta, r in terms.items():
            if plain:
                self._add_scaled(out, r, self._gen_mono(i, beta))
            else:
                self._add_scaled(out, sigma(r), self._gen_mono(i, beta))
                dr = delta(r)
                if dr:
                    self._add_scaled(out, dr, {beta: self.base.one})
        return out

    def _mono_mono(self, alpha: tuple, beta: tuple) -> dict:
        """x^alpha * x^beta (unit coefficients)."""
        key = (alpha, beta)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        f = next((k for k, a in enumerate(alpha) if a), None)
        if f is None:
            out = {beta: self.base.one}
        else:
            rest = alpha[:f] + (alpha[f] - 1,) + alpha[f + 1 :]
            out = self._gen_terms(f, self._mono_mono(rest, beta))
        self._mono_cache[key] = out
        return out

    def _mono_terms(self, alpha: tuple, terms: dict) -> dict:
        """x^alpha * (sum r x^beta) for general R."""
        if self._trivial_coeffs:
            out: dict = {}
            for beta, r in terms.items():
                self._add_scaled(out, r, self._mono_mono(alpha, beta))
            return out
        word = [k for k, a in enumerate(alpha) for _ in range(a)]
        for k in reversed(word):
            terms = self._gen_terms(k, terms)
        return terms

    def _mul_terms(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for alpha, r in a.items():
            self._add_scaled(out, r, self._mono_terms(alpha, b))
        return out

    # -- degrees and coordinates ----------------------------------------------------

    def _total_degree(self, terms: dict):
        if not terms:
            return None
        R = self.base
        return max(sum(alpha) + R.frame_degree(r) for alpha, r in terms.items())

    def _coords(self, terms: dict) -> dict:
        out = {}
        for alpha, r in terms.items():
            for j, c in enumerate(r):
                if c:
                    out[(alpha, j)] = c
        return out

    def from_coords(self, coords: dict) -> Element:
        R = self.base
        terms: dict = {}
        for (alpha, j), c in coords.items():
            if c:
                self._add_scaled(terms, R.monomial(j, c), {alpha: R.one})
        return Element(self, terms)

    # -- printing -----------------------------------------------------------------

    def format_terms(self, terms: dict) -> str:
        F, R = self.field, self.base
        if not terms:
            return "0"
        items = sorted(self._coords(terms).items(), key=lambda kv: self.ext_key(kv[0]), reverse=True)
        pieces = []
        for (alpha, j), c in items:
            neg = F.is_negative(c)
            mag = F.neg(c) if neg else c
            factors = []
            if j:
                factors.append(R.gen if j == 1 else f"{R.gen}^{j}")
            for name, a in zip(self.gen_names, alpha):
                if a:
                    factors.append(name if a == 1 else f"{name}^{a}")
            if not factors:
                body = F.fmt(mag)
            elif mag == F.one:
                body = "*".join(factors)
            else:
                body = F.fmt(mag) + "*" + "*".join(factors)
            pieces.append((neg, body))
        text = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def relation_text(self, i: int, j: int) -> str:
        """Human-readable form of the defining relation for ``x_j x_i``."""
        xi, xj = self.gen_names[i], self.gen_names[j]
        return f"{xj}*{xi} = {self.gen(j) * self.gen(i)}"

    def commutation_text(self, i: int) -> str:
        """Human-readable form of ``x_i * t`` for the base-ring generator t."""
        t = self.base_gen()
        return f"{self.gen_names[i]}*{self.base.gen} = {self.gen(i) * t}"


def _compositions(total: int, n: int):
    """Exponent vectors of length n summing to total, in descending lex order."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


class Element:
    """An element of a :class:`SkewPBWAlgebra` in normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: SkewPBWAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _coerce(self, other) -> Element:
        if isinstance(other, Element):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise IncompatibleAlgebras(f"{self.algebra!r} vs {other.algebra!r}")
            return other
        if isinstance(other, (int, Fraction, BaseElement)):
            return self.algebra.scalar(other)
        raise TypeError(f"cannot combine Element with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        self.algebra._add_scaled(out, self.algebra.base.one, other.terms)
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        R = self.algebra.base
        return Element(self.algebra, {m: R.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        return Element(self.algebra, self.algebra._mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self._coerce(other) * self

    def __pow__(self, k: int):
        return power(self, k)

    def scale(self, r) -> Element:
        """Left multiplication by r in R (or a scalar in K)."""
        alg = self.algebra
        out: dict = {}
        alg._add_scaled(out, alg.base.coerce(r), self.terms)
        return Element(alg, out)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, IncompatibleAlgebras):
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple]:
        return list(self.terms)

    def coefficient(self, alpha) -> BaseElement:
        R = self.algebra.base
        return BaseElement(R, self.terms.get(tuple(alpha), ()))

    def coords(self) -> dict:
        return self.algebra._coords(self.terms)

    def total_degree(self):
        """Filtration degree, or None for zero (standing in for minus infinity)."""
        return self.algebra._total_degree(self.terms)

    def __str__(self):
        return self.algebra.format_terms(self.terms)

    def __repr__(self):
        return f"Element({self})"


# -- module-level operations ------------------------------------------------------


def _check_same(a: Element, b: Element):
    if a.algebra is not b.algebra and a.algebra != b.algebra:
        raise IncompatibleAlgebras(f"{a.algebra!r} vs {b.algebra!r}")


def mul(a: Element, b: Element) -> Element:
    _check_same(a, b)
    return a * b


def add(a: Element, b: Element) -> Element:
    _check_same(a, b)
    return a + b


def neg(a: Element) -> Element:
    return -a


def scalar_mul(r, a: Element) -> Element:
    return a.scale(r)


def commutator(a: Element, b: Element) -> Element:
    _check_same(a, b)
    return a * b - b * a


def power(a: Element, k: int) -> Element:
    if k < 0:
        raise ValueError("negative powers are not elements of A")
    out = a.algebra.one()
    base = a
    while k:
        if k & 1:
            out = out * base
        k >>= 1
        if k:
            base = base * base
    return out


def total_degree(a: Element):
    return a.total_degree()


def print_element(a: Element) -> str:
    return str(a)


def random_element(alg: SkewPBWAlgebra, rng, max_degree: int = 3, max_terms: int = 4, nonzero: bool = True) -> Element:
    """A random element supported on ext-monomials of degree <= max_degree."""
    monos = alg.ext_monomials(max_degree)
    F = alg.field
    while True:
        coords = {}
        for m in rng.sample(monos, min(len(monos), rng.randint(1, max_terms))):
            c = F.random(rng)
            if c:
                coords[m] = c
        a = alg.from_coords(coords)
        if a or not nonzero:
            return a


# -- PBW consistency --------------------------------------------------------------


@dataclass
class PBWReport:
    passed: bool
    checked: int
    witness: tuple | None = None
    details: list = dc_field(default_factory=list)

    def __str__(self):
        if self.passed:
            return f"PBW consistency: pass ({self.checked} overlaps checked)"
        labels, left, right = self.witness
        return (
            f"PBW consistency: FAIL at ({labels[0]}*{labels[1]})*{labels[2]}\n"
            f"  left-associated:  {left}\n  right-associated: {right}"
        )


def check_pbw_consistency(alg: SkewPBWAlgebra, d: int = 4) -> PBWReport:
    """Compare (a*b)*c with a*(b*c) on generator triples and monomial triples up to degree d."""
    if d < 3:
        raise ValueError("degree bound must be at least 3")
    letters = [(name, g) for name, g in zip(alg.gen_names, alg.gens())]
    if alg.base.kind != FIELD_ITSELF:
        letters.append((alg.base.gen, alg.base_gen()))
    triples = [((a[0], b[0], c[0]), a[1], b[1], c[1]) for a, b, c in itertools.product(letters, repeat=3)]
    if d > 3:
        monos = [m for m in alg.ext_monomials(d - 2) if alg.ext_key(m)[0] > 0]
        elems = [(str(alg.ext_element(m)), alg.ext_element(m), alg.ext_key(m)[0]) for m in monos]
        for (la, a, da), (lb, b, db), (lc, c, dc) in itertools.product(elems, repeat=3):
            if 3 < da + db + dc <= d:
                triples.append(((la, lb, lc), a, b, c))
    for labels, a, b, c in triples:
        left = (a * b) * c
        right = a * (b * c)
        if left != right:
            return PBWReport(False, len(triples), (labels, str(left), str(right)))
    return PBWReport(True, len(triples))
