"""Exact coefficient arithmetic: the ground field K and the base ring R.

Field elements are plain Python values (``Fraction`` over Q, ``int`` residues
over F_p) manipulated through the owning :class:`Field`.  Base-ring elements
are tuples of field elements, lowest power first, with no trailing zeros;
the empty tuple is zero.  :class:`BaseElement` wraps such a tuple together
with its ring for the public, operator-based API.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"

FIELD_ITSELF = "field_itself"
UNIVARIATE_POLY = "univariate_poly"
SIMPLE_EXTENSION = "simple_extension"


class IncompatibleRings(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


@dataclass(frozen=True)
class Field:
    """The ground field: either Q or F_p."""

    kind: str = RATIONALS
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"modulus must be prime, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> Field:
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str | Field) -> Field:
        """Accept ``q``/``Q``/``rationals`` or ``fp:7``/``F7``/``GF(7)``."""
        if isinstance(text, Field):
            return text
        s = str(text).strip()
        if s.lower() in ("q", "qq", "rationals"):
            return cls.rationals()
        low = s.lower()
        for prefix in ("fp:", "gf(", "f_", "f"):
            if low.startswith(prefix):
                digits = low[len(prefix):].rstrip(")")
                if digits.isdigit():
                    return cls.prime(int(digits))
        raise ValueError(f"cannot parse field {text!r}; use 'q' or 'fp:<p>'")

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def label(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    # -- element arithmetic -------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse_scalar(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def parse_scalar(self, text: str):
        num, _, den = text.strip().partition("/")
        value = self(int(num))
        return self.div(value, self(int(den))) if den else value

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if self.p is None:
            return a ** k
        return pow(a, k, self.p)

    def mult_order(self, a, cap: int = 10**6) -> float | int:
        """Multiplicative order of ``a``, or ``math.inf`` if none up to ``cap``."""
        if not a:
            raise ValueError("zero has no multiplicative order")
        if self.p is None:
            if a == 1:
                return 1
            return 2 if a == -1 else math.inf
        x = a
        for k in range(1, min(cap, self.p - 1) + 1):
            if x == 1:
                return k
            x = x * a % self.p
        return math.inf

    def fmt(self, a) -> str:
        if self.p is None:
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def is_negative(self, a) -> bool:
        return self.p is None and a < 0

    def elements(self):
        if self.p is None:
            raise ValueError("Q is infinite")
        return range(self.p)

    def random(self, rng, bound: int = 5):
        if self.p is None:
            num = rng.randint(-bound, bound)
            den = rng.randint(1, 3) if rng.random() < 0.3 else 1
            return Fraction(num, den)
        return rng.randrange(self.p)


# -- univariate polynomials over a Field, as trimmed tuples -----------------


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(F: Field, a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return _trim(out)


def poly_mul(F: Field, a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def poly_divmod(F: Field, a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    lead_inv = F.inv(b[-1])
    quot = [F.zero] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        f = F.mul(rem[-1], lead_inv)
        quot[shift] = f
        for i, c in enumerate(b):
            rem[shift + i] = F.sub(rem[shift + i], F.mul(f, c))
        rem = list(_trim(rem))
    return _trim(quot), _trim(rem)


def _has_factor_of_degree(F: Field, f: tuple, k: int) -> bool:
    for tail in itertools.product(F.elements(), repeat=k):
        cand = tuple(tail) + (F.one,)
        if not poly_divmod(F, f, cand)[1]:
            return True
    return False


def _has_rational_root(f: tuple) -> bool:
    den = math.lcm(*(c.denominator for c in f))
    ints = [int(c * den) for c in f]
    lead, const = ints[-1], ints[0]
    if const == 0:
        return True

    def divisors(m):
        m = abs(m)
        return [d for d in range(1, m + 1) if m % d == 0]

    for a in divisors(const):
        for b in divisors(lead):
            for r in (Fraction(a, b), Fraction(-a, b)):
                if sum(c * r**i for i, c in enumerate(ints)) == 0:
                    return True
    return False


def check_irreducible(F: Field, f: tuple) -> bool | None:
    """True/False when decidable by exhaustive search, None when unchecked."""
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if F.p is None:
        if deg <= 3:
            return not _has_rational_root(f)
        return None
    if deg > 8 or F.p ** (deg // 2) > 200_000:
        return None
    return not any(_has_factor_of_degree(F, f, k) for k in range(1, deg // 2 + 1))


@dataclass(frozen=True)
class BaseRing:
    """R: one of K, K[t], or K[u]/(f) with f monic irreducible."""

    field: Field
    kind: str = FIELD_ITSELF
    gen: str | None = None
    modulus: tuple | None = None
    irreducibility_checked: bool = dc_field(default=True, compare=False)

    def __post_init__(self):
        if self.kind == FIELD_ITSELF:
            if self.gen is not None or self.modulus is not None:
                raise ValueError("a field base ring has no generator")
        elif self.kind == UNIVARIATE_POLY:
            if not self.gen:
                raise ValueError("polynomial base ring needs a generator name")
            if self.modulus is not None:
                raise ValueError("polynomial base ring takes no modulus")
        elif self.kind == SIMPLE_EXTENSION:
            if not self.gen or self.modulus is None:
                raise ValueError("simple extension needs a generator and modulus")
            f = tuple(self.field(c) for c in self.modulus)
            object.__setattr__(self, "modulus", f)
            if len(f) < 3 or f[-1] != self.field.one:
                raise ValueError("modulus must be monic of degree >= 2")
            verdict = check_irreducible(self.field, f)
            if verdict is False:
                raise ValueError(f"modulus {f} is reducible over {self.field}")
            if verdict is None:
                object.__setattr__(self, "irreducibility_checked", False)
                warnings.warn("modulus irreducibility not verified at this size", stacklevel=2)
        else:
            raise ValueError(f"unknown base ring kind {self.kind!r}")

    @classmethod
    def of_field(cls, F: Field) -> BaseRing:
        return cls(F)

    @classmethod
    def polynomial(cls, F: Field, gen: str = "t") -> BaseRing:
        return cls(F, UNIVARIATE_POLY, gen)

    @classmethod
    def extension(cls, F: Field, modulus, gen: str = "u") -> BaseRing:
        return cls(F, SIMPLE_EXTENSION, gen, tuple(modulus))

    @property
    def is_field(self) -> bool:
        return self.kind == FIELD_ITSELF

    @property
    def ext_degree(self) -> int | None:
        """K-dimension of R (None when infinite)."""
        if self.kind == FIELD_ITSELF:
            return 1
        if self.kind == SIMPLE_EXTENSION:
            return len(self.modulus) - 1
        return None

    def __str__(self):
        if self.kind == FIELD_ITSELF:
            return str(self.field)
        if self.kind == UNIVARIATE_POLY:
            return f"{self.field}[{self.gen}]"
        return f"{self.field}[{self.gen}]/({self.fmt(self.modulus)})"

    # -- raw tuple arithmetic ----------------------------------------------

    zero = ()

    @property
    def one(self) -> tuple:
        return (self.field.one,)

    def const(self, c) -> tuple:
        c = self.field(c)
        return (c,) if c else ()

    def gen_tuple(self) -> tuple:
        if self.kind == FIELD_ITSELF:
            raise ValueError("a field base ring has no generator")
        return self.reduce((self.field.zero, self.field.one))

    def monomial(self, j: int, c=None) -> tuple:
        c = self.field.one if c is None else self.field(c)
        return self.reduce((self.field.zero,) * j + (c,))

    def reduce(self, a: tuple) -> tuple:
        a = _trim(a)
        if self.kind == SIMPLE_EXTENSION and len(a) >= len(self.modulus):
            return poly_divmod(self.field, a, self.modulus)[1]
        return a

    def add(self, a: tuple, b: tuple) -> tuple:
        if len(a) == 1 and len(b) == 1:
            c = self.field.add(a[0], b[0])
            return (c,) if c else ()
        return poly_add(self.field, a, b)

    def neg(self, a: tuple) -> tuple:
        return tuple(self.field.neg(c) for c in a)

    def sub(self, a: tuple, b: tuple) -> tuple:
        return self.add(a, self.neg(b))

    def mul(self, a: tuple, b: tuple) -> tuple:
        if len(a) == 1 and len(b) == 1:
            return (self.field.mul(a[0], b[0]),)
        return self.reduce(poly_mul(self.field, a, b))

    def smul(self, c, a: tuple) -> tuple:
        if not c:
            return ()
        return tuple(self.field.mul(c, x) for x in a)

    def pow(self, a: tuple, k: int) -> tuple:
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def degree(self, a: tuple) -> int:
        """Polynomial degree in the generator, -1 for zero."""
        return len(a) - 1

    def frame_degree(self, a: tuple) -> int:
        """Degree contributed to the algebra filtration (0 unless R = K[t])."""
        return len(a) - 1 if self.kind == UNIVARIATE_POLY else 0

    def is_unit(self, a: tuple) -> bool:
        if not a:
            return False
        return self.kind != UNIVARIATE_POLY or len(a) == 1

    def inverse(self, a: tuple) -> tuple:
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{self.fmt(a)} is not a unit in {self}")
        F = self.field
        if len(a) == 1:
            return (F.inv(a[0]),)
        # extended Euclid in K[u]
        r0, r1 = self.modulus, a
        s0, s1 = (), self.one
        while r1:
            q, r = poly_divmod(F, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_add(F, s0, tuple(F.neg(c) for c in poly_mul(F, q, s1)))
        if len(r0) != 1:
            raise ZeroDivisionError("modulus is not irreducible")
        return self.reduce(tuple(F.mul(F.inv(r0[0]), c) for c in s0))

    def compose(self, a: tuple, g: tuple) -> tuple:
        """Evaluate the polynomial ``a`` at the ring element ``g``."""
        out: tuple = ()
        for c in reversed(a):
            out = self.add(self.mul(out, g), (c,) if c else ())
        return out

    def coerce(self, x) -> tuple:
        if isinstance(x, BaseElement):
            if x.ring != self:
                raise IncompatibleRings(f"{x.ring} vs {self}")
            return x.coeffs
        if isinstance(x, tuple):
            return self.reduce(tuple(self.field(c) for c in x))
        return self.const(x)

    def __call__(self, x) -> BaseElement:
        return BaseElement(self, self.coerce(x))

    def random(self, rng, max_degree: int = 2) -> tuple:
        if self.kind == FIELD_ITSELF:
            top = 0
        elif self.kind == SIMPLE_EXTENSION:
            top = len(self.modulus) - 2
        else:
            top = max_degree
        return self.reduce(tuple(self.field.random(rng) for _ in range(rng.randint(0, top) + 1)))

    def fmt(self, a: tuple) -> str:
        F = self.field
        if not a:
            return "0"
        parts = []
        for j in range(len(a) - 1, -1, -1):
            c = a[j]
            if not c:
                continue
            neg = F.is_negative(c)
            mag = F.neg(c) if neg else c
            if j == 0:
                body = F.fmt(mag)
            else:
                mono = self.gen if j == 1 else f"{self.gen}^{j}"
                body = mono if mag == F.one else f"{F.fmt(mag)}*{mono}"
            parts.append((neg, body))
        text = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            text += (" - " if neg else " + ") + body
        return text


class BaseElement:
    """An element of a :class:`BaseRing` with arithmetic operators."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: BaseRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    def _other(self, other) -> tuple:
        if isinstance(other, BaseElement):
            if other.ring != self.ring:
                raise IncompatibleRings(f"{self.ring} vs {other.ring}")
            return other.coeffs
        return self.ring.const(other)

    def __add__(self, other):
        return BaseElement(self.ring, self.ring.add(self.coeffs, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return BaseElement(self.ring, self.ring.sub(self.coeffs, self._other(other)))

    def __rsub__(self, other):
        return BaseElement(self.ring, self.ring.sub(self._other(other), self.coeffs))

    def __neg__(self):
        return BaseElement(self.ring, self.ring.neg(self.coeffs))

    def __mul__(self, other):
        return BaseElement(self.ring, self.ring.mul(self.coeffs, self._other(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return BaseElement(self.ring, self.ring.pow(self.coeffs, k))

    def __eq__(self, other):
        if isinstance(other, BaseElement):
            return self.ring == other.ring and self.coeffs == other.coeffs
        try:
            return self.coeffs == self.ring.const(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return self.ring.fmt(self.coeffs)

    def __repr__(self):
        return f"BaseElement({self.ring.fmt(self.coeffs)!r} in {self.ring})"


def base_add(a: BaseElement, b: BaseElement) -> BaseElement:
    return a + b


def base_mul(a: BaseElement, b: BaseElement) -> BaseElement:
    return a * b


# -- sigma and delta ------------------------------------------------------


@dataclass(frozen=True)
class Endomorphism:
    """A K-linear ring endomorphism of R, fixed by the image of the generator.

    ``image`` is None for the identity on R = K.
    """

    ring: BaseRing
    image: tuple | None = None

    def __post_init__(self):
        R = self.ring
        if R.kind == FIELD_ITSELF:
            if self.image is not None:
                raise ValueError("R = K admits only the identity here")
            return
        img = R.coerce(self.image if self.image is not None else R.gen_tuple())
        object.__setattr__(self, "image", img)
        if R.kind == UNIVARIATE_POLY and len(img) < 2:
            raise ValueError("sigma(t) must be nonconstant for sigma to be injective")
        if R.kind == SIMPLE_EXTENSION and R.compose(R.modulus, img):
            raise ValueError(f"sigma({R.gen}) = {R.fmt(img)} is not a root of the modulus")

    @classmethod
    def identity(cls, ring: BaseRing) -> Endomorphism:
        return cls(ring)

    @property
    def is_identity(self) -> bool:
        return self.ring.kind == FIELD_ITSELF or self.image == self.ring.gen_tuple()

    @property
    def is_bijective(self) -> bool:
        R = self.ring
        if R.kind == UNIVARIATE_POLY:
            return len(self.image) == 2
        return True

    def __call__(self, a: tuple) -> tuple:
        if self.is_identity:
            return a
        return self.ring.compose(a, self.image)

    def kind(self) -> str:
        return "endomorphism"


@dataclass(frozen=True)
class SigmaDerivation:
    """A sigma-derivation of R, fixed by the image of the generator.

    Extended by d(ab) = sigma(a) d(b) + d(a) b, so d(t^k) is computed from
    d(t^(k-1)) and cached.
    """

    sigma: Endomorphism
    image: tuple = ()
    _powers: list = dc_field(default_factory=list, compare=False, repr=False)

    def __post_init__(self):
        R = self.sigma.ring
        if R.kind == FIELD_ITSELF and self.image:
            raise ValueError("R = K admits only the zero derivation")
        img = R.coerce(self.image)
        if R.kind == SIMPLE_EXTENSION and img:
            raise ValueError("only the zero derivation is supported on a simple extension")
        object.__setattr__(self, "image", img)

    @property
    def ring(self) -> BaseRing:
        return self.sigma.ring

    @property
    def is_zero(self) -> bool:
        return not self.image

    def on_power(self, k: int) -> tuple:
        R = self.ring
        pw = self._powers
        if not pw:
            pw.append(())
        while len(pw) <= k:
            t = R.gen_tuple()
            j = len(pw)
            # d(t^j) = sigma(t) d(t^(j-1)) + d(t) t^(j-1)
            pw.append(R.add(R.mul(self.sigma.image, pw[j - 1]), R.mul(self.image, R.pow(t, j - 1))))
        return pw[k]

    def __call__(self, a: tuple) -> tuple:
        if not self.image:
            return ()
        R = self.ring
        out: tuple = ()
        for k, c in enumerate(a):
            if c and k:
                out = R.add(out, R.smul(c, self.on_power(k)))
        return out

    def kind(self) -> str:
        return "sigma_derivation"


def apply_endo(sigma: Endomorphism, a: BaseElement) -> BaseElement:
    if a.ring != sigma.ring:
        raise IncompatibleRings(f"{a.ring} vs {sigma.ring}")
    return BaseElement(a.ring, sigma(a.coeffs))


def apply_sigma_derivation(delta: SigmaDerivation, a: BaseElement) -> BaseElement:
    if a.ring != delta.ring:
        raise IncompatibleRings(f"{a.ring} vs {delta.ring}")
    return BaseElement(a.ring, delta(a.coeffs))


def endo_order(sigma: Endomorphism, cap: int = 64) -> int | float:
    """Smallest v <= cap with sigma^v = id, else ``math.inf``."""
    if sigma.is_identity:
        return 1
    R = sigma.ring
    gen = R.gen_tuple()
    img = sigma.image
    for v in range(1, cap + 1):
        if img == gen:
            return v
        img = sigma(img)
    return math.inf
