"""Dense univariate polynomials over Q and over prime fields.

Coefficients are stored lowest degree first, with trailing zeros stripped, so
the zero polynomial has an empty coefficient tuple and degree -1.  Rational
coefficients are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator); prime-field coefficients are ints in ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, List, Sequence, Tuple

from ..errors import DomainError, NotSquarefreeError, UnsupportedModulusError


class _Poly:
    """Shared arithmetic; subclasses supply the coefficient field."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # -- field hooks ---------------------------------------------------------

    def _coerce(self, c):
        raise NotImplementedError

    def _inv(self, c):
        raise NotImplementedError

    def _new(self, coeffs) -> "_Poly":
        raise NotImplementedError

    # -- basic accessors -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return self._coerce(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self._coerce(0)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs and self._field_key() == other._field_key()

    def __hash__(self):
        return hash((type(self).__name__, self._field_key(), self.coeffs))

    def _field_key(self):
        return None

    def __call__(self, x):
        acc = self._coerce(0)
        for c in reversed(self.coeffs):
            acc = self._coerce(acc * x + c)
        return acc

    # -- ring operations -----------------------------------------------------

    def _lift(self, other):
        if isinstance(other, _Poly):
            if type(other) is not type(self) or other._field_key() != self._field_key():
                raise TypeError("polynomials over different fields")
            return other
        return self._new((other,))

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._new(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, _Poly):
            c = self._coerce(other)
            return self._new(c * x for x in self.coeffs)
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return self._new(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = self._new((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv = self._inv(other.lc)
        quo = [self._coerce(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = self._coerce(rem[i] * inv)
            if c == 0:
                continue
            quo[i - db] = c
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] = self._coerce(rem[i - db + j] - c * b)
        return self._new(quo), self._new(rem[:db] if db > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def scale(self, c) -> "_Poly":
        return self * c

    def monic(self) -> "_Poly":
        if self.is_zero():
            raise DomainError("zero polynomial has no monic associate")
        return self * self._inv(self.lc)

    def derivative(self) -> "_Poly":
        return self._new(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def reversed(self, degree: int | None = None) -> "_Poly":
        """Coefficient reversal t^n f(1/t), with n defaulting to deg f."""
        n = self.degree if degree is None else degree
        if n < self.degree:
            raise DomainError("reversal degree below polynomial degree")
        return self._new(self[n - i] for i in range(n + 1))

    def powmod(self, e: int, modulus: "_Poly") -> "_Poly":
        result = self._new((1,)) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r}{self._repr_suffix()})"

    def _repr_suffix(self):
        return ""

    def to_text(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                parts.append(f"+ {mono}")
            elif mono and c == -1:
                parts.append(f"- {mono}")
            else:
                sign = "-" if c < 0 else "+"
                body = str(abs(c)) + (f"*{mono}" if mono else "")
                parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


class UniPoly(_Poly):
    """Univariate polynomial with exact rational coefficients."""

    __slots__ = ()

    def _coerce(self, c):
        return c if type(c) is Fraction else Fraction(c)

    def _inv(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(c)

    def _new(self, coeffs):
        return UniPoly(coeffs)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        out = cls((1,))
        for r in roots:
            out = out * cls((-Fraction(r), 1))
        return out

    def primitive_integer(self) -> Tuple[List[int], Fraction]:
        """Return integer coefficients ``P`` and ``c`` with ``self == c * P``.

        ``P`` is primitive with positive leading coefficient.
        """
        if self.is_zero():
            raise DomainError("zero polynomial")
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for x in ints:
            g = igcd(g, x)
        if ints[-1] < 0:
            g = -g
        return [x // g for x in ints], Fraction(g, den)


class PrimeFieldPoly(_Poly):
    """Univariate polynomial over the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, coeffs: Iterable = (), p: int = 2):
        if not is_prime(p):
            raise DomainError(f"modulus {p} is not prime")
        object.__setattr__(self, "p", p)
        super().__init__(coeffs)

    def _coerce(self, c):
        if type(c) is Fraction:
            if c.denominator % self.p == 0:
                raise DomainError(f"denominator of {c} vanishes mod {self.p}")
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def _inv(self, c):
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.p)

    def _new(self, coeffs):
        return PrimeFieldPoly(coeffs, self.p)

    def _field_key(self):
        return self.p

    def _repr_suffix(self):
        return f", p={self.p}"


# ---------------------------------------------------------------------------
# gcd and friends


def poly_gcd(a: _Poly, b: _Poly) -> _Poly:
    """Monic gcd (the zero polynomial only for gcd(0, 0))."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def extended_gcd(a: _Poly, b: _Poly):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = a._new((1,)), a._new(())
    t0, t1 = a._new(()), a._new((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = r0._inv(r0.lc)
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_decomposition(f: _Poly) -> List[Tuple[int, _Poly]]:
    """Yun's algorithm.

    Returns ``[(k, q_k), ...]`` with strictly increasing multiplicities ``k``,
    each ``q_k`` monic, squarefree, nonconstant and pairwise coprime, such that
    ``f == lc(f) * prod(q_k ** k)``.  Over F_p only ``p > deg f`` is accepted.
    """
    if f.is_zero():
        raise DomainError("squarefree decomposition of the zero polynomial")
    p = getattr(f, "p", 0)
    if p and p <= f.degree:
        raise UnsupportedModulusError(
            f"modulus {p} does not exceed degree {f.degree}"
        )
    if f.degree <= 0:
        return []
    f = f.monic()
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f // a0
    d = df // a0 - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((k, a))
        b = b // a
        c = d // a
        d = c - b.derivative()
        k += 1
    return out


def is_squarefree(f: _Poly) -> bool:
    return all(k == 1 for k, _ in squarefree_decomposition(f))


def interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Exact Newton interpolation through the points ``(xs[i], ys[i])``."""
    if len(xs) != len(ys) or len(set(xs)) != len(xs):
        raise DomainError("interpolation needs distinct abscissae, one value each")
    xs = [Fraction(x) for x in xs]
    table = [Fraction(y) for y in ys]
    n = len(xs)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        newton.append(table[0])
    result = UniPoly((newton[-1],))
    for i in range(n - 2, -1, -1):
        result = result * UniPoly((-xs[i], 1)) + newton[i]
    return result


# ---------------------------------------------------------------------------
# resultants


def _strip(xs):
    while xs and xs[-1] == 0:
        xs.pop()
    return xs


def _prem(a: List[int], b: List[int]) -> List[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, bi in enumerate(b):
            r[i + shift] -= c * bi
        _strip(r)
        e -= 1
    factor = lb ** e
    return [factor * x for x in r]


def _content(xs: List[int]) -> int:
    g = 0
    for x in xs:
        g = igcd(g, x)
    return g


def _res_int(A: List[int], B: List[int]) -> int:
    """Sylvester resultant lc(A)^deg B * prod B(alpha_i) of integer polynomials.

    Sub-resultant pseudo-remainder sequence; all divisions are exact.
    """
    dA, dB = len(A) - 1, len(B) - 1
    if dA == 0:
        return A[0] ** dB
    if dB == 0:
        return B[0] ** dA
    a, b = _content(A), _content(B)
    A = [x // a for x in A]
    B = [x // b for x in B]
    t = a ** dB * b ** dA
    s = 1
    if dA < dB:
        A, B, dA, dB = B, A, dB, dA
        if dA % 2 and dB % 2:
            s = -s
    g = h = Fraction(1)
    while True:
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        div = g * h ** delta
        A = B
        B = [Fraction(x) / div for x in R]
        if any(x.denominator != 1 for x in B):
            raise AssertionError("non-exact division in sub-resultant sequence")
        B = [int(x) for x in B]
        g = Fraction(A[-1])
        h = h ** (1 - delta) * g ** delta
        dA, dB = len(A) - 1, len(B) - 1
        if dB == 0:
            h = Fraction(B[0]) ** dA * h ** (1 - dA)
            if h.denominator != 1:
                raise AssertionError("non-exact final sub-resultant")
            return s * t * int(h)


def _res_field(A: _Poly, B: _Poly):
    """Sylvester resultant by the Euclidean algorithm over a field."""
    res = A._coerce(1)
    while B.degree > 0:
        R = A % B
        if R.is_zero():
            return A._coerce(0)
        dA, dB, dR = A.degree, B.degree, R.degree
        sign = -1 if (dA * dB) % 2 else 1
        res = A._coerce(res * sign * B.lc ** (dA - dR))
        A, B = B, R
    return A._coerce(res * B.lc ** A.degree)


def sylvester_resultant(f: _Poly, g: _Poly):
    """Classical resultant ``lc(f)^deg g * prod_{f(a)=0} g(a)`` (Sylvester det)."""
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant with a zero polynomial")
    if isinstance(f, UniPoly):
        F, cf = f.primitive_integer()
        G, cg = g.primitive_integer()
        return cf ** g.degree * cg ** f.degree * _res_int(F, G)
    return _res_field(f, g)


def resultant(f: _Poly, g: _Poly):
    """Resultant with the convention ``Res(f, g) = lc(g)^deg f * prod f(b_j)``.

    The product runs over the roots ``b_j`` of ``g``.  It vanishes exactly when
    ``f`` and ``g`` have a common root.  Over Q the work is done on primitive
    integer polynomials with a sub-resultant sequence.
    """
    return sylvester_resultant(g, f)


def discriminant(f: _Poly):
    """``(-1)^(n(n-1)/2) / lc(f) * Res(f, f')`` with the Sylvester resultant."""
    n = f.degree
    if n < 1:
        raise DomainError("discriminant needs degree >= 1")
    if n == 1:
        return f._coerce(1)
    r = sylvester_resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    if isinstance(f, UniPoly):
        return sign * r / f.lc
    return f._coerce(sign * r * f._inv(f.lc))


# ---------------------------------------------------------------------------
# prime fields


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> List[int]:
    """Primes ``q`` with ``lo < q < hi``."""
    return [q for q in range(max(lo + 1, 2), hi) if is_prime(q)]


def distinct_degree_factorization(f: PrimeFieldPoly) -> List[Tuple[int, PrimeFieldPoly]]:
    """Split a squarefree polynomial into products of equal-degree irreducibles.

    Returns ``[(k, g_k), ...]`` where ``g_k`` is the monic product of all
    irreducible factors of degree ``k``.
    """
    if f.is_zero():
        raise DomainError("factorisation of the zero polynomial")
    if f.p <= f.degree:
        raise UnsupportedModulusError(f"modulus {f.p} does not exceed degree {f.degree}")
    if f.degree <= 0:
        return []
    if poly_gcd(f, f.derivative()).degree > 0:
        raise NotSquarefreeError(f"{f!r} is not squarefree")
    f = f.monic()
    x = PrimeFieldPoly((0, 1), f.p)
    h = x
    out = []
    k = 1
    while f.degree >= 2 * k:
        h = h.powmod(f.p, f)
        g = poly_gcd(h - x, f)
        if g.degree > 0:
            out.append((k, g))
            f = f // g
            h = h % f
        k += 1
    if f.degree > 0:
        out.append((f.degree, f))
    return out


def factor_degrees_mod_p(f: PrimeFieldPoly) -> List[int]:
    """Degrees of the irreducible factors of a squarefree ``f`` (sorted, descending)."""
    degrees = []
    for k, g in distinct_degree_factorization(f):
        degrees.extend([k] * (g.degree // k))
    return sorted(degrees, reverse=True)


def interpolate_mod_p(xs: Sequence[int], ys: Sequence[int], p: int) -> PrimeFieldPoly:
    """Newton interpolation over F_p through distinct residues ``xs``."""
    xs = [x % p for x in xs]
    if len(xs) != len(ys) or len(set(xs)) != len(xs):
        raise DomainError("interpolation needs distinct abscissae mod p, one value each")
    table = [y % p for y in ys]
    n = len(xs)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) * pow(xs[i + level] - xs[i], -1, p) % p
            for i in range(n - level)
        ]
        newton.append(table[0])
    result = PrimeFieldPoly((newton[-1],), p)
    for i in range(n - 2, -1, -1):
        result = result * PrimeFieldPoly((-xs[i], 1), p) + newton[i]
    return result
