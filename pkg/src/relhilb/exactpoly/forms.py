"""Binary forms and sparse homogeneous forms with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import DomainError, LineInHypersurfaceError
from .univariate import UniPoly, squarefree_decomposition

Exponent = Tuple[int, ...]


def _frac(c) -> Fraction:
    return c if type(c) is Fraction else Fraction(c)


class BinaryForm:
    """A nonzero binary form ``sum_j c_j s^(d-j) t^j`` stored densely.

    ``coeffs[j]`` is the coefficient of ``s^(d-j) t^j``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(_frac(c) for c in coeffs)
        if not cs or all(c == 0 for c in cs):
            raise DomainError("binary form must have a nonzero coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("BinaryForm", self.coeffs))

    def __repr__(self):
        return f"BinaryForm({[str(c) for c in self.coeffs]})"

    def __call__(self, s, t) -> Fraction:
        s, t = _frac(s), _frac(t)
        d = self.degree
        return sum((c * s ** (d - j) * t ** j for j, c in enumerate(self.coeffs)), Fraction(0))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return BinaryForm(out)
        c = _frac(other)
        if c == 0:
            raise DomainError("scaling a binary form by zero")
        return BinaryForm(c * x for x in self.coeffs)

    __rmul__ = __mul__

    @classmethod
    def from_unipoly(cls, f: UniPoly, degree: Optional[int] = None) -> "BinaryForm":
        """Homogenise ``f(t)`` to degree ``degree`` (default ``deg f``)."""
        n = f.degree if degree is None else degree
        if f.is_zero() or n < f.degree:
            raise DomainError("cannot homogenise to a degree below deg f")
        return cls(f[j] for j in range(n + 1))

    def dehomogenize(self) -> UniPoly:
        """The affine polynomial ``g(1, t)``."""
        return UniPoly(self.coeffs)

    def reversed_dehomogenize(self) -> UniPoly:
        """The affine polynomial ``g(x, 1)``; its leading coefficient is ``g(1, 0)``."""
        return UniPoly(reversed(self.coeffs))

    def root_multiplicity_at_infinity(self) -> int:
        """Multiplicity of the root ``(s:t) = (0:1)``."""
        return self.degree - self.dehomogenize().degree

    def squarefree_decomposition(self) -> List[Tuple[int, "BinaryForm"]]:
        """Projective squarefree decomposition.

        The root at ``s = 0`` is carried by the linear factor ``s``, merged into
        the factor of equal multiplicity.  Factors are monic in ``t`` except for
        that merged ``s``.
        """
        f = self.dehomogenize()
        inf = self.degree - f.degree
        parts: Dict[int, BinaryForm] = {
            k: BinaryForm.from_unipoly(q) for k, q in squarefree_decomposition(f)
        }
        if inf:
            s = BinaryForm((1, 0))
            parts[inf] = parts[inf] * s if inf in parts else s
        return sorted(parts.items())

    def multiplicity_profile(self) -> Tuple[int, ...]:
        """Multiplicities of the distinct projective roots, non-increasing."""
        out: List[int] = []
        for k, q in self.squarefree_decomposition():
            out.extend([k] * q.degree)
        return tuple(sorted(out, reverse=True))

    def is_squarefree(self) -> bool:
        return all(k == 1 for k, _ in self.squarefree_decomposition())

    def distinct_root_count(self) -> int:
        return sum(q.degree for _, q in self.squarefree_decomposition())


class HomogeneousForm:
    """Sparse homogeneous polynomial in ``num_vars`` variables ``x0, x1, ...``."""

    __slots__ = ("num_vars", "degree", "terms")

    def __init__(self, num_vars: int, terms: Mapping[Sequence[int], object]):
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars or any(e < 0 for e in exp):
                raise DomainError(f"bad exponent vector {exp} for {num_vars} variables")
            c = _frac(c)
            if c != 0:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if clean[exp] == 0:
                    del clean[exp]
        if not clean:
            raise DomainError("homogeneous form must have at least one term")
        degrees = {sum(e) for e in clean}
        if len(degrees) != 1:
            raise DomainError(f"polynomial is not homogeneous (degrees {sorted(degrees)})")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "degree", degrees.pop())
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("HomogeneousForm is immutable")

    def __eq__(self, other):
        if not isinstance(other, HomogeneousForm):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, tuple(self.terms.items())))

    def __repr__(self):
        return f"HomogeneousForm({self.to_text()!r})"

    def to_text(self) -> str:
        pieces = []
        for exp, c in self.terms.items():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exp) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def scale(self, c) -> "HomogeneousForm":
        c = _frac(c)
        return HomogeneousForm(self.num_vars, {e: c * v for e, v in self.terms.items()})

    def __add__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        merged = dict(self.terms)
        for e, v in other.terms.items():
            merged[e] = merged.get(e, Fraction(0)) + v
        return HomogeneousForm(self.num_vars, merged)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.num_vars:
            raise DomainError(f"point has {len(point)} coordinates, expected {self.num_vars}")
        pt = [_frac(x) for x in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for x, e in zip(pt, exp):
                if e:
                    term *= x ** e
            total += term
        return total

    __call__ = evaluate

    def partial(self, i: int) -> Optional["HomogeneousForm"]:
        """Partial derivative in ``x_i``; ``None`` when it vanishes identically."""
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                new = list(exp)
                new[i] -= 1
                out[tuple(new)] = c * exp[i]
        return HomogeneousForm(self.num_vars, out) if out else None

    def partials(self) -> List[Optional["HomogeneousForm"]]:
        return [self.partial(i) for i in range(self.num_vars)]

    def substitute_linear(self, matrix: Sequence[Sequence]) -> Optional["HomogeneousForm"]:
        """Pull back along ``x_i = sum_j matrix[i][j] * y_j``.

        Returns ``None`` when the pullback vanishes identically.
        """
        if len(matrix) != self.num_vars:
            raise DomainError("substitution matrix needs one row per variable")
        k = len(matrix[0])
        rows = [[_frac(c) for c in row] for row in matrix]
        unit = tuple([0] * k)
        powers: Dict[Tuple[int, int], Dict[Exponent, Fraction]] = {}

        def linear(i):
            out = {}
            for j, c in enumerate(rows[i]):
                if c:
                    e = [0] * k
                    e[j] = 1
                    out[tuple(e)] = c
            return out

        def mul(a, b):
            out: Dict[Exponent, Fraction] = {}
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = out.get(e, Fraction(0)) + ca * cb
            return out

        def power(i, e):
            if (i, e) not in powers:
                powers[(i, e)] = {unit: Fraction(1)} if e == 0 else mul(power(i, e - 1), linear(i))
            return powers[(i, e)]

        total: Dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            acc = {unit: c}
            for i, e in enumerate(exp):
                if e:
                    acc = mul(acc, power(i, e))
            for e, v in acc.items():
                total[e] = total.get(e, Fraction(0)) + v
        total = {e: v for e, v in total.items() if v}
        return HomogeneousForm(k, total) if total else None

    def line_polynomial(self, z: Sequence, w: Sequence) -> UniPoly:
        """The univariate ``t -> F(z + t*w)`` (possibly zero)."""
        if len(z) != self.num_vars or len(w) != self.num_vars:
            raise DomainError("point dimension does not match the form")
        lines = [UniPoly((_frac(a), _frac(b))) for a, b in zip(z, w)]
        cache: Dict[Tuple[int, int], UniPoly] = {}
        total = UniPoly(())
        for exp, c in self.terms.items():
            term = UniPoly((c,))
            for i, e in enumerate(exp):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = lines[i] ** e
                    term = term * cache[key]
            total = total + term
        return total

    def reduce_mod(self, p: int) -> Dict[Exponent, int]:
        """Coefficients reduced modulo ``p`` (zero residues dropped)."""
        out = {}
        for exp, c in self.terms.items():
            if c.denominator % p == 0:
                raise DomainError(f"coefficient {c} has a denominator divisible by {p}")
            r = c.numerator * pow(c.denominator, -1, p) % p
            if r:
                out[exp] = r
        return out


def _proportional(z: Sequence, w: Sequence) -> bool:
    z = [_frac(x) for x in z]
    w = [_frac(x) for x in w]
    return all(z[i] * w[j] == z[j] * w[i] for i in range(len(z)) for j in range(i + 1, len(z)))


def restrict_to_line(F: HomogeneousForm, z: Sequence, w: Sequence) -> BinaryForm:
    """The binary form ``g(s, t) = F(s*z + t*w)`` of degree ``deg F``."""
    if all(_frac(x) == 0 for x in z) or all(_frac(x) == 0 for x in w):
        raise DomainError("line points must be nonzero")
    if _proportional(z, w):
        raise DomainError("z and w are proportional and do not span a line")
    f = F.line_polynomial(z, w)
    if f.is_zero():
        raise LineInHypersurfaceError("the line lies inside the hypersurface")
    return BinaryForm.from_unipoly(f, F.degree)
