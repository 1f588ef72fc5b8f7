"""Intersection numbers and the cone of curves of a Picard-rank-3 family.

Curve classes are written in the basis ([F], [F^], [C_G]) and divisor
classes in the basis ([E], [E^], [G]).  The pairing matrix between the two
bases has determinant d*delta, so every other class (G^, C_G^, -K, V, W) is
derived from these rather than stored.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConsistencyError, DomainError
from .genuslab import tau_is_isomorphism


@dataclass(frozen=True)
class FamilyParams:
    n: int
    a: int
    d: int
    iz: Optional[int] = None
    delta: int = 1

    def __post_init__(self):
        if self.iz is None:
            object.__setattr__(self, "iz", self.n)
        if self.n < 3:
            raise DomainError("dimension n must be at least 3")
        if self.a < 0 or self.d < 1 or self.iz < 1 or self.delta < 1:
            raise DomainError(f"invalid parameters {self}")

    def swapped(self) -> "FamilyParams":
        if self.a > self.d:
            raise DomainError("the a <-> d-a swap needs a <= d")
        return FamilyParams(self.n, self.d - self.a, self.d, self.iz, self.delta)


class _Vec3:
    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        if len(coords) != 3:
            raise DomainError("classes have three coordinates")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("classes are immutable")

    def __add__(self, other):
        return type(self)([x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return type(self)([x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self):
        return type(self)([-x for x in self.coords])

    def __mul__(self, c):
        c = Fraction(c)
        return type(self)([c * x for x in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        return type(other) is type(self) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coords)})"


class CurveClass(_Vec3):
    """Coordinates in ([F], [F^], [C_G])."""

    __slots__ = ()


class DivisorClass(_Vec3):
    """Coordinates in ([E], [E^], [G])."""

    __slots__ = ()


def pairing_matrix(p: FamilyParams) -> List[List[Fraction]]:
    dd, ad = p.d * p.delta, p.a * p.delta
    return [
        [Fraction(-1), Fraction(1), Fraction(0)],
        [Fraction(1), Fraction(-1), Fraction(dd)],
        [Fraction(0), Fraction(1), Fraction(-ad)],
    ]


def pairing(D: DivisorClass, C: CurveClass, p: FamilyParams) -> Fraction:
    dd, ad = p.d * p.delta, p.a * p.delta
    x, y, z = D.coords
    # D^T M expanded by hand; integer entries keep Fraction work small
    row = (y - x, x - y + z, y * dd - z * ad)
    total = Fraction(0)
    for r, c in zip(row, C.coords):
        if r and c:
            total += r * c
    return total


def _solve3(M: List[List[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    aug = [list(M[i]) + [Fraction(rhs[i])] for i in range(3)]
    for col in range(3):
        piv = next((r for r in range(col, 3) if aug[r][col] != 0), None)
        if piv is None:
            raise ConsistencyError("pairing matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(3):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][3] / aug[i][i] for i in range(3)]


F = CurveClass((1, 0, 0))
F_HAT = CurveClass((0, 1, 0))
C_G = CurveClass((0, 0, 1))
E = DivisorClass((1, 0, 0))
E_HAT = DivisorClass((0, 1, 0))
G = DivisorClass((0, 0, 1))


@dataclass(frozen=True)
class ClassConstants:
    E: DivisorClass
    E_hat: DivisorClass
    G: DivisorClass
    G_hat: DivisorClass
    minus_K: DivisorClass
    F: CurveClass
    F_hat: CurveClass
    C_G: CurveClass
    C_G_hat: CurveClass
    V: CurveClass
    W_conic: CurveClass

    def divisors(self) -> Dict[str, DivisorClass]:
        return {"E": self.E, "E^": self.E_hat, "G": self.G, "G^": self.G_hat, "-K": self.minus_K}

    def curves(self) -> Dict[str, CurveClass]:
        return {
            "F": self.F,
            "F^": self.F_hat,
            "C_G": self.C_G,
            "C_G^": self.C_G_hat,
            "C_G+a*delta*F^": self.V,
        }


def class_constants(p: FamilyParams) -> ClassConstants:
    a, d, dl = p.a, p.d, p.delta
    C_G_hat = C_G + (a * dl) * F_HAT - ((d - a) * dl) * F
    G_hat = G + Fraction(a, d) * E_HAT - Fraction(d - a, d) * E
    # -K is pinned by its degrees on the curve basis
    M = pairing_matrix(p)
    Mt = [[M[i][j] for i in range(3)] for j in range(3)]
    minus_K = DivisorClass(_solve3(Mt, [1, 1, (p.iz - a) * dl]))
    return ClassConstants(
        E=E,
        E_hat=E_HAT,
        G=G,
        G_hat=G_hat,
        minus_K=minus_K,
        F=F,
        F_hat=F_HAT,
        C_G=C_G,
        C_G_hat=C_G_hat,
        V=C_G + (a * dl) * F_HAT,
        W_conic=F + F_HAT,
    )


def pairing_table(p: FamilyParams) -> Dict[str, Dict[str, Fraction]]:
    """Rows E, E^, G, G^, -K against the five curve columns."""
    k = class_constants(p)
    return {
        rn: {cn: pairing(D, C, p) for cn, C in k.curves().items()}
        for rn, D in k.divisors().items()
    }


@dataclass(frozen=True)
class Ray:
    name: str
    locus: str
    generator: CurveClass


@dataclass(frozen=True)
class ConeReport:
    extremal_rays: Tuple[Ray, ...]
    simplicial: bool
    is_fano: bool


def _rays(p: FamilyParams) -> Tuple[Ray, ...]:
    k = class_constants(p)
    r_f = Ray("F", "E", k.F)
    r_fh = Ray("F^", "E^", k.F_hat)
    r_g = Ray("C_G", "G", k.C_G)
    r_gh = Ray("C_G^", "G^", k.C_G_hat)
    if p.a == 0:
        return (r_f, r_fh, r_gh)
    if p.a >= p.d:
        return (r_f, r_fh, r_g)
    return (r_f, r_fh, r_g, r_gh)


def fano_criterion(p: FamilyParams) -> bool:
    return p.a <= p.iz - 1 and p.d - p.a <= p.iz - 1


def is_fano(p: FamilyParams) -> bool:
    """Fano criterion, cross-checked against -K being positive on every extremal ray."""
    k = class_constants(p)
    brute = all(pairing(k.minus_K, r.generator, p) > 0 for r in _rays(p))
    crit = fano_criterion(p)
    if brute != crit:
        raise ConsistencyError(f"Fano criterion {crit} disagrees with ray check {brute} at {p}")
    return crit


def extremal_rays(p: FamilyParams) -> ConeReport:
    rays = _rays(p)
    return ConeReport(rays, len(rays) == 3, is_fano(p))


_SWAP = {"E": "E^", "E^": "E", "G": "G^", "G^": "G", "-K": "-K",
         "F": "F^", "F^": "F", "C_G": "C_G^", "C_G^": "C_G"}


@dataclass(frozen=True)
class SwapRecord:
    params: FamilyParams
    partner: FamilyParams
    entries: Tuple[Tuple[str, str, Fraction, Fraction], ...]


def symmetry_swap(p: FamilyParams) -> SwapRecord:
    """Compare the table at ``a`` with the relabelled table at ``d - a``."""
    q = p.swapped()
    t_p, t_q = pairing_table(p), pairing_table(q)
    entries = []
    for rn in ("E", "E^", "G", "G^", "-K"):
        for cn in ("F", "F^", "C_G", "C_G^"):
            x, y = t_p[rn][cn], t_q[_SWAP[rn]][_SWAP[cn]]
            if x != y:
                raise ConsistencyError(f"swap mismatch at {rn}.{cn}: {x} vs {y}")
            entries.append((rn, cn, x, y))
    return SwapRecord(p, q, tuple(entries))


def check_relations(p: FamilyParams) -> bool:
    """Both numerical equivalences of the family, tested on every row and column."""
    k = class_constants(p)
    a, d, dl = p.a, p.d, p.delta
    lhs_c = k.C_G + (a * dl) * k.F_hat
    rhs_c = k.C_G_hat + ((d - a) * dl) * k.F
    for D in k.divisors().values():
        if pairing(D, lhs_c, p) != pairing(D, rhs_c, p):
            return False
    lhs_d = d * k.G + a * k.E_hat
    rhs_d = d * k.G_hat + (d - a) * k.E
    for C in k.curves().values():
        if pairing(lhs_d, C, p) != pairing(rhs_d, C, p):
            return False
    return True


def _positive_on_rays(p: FamilyParams, D: DivisorClass) -> Optional[Ray]:
    for r in _rays(p):
        if pairing(D, r.generator, p) <= 0:
            return r
    return None


def random_positive_divisor(p: FamilyParams, rng: random.Random, bound: int = 12, tries: int = 10000) -> DivisorClass:
    """Rejection-sample an integral divisor positive on every extremal ray."""
    for _ in range(tries):
        D = DivisorClass([rng.randint(-bound, bound) for _ in range(3)])
        if _positive_on_rays(p, D) is None:
            return D
    raise DomainError(f"no ray-positive divisor found for {p}")


def min_degree_comparison(p: FamilyParams, D: DivisorClass) -> int:
    """Sign of D.[V] - D.[W] for a divisor positive on the cone.

    When a*delta >= 2 and (d-a)*delta >= 2 the sign must be +1.
    """
    bad = _positive_on_rays(p, D)
    if bad is not None:
        raise DomainError(f"divisor is not positive on the ray {bad.name}")
    k = class_constants(p)
    diff = pairing(D, k.V, p) - pairing(D, k.W_conic, p)
    sign = (diff > 0) - (diff < 0)
    if p.a * p.delta >= 2 and (p.d - p.a) * p.delta >= 2 and sign <= 0:
        raise ConsistencyError(f"V is not heavier than W at {p} for {D}")
    return sign


@dataclass(frozen=True)
class FanoEntry:
    d: int
    a: int
    tau_isomorphism: bool


def classify_fano_threefolds() -> Tuple[FanoEntry, ...]:
    """Fano members with n = 3 (so i_Z = 3, delta = 1)."""
    iz = 3
    out = []
    # d - a <= iz - 1 and a <= iz - 1 force d <= 2(iz - 1); scan a margin past it
    for d in range(1, 2 * (iz - 1) + 3):
        for a in range(0, d + 1):
            if is_fano(FamilyParams(3, a, d, iz, 1)):
                out.append(FanoEntry(d, a, tau_is_isomorphism(d, a)))
    return tuple(out)
