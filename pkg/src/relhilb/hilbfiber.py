"""Fibres of the relative Hilbert scheme of ``a`` points over a line.

Over a line ``l`` with ``l ∩ A = h_1 p_1 + ... + h_r p_r`` the points of the
fibre are the sub-divisors ``W = k_1 p_1 + ... + k_r p_r`` with
``0 <= k_i <= h_i`` and ``sum k_i = a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, List, Sequence, Tuple, Union

from .errors import ConsistencyError, DomainError, UnsupportedProfileError
from .projection import FiberProfile


@dataclass(frozen=True)
class SubschemeSelector:
    """A point ``W = sum k_i p_i`` of the fibre; ``k`` is aligned with ``profile``."""

    profile: FiberProfile
    k: Tuple[int, ...]

    def __post_init__(self):
        k = tuple(int(x) for x in self.k)
        if len(k) != len(self.profile):
            raise DomainError("selector length differs from the profile")
        if any(not 0 <= ki <= hi for ki, hi in zip(k, self.profile)):
            raise DomainError(f"selector {k} exceeds profile {self.profile.multiplicities}")
        object.__setattr__(self, "k", k)

    @property
    def a(self) -> int:
        return sum(self.k)

    def complement(self) -> "SubschemeSelector":
        return SubschemeSelector(self.profile, tuple(h - k for h, k in zip(self.profile, self.k)))


def _selectors(hs: Sequence[int], a: int) -> Iterator[Tuple[int, ...]]:
    if not hs:
        if a == 0:
            yield ()
        return
    rest = sum(hs[1:])
    for k in range(min(hs[0], a), max(0, a - rest) - 1, -1):
        for tail in _selectors(hs[1:], a - k):
            yield (k,) + tail


def enumerate_fiber_points(profile: FiberProfile, a: int) -> List[SubschemeSelector]:
    """All selectors of total ``a``, in descending lexicographic order."""
    if not 1 <= a <= profile.degree:
        raise DomainError(f"a = {a} outside 1..{profile.degree}")
    return [SubschemeSelector(profile, k) for k in _selectors(profile.multiplicities, a)]


def tangent_dim(selector: SubschemeSelector) -> int:
    """Dimension of the tangent space of the fibre at ``W``."""
    return sum(min(k, h - k) for h, k in zip(selector.profile, selector.k))


def pi_smooth_at(selector: SubschemeSelector) -> bool:
    """Smoothness of the projection at ``W``: W must be a union of components."""
    return all(k in (0, h) for h, k in zip(selector.profile, selector.k))


def punctual_hom_ext_dim(h: int, k: int) -> int:
    """dim Hom(I_W, O_W) = dim Ext^1(I_W, O_W) for W of length k in a length-h point."""
    if not 1 <= k <= h:
        raise DomainError(f"k = {k} outside 1..{h}")
    return min(k, h - k)


def _nullity(rows: List[List[Fraction]], ncols: int) -> int:
    rank = 0
    rows = [list(r) for r in rows]
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return ncols - rank


def brute_hom_dim(h: int, k: int) -> int:
    """Hom of Λ-modules from t^k Λ to Λ / t^k Λ, Λ = Q[t]/(t^h), by linear algebra.

    Both modules are written in their monomial bases (t^k..t^{h-1} and
    1..t^{k-1}); a linear map ``M`` is a homomorphism iff it commutes with
    multiplication by ``t``.  The answer is the nullity of that system.
    """
    if not 1 <= k <= h:
        raise DomainError(f"k = {k} outside 1..{h}")
    if h > 8:
        raise DomainError("brute force is capped at h <= 8")
    src, dst = h - k, k
    if src == 0:
        return 0

    def shift(n):
        # multiplication by t on a truncated monomial basis of length n
        return [[Fraction(1) if i == j + 1 else Fraction(0) for j in range(n)] for i in range(n)]

    T_src, T_dst = shift(src), shift(dst)
    # unknowns M[i][j], i < dst, j < src; constraint M T_src - T_dst M = 0
    idx = lambda i, j: i * src + j  # noqa: E731
    rows = []
    for i in range(dst):
        for j in range(src):
            row = [Fraction(0)] * (dst * src)
            for l in range(src):
                if T_src[l][j]:
                    row[idx(i, l)] += T_src[l][j]
            for l in range(dst):
                if T_dst[i][l]:
                    row[idx(l, j)] -= T_dst[i][l]
            rows.append(row)
    return _nullity(rows, dst * src)


def _admissible(profile: FiberProfile) -> bool:
    hs = profile.multiplicities
    return all(h <= 2 for h in hs) and hs.count(2) <= 1


def ramification_index(selector: SubschemeSelector) -> int:
    """Local degree of the projection at ``W`` over an admissible profile.

    2 when ``W`` contains the double point with multiplicity one, else 1.
    """
    if not _admissible(selector.profile):
        raise UnsupportedProfileError(
            f"ramification index unknown for profile {selector.profile.multiplicities}"
        )
    for h, k in zip(selector.profile, selector.k):
        if h == 2 and k == 1:
            return 2
    return 1


@dataclass(frozen=True)
class FiberPointReport:
    selector: SubschemeSelector
    tangent_dim: int
    pi_smooth: bool
    ram_index: Union[int, str]

    def to_json(self) -> dict:
        return {
            "k": list(self.selector.k),
            "tangent_dim": self.tangent_dim,
            "smooth": self.pi_smooth,
            "ram_index": self.ram_index,
        }


def fiber_point_report(selector: SubschemeSelector) -> FiberPointReport:
    ram: Union[int, str] = (
        ramification_index(selector) if _admissible(selector.profile) else "unknown"
    )
    return FiberPointReport(selector, tangent_dim(selector), pi_smooth_at(selector), ram)


@dataclass(frozen=True)
class DegreeAudit:
    profile: FiberProfile
    a: int
    points: Tuple[FiberPointReport, ...]
    total: int

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(p.ram_index for p in self.points)

    @property
    def ramification(self) -> int:
        """Contribution sum(e - 1) of this fibre to Riemann-Hurwitz."""
        return sum(e - 1 for e in self.indices)


def degree_audit(profile: FiberProfile, a: int) -> DegreeAudit:
    """Check that local degrees over the fibre add up to binom(d, a)."""
    if not _admissible(profile):
        raise UnsupportedProfileError(
            f"degree audit needs an admissible profile, got {profile.multiplicities}"
        )
    points = tuple(fiber_point_report(s) for s in enumerate_fiber_points(profile, a))
    total = sum(p.ram_index for p in points)
    if total != comb(profile.degree, a):
        raise ConsistencyError(f"fibre degree {total} differs from binom({profile.degree}, {a})")
    return DegreeAudit(profile, a, points, total)


def ramification_count_over_branch(d: int, a: int) -> int:
    """Number of ramified points over a simple branch point: binom(d-2, a-1)."""
    if d < 2 or not 1 <= a <= d:
        raise DomainError(f"need d >= 2 and 1 <= a <= d, got d = {d}, a = {a}")
    return comb(d - 2, a - 1)
