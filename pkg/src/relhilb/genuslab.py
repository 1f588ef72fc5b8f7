"""Genus of the relative Hilbert curve and the numerical VMRT predicates.

For a smooth plane curve of degree d projected from a general point, the
relative Hilbert scheme of ``a`` points is a smooth curve covering P^1 with
degree binom(d, a).  Its genus is computed by the closed formula, by the
symbolic Riemann-Hurwitz count, and from observed pencil data.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ConsistencyError, DomainError, NonGeneralCenterError
from .hilbfiber import degree_audit
from .projection import Hypersurface, is_general_center


def _check_range(d: int, a: int) -> None:
    if d < 1 or not 1 <= a <= d:
        raise DomainError(f"need 1 <= a <= d, got d = {d}, a = {a}")


def _half(n: int, what: str) -> int:
    if n % 2:
        raise ConsistencyError(f"{what} is odd ({n})")
    return n // 2


def hilb_genus(d: int, a: int) -> int:
    """g = 1 + binom(d, a) * (a(d - a) - 2) / 2."""
    _check_range(d, a)
    return 1 + _half(comb(d, a) * (a * (d - a) - 2), "binom(d,a)(a(d-a)-2)")


def hurwitz_genus(d: int, a: int) -> int:
    """Solve 2g - 2 = -2 binom(d, a) + d(d-1) binom(d-2, a-1)."""
    _check_range(d, a)
    ram = d * (d - 1) * comb(d - 2, a - 1) if d >= 2 else 0
    return _half(-2 * comb(d, a) + ram + 2, "2g")


@dataclass(frozen=True)
class GenusReport:
    d: int
    a: int
    cover_degree: int
    genus_formula: int
    genus_hurwitz: int
    branch_points: int
    ram_per_branch: int

    def __post_init__(self):
        if self.genus_formula != self.genus_hurwitz:
            raise ConsistencyError(
                f"genus mismatch: formula {self.genus_formula}, Hurwitz {self.genus_hurwitz}"
            )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "a": self.a,
            "cover_degree": self.cover_degree,
            "genus_formula": self.genus_formula,
            "genus_hurwitz": self.genus_hurwitz,
            "branch_points": self.branch_points,
            "ram_per_branch": self.ram_per_branch,
        }


def genus_report(d: int, a: int) -> GenusReport:
    """Symbolic report: d(d-1) simple branch points, binom(d-2, a-1) ramified points over each."""
    _check_range(d, a)
    return GenusReport(
        d=d,
        a=a,
        cover_degree=comb(d, a),
        genus_formula=hilb_genus(d, a),
        genus_hurwitz=hurwitz_genus(d, a),
        branch_points=d * (d - 1),
        ram_per_branch=comb(d - 2, a - 1) if d >= 2 else 0,
    )


def hurwitz_genus_from_data(A: Hypersurface, z, a: int) -> GenusReport:
    """Riemann-Hurwitz from the observed pencil of a certified centre.

    Ramification is read off the computed branch profiles through the
    degree audit, so a degenerate centre shows up as a mismatch even if it
    slipped past certification.
    """
    d = A.degree
    _check_range(d, a)
    cert = is_general_center(A, z)
    if not cert.general:
        raise NonGeneralCenterError("centre is not general for this curve", cert.diagnostics)
    total_ram = 0
    per_branch = set()
    for comp in cert.components:
        ram = degree_audit(comp.profile, a).ramification
        per_branch.add(ram)
        total_ram += comp.root_count * ram
    two_g_minus_2 = -2 * comb(d, a) + total_ram
    observed = _half(two_g_minus_2 + 2, "2g from data")
    if len(per_branch) > 1:
        raise ConsistencyError(f"branch points ramify unevenly: {sorted(per_branch)}")
    return GenusReport(
        d=d,
        a=a,
        cover_degree=comb(d, a),
        genus_formula=hilb_genus(d, a),
        genus_hurwitz=observed,
        branch_points=cert.report.branch_count,
        ram_per_branch=per_branch.pop() if per_branch else 0,
    )


def _check_vmrt(d: int, a: int) -> None:
    if d < 1 or not 0 <= a <= d:
        raise DomainError(f"need 0 <= a <= d, got d = {d}, a = {a}")


def vmrt_degree(d: int, a: int) -> int:
    """Degree binom(d, a) of the VMRT hypersurface."""
    _check_vmrt(d, a)
    return comb(d, a)


def plane_vmrt_arith_genus(B: int) -> int:
    """Arithmetic genus (B-1)(B-2)/2 of a plane curve of degree B."""
    if B < 1:
        raise DomainError("plane curve degree must be positive")
    return (B - 1) * (B - 2) // 2


def tau_is_isomorphism(d: int, a: int) -> bool:
    _check_vmrt(d, a)
    return a in (0, 1, d - 1, d)


def iso_obstruction_identity(d: int, a: int) -> bool:
    """binom(d, a) == a(d - a) + 1, forced if tau were an isomorphism in the plane case."""
    _check_vmrt(d, a)
    return comb(d, a) == a * (d - a) + 1


def branch_curve_nodes(d: int) -> int:
    """Nodes of the branch curve of a general surface projection: d(d-1)(d-2)(d-3)/2."""
    if d < 1:
        raise DomainError("degree must be positive")
    return d * (d - 1) * (d - 2) * (d - 3) // 2
