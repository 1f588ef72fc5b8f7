"""Fibres of the linear projection of a hypersurface from a point.

A hypersurface ``A = {F = 0}`` in P^{m+1} is projected from a centre ``z``
off ``A``.  The fibre over a point is the scheme ``l ∩ A`` for the line ``l``
through ``z``, recorded as the multiset of intersection multiplicities.

For plane curves (m = 1) the lines through ``z`` form a pencil
``w = u*w1 + v*w2`` and the non-reduced fibres are the zeros of the binary
form ``Δ(u, v) = disc_x F(x*z + w)``.  Because the leading coefficient is the
constant ``F(z) != 0``, ``Δ`` is a single binary form of degree ``d(d-1)``.

Profiles over the (algebraic) roots of ``Δ`` are computed without locating
any root: Yun's algorithm is run over ``Q[v]/(q)`` for each squarefree factor
``q`` of ``Δ``, splitting ``q`` whenever a zero divisor turns up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    CenterOnHypersurfaceError,
    ConsistencyError,
    DomainError,
    NonGeneralCenterError,
    NonReducedCurveError,
)
from .exactpoly import (
    BinaryForm,
    HomogeneousForm,
    PrimeFieldPoly,
    UniPoly,
    discriminant,
    extended_gcd,
    interpolate,
    interpolate_mod_p,
    is_prime,
    parse_form,
    poly_gcd,
    restrict_to_line,
    squarefree_decomposition,
    sylvester_resultant,
)


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class Hypersurface:
    form: HomogeneousForm

    def __post_init__(self):
        if self.form.num_vars < 3:
            raise DomainError("need at least three variables (m >= 1)")
        if self.form.degree < 1:
            raise DomainError("hypersurface degree must be at least 1")

    @classmethod
    def parse(cls, text: str, num_vars: Optional[int] = None) -> "Hypersurface":
        return cls(parse_form(text, num_vars))

    @property
    def m(self) -> int:
        return self.form.num_vars - 2

    @property
    def ambient_dim(self) -> int:
        return self.form.num_vars - 1

    @property
    def degree(self) -> int:
        return self.form.degree


@dataclass(frozen=True)
class Center:
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if not coords or all(c == 0 for c in coords):
            raise DomainError("centre must have a nonzero coordinate")
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class FiberProfile:
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        hs = tuple(sorted((int(h) for h in self.multiplicities), reverse=True))
        if not hs or hs[-1] < 1:
            raise DomainError("profile entries must be positive")
        object.__setattr__(self, "multiplicities", hs)

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    def __iter__(self):
        return iter(self.multiplicities)

    def __len__(self):
        return len(self.multiplicities)

    @classmethod
    def simple_branch(cls, d: int) -> "FiberProfile":
        """The profile (2, 1, ..., 1) of a simple tangency."""
        return cls((2,) + (1,) * (d - 2))


def _as_center(z) -> Center:
    return z if isinstance(z, Center) else Center(tuple(z))


def _checked_center(A: Hypersurface, z) -> Center:
    z = _as_center(z)
    if len(z) != A.form.num_vars:
        raise DomainError(f"centre has {len(z)} coordinates, expected {A.form.num_vars}")
    if A.form.evaluate(z.coords) == 0:
        raise CenterOnHypersurfaceError("the centre lies on the hypersurface")
    return z


# ---------------------------------------------------------------------------
# single lines


def fiber_profile(A: Hypersurface, z, w: Sequence) -> FiberProfile:
    """Multiplicity profile of the line through ``z`` and ``w`` meeting ``A``."""
    z = _checked_center(A, z)
    g = restrict_to_line(A.form, z.coords, w)
    return FiberProfile(g.multiplicity_profile())


def _binary_gcd_degree(forms: Sequence[BinaryForm]) -> int:
    g = UniPoly(())
    inf = min(f.root_multiplicity_at_infinity() for f in forms)
    for f in forms:
        g = poly_gcd(g, f.dehomogenize())
    return max(g.degree, 0) + inf


def singular_count_on_line(A: Hypersurface, z, w: Sequence) -> int:
    """Degree of the common zero scheme of F and its partials along the line.

    Zero means ``A`` is smooth at every point of the line meeting it.
    """
    z = _checked_center(A, z)
    forms = [restrict_to_line(A.form, z.coords, w)]
    for dF in A.form.partials():
        if dF is None:
            continue
        f = dF.line_polynomial(z.coords, w)
        if not f.is_zero():
            forms.append(BinaryForm.from_unipoly(f, dF.degree))
    return _binary_gcd_degree(forms)


def corollary_bound(profile: FiberProfile, m: int) -> bool:
    """``sum(h // 2) <= m``, which every fibre of a general projection satisfies."""
    return sum(h // 2 for h in profile) <= m


def nodes_cusps_label(profile: FiberProfile) -> str:
    """Classify a profile against what a general surface projection shows.

    Only (2,1..), (2,2,1..) and (3,1..) are expected away from reduced fibres;
    this is a diagnostic, never an assertion.
    """
    hs = [h for h in profile if h > 1]
    if not hs:
        return "reduced"
    if hs == [2]:
        return "simple-tangent"
    if hs == [2, 2]:
        return "bitangent"
    if hs == [3]:
        return "flex"
    return "beyond-nodes-and-cusps"


# ---------------------------------------------------------------------------
# pencil discriminant (m = 1)


@dataclass(frozen=True)
class PencilReport:
    discriminant: BinaryForm
    degree_attained: bool
    is_squarefree: bool
    branch_count: int
    basis: Tuple[Tuple[int, ...], Tuple[int, ...]]
    center: Center

    def to_json(self) -> dict:
        return {
            "disc_degree": self.discriminant.degree,
            "degree_attained": self.degree_attained,
            "squarefree": self.is_squarefree,
            "branch_count": self.branch_count,
        }


def _pencil_basis(z: Center) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    # complete z to a basis with two standard vectors
    k = next(i for i, c in enumerate(z.coords) if c != 0)
    i, j = [x for x in range(3) if x != k]
    e = lambda n: tuple(1 if x == n else 0 for x in range(3))  # noqa: E731
    return e(i), e(j)


def _pencil_member(A: Hypersurface, z: Center, basis, u, v) -> UniPoly:
    """``x -> F(x*z + u*w1 + v*w2)``; degree d with leading coefficient F(z)."""
    w1, w2 = basis
    w = [u * a + v * b for a, b in zip(w1, w2)]
    return A.form.line_polynomial(w, z.coords)


def pencil_discriminant(A: Hypersurface, z) -> PencilReport:
    """Discriminant of the pencil of lines through ``z`` on a plane curve.

    ``Δ`` is obtained by exact evaluation at ``(1, k)``, ``k = 0..D``, and
    interpolation; two further evaluations are checked against the result.
    """
    if A.m != 1:
        raise DomainError(f"pencil discriminant needs a plane curve, got m = {A.m}")
    z = _checked_center(A, z)
    basis = _pencil_basis(z)
    d = A.degree
    D = d * (d - 1)
    disc = lambda u, v: discriminant(_pencil_member(A, z, basis, u, v))  # noqa: E731
    ks = list(range(D + 1))
    delta = interpolate(ks, [disc(1, k) for k in ks])
    if delta.is_zero():
        raise NonReducedCurveError("pencil discriminant vanishes identically")
    if disc(1, D + 1) != delta(D + 1) or disc(0, 1) != delta[D]:
        raise ConsistencyError("pencil discriminant failed its interpolation checks")
    Delta = BinaryForm.from_unipoly(delta, D)
    return PencilReport(
        discriminant=Delta,
        degree_attained=Delta.degree == D,
        is_squarefree=Delta.is_squarefree(),
        branch_count=Delta.distinct_root_count(),
        basis=basis,
        center=z,
    )


# -- dynamic evaluation over Q[v]/(q) ----------------------------------------


class _Split(Exception):
    def __init__(self, factor: UniPoly):
        super().__init__()
        self.factor = factor


class _Residue:
    """Polynomials in x over Q[v]/(q), q squarefree; raises _Split on zero divisors."""

    def __init__(self, q: UniPoly):
        self.q = q

    def strip(self, cs: List[UniPoly]) -> List[UniPoly]:
        cs = [c % self.q for c in cs]
        while cs:
            if cs[-1].is_zero():
                cs.pop()
                continue
            g = poly_gcd(cs[-1], self.q)
            if g.degree > 0:
                raise _Split(g)
            break
        return cs

    def inv(self, c: UniPoly) -> UniPoly:
        g, s, _ = extended_gcd(c, self.q)
        if g.degree > 0:
            raise _Split(g)
        return s % self.q

    def sub(self, a, b):
        n = max(len(a), len(b))
        zero = UniPoly(())
        return self.strip([(a[i] if i < len(a) else zero) - (b[i] if i < len(b) else zero) for i in range(n)])

    def derivative(self, a):
        return self.strip([a[i] * i for i in range(1, len(a))])

    def divmod(self, a, b):
        inv = self.inv(b[-1])
        rem = list(a)
        db = len(b) - 1
        quo = [UniPoly(())] * max(len(a) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = (rem[i] * inv) % self.q
            if c.is_zero():
                continue
            quo[i - db] = c
            for j, bj in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - c * bj) % self.q
        return self.strip(quo), self.strip(rem[:db])

    def monic(self, a):
        inv = self.inv(a[-1])
        return self.strip([c * inv for c in a])

    def gcd(self, a, b):
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.monic(a)

    def yun_profile(self, f) -> Tuple[int, ...]:
        f = self.monic(f)
        df = self.derivative(f)
        a0 = self.gcd(f, df)
        b = self.divmod(f, a0)[0]
        d = self.sub(self.divmod(df, a0)[0], self.derivative(b))
        out: List[int] = []
        k = 1
        while len(b) > 1:
            a = self.gcd(b, d)
            out.extend([k] * (len(a) - 1))
            b = self.divmod(b, a)[0]
            c = self.divmod(d, a)[0]
            d = self.sub(c, self.derivative(b))
            k += 1
        return tuple(sorted(out, reverse=True))


def _profiles_over(q: UniPoly, coeffs: List[UniPoly]) -> List[Tuple[UniPoly, Tuple[int, ...]]]:
    try:
        ring = _Residue(q)
        return [(q, ring.yun_profile(ring.strip(coeffs)))]
    except _Split as split:
        g = split.factor.monic()
        return _profiles_over(g, coeffs) + _profiles_over(q // g, coeffs)


@dataclass(frozen=True)
class BranchComponent:
    """A group of conjugate branch points sharing one fibre profile.

    ``factor`` is a squarefree binary form in (u, v) whose roots are the
    branch points; ``disc_multiplicity`` is their multiplicity in Δ.
    """

    factor: BinaryForm
    disc_multiplicity: int
    profile: FiberProfile
    root_count: int


def _pencil_coefficients(A: Hypersurface, z: Center, basis) -> List[UniPoly]:
    # F(x*z + w1 + v*w2) as a polynomial in x with coefficients in Q[v]
    w1, w2 = basis
    rows = [[z.coords[l], w1[l], w2[l]] for l in range(3)]
    G = A.form.substitute_linear(rows)
    by_x: Dict[int, Dict[int, Fraction]] = {}
    for (ex, _eu, ev), c in G.terms.items():
        by_x.setdefault(ex, {})[ev] = by_x.get(ex, {}).get(ev, Fraction(0)) + c
    return [
        UniPoly([by_x.get(k, {}).get(j, 0) for j in range(A.degree + 1)])
        for k in range(A.degree + 1)
    ]


def branch_fiber_profiles(A: Hypersurface, z, report: Optional[PencilReport] = None) -> List[BranchComponent]:
    """Fibre profiles over every root of the pencil discriminant."""
    z = _checked_center(A, z)
    if report is None:
        report = pencil_discriminant(A, z)
    Delta = report.discriminant
    coeffs = _pencil_coefficients(A, z, report.basis)
    out = []
    for k, q in squarefree_decomposition(Delta.dehomogenize()):
        for piece, prof in _profiles_over(q, coeffs):
            out.append(BranchComponent(BinaryForm.from_unipoly(piece), k, FiberProfile(prof), piece.degree))
    inf = Delta.root_multiplicity_at_infinity()
    if inf:
        member = _pencil_member(A, z, report.basis, 0, 1)
        prof = BinaryForm.from_unipoly(member).multiplicity_profile()
        out.append(BranchComponent(BinaryForm((1, 0)), inf, FiberProfile(prof), 1))
    return out


@dataclass(frozen=True)
class GeneralityResult:
    general: bool
    diagnostics: Tuple[str, ...]
    report: Optional[PencilReport] = None
    components: Tuple[BranchComponent, ...] = ()

    def __bool__(self):
        return self.general


def is_general_center(A: Hypersurface, z) -> GeneralityResult:
    """Certify the open conditions a general centre satisfies (m = 1).

    Δ must be squarefree of full degree d(d-1) and every branch fibre must
    have profile (2, 1, ..., 1).  Failing checks are named in ``diagnostics``.
    """
    z = _checked_center(A, z)
    try:
        report = pencil_discriminant(A, z)
    except NonReducedCurveError:
        return GeneralityResult(False, ("discriminant-vanishes",))
    comps = tuple(branch_fiber_profiles(A, z, report))
    diags = []
    if not report.degree_attained:
        diags.append("degree")
    if not report.is_squarefree:
        diags.append("squarefree")
    if A.degree >= 2:
        expected = FiberProfile.simple_branch(A.degree)
        if any(c.profile != expected for c in comps):
            diags.append("profile")
    return GeneralityResult(not diags, tuple(diags), report, comps)


# ---------------------------------------------------------------------------
# higher-dimensional centres via plane sections


def plane_section(A: Hypersurface, z, p1: Sequence, p2: Sequence) -> Optional[Hypersurface]:
    """Restrict ``A`` to the plane spanned by ``z, p1, p2``.

    In the returned plane curve the centre has coordinates (1, 0, 0).
    ``None`` means the plane lies inside ``A`` or the points are dependent.
    """
    z = _as_center(z)
    cols = [z.coords, tuple(Fraction(c) for c in p1), tuple(Fraction(c) for c in p2)]
    if _rank(cols) < 3:
        return None
    rows = [[cols[j][i] for j in range(3)] for i in range(len(z))]
    G = A.form.substitute_linear(rows)
    return Hypersurface(G) if G is not None else None


def _rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class SectionCertificate:
    general: bool
    diagnostics: Tuple[str, ...]
    profiles: Tuple[FiberProfile, ...] = field(default=())


def certify_center_by_sections(A: Hypersurface, z, rng: random.Random, planes: int = 2) -> SectionCertificate:
    """Run the pencil certification on random plane sections through ``z``.

    For m = 1 this is just :func:`is_general_center`.  The branch profiles
    seen along the way are returned for later auditing.
    """
    z = _checked_center(A, z)
    if A.m == 1:
        res = is_general_center(A, z)
        return SectionCertificate(res.general, res.diagnostics, tuple(c.profile for c in res.components))
    n = A.form.num_vars
    profiles: List[FiberProfile] = []
    done = 0
    while done < planes:
        p1 = [rng.randint(-9, 9) for _ in range(n)]
        p2 = [rng.randint(-9, 9) for _ in range(n)]
        C = plane_section(A, z, p1, p2)
        if C is None:
            continue
        res = is_general_center(C, (1, 0, 0))
        profiles.extend(c.profile for c in res.components)
        if not res.general:
            return SectionCertificate(False, res.diagnostics, tuple(profiles))
        done += 1
    return SectionCertificate(True, (), tuple(profiles))


@dataclass(frozen=True)
class CenterSample:
    center: Center
    certificate: SectionCertificate
    attempts: int


def sample_general_center(A: Hypersurface, rng: random.Random, tries: int = 10) -> CenterSample:
    """Draw centres until one is certified; the first candidate is (1, 2, 3, ...)."""
    n = A.form.num_vars
    last: Tuple[str, ...] = ()
    for attempt in range(1, tries + 1):
        if attempt == 1:
            coords = tuple(range(1, n + 1))
        else:
            coords = tuple(rng.randint(-20, 20) for _ in range(n))
        if all(c == 0 for c in coords) or A.form.evaluate(coords) == 0:
            last = ("on-hypersurface",)
            continue
        cert = certify_center_by_sections(A, coords, rng)
        if cert.general:
            return CenterSample(Center(coords), cert, attempt)
        last = cert.diagnostics
    raise NonGeneralCenterError(f"no certified centre after {tries} tries", last)


# ---------------------------------------------------------------------------
# Jacobian smoothness check modulo p (plane curves)


def _univariate_in_x0(terms: Dict[Tuple[int, ...], int], b: int, c: int, p: int) -> PrimeFieldPoly:
    out: Dict[int, int] = {}
    for (e0, e1, e2), coef in terms.items():
        out[e0] = (out.get(e0, 0) + coef * pow(b, e1, p) * pow(c, e2, p)) % p
    top = max(out, default=-1)
    return PrimeFieldPoly([out.get(i, 0) for i in range(top + 1)], p)


def plane_curve_smooth_mod_p(
    F: HomogeneousForm, p: int = 10007, rng: Optional[random.Random] = None
) -> Optional[bool]:
    """Certify smoothness of a plane curve through its reduction mod ``p``.

    Returns True when the reduction is smooth (hence so is the curve), and
    None when the test is inconclusive.  After a coordinate change making the
    ``x0^d`` coefficient a unit, the eliminants ``Res_x0(F_x0, F_x1)`` and
    ``Res_x0(F_x0, F_x2)`` are interpolated as binary forms; a singular point
    would be a common root.
    """
    if F.num_vars != 3:
        raise DomainError("the Jacobian check is implemented for plane curves")
    d = F.degree
    if d == 1:
        return True
    E = (d - 1) ** 2
    if not is_prime(p) or p <= max(d, E + 1):
        raise DomainError(f"modulus must be a prime above {max(d, E + 1)}")
    F.reduce_mod(p)
    rng = rng or random.Random(0)
    for attempt in range(20):
        r1, r2 = (0, 0) if attempt == 0 else (rng.randrange(p), rng.randrange(p))
        if F.evaluate((1, r1, r2)).numerator % p:
            break
    else:
        return None
    G = F.substitute_linear([[1, 0, 0], [r1, 1, 0], [r2, 0, 1]])
    parts = []
    for i in range(3):
        dG = G.partial(i)
        parts.append(dG.reduce_mod(p) if dG is not None else {})
    eliminants = []
    for j in (1, 2):
        vals = []
        for k in range(E + 1):
            f0 = _univariate_in_x0(parts[0], 1, k, p)
            gj = _univariate_in_x0(parts[j], 1, k, p)
            if gj.is_zero():
                vals.append(0)
                continue
            r = sylvester_resultant(f0, gj)
            vals.append(r * pow(pow(f0.lc, gj.degree, p), -1, p) % p)
        eliminants.append(interpolate_mod_p(list(range(E + 1)), vals, p))
    n12, n13 = eliminants
    if n12.is_zero() or n13.is_zero():
        return None
    if poly_gcd(n12, n13).degree > 0:
        return None
    if n12.degree < E and n13.degree < E:
        return None
    return True
