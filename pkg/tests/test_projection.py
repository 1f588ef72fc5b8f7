import random
from fractions import Fraction

import pytest
import sympy as sp

from conftest import sylvester_det

from relhilb.errors import CenterOnHypersurfaceError, DomainError, NonGeneralCenterError
from relhilb.exactpoly import BinaryForm, discriminant, parse_form
from relhilb.projection import (
    Center,
    FiberProfile,
    Hypersurface,
    branch_fiber_profiles,
    certify_center_by_sections,
    corollary_bound,
    fiber_profile,
    is_general_center,
    nodes_cusps_label,
    pencil_discriminant,
    plane_curve_smooth_mod_p,
    plane_section,
    sample_general_center,
    singular_count_on_line,
)

# smooth plane quartic whose line x2 = 0 meets it in one point of multiplicity 4
HYPERFLEX = "x0^4 - 4*x0^3*x1 + 6*x0^2*x1^2 - 4*x0*x1^3 + x1^4 + x0^3*x2 + x1^3*x2 + x2^4"


def sympy_pencil_discriminant(A, z, basis):
    """Δ(1, v) via sympy: Sylvester-style discriminant of F(x z + w1 + v w2) in x."""
    x, v = sp.symbols("x v")
    w1, w2 = basis
    pt = [x * zi + a + v * b for zi, a, b in zip(z, w1, w2)]
    expr = sum(c * sp.prod([pt[i] ** e for i, e in enumerate(exp)]) for exp, c in A.form.terms.items())
    P = sp.Poly(sp.expand(expr), x)
    n = P.degree()
    dP = P.diff(x)
    res = sp.expand(sylvester_det(P.all_coeffs()[::-1], dP.all_coeffs()[::-1]))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sp.Poly(sp.expand(sign * res / P.LC()), v)


# -- fibre profiles ------------------------------------------------------------


def test_fermat_generic_line_is_reduced(fermat):
    z, w = (1, 2, 3), (2, -1, 5)
    g = fermat.form.line_polynomial(z, w)
    assert discriminant(g) != 0
    assert fiber_profile(fermat, z, w) == FiberProfile((1, 1, 1, 1))


def test_total_degeneration_profile():
    H = Hypersurface.parse(HYPERFLEX)
    assert plane_curve_smooth_mod_p(H.form) is True
    assert fiber_profile(H, (1, 0, 0), (0, 1, 0)) == FiberProfile((4,))


@pytest.mark.parametrize(
    "text, w",
    [("x1^2*x2^2", (0, 1, 1)), ("x1^4 - x1^2*x2^2", (0, 1, 2))],
)
def test_centre_on_curve_is_rejected(text, w):
    # both forms vanish at (1, 0, 0), so it cannot serve as a centre
    A = Hypersurface(parse_form(text, 3))
    with pytest.raises(CenterOnHypersurfaceError):
        fiber_profile(A, (1, 0, 0), w)


def test_profile_invariant_under_rescaling(fermat):
    rng = random.Random(4)
    for _ in range(25):
        z = [rng.randint(-5, 5) for _ in range(3)]
        w = [rng.randint(-5, 5) for _ in range(3)]
        if fermat.form.evaluate(z) == 0 or all(z[i] * w[j] == z[j] * w[i] for i in range(3) for j in range(3)):
            continue
        base = fiber_profile(fermat, z, w)
        assert base.degree == 4
        c = Fraction(rng.randint(1, 7), rng.randint(1, 7)) * rng.choice([-1, 1])
        assert fiber_profile(fermat, [c * x for x in z], w) == base
        assert fiber_profile(fermat, z, [c * x for x in w]) == base
        assert fiber_profile(Hypersurface(fermat.form.scale(c)), z, w) == base


def test_profile_type_invariants():
    assert FiberProfile((1, 2, 1)).multiplicities == (2, 1, 1)
    with pytest.raises(DomainError):
        FiberProfile((2, 0))
    with pytest.raises(DomainError):
        Center((0, 0, 0))


# -- singular points along a line ---------------------------------------------


def test_singular_count_smooth_examples(fermat):
    assert singular_count_on_line(fermat, (1, 2, 3), (0, 1, 0)) == 0
    conic = Hypersurface.parse("x0^2+x1^2+x2^2")
    for w in [(0, 1, 0), (1, 1, 5), (3, -2, 1)]:
        assert singular_count_on_line(conic, (1, 2, 3), w) == 0


def test_singular_count_detects_singular_point():
    A = Hypersurface(parse_form("x1^2*x2", 3))
    # the line (t, 1, 1) meets A only at (1:0:0), where A is singular
    assert singular_count_on_line(A, (0, 1, 1), (1, 0, 0)) == 2


# -- pencil discriminant --------------------------------------------------------


def test_pencil_of_a_line():
    L = Hypersurface.parse("x0 + 2*x1 - x2")
    rep = pencil_discriminant(L, (1, 0, 0))
    assert rep.discriminant.degree == 0
    assert rep.degree_attained and rep.is_squarefree and rep.branch_count == 0
    assert is_general_center(L, (1, 0, 0)).general


def test_pencil_of_a_conic():
    C = Hypersurface.parse("x0^2 + x1^2 - x2^2")
    z = (1, 2, 5)
    rep = pencil_discriminant(C, z)
    assert rep.discriminant.degree == 2
    assert rep.is_squarefree and rep.branch_count == 2
    # F(x z + e1 + v e2) is a quadratic in x; compare with the determinant formula
    expected = sympy_pencil_discriminant(C, z, rep.basis)
    assert rep.discriminant.dehomogenize().coeffs == tuple(
        Fraction(int(c)) for c in reversed(expected.all_coeffs())
    )


def test_fermat_centre_123_sits_on_a_bitangent(fermat):
    rep = pencil_discriminant(fermat, (1, 2, 3))
    assert rep.discriminant.degree == 12
    assert not rep.is_squarefree
    assert rep.branch_count == 11
    expected = sympy_pencil_discriminant(fermat, (1, 2, 3), rep.basis)
    assert rep.discriminant.dehomogenize().coeffs == tuple(
        Fraction(int(c)) for c in reversed(expected.all_coeffs())
    )
    # the double root v = 1 is the line x2 = x0 + x1, a bitangent:
    # x0^4 + x1^4 + (x0 + x1)^4 = 2 (x0^2 + x0 x1 + x1^2)^2
    x0, x1 = sp.symbols("x0 x1")
    assert sp.expand(x0**4 + x1**4 + (x0 + x1) ** 4 - 2 * (x0**2 + x0 * x1 + x1**2) ** 2) == 0
    res = is_general_center(fermat, (1, 2, 3))
    assert not res.general
    assert "squarefree" in res.diagnostics and "profile" in res.diagnostics
    profiles = sorted((c.profile.multiplicities, c.root_count) for c in res.components)
    assert profiles == [((2, 1, 1), 10), ((2, 2), 1)]


def test_certified_fermat_centre(fermat, fermat_center):
    res = is_general_center(fermat, fermat_center)
    assert res.general and res.diagnostics == ()
    assert res.report.discriminant.degree == 12
    assert res.report.is_squarefree and res.report.branch_count == 12
    assert all(c.profile == FiberProfile((2, 1, 1)) for c in res.components)
    assert sum(c.root_count for c in res.components) == 12


def test_resampling_skips_the_bitangent_centre(fermat):
    sample = sample_general_center(fermat, random.Random(0))
    assert sample.attempts >= 2
    assert sample.center.coords != (1, 2, 3)


def test_hyperflex_centre_is_not_general():
    H = Hypersurface.parse(HYPERFLEX)
    res = is_general_center(H, (1, 0, 0))
    assert not res.general
    assert "profile" in res.diagnostics
    assert FiberProfile((4,)) in [c.profile for c in res.components]


def test_branch_profiles_against_sympy_factorisation(fermat):
    # conjugate branch points share a profile; compare with sympy at the rational one
    comps = branch_fiber_profiles(fermat, (1, 2, 3))
    rational = [c for c in comps if c.root_count == 1]
    assert len(rational) == 1
    v0 = -rational[0].factor.coeffs[0]  # factor is v - v0
    x = sp.symbols("x")
    P = sp.expand(x**4 + (2 * x + 1) ** 4 + (3 * x + v0) ** 4)
    mults = sorted(
        (m for f, m in sp.factor_list(P)[1] for _ in range(sp.degree(f, x))), reverse=True
    )
    assert rational[0].profile == FiberProfile(tuple(mults))


def test_root_at_infinity_of_pencil():
    # the pencil through (1:0:0) uses e1, e2; the member u = 0 is the line x1 = 0,
    # on which F restricts to (x0 - x2)^2
    C = Hypersurface.parse("x0^2 - 2*x0*x2 + x2^2 + x1^2 + x0*x1")
    z = (1, 0, 0)
    rep = pencil_discriminant(C, z)
    assert rep.discriminant.root_multiplicity_at_infinity() == 1
    comps = branch_fiber_profiles(C, z, rep)
    assert sum(c.root_count for c in comps) == rep.branch_count == 2
    assert all(c.profile == FiberProfile((2,)) for c in comps)
    assert is_general_center(C, z).general


def test_non_reduced_curve_reports_vanishing_discriminant():
    A = Hypersurface(parse_form("x1^2", 3))
    res = is_general_center(A, (1, 1, 0))
    assert not res.general and res.diagnostics == ("discriminant-vanishes",)


def test_pencil_needs_plane_curve():
    S = Hypersurface.parse("x0^2 + x1^2 + x2^2 + x3^2")
    with pytest.raises(DomainError):
        pencil_discriminant(S, (1, 0, 0, 0))


# -- corollary bound -------------------------------------------------------------


def test_corollary_bound_examples():
    assert corollary_bound(FiberProfile((2, 1, 1)), 1)
    assert not corollary_bound(FiberProfile((2, 2)), 1)
    assert corollary_bound(FiberProfile((3, 2, 2, 1)), 3)


def test_nodes_cusps_labels():
    assert nodes_cusps_label(FiberProfile((1, 1, 1))) == "reduced"
    assert nodes_cusps_label(FiberProfile((2, 1, 1))) == "simple-tangent"
    assert nodes_cusps_label(FiberProfile((2, 2))) == "bitangent"
    assert nodes_cusps_label(FiberProfile((3, 1))) == "flex"
    assert nodes_cusps_label(FiberProfile((4,))) == "beyond-nodes-and-cusps"


# -- surfaces and smoothness certificates ----------------------------------------


def test_plane_section_puts_centre_at_origin():
    S = Hypersurface.parse("x0^4 + x1^4 + x2^4 + x3^4")
    C = plane_section(S, (1, 2, 3, 4), (1, 0, 0, 0), (0, 1, 0, 0))
    assert C.m == 1 and C.degree == 4
    assert C.form.evaluate((1, 0, 0)) == S.form.evaluate((1, 2, 3, 4))
    assert plane_section(S, (1, 2, 3, 4), (2, 4, 6, 8), (0, 1, 0, 0)) is None


def test_surface_centre_certification():
    S = Hypersurface.parse("x0^4 + x1^4 + x2^4 + x3^4")
    cert = certify_center_by_sections(S, (1, 2, 3, 4), random.Random(1))
    assert cert.general
    assert all(p == FiberProfile((2, 1, 1)) for p in cert.profiles)


def test_sampling_gives_up_after_bounded_tries():
    A = Hypersurface(parse_form("x1^2", 3))
    with pytest.raises(NonGeneralCenterError) as info:
        sample_general_center(A, random.Random(0), tries=3)
    assert info.value.to_json()["hint"]


def test_jacobian_check_mod_p():
    assert plane_curve_smooth_mod_p(parse_form("x0^4 + x1^4 + x2^4")) is True
    assert plane_curve_smooth_mod_p(parse_form("x0^2 + x1^2 + x2^2")) is True
    assert plane_curve_smooth_mod_p(parse_form("x1^2*x2 - x0^3")) is None  # cusp
    assert plane_curve_smooth_mod_p(parse_form("x1^2*x2 - x0^3 - x0^2*x2")) is None  # node
    assert plane_curve_smooth_mod_p(parse_form("x0^3 + x1^3 + x2^3 + x0*x1*x2")) is True
    # (1:0:0) is a node of this cubic
    assert plane_curve_smooth_mod_p(parse_form("x1^3 + x2^3 + x0*x1*x2", 3)) is None
    with pytest.raises(DomainError):
        plane_curve_smooth_mod_p(parse_form("x0^4 + x1^4 + x2^4 + x3^4"))
