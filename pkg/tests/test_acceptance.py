"""The eight acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line; the lines are repeated in the
terminal summary so a plain ``pytest`` run shows them together.
"""

import random
import time

from relhilb.genuslab import hilb_genus, hurwitz_genus, hurwitz_genus_from_data, plane_vmrt_arith_genus, vmrt_degree
from relhilb.hilbfiber import brute_hom_dim, degree_audit, punctual_hom_ext_dim
from relhilb.monodromy import EVIDENCE, run_monodromy
from relhilb.moricone import (
    FamilyParams,
    check_relations,
    class_constants,
    classify_fano_threefolds,
    extremal_rays,
    fano_criterion,
    is_fano,
    pairing,
    pairing_table,
    symmetry_swap,
)
from relhilb.projection import (
    FiberProfile,
    Hypersurface,
    corollary_bound,
    fiber_profile,
    is_general_center,
    sample_general_center,
    singular_count_on_line,
)


def fmt(coords):
    return "(" + ", ".join(str(c) for c in coords) + ")"


def test_criterion_1_genus_sweep(criterion):
    start = time.perf_counter()
    bad = [(d, a) for d in range(1, 13) for a in range(1, d + 1) if hilb_genus(d, a) != hurwitz_genus(d, a)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    assert criterion(1, "genus identity sweep d <= 12", ok, f"{elapsed:.3f}s, mismatches {bad}")


def test_criterion_2_pinned_values(criterion):
    got = (vmrt_degree(4, 2), hilb_genus(4, 2), hurwitz_genus(4, 2), plane_vmrt_arith_genus(vmrt_degree(4, 2)))
    assert criterion(2, "(4,2) cover degree 6, genus 7, arithmetic genus 10", got == (6, 7, 7, 10), str(got))


def test_criterion_3_fermat_pencil(criterion):
    start = time.perf_counter()
    A = Hypersurface.parse("x0^4 + x1^4 + x2^4")
    sample = sample_general_center(A, random.Random(0), tries=10)
    res = is_general_center(A, sample.center)
    rep = res.report
    profiles = [c.profile.multiplicities for c in res.components]
    audits = [degree_audit(FiberProfile(p), a).total for p in profiles for a in range(1, 5)]
    genus = hurwitz_genus_from_data(A, sample.center, 2).genus_hurwitz
    elapsed = time.perf_counter() - start
    ok = (
        res.general
        and rep.discriminant.degree == 12
        and rep.is_squarefree
        and rep.branch_count == 12
        and all(p == (2, 1, 1) for p in profiles)
        and audits == [4, 6, 4, 1] * len(profiles)
        and degree_audit(FiberProfile((2, 1, 1)), 2).total == 6
        and genus == 7
        and elapsed < 10.0
    )
    detail = f"center {fmt(sample.center.coords)} after {sample.attempts} tries, genus {genus}, {elapsed:.2f}s"
    assert criterion(3, "Fermat quartic pencil end to end", ok, detail)


def test_criterion_4_punctual_oracle(criterion):
    bad = [(h, k) for h in range(1, 9) for k in range(1, h + 1) if punctual_hom_ext_dim(h, k) != brute_hom_dim(h, k)]
    assert criterion(4, "punctual Hom/Ext formula vs brute force, h <= 8", not bad, f"mismatches {bad}")


TABLE = {
    "E": [-1, 1, 0, 4, 2],
    "E^": [1, -1, 4, 0, 2],
    "G": [0, 1, -2, 0, 0],
    "G^": [1, 0, 0, -2, 0],
    "-K": [1, 1, 1, 1, 3],
}


def test_criterion_5_cone_consistency(criterion):
    start = time.perf_counter()
    table = pairing_table(FamilyParams(3, 2, 4, 3, 1))
    table_ok = all(list(table[r].values()) == v for r, v in TABLE.items())
    rng = random.Random(2024)
    rel_ok = fano_ok = True
    for _ in range(1000):
        d = rng.randint(1, 15)
        p = FamilyParams(rng.randint(3, 10), rng.randint(0, d + 3), d, rng.randint(1, 10), rng.randint(1, 5))
        rel_ok &= check_relations(p)
        k = class_constants(p)
        brute = all(pairing(k.minus_K, r.generator, p) > 0 for r in extremal_rays(p).extremal_rays)
        fano_ok &= fano_criterion(p) == brute == is_fano(p)
    swaps = sum(len(symmetry_swap(FamilyParams(3, a, d)).entries) for d in range(1, 21) for a in range(d + 1))
    elapsed = time.perf_counter() - start
    ok = table_ok and rel_ok and fano_ok and elapsed < 5.0
    detail = f"table {table_ok}, relations {rel_ok}, fano {fano_ok}, {swaps} swap entries, {elapsed:.2f}s"
    assert criterion(5, "intersection table, relations, Fano check, swap", ok, detail)


def test_criterion_6_fano_classification(criterion):
    entries = classify_fano_threefolds()
    pairs = {(e.d, e.a) for e in entries}
    flagged = [(e.d, e.a) for e in entries if not e.tau_isomorphism]
    expected = {(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1), (3, 2), (4, 2)}
    ok = len(entries) == 8 and pairs == expected and flagged == [(4, 2)]
    assert criterion(6, "eight Fano threefolds, (4,2) the only non-isomorphism", ok, str(sorted(pairs)))


def test_criterion_7_corollary_bound(criterion):
    S = Hypersurface.parse("x0^4 + x1^4 + x2^4 + x3^4")
    rng = random.Random(7)
    sample = sample_general_center(S, rng, tries=10)
    z = sample.center.coords
    profiles = list(sample.certificate.profiles)
    smooth = True
    for _ in range(200):
        w = [rng.randint(-20, 20) for _ in range(4)]
        while all(c == 0 for c in w):
            w = [rng.randint(-20, 20) for _ in range(4)]
        profiles.append(fiber_profile(S, z, w))
        smooth &= singular_count_on_line(S, z, w) == 0
    violations = [p.multiplicities for p in profiles if not corollary_bound(p, 2)]
    ok = smooth and not violations and len(profiles) >= 200
    detail = f"{len(profiles)} profiles at center {fmt(z)}, violations {violations}"
    assert criterion(7, "sum floor(h/2) <= 2 on a quartic surface", ok, detail)


def test_criterion_8_monodromy(criterion):
    start = time.perf_counter()
    A = Hypersurface.parse("x0^4 + x1^4 + x2^4")
    z = sample_general_center(A, random.Random(0)).center
    seeds = (1, 2)
    for seed in seeds:
        rep = run_monodromy(A, z, 200, seed=seed).report
        if rep.verdict == EVIDENCE:
            break
    elapsed = time.perf_counter() - start
    ok = rep.verdict == EVIDENCE and elapsed < 10.0
    detail = f"seed {seed}, {rep.samples_used} used, {rep.discarded} discarded, {elapsed:.2f}s"
    assert criterion(8, "Fermat quartic monodromy evidence", ok, detail)
