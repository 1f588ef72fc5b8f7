import pytest

from relhilb.errors import DomainError
from relhilb.exactpoly import PrimeFieldPoly
from relhilb.monodromy import (
    EVIDENCE,
    INCONCLUSIVE,
    CycleType,
    Discard,
    frobenius_sample,
    run_monodromy,
    symmetric_group_witness,
)
from relhilb.projection import Hypersurface


def product_of_pieces(ct, p):
    out = PrimeFieldPoly([1], p)
    for _, g in ct.pieces:
        out = out * g
    return out


def test_samples_multiply_back(fermat, fermat_center):
    seen = 0
    for p in (5, 7, 11, 13, 101, 499):
        for s in range(min(p, 12)):
            ct = frobenius_sample(fermat, fermat_center, p, s)
            if isinstance(ct, Discard):
                continue
            seen += 1
            assert ct.degree == 4
            f = ct.polynomial
            assert product_of_pieces(ct, p) == f.monic()
            for k, g in ct.pieces:
                assert g.degree % k == 0
    assert seen > 30


def test_fermat_partitions_at_sample_center(fermat):
    for p in (11, 13, 29):
        for s in range(2, 6):
            ct = frobenius_sample(fermat, (1, 2, 3), p, s)
            assert isinstance(ct, Discard) or sum(ct.partition) == 4


def test_bitangent_member_is_discarded(fermat):
    # with s = 1 the member through (1:2:3) is the bitangent x2 = x0 + x1
    # F(1,2,3) = 98 = 2*7^2, so 7 is avoided
    for p in (5, 11, 13, 101):
        out = frobenius_sample(fermat, (1, 2, 3), p, 1)
        assert out == Discard("not-squarefree", p, 1)


def test_degree_one_always_trivial():
    line = Hypersurface.parse("x0 + x1 + 3*x2")
    # F(1,1,2) = 8 is a unit modulo every odd prime
    for p in (3, 5, 7, 11):
        for s in range(p):
            out = frobenius_sample(line, (1, 1, 2), p, s)
            assert isinstance(out, CycleType) and out.partition == (1,)


def test_bad_primes(fermat):
    assert frobenius_sample(fermat, (1, 2, 3), 9, 1).reason == "not-prime"
    assert frobenius_sample(fermat, (1, 2, 3), 3, 1).reason == "prime-not-above-degree"
    half = Hypersurface.parse("x0^4 + 1/7*x1^4 + x2^4")
    assert frobenius_sample(half, (1, 2, 3), 7, 1).reason == "denominator-divisible-by-p"
    # F(1,1,0) = 2 vanishes only mod 2; F(1,2,0) = 17
    assert frobenius_sample(fermat, (1, 2, 0), 17, 1).reason == "center-on-reduction"


def test_surfaces_refused():
    S = Hypersurface.parse("x0^2 + x1^2 + x2^2 + x3^2")
    with pytest.raises(DomainError):
        frobenius_sample(S, (1, 0, 0, 1), 7, 1)


def test_witness_examples():
    four = [CycleType((4,)), CycleType((2, 1, 1)), CycleType((3, 1))]
    assert symmetric_group_witness(four, 4).verdict == EVIDENCE
    ident = [CycleType((1, 1, 1, 1))] * 10
    assert symmetric_group_witness(ident, 4).verdict == INCONCLUSIVE
    assert symmetric_group_witness([CycleType((2,))], 2).verdict == EVIDENCE
    assert symmetric_group_witness([CycleType((1,))], 1).verdict == EVIDENCE


def test_dihedral_types_are_inconclusive():
    # D4 contains 4-cycles and transpositions, so the prime 3-cycle is needed
    rep = symmetric_group_witness([CycleType((4,)), CycleType((2, 1, 1))], 4)
    assert rep.long_prime_applicable and not rep.seen_long_prime_cycle
    assert rep.verdict == INCONCLUSIVE


def test_prime_condition_waived_when_absent():
    # d = 9 still needs a 5- or 7-cycle; d = 3 has no prime in (3/2, 3)
    rep = symmetric_group_witness([CycleType((9,)), CycleType((2, 1) + (1,) * 6)], 9)
    assert rep.verdict == INCONCLUSIVE
    rep = symmetric_group_witness([CycleType((3,)), CycleType((2, 1))], 3)
    assert not rep.long_prime_applicable and rep.verdict == EVIDENCE


def test_witness_rejects_wrong_degree():
    with pytest.raises(DomainError):
        symmetric_group_witness([CycleType((3, 1))], 5)
    with pytest.raises(DomainError):
        CycleType((2, 0))


def test_partition_is_normalised():
    assert CycleType((1, 3, 2)).partition == (3, 2, 1)


def test_run_is_reproducible(fermat, fermat_center):
    a = run_monodromy(fermat, fermat_center, 60, seed=4)
    b = run_monodromy(fermat, fermat_center, 60, seed=4)
    assert a.report == b.report
    assert [c.partition for c in a.samples] == [c.partition for c in b.samples]
    assert a.discards == b.discards
    assert a.report.samples_used + a.report.discarded == 60


def test_run_gives_evidence(fermat, fermat_center):
    rep = run_monodromy(fermat, fermat_center, 200, seed=1).report
    assert rep.verdict == EVIDENCE
    kinds = {tuple(t) for t, _ in rep.cycle_types}
    assert kinds <= {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
