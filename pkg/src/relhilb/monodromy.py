"""Heuristic evidence that the projection has full symmetric monodromy.

Reducing a line of the pencil modulo a prime and factoring gives the cycle
type of a Frobenius element.  By Chebotarev these sample the monodromy
group, so seeing the right cycle types is evidence, never proof, that the
group is the whole symmetric group.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import DomainError, NotSquarefreeError
from .exactpoly import PrimeFieldPoly, distinct_degree_factorization, is_prime, primes_between
from .projection import Hypersurface, _as_center, _pencil_basis

EVIDENCE = "symmetric-group evidence"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CycleType:
    partition: Tuple[int, ...]
    pieces: Tuple[Tuple[int, PrimeFieldPoly], ...] = field(default=(), compare=False, repr=False)
    polynomial: Optional[PrimeFieldPoly] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        part = tuple(sorted((int(x) for x in self.partition), reverse=True))
        if not part or part[-1] < 1:
            raise DomainError("cycle type must be a partition")
        object.__setattr__(self, "partition", part)

    @property
    def degree(self) -> int:
        return sum(self.partition)


@dataclass(frozen=True)
class Discard:
    reason: str
    p: int
    s: int


def frobenius_sample(A: Hypersurface, z, p: int, s: int) -> Union[CycleType, Discard]:
    """Cycle type of Frobenius at the pencil member ``w1 + s*w2`` modulo ``p``."""
    if A.m != 1:
        raise DomainError("monodromy sampling is implemented for plane curves")
    z = _as_center(z)
    d = A.degree
    if not is_prime(p):
        return Discard("not-prime", p, s)
    if p <= d:
        return Discard("prime-not-above-degree", p, s)
    coeffs = list(A.form.terms.values()) + list(z.coords)
    if any(c.denominator % p == 0 for c in coeffs):
        return Discard("denominator-divisible-by-p", p, s)
    Fz = A.form.evaluate(z.coords)
    if Fz.numerator % p == 0:
        return Discard("center-on-reduction", p, s)
    w1, w2 = _pencil_basis(z)
    w = [a + s * b for a, b in zip(w1, w2)]
    f = A.form.line_polynomial(w, z.coords)
    fp = PrimeFieldPoly(f.coeffs, p)
    try:
        pieces = tuple(distinct_degree_factorization(fp))
    except NotSquarefreeError:
        return Discard("not-squarefree", p, s)
    part: List[int] = []
    for k, g in pieces:
        part.extend([k] * (g.degree // k))
    return CycleType(tuple(part), pieces, fp)


def _is_transposition_type(part: Sequence[int]) -> bool:
    return list(part).count(2) == 1 and all(x % 2 == 1 for x in part if x != 2)


def _long_primes(d: int) -> List[int]:
    return [q for q in range(2, d) if 2 * q > d and is_prime(q)]


@dataclass(frozen=True)
class WitnessReport:
    d: int
    samples_used: int
    discarded: int
    seen_d_cycle: bool
    seen_transposition_type: bool
    seen_long_prime_cycle: bool
    long_prime_applicable: bool
    verdict: str
    cycle_types: Tuple[Tuple[Tuple[int, ...], int], ...] = ()

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "samples_used": self.samples_used,
            "discarded": self.discarded,
            "seen_d_cycle": self.seen_d_cycle,
            "seen_transposition_type": self.seen_transposition_type,
            "seen_long_prime_cycle": self.seen_long_prime_cycle,
            "long_prime_applicable": self.long_prime_applicable,
            "verdict": self.verdict,
            "cycle_types": [{"type": list(t), "count": n} for t, n in self.cycle_types],
        }


def symmetric_group_witness(samples: Sequence[CycleType], d: int, discarded: int = 0) -> WitnessReport:
    """Package the Jordan-type test.

    A d-cycle stands in for transitivity; a transposition type (one 2-cycle,
    other cycles odd) and a q-cycle with q prime in (d/2, d) then force the
    full symmetric group.  For d <= 3 the prime condition is dropped, and it
    is waived whenever no such prime exists.
    """
    for c in samples:
        if c.degree != d:
            raise DomainError(f"cycle type {c.partition} does not sum to {d}")
    parts = [c.partition for c in samples]
    primes = _long_primes(d)
    seen_d = any(pt == (d,) for pt in parts)
    seen_t = any(_is_transposition_type(pt) for pt in parts)
    seen_p = any(q in pt for pt in parts for q in primes)
    applicable = d > 3 and bool(primes)
    if d == 1:
        ok = True
    else:
        ok = seen_d and seen_t and (seen_p or not applicable)
    counts = tuple(sorted(Counter(parts).items(), key=lambda kv: (-kv[1], kv[0])))
    return WitnessReport(
        d=d,
        samples_used=len(samples),
        discarded=discarded,
        seen_d_cycle=seen_d,
        seen_transposition_type=seen_t,
        seen_long_prime_cycle=seen_p,
        long_prime_applicable=applicable,
        verdict=EVIDENCE if ok else INCONCLUSIVE,
        cycle_types=counts,
    )


@dataclass(frozen=True)
class MonodromyRun:
    report: WitnessReport
    samples: Tuple[CycleType, ...]
    discards: Tuple[Discard, ...]


def run_monodromy(A: Hypersurface, z, samples: int, seed: int, prime_bound: int = 500) -> MonodromyRun:
    """Draw ``samples`` pairs (p, s) with p prime in (d, prime_bound), reproducibly."""
    if samples < 0:
        raise DomainError("sample count must be nonnegative")
    d = A.degree
    primes = primes_between(d, prime_bound)
    if not primes:
        raise DomainError(f"no primes in ({d}, {prime_bound})")
    rng = random.Random(seed)
    accepted: List[CycleType] = []
    dropped: List[Discard] = []
    for _ in range(samples):
        p = rng.choice(primes)
        s = rng.randrange(p)
        out = frobenius_sample(A, z, p, s)
        (accepted if isinstance(out, CycleType) else dropped).append(out)
    report = symmetric_group_witness(accepted, d, discarded=len(dropped))
    return MonodromyRun(report, tuple(accepted), tuple(dropped))
