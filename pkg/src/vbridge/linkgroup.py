"""Wirtinger presentation, Alexander matrix and elementary-ideal bounds.

One generator per strand, one relation per chord: at an arrowhead the
outgoing strand is the incoming one conjugated by the tail strand,
a_after = b^e a_before b^-e with e the chord sign.  Fox derivatives of that
relation, abelianized to Z[t, 1/t], give the Alexander matrix row
  column a_after: -1,  column a_before: t^e,  column b: 1 - t^e,
with coincident generators accumulating.  A size-(n-k) minor ideal is
certified proper by a prime p and unit u with every generator vanishing at
t = u over Z/p; such a certificate at index k puts the bridge number above
k, hence the lower bound 1 + max qualifying k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import BadIdealIndexError, NotAKnotError
from .gauss import GaussDiagram, strand_table
from .laurent import ONE, LaurentPolynomial


@dataclass(frozen=True)
class Relation:
    """a_after = b^sign a_before b^-sign, recorded at chord ``chord_id``."""

    chord_id: int
    before: int
    after: int
    tail: int
    sign: int


@dataclass(frozen=True)
class Presentation:
    generators: tuple[int, ...]  # strand ids
    relations: tuple[Relation, ...]  # in head order


def wirtinger_presentation(d: GaussDiagram) -> Presentation:
    table = strand_table(d)
    relations = tuple(
        Relation(i.chord_id, i.before, i.after, i.tail_strand, i.sign)
        for i in table.incidences
    )
    return Presentation(tuple(range(table.n_strands)), relations)


@dataclass(frozen=True)
class AlexanderMatrix:
    rows: tuple[tuple[LaurentPolynomial, ...], ...]  # one row per relation

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def row_sums_at_one(self) -> list[int]:
        return [sum(p.evaluate_unit(1) for p in row) for row in self.rows]


def alexander_matrix(p: Presentation) -> AlexanderMatrix:
    n = len(p.generators)
    rows = []
    for r in p.relations:
        te = LaurentPolynomial.term(1, r.sign)  # t^e
        row = [LaurentPolynomial() for _ in range(n)]
        row[r.tail] = row[r.tail] + (ONE - te)
        row[r.before] = row[r.before] + te
        row[r.after] = row[r.after] - ONE
        rows.append(tuple(row))
    return AlexanderMatrix(tuple(rows))


def _minor_determinants(a: AlexanderMatrix, size: int) -> list[LaurentPolynomial]:
    """All size x size minors, by cofactor expansion memoized on the
    (rows, cols) index pair so shared subminors are computed once."""
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPolynomial] = {}

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> LaurentPolynomial:
        if len(rows) == 1:
            return a.rows[rows[0]][cols[0]]
        key = (rows, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = LaurentPolynomial()
        rest = rows[1:]
        for j, col in enumerate(cols):
            entry = a.rows[rows[0]][col]
            if entry.is_zero:
                continue
            sub = det(rest, cols[:j] + cols[j + 1 :])
            term = entry * sub
            total = total + term if j % 2 == 0 else total - term
        memo[key] = total
        return total

    out = []
    for rows in combinations(range(a.n_rows), size):
        for cols in combinations(range(a.n_cols), size):
            out.append(det(rows, cols))
    return out


def elementary_ideal_generators(a: AlexanderMatrix, k: int) -> list[LaurentPolynomial]:
    """Generators of the k-th elementary ideal: the (n-k) x (n-k) minors,
    deduplicated up to sign and powers of t.  Empty when the matrix has too
    few rows for minors of that size."""
    n = a.n_cols
    if not 0 <= k < n:
        raise BadIdealIndexError(f"need 0 <= k < {n}, got {k}")
    size = n - k
    if size > a.n_rows:
        return []
    seen = {}
    for minor in _minor_determinants(a, size):
        canon = minor.unit_canonical()
        seen.setdefault(str(canon), canon)
    return [seen[key] for key in sorted(seen)]


def _primes_upto(bound: int) -> list[int]:
    sieve = [True] * (bound + 1)
    primes = []
    for p in range(2, bound + 1):
        if sieve[p]:
            primes.append(p)
            for q in range(p * p, bound + 1, p):
                sieve[q] = False
    return primes


def properness_certificate(
    gens: Sequence[LaurentPolynomial], prime_bound: int = 97
) -> Optional[tuple[int, int]]:
    """Smallest (prime p, unit u) with every generator vanishing at t = u
    over Z/p, or None.  Such a witness shows the ideal misses 1, hence is
    proper; failure to find one proves nothing."""
    for p in _primes_upto(prime_bound):
        for u in range(1, p):
            if all(g.evaluate_mod(p, u) == 0 for g in gens):
                return p, u
    return None


@dataclass(frozen=True)
class IdealCertificate:
    k: int
    generators: tuple[LaurentPolynomial, ...]
    witness: Optional[tuple[int, int]]  # (prime, unit) or None
    nontrivial: bool  # some generator is a nonzero polynomial

    @property
    def qualifies(self) -> bool:
        return self.witness is not None and self.nontrivial


@dataclass(frozen=True)
class IdealBoundResult:
    bound: int
    certificates: tuple[IdealCertificate, ...]


def ideal_lower_bound(
    d: GaussDiagram,
    k_max: Optional[int] = None,
    prime_bound: int = 97,
) -> IdealBoundResult:
    """Bridge-number lower bound 1 + max{k : E_k certified proper and
    nontrivial}, scanning k = 1..k_max; 1 when no index qualifies.
    Knot diagrams only."""
    if d.n_components != 1:
        raise NotAKnotError("elementary-ideal bound is defined for knot diagrams")
    pres = wirtinger_presentation(d)
    a = alexander_matrix(pres)
    n = len(pres.generators)
    k_hi = n - 1 if k_max is None else min(k_max, n - 1)
    certificates = []
    best = 0
    for k in range(1, k_hi + 1):
        gens = elementary_ideal_generators(a, k)
        nontrivial = any(not g.is_zero for g in gens)
        witness = properness_certificate(gens, prime_bound) if gens else None
        cert = IdealCertificate(k, tuple(gens), witness, nontrivial)
        certificates.append(cert)
        if cert.qualifies:
            best = max(best, k)
    return IdealBoundResult(1 + best, tuple(certificates))
