"""Finite quandles and coloring counts of diagram strands.

A quandle is a finite set with a binary operation x > y that is idempotent,
right-invertible (for fixed y, x -> x > y permutes the set) and
self-distributive.  A diagram coloring assigns a quandle element to every
strand so that at each arrowhead a_after = a_before >^e b with b the tail
strand's element and e the chord sign.  Counting enumerates seed
assignments, propagates them along a stored coloring sequence, and keeps
those satisfying the remaining arrowhead relations; the result equals the
brute-force count over all strand assignments.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    NotDistributiveError,
    NotIdempotentError,
    NotRightInvertibleError,
)
from .gauss import GaussDiagram, strand_table
from .search import WirtingerResult, apply_coloring_moves, wirtinger_number


@dataclass(frozen=True)
class FiniteQuandle:
    table: tuple[tuple[int, ...], ...]  # table[x][y] = x > y
    inverse: tuple[tuple[int, ...], ...]  # inverse[x][y] = x >^-1 y
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.table)

    def apply(self, x: int, y: int, sign: int = 1) -> int:
        return self.table[x][y] if sign > 0 else self.inverse[x][y]


def validate_quandle(rows: Sequence[Sequence[int]], name: str = "") -> FiniteQuandle:
    """Check the three axioms and build the right-inverse table.

    Raises NotIdempotentError, NotRightInvertibleError or
    NotDistributiveError with a witness on the first failure.
    """
    n = len(rows)
    table = tuple(tuple(int(v) for v in row) for row in rows)
    if any(len(row) != n for row in table):
        raise ValueError("operation table must be square")
    if any(not 0 <= v < n for row in table for v in row):
        raise ValueError("table entries must lie in 0..n-1")

    for x in range(n):
        if table[x][x] != x:
            raise NotIdempotentError(f"{x} > {x} = {table[x][x]}", witness=x)
    inv = [[-1] * n for _ in range(n)]
    for y in range(n):
        seen = set()
        for x in range(n):
            v = table[x][y]
            if v in seen:
                raise NotRightInvertibleError(
                    f"column {y} repeats value {v}", witness=y
                )
            seen.add(v)
            inv[v][y] = x
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = table[table[x][y]][z]
                rhs = table[table[x][z]][table[y][z]]
                if lhs != rhs:
                    raise NotDistributiveError(
                        f"({x}>{y})>{z} != ({x}>{z})>({y}>{z})", witness=(x, y, z)
                    )
    return FiniteQuandle(table, tuple(tuple(r) for r in inv), name)


def trivial_quandle(n: int) -> FiniteQuandle:
    """x > y = x."""
    return validate_quandle([[x] * n for x in range(n)], name=f"T{n}")


def dihedral_quandle(n: int) -> FiniteQuandle:
    """x > y = 2y - x mod n."""
    return validate_quandle(
        [[(2 * y - x) % n for y in range(n)] for x in range(n)], name=f"R{n}"
    )


def load_quandle_table(path) -> FiniteQuandle:
    """Read an operation table: first line the order n, then n lines of n
    whitespace-separated entries in 0..n-1."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.split() for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"{path}: empty quandle file")
    n = int(lines[0][0])
    rows = [[int(v) for v in line] for line in lines[1 : n + 1]]
    if len(rows) != n:
        raise ValueError(f"{path}: expected {n} table rows, found {len(rows)}")
    stem = os.path.splitext(os.path.basename(str(path)))[0]
    return validate_quandle(rows, name=stem)


def count_colorings(
    d: GaussDiagram,
    q: FiniteQuandle,
    seeds: Optional[Iterable[int]] = None,
    result: Optional[WirtingerResult] = None,
) -> int:
    """Number of quandle colorings of the strands.

    Enumerates |X|^k assignments of the seed strands, propagates each along
    the coloring sequence, then filters by the arrowhead relations not used
    as moves.  The count does not depend on which generating seed set or
    sequence is used.
    """
    table = strand_table(d)
    if result is not None:
        seq = result.sequence
    elif seeds is not None:
        state, seq = apply_coloring_moves(d, seeds)
        if not state.is_complete:
            raise ValueError("seed set does not color the whole diagram")
    else:
        seq = wirtinger_number(d).sequence

    by_chord = {i.chord_id: i for i in table.incidences}
    used = {e.via for e in seq.entries if e.via is not None}
    residual = [i for i in table.incidences if i.chord_id not in used]
    n = table.n_strands

    count = 0
    for assign in itertools.product(range(q.order), repeat=seq.k):
        values = [-1] * n
        for idx, e in enumerate(seq.entries):
            if idx < seq.k:
                values[e.strand] = assign[idx]
                continue
            inc = by_chord[e.via]
            if e.strand == inc.after:
                values[inc.after] = q.apply(values[inc.before], values[inc.tail_strand], inc.sign)
            else:
                values[inc.before] = q.apply(values[inc.after], values[inc.tail_strand], -inc.sign)
        if all(
            values[i.after] == q.apply(values[i.before], values[i.tail_strand], i.sign)
            for i in residual
        ):
            count += 1
    return count


def sandwich_check(
    d: GaussDiagram,
    q: FiniteQuandle,
    result: Optional[WirtingerResult] = None,
) -> bool:
    """|X| <= colorings <= |X|^omega for the diagram's Wirtinger number."""
    if result is None:
        result = wirtinger_number(d)
    count = count_colorings(d, q, result=result)
    return q.order <= count <= q.order ** result.omega
