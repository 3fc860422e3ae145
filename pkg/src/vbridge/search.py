"""Wirtinger number search: minimal seed sets under coloring-move saturation.

A coloring move fires at an arrowhead when the strand carrying the chord's
arrowtail is colored and exactly one of the two strands meeting at the head
is colored; the move copies that color to the uncolored one.  The Wirtinger
number is the least number of seed strands whose saturation colors every
strand.  Certificates record the order in which strands were colored and the
arrowhead justifying each step.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .errors import CutSplitError, SearchExhaustedError, SearchTimeoutError
from .gauss import GaussDiagram, HeadIncidence, StrandTable, cut_split_witness, strand_table


@dataclass
class ColoringState:
    """Partial coloring: strand -> color index (1..k) or None."""

    assignment: list[Optional[int]]
    colored_mask: int

    @property
    def n_colored(self) -> int:
        return sum(1 for c in self.assignment if c is not None)

    @property
    def is_complete(self) -> bool:
        return all(c is not None for c in self.assignment)


@dataclass(frozen=True)
class SequenceEntry:
    strand: int
    via: Optional[int]  # chord id of the justifying arrowhead; None for seeds


@dataclass(frozen=True)
class ColoringSequence:
    """Strands in coloring order; the first k entries are the seeds."""

    entries: tuple[SequenceEntry, ...]
    k: int

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(e.strand for e in self.entries)

    @property
    def seeds(self) -> tuple[int, ...]:
        return tuple(e.strand for e in self.entries[: self.k])

    def heights(self) -> dict[int, Fraction]:
        """Height of the j-th colored strand is 1/(j+1), j counted from 1."""
        return {e.strand: Fraction(1, j + 2) for j, e in enumerate(self.entries)}

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "order": list(self.order),
            "via": [e.via for e in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ColoringSequence":
        entries = tuple(
            SequenceEntry(int(s), None if v is None else int(v))
            for s, v in zip(data["order"], data["via"])
        )
        return cls(entries, int(data["k"]))


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    failed_at: Optional[int] = None  # index of the first offending entry/move

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SearchStats:
    subsets_examined: int
    saturation_steps: int


@dataclass(frozen=True)
class WirtingerResult:
    omega: int
    seed_set: tuple[int, ...]
    sequence: ColoringSequence
    stats: SearchStats


def _arrays(table: StrandTable):
    before = np.array([i.before for i in table.incidences], dtype=np.int64)
    after = np.array([i.after for i in table.incidences], dtype=np.int64)
    tail = np.array([i.tail_strand for i in table.incidences], dtype=np.int64)
    comp_of = np.array([s.component for s in table.strands], dtype=np.int64)
    return before, after, tail, comp_of


def apply_coloring_moves(
    d: GaussDiagram,
    seeds: Iterable[int],
    scan_rng: Optional[random.Random] = None,
) -> tuple[ColoringState, ColoringSequence]:
    """Saturate the coloring moves from the given seed strands.

    The colored set is the unique closure regardless of firing order; the
    returned sequence is one witness.  Arrowheads are scanned in head order,
    or in an order shuffled by ``scan_rng`` (used to test confluence).
    """
    table = strand_table(d)
    n = table.n_strands
    seed_list = sorted(set(int(s) for s in seeds))
    if not seed_list:
        raise ValueError("need at least one seed strand")
    if seed_list[0] < 0 or seed_list[-1] >= n:
        raise ValueError(f"seed strand out of range 0..{n - 1}")

    assignment: list[Optional[int]] = [None] * n
    mask = 0
    entries = [SequenceEntry(s, None) for s in seed_list]
    for color, s in enumerate(seed_list, start=1):
        assignment[s] = color
        mask |= 1 << s

    incidences = list(table.incidences)
    while True:
        idx = list(range(len(incidences)))
        if scan_rng is not None:
            scan_rng.shuffle(idx)
        fired = False
        for i in idx:
            inc = incidences[i]
            if assignment[inc.tail_strand] is None:
                continue
            b = assignment[inc.before] is not None
            a = assignment[inc.after] is not None
            if b == a:
                continue
            src, dst = (inc.before, inc.after) if b else (inc.after, inc.before)
            assignment[dst] = assignment[src]
            mask |= 1 << dst
            entries.append(SequenceEntry(dst, inc.chord_id))
            fired = True
        if not fired:
            break
    state = ColoringState(assignment, mask)
    return state, ColoringSequence(tuple(entries), len(seed_list))


def saturated_strands(d: GaussDiagram, seeds: Iterable[int]) -> frozenset:
    """Colored strand set after saturation, via the kernel backends."""
    table = strand_table(d)
    before, after, tail, _ = _arrays(table)
    return _kernels.saturate(before, after, tail, table.n_strands, list(seeds))


def wirtinger_number(
    d: GaussDiagram,
    max_k: Optional[int] = None,
    time_limit: Optional[float] = None,
) -> WirtingerResult:
    """Least k with a size-k seed set whose saturation colors every strand.

    Seed subsets are enumerated lexicographically for each k starting at the
    component count, so the witness is the lexicographically least seed set
    of minimal size.  Raises SearchExhaustedError if max_k is hit without
    success and SearchTimeoutError past the wall-clock limit.
    """
    table = strand_table(d)
    n = table.n_strands
    before, after, tail, comp_of = _arrays(table)
    n_comps = d.n_components
    k_hi = n if max_k is None else min(max_k, n)
    deadline = None if time_limit is None else time.monotonic() + time_limit

    examined = 0
    for k in range(n_comps, k_hi + 1):
        comb, ex, timed_out = _kernels.search_level(
            before, after, tail, comp_of, n, n_comps, k, deadline
        )
        examined += ex
        if timed_out:
            raise SearchTimeoutError(
                f"no seed set found within {time_limit}s ({examined} subsets examined)"
            )
        if comb is not None:
            state, seq = apply_coloring_moves(d, comb)
            assert state.is_complete
            return WirtingerResult(
                omega=k,
                seed_set=tuple(comb),
                sequence=seq,
                stats=SearchStats(examined, len(seq.entries) - seq.k),
            )
    raise SearchExhaustedError(
        f"no seed set of size <= {k_hi} colors the diagram ({examined} subsets examined)"
    )


def _move_legal(inc: HeadIncidence, colored: set, target: int) -> bool:
    if inc.tail_strand not in colored:
        return False
    b = inc.before in colored
    a = inc.after in colored
    if b == a:
        return False
    return target == (inc.after if b else inc.before)


def verify_coloring_sequence(d: GaussDiagram, seq: ColoringSequence) -> VerifyResult:
    """Check that a sequence is a valid certificate: every strand appears
    exactly once, the first k entries are the seeds, and each later entry is
    justified by a move legal at its stage."""
    table = strand_table(d)
    n = table.n_strands
    if not 1 <= seq.k <= len(seq.entries):
        return VerifyResult(False, None)
    if len(seq.entries) != n:
        return VerifyResult(False, None)
    by_chord = {i.chord_id: i for i in table.incidences}
    colored: set = set()
    for idx, e in enumerate(seq.entries):
        if not 0 <= e.strand < n or e.strand in colored:
            return VerifyResult(False, idx)
        if idx >= seq.k:
            if e.via is not None:
                inc = by_chord.get(e.via)
                legal = inc is not None and _move_legal(inc, colored, e.strand)
            else:
                legal = any(
                    _move_legal(inc, colored, e.strand) for inc in table.incidences
                )
            if not legal:
                return VerifyResult(False, idx)
        colored.add(e.strand)
    return VerifyResult(True, None)


def _replay_colors(d: GaussDiagram, seq: ColoringSequence) -> list[int]:
    """Color of every strand after replaying a verified sequence."""
    table = strand_table(d)
    by_chord = {i.chord_id: i for i in table.incidences}
    colors: dict[int, int] = {}
    for idx, e in enumerate(seq.entries):
        if idx < seq.k:
            colors[e.strand] = idx + 1
            continue
        if e.via is not None:
            inc = by_chord[e.via]
            src = inc.before if e.strand == inc.after else inc.after
        else:
            src = next(
                (i.before if i.before in colors else i.after)
                for i in table.incidences
                if _move_legal(i, set(colors), e.strand)
            )
        colors[e.strand] = colors[src]
    return [colors[s] for s in range(table.n_strands)]


def _cyclic_runs(positions: set, m: int) -> Optional[list[int]]:
    """Positions as one contiguous cyclic run on Z/m, or None."""
    if len(positions) == m:
        return list(range(m))
    for start in positions:
        if (start - 1) % m not in positions:
            run = [start]
            p = (start + 1) % m
            while p in positions:
                run.append(p)
                p = (p + 1) % m
            return run if len(run) == len(positions) else None
    return None  # every position has a predecessor but the set is proper: split


def verify_height_certificate(d: GaussDiagram, seq: ColoringSequence) -> VerifyResult:
    """Check the height profile of a verified sequence: along each color
    class, ordered by strand adjacency, the heights 1/(j+1) have a unique
    local maximum, located at the seed.  Raises CutSplitError when the
    diagram is cut-split (the profile is not meaningful there)."""
    witness = cut_split_witness(d)
    if witness is not None:
        raise CutSplitError(f"diagram is cut-split at {witness.kind} {witness.index}")
    base = verify_coloring_sequence(d, seq)
    if not base.ok:
        return base
    table = strand_table(d)
    colors = _replay_colors(d, seq)
    heights = seq.heights()
    seeds = set(seq.seeds)

    comp_strands: dict[int, list[int]] = {}
    for s in table.strands:
        comp_strands.setdefault(s.component, []).append(s.id)

    for color in range(1, seq.k + 1):
        members = [s for s in range(table.n_strands) if colors[s] == color]
        comps = {table.strands[s].component for s in members}
        if len(comps) != 1:
            return VerifyResult(False, None)
        cyc = comp_strands[comps.pop()]
        m = len(cyc)
        index_of = {sid: i for i, sid in enumerate(cyc)}
        run = _cyclic_runs({index_of[s] for s in members}, m)
        if run is None:
            return VerifyResult(False, None)
        arc = [cyc[i] for i in run]
        hs = [heights[s] for s in arc]
        whole = len(arc) == m
        maxima = []
        for i in range(len(arc)):
            if whole:
                left, right = hs[(i - 1) % m], hs[(i + 1) % m]
                is_max = m == 1 or (hs[i] > left and hs[i] > right)
                if m == 2:
                    is_max = hs[i] > hs[1 - i]
            else:
                is_max = (i == 0 or hs[i] > hs[i - 1]) and (
                    i == len(arc) - 1 or hs[i] > hs[i + 1]
                )
            if is_max:
                maxima.append(arc[i])
        if len(maxima) != 1 or maxima[0] not in seeds:
            return VerifyResult(False, None)
    return VerifyResult(True, None)


@dataclass(frozen=True)
class LowTailChord:
    chord_id: int
    color: int
    whole_component: bool  # the chord's color class covers its component


@dataclass(frozen=True)
class LowTailReport:
    """Chords whose head separates same-colored strands while the tail
    strand's height is at most both head-side heights.

    For a knot such a chord can exist only when the sequence has one seed,
    and then it is unique; for a link the chord's color class must be a full
    component and carry no second such chord.  ``consistent`` records that
    the report obeys the applicable case.
    """

    entries: tuple[LowTailChord, ...]
    knot: bool
    consistent: bool


def low_tail_chords(d: GaussDiagram, seq: ColoringSequence) -> LowTailReport:
    table = strand_table(d)
    colors = _replay_colors(d, seq)
    heights = seq.heights()
    comp_of = [s.component for s in table.strands]
    comp_sizes: dict[int, int] = {}
    for c in comp_of:
        comp_sizes[c] = comp_sizes.get(c, 0) + 1

    entries = []
    for inc in table.incidences:
        if colors[inc.before] != colors[inc.after]:
            continue
        h_tail = heights[inc.tail_strand]
        if h_tail <= min(heights[inc.before], heights[inc.after]):
            color = colors[inc.before]
            members = [s for s in range(table.n_strands) if colors[s] == color]
            whole = len(members) == comp_sizes[comp_of[inc.before]]
            entries.append(LowTailChord(inc.chord_id, color, whole))

    knot = d.n_components == 1
    if knot:
        consistent = len(entries) <= 1 and (not entries or seq.k == 1)
    else:
        per_color: dict[int, int] = {}
        for e in entries:
            per_color[e.color] = per_color.get(e.color, 0) + 1
        consistent = all(e.whole_component for e in entries) and all(
            n == 1 for n in per_color.values()
        )
    return LowTailReport(tuple(entries), knot, consistent)
