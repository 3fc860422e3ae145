"""Gauss-code model for virtual link diagrams.

A diagram is a set of oriented circles carrying signed chords; every chord
runs from its overcrossing passage (token ``O``, the arrowtail) to its
undercrossing passage (token ``U``, the arrowhead).  Textual grammar:

    code      := component ("|" component)*
    component := "." | token+
    token     := ("O" | "U") label sign      with label >= 1, sign in {+, -}

Whitespace between tokens is ignored.  Chord labels are global, so a chord
may join two different components.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Optional

from .errors import (
    EmptyInputError,
    GaussSyntaxError,
    SignMismatchError,
    UnbalancedChordError,
)

TAIL = "O"
HEAD = "U"

_TOKEN = re.compile(r"([OU])([0-9]+)([+-])")


@dataclass(frozen=True)
class Endpoint:
    """One passage of a chord through a circle component."""

    kind: str  # TAIL ("O") or HEAD ("U")
    chord_id: int
    component: int
    position: int


@dataclass(frozen=True)
class Chord:
    id: int
    sign: int
    tail: Endpoint
    head: Endpoint


@dataclass(frozen=True)
class GaussDiagram:
    """Immutable parsed diagram: cyclic endpoint sequences plus chords."""

    components: tuple[tuple[Endpoint, ...], ...]
    chords: tuple[Chord, ...]  # ascending by chord id

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_chords(self) -> int:
        return len(self.chords)

    @cached_property
    def _chord_index(self) -> dict:
        return {c.id: c for c in self.chords}

    def chord(self, chord_id: int) -> Chord:
        return self._chord_index[chord_id]


@dataclass(frozen=True)
class Strand:
    """Maximal arc between two consecutive arrowheads of one component.

    ``span`` is the half-open cyclic position interval [start, stop); for a
    strand ending at an arrowhead, stop is that head's position.  A component
    without arrowheads is one strand spanning the whole circle.
    """

    id: int
    component: int
    span: tuple[int, int]
    head_pos: Optional[int]  # position of the terminating arrowhead
    tails: tuple[int, ...]  # chord ids of the arrowtails, in traversal order


@dataclass(frozen=True)
class HeadIncidence:
    """Local data at one arrowhead: the strand ending there, the strand
    starting there, and the strand carrying the chord's arrowtail."""

    chord_id: int
    before: int
    after: int
    tail_strand: int
    sign: int
    component: int
    position: int


@dataclass(frozen=True)
class StrandTable:
    strands: tuple[Strand, ...]
    incidences: tuple[HeadIncidence, ...]  # ordered by (component, head position)

    @property
    def n_strands(self) -> int:
        return len(self.strands)


@dataclass(frozen=True)
class CutSplitWitness:
    kind: str  # "component" (chordless circle) or "arrowhead" (before == after)
    index: int  # component index, or chord id


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a Gauss code string into a validated diagram.

    Raises EmptyInputError, GaussSyntaxError, UnbalancedChordError or
    SignMismatchError on invalid input.
    """
    stripped = re.sub(r"\s+", "", text or "")
    if not stripped:
        raise EmptyInputError("no components in Gauss code")

    raw_components = stripped.split("|")
    occurrences: dict[int, list[tuple[str, int, int, int]]] = {}
    component_tokens: list[list[tuple[str, int, int]]] = []

    for ci, comp_text in enumerate(raw_components):
        if comp_text == ".":
            component_tokens.append([])
            continue
        if not comp_text:
            raise GaussSyntaxError(f"component {ci} is empty; use '.' for a chordless circle")
        tokens = []
        pos = 0
        while pos < len(comp_text):
            m = _TOKEN.match(comp_text, pos)
            if m is None:
                raise GaussSyntaxError(f"bad token at {comp_text[pos:pos + 8]!r} in component {ci}")
            kind, label_text, sign_text = m.groups()
            label = int(label_text)
            if label < 1:
                raise GaussSyntaxError(f"chord label must be positive, got {label}")
            sign = 1 if sign_text == "+" else -1
            occurrences.setdefault(label, []).append((kind, sign, ci, len(tokens)))
            tokens.append((kind, label, sign))
            pos = m.end()
        component_tokens.append(tokens)

    for label, occ in sorted(occurrences.items()):
        kinds = sorted(k for k, _, _, _ in occ)
        if len(occ) != 2 or kinds != [TAIL, HEAD]:
            raise UnbalancedChordError(
                f"chord {label} must appear exactly once as O and once as U"
            )
        if occ[0][1] != occ[1][1]:
            raise SignMismatchError(f"chord {label} carries both signs")

    components = tuple(
        tuple(
            Endpoint(kind, label, ci, pos)
            for pos, (kind, label, _) in enumerate(tokens)
        )
        for ci, tokens in enumerate(component_tokens)
    )
    chords = []
    for label, occ in sorted(occurrences.items()):
        by_kind = {k: (ci, pos) for k, _, ci, pos in occ}
        sign = occ[0][1]
        tci, tpos = by_kind[TAIL]
        hci, hpos = by_kind[HEAD]
        chords.append(
            Chord(label, sign, components[tci][tpos], components[hci][hpos])
        )
    return GaussDiagram(components, tuple(chords))


def to_gauss_code(d: GaussDiagram) -> str:
    """Serialize with no whitespace; parse(to_gauss_code(d)) == d."""
    parts = []
    for comp in d.components:
        if not comp:
            parts.append(".")
            continue
        sign_of = {c.id: c.sign for c in d.chords}
        parts.append(
            "".join(f"{e.kind}{e.chord_id}{'+' if sign_of[e.chord_id] > 0 else '-'}" for e in comp)
        )
    return "|".join(parts)


@lru_cache(maxsize=None)
def strand_table(d: GaussDiagram) -> StrandTable:
    """Strand decomposition and arrowhead incidences of a diagram.

    Strand ids are dense and deterministic: components in order, and within
    a component by the position of the terminating arrowhead.
    """
    strands: list[Strand] = []
    pos_to_strand: list[list[int]] = []
    comp_base: list[int] = []
    comp_heads: list[list[int]] = []

    for ci, comp in enumerate(d.components):
        length = len(comp)
        head_positions = [p for p in range(length) if comp[p].kind == HEAD]
        comp_base.append(len(strands))
        comp_heads.append(head_positions)
        mapping = [-1] * length
        if not head_positions:
            sid = len(strands)
            tails = tuple(e.chord_id for e in comp)
            strands.append(Strand(sid, ci, (0, length), None, tails))
            for p in range(length):
                mapping[p] = sid
        else:
            m = len(head_positions)
            for j, hp in enumerate(head_positions):
                prev = head_positions[(j - 1) % m]
                start = (prev + 1) % length
                sid = len(strands)
                tails = []
                p = start
                while p != hp:
                    mapping[p] = sid
                    tails.append(comp[p].chord_id)
                    p = (p + 1) % length
                strands.append(Strand(sid, ci, (start, hp), hp, tuple(tails)))
        pos_to_strand.append(mapping)

    incidences: list[HeadIncidence] = []
    for ci in range(len(d.components)):
        heads = comp_heads[ci]
        m = len(heads)
        base = comp_base[ci]
        for j, hp in enumerate(heads):
            chord = d.chord(d.components[ci][hp].chord_id)
            te = chord.tail
            incidences.append(
                HeadIncidence(
                    chord_id=chord.id,
                    before=base + j,
                    after=base + (j + 1) % m,
                    tail_strand=pos_to_strand[te.component][te.position],
                    sign=chord.sign,
                    component=ci,
                    position=hp,
                )
            )
    return StrandTable(tuple(strands), tuple(incidences))


def bridge_count(d: GaussDiagram) -> int:
    """Number of overbridges: tail-bearing strands plus chordless circles
    (a chordless circle counts one, via an invisible R1 kink)."""
    table = strand_table(d)
    count = sum(1 for s in table.strands if s.tails)
    count += sum(1 for comp in d.components if not comp)
    return count


def cut_split_witness(d: GaussDiagram) -> Optional[CutSplitWitness]:
    """A chordless component or an arrowhead whose strand is adjacent to
    itself, if any; None otherwise."""
    for ci, comp in enumerate(d.components):
        if not comp:
            return CutSplitWitness("component", ci)
    for inc in strand_table(d).incidences:
        if inc.before == inc.after:
            return CutSplitWitness("arrowhead", inc.chord_id)
    return None


def is_cut_split(d: GaussDiagram) -> bool:
    return cut_split_witness(d) is not None


def ensure_tail_per_component(d: GaussDiagram) -> GaussDiagram:
    """Insert an R1 kink (fresh chord, tail then head) on every component
    that carries no arrowtail, chordless circles included."""
    needs = [
        ci
        for ci, comp in enumerate(d.components)
        if not any(e.kind == TAIL for e in comp)
    ]
    if not needs:
        return d
    label = max((c.id for c in d.chords), default=0)
    code = to_gauss_code(d)
    parts = code.split("|")
    for ci in needs:
        label += 1
        kink = f"O{label}+U{label}+"
        parts[ci] = kink if parts[ci] == "." else kink + parts[ci]
    return parse_gauss_code("|".join(parts))
