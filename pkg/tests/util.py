"""Shared test helpers: independent oracles and random diagram generators.

The oracles deliberately avoid the library's search kernels: the Wirtinger
oracle does a breadth-first walk over colored-set states for every seed
subset, and the coloring oracle enumerates all strand assignments.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from vbridge.gauss import GaussDiagram, parse_gauss_code, strand_table


def enumerate_knot_codes(n_chords: int):
    """Every single-component Gauss code with exactly n_chords chords, all
    signs '+', labels canonical by first appearance.

    Coloring moves never read chord signs, so one sign choice per matching
    covers the search behavior of all of them.
    """
    if n_chords == 0:
        yield "."
        return
    total = 2 * n_chords
    tokens: list[str] = []

    def rec(pos: int, open_chords: dict[int, str], next_label: int):
        if pos == total:
            yield "".join(tokens)
            return
        for label, kind in list(open_chords.items()):
            other = "U" if kind == "O" else "O"
            tokens.append(f"{other}{label}+")
            del open_chords[label]
            yield from rec(pos + 1, open_chords, next_label)
            open_chords[label] = kind
            tokens.pop()
        if next_label <= n_chords:
            for kind in ("O", "U"):
                tokens.append(f"{kind}{next_label}+")
                open_chords[next_label] = kind
                yield from rec(pos + 1, open_chords, next_label + 1)
                del open_chords[next_label]
                tokens.pop()

    yield from rec(0, {}, 1)


def brute_force_omega(d: GaussDiagram):
    """Minimal seed count by naive reachability: for each subset size, walk
    every subset lexicographically and BFS over colored sets under single
    coloring moves.  Returns (omega, first successful subset)."""
    table = strand_table(d)
    n = table.n_strands
    moves = [(i.before, i.after, i.tail_strand) for i in table.incidences]
    full = frozenset(range(n))
    for k in range(1, n + 1):
        for comb in itertools.combinations(range(n), k):
            start = frozenset(comb)
            if _bfs_reaches(start, full, moves):
                return k, comb
    raise AssertionError("seeding every strand always succeeds")


def _bfs_reaches(start, full, moves) -> bool:
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == full:
            return True
        for before, after, tail in moves:
            if tail not in state:
                continue
            b, a = before in state, after in state
            if b == a:
                continue
            nxt = state | {after if b else before}
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return full in seen


def brute_force_colorings(d: GaussDiagram, quandle) -> int:
    """Count strand assignments satisfying every arrowhead relation."""
    table = strand_table(d)
    n = table.n_strands
    count = 0
    for values in itertools.product(range(quandle.order), repeat=n):
        if all(
            values[i.after] == quandle.apply(values[i.before], values[i.tail_strand], i.sign)
            for i in table.incidences
        ):
            count += 1
    return count


def random_diagram(
    rng: random.Random,
    max_chords: int = 8,
    max_components: int = 2,
    min_chords: int = 0,
) -> GaussDiagram:
    """Random valid diagram: chords placed on random components at random
    positions, random signs.  Components may come out chordless."""
    n_comps = rng.randint(1, max_components)
    n_chords = rng.randint(min_chords, max_chords)
    per_comp: list[list[str]] = [[] for _ in range(n_comps)]
    for label in range(1, n_chords + 1):
        sign = rng.choice("+-")
        for kind in ("O", "U"):
            comp = rng.randrange(n_comps)
            slot = rng.randint(0, len(per_comp[comp]))
            per_comp[comp].insert(slot, f"{kind}{label}{sign}")
    code = "|".join("".join(tokens) if tokens else "." for tokens in per_comp)
    return parse_gauss_code(code)


def random_knot(rng: random.Random, max_chords: int = 8, min_chords: int = 1) -> GaussDiagram:
    return random_diagram(rng, max_chords=max_chords, max_components=1, min_chords=min_chords)


def random_one_overbridge_code(rng: random.Random, max_chords: int = 10) -> str:
    """Knot code whose arrowtails sit in one consecutive run, randomly
    rotated so the run may wrap around position zero."""
    n = rng.randint(1, max_chords)
    tail_order = list(range(1, n + 1))
    head_order = list(range(1, n + 1))
    rng.shuffle(tail_order)
    rng.shuffle(head_order)
    signs = {label: rng.choice("+-") for label in range(1, n + 1)}
    tokens = [f"O{label}{signs[label]}" for label in tail_order]
    tokens += [f"U{label}{signs[label]}" for label in head_order]
    cut = rng.randrange(len(tokens))
    return "".join(tokens[cut:] + tokens[:cut])
