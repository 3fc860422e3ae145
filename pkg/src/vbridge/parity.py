"""Gaussian parity of chords and the parity projection of a knot diagram.

The parity of a chord is the number of chords interleaving it, mod 2; the
projection deletes every odd chord.  Bridge-type lower bounds computed on
the projection are bounds for the original knot, and the projection of a
classical (all-even) diagram is the diagram itself.
"""

from __future__ import annotations

from .errors import NotAKnotError
from .gauss import GaussDiagram, parse_gauss_code
from .linkgroup import IdealBoundResult, ideal_lower_bound


def _require_knot(d: GaussDiagram):
    if d.n_components != 1:
        raise NotAKnotError("Gaussian parity is defined for knot diagrams")


def gaussian_parity(d: GaussDiagram) -> dict[int, int]:
    """Chord id -> parity bit; counts chords whose endpoints alternate with
    the chord's own around the circle."""
    _require_knot(d)
    spans = {}
    for c in d.chords:
        p, q = sorted((c.tail.position, c.head.position))
        spans[c.id] = (p, q)
    out = {}
    for c in d.chords:
        p, q = spans[c.id]
        crossings = 0
        for other in d.chords:
            if other.id == c.id:
                continue
            a, b = spans[other.id]
            crossings += (p < a < q) != (p < b < q)
        out[c.id] = crossings % 2
    return out


def parity_projection(d: GaussDiagram) -> GaussDiagram:
    """Delete every odd chord, keeping cyclic order, labels and signs.
    All-odd diagrams project to the chordless circle."""
    parity = gaussian_parity(d)
    sign_of = {c.id: c.sign for c in d.chords}
    kept = [e for e in d.components[0] if parity[e.chord_id] == 0]
    if not kept:
        return parse_gauss_code(".")
    code = "".join(
        f"{e.kind}{e.chord_id}{'+' if sign_of[e.chord_id] > 0 else '-'}" for e in kept
    )
    return parse_gauss_code(code)


def parity_lower_bound(
    d: GaussDiagram,
    k_max: int | None = None,
    prime_bound: int = 97,
) -> IdealBoundResult:
    """Elementary-ideal bound of the parity projection; since the projection
    never raises the bridge count, this bounds the original knot too."""
    _require_knot(d)
    return ideal_lower_bound(parity_projection(d), k_max, prime_bound)
