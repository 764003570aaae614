"""The dual arc system of a cut complex.

Two marked points per face side, joined inside each polygon (opposite sides
for even disks, near-opposite for odd disks, hole anchors for holed faces)
and matched across each edge.  Unweighted, the system crosses every
generator exactly twice; the stored weight 1/2 makes the total crossing
weight of each generator equal to 1.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import WordSyntaxError
from .surface import DISK
from .words import dart_key


class Anchor(NamedTuple):
    """Endpoint on the hole of a holed face, one per incident marked point."""

    face: int
    dart: int
    slot: int


class ArcSystem:
    """Pure matching data: no coordinates, exact rational weight."""

    def __init__(self, complex_, intra, glue, hole_anchors):
        self.complex = complex_
        self.intra = intra
        self.glue = glue
        self.hole_anchors = hole_anchors
        self.weight = Fraction(1, 2)

    def marked_points(self):
        return [(d, s) for d in sorted(self.complex.side_of, key=dart_key) for s in (1, 2)]


def build_arc_system(complex_, odd_slot_mirror=False):
    """Construct the matching structure for a complex.

    ``odd_slot_mirror`` flips which of the two near-opposite sides slot 1
    of an odd polygon side connects to; the two choices are mirror images
    and the theorem-level tests pass under either.
    """
    intra = {}
    glue = {}
    hole_anchors = {}
    for face in complex_.faces:
        m = len(face.sides)
        if face.kind != DISK:
            anchors = []
            for d in face.sides:
                for s in (1, 2):
                    a = Anchor(face.id, d, s)
                    intra[(d, s)] = a
                    intra[a] = (d, s)
                    anchors.append(a)
            hole_anchors[face.id] = tuple(anchors)
        elif m % 2 == 0:
            half = m // 2
            for i, d in enumerate(face.sides):
                opp = face.sides[(i + half) % m]
                intra[(d, 1)] = (opp, 2)
                intra[(d, 2)] = (opp, 1)
        else:
            # slot 1 of side i runs to one side flanking the opposite
            # vertex, slot 2 to the other; consistency forces the slots
            step = (m + 1) // 2 if not odd_slot_mirror else m // 2
            for i, d in enumerate(face.sides):
                tgt = face.sides[(i + step) % m]
                intra[(d, 1)] = (tgt, 2)
                intra[(tgt, 2)] = (d, 1)
    for k in range(1, complex_.n + 1):
        d, dbar = k, -k
        f1 = complex_.face_of_dart(d)
        f2 = complex_.face_of_dart(dbar)
        both_odd_disks = (f1.kind == DISK and f2.kind == DISK
                          and len(f1) % 2 == 1 and len(f2) % 2 == 1)
        if both_odd_disks:
            # gluing two odd polygons crosses the strands
            pairing = ((1, 1), (2, 2))
        else:
            # opposite dart directions: identity in space is a slot swap
            pairing = ((1, 2), (2, 1))
        for s, t in pairing:
            glue[(d, s)] = (dbar, t)
            glue[(dbar, t)] = (d, s)
    return ArcSystem(complex_, intra, glue, hole_anchors)


@dataclass(frozen=True)
class ComponentCensus:
    curves: int
    arcs: int
    components: tuple  # of (kind, crossing tuple), canonically ordered

    def to_json(self):
        return json.dumps({
            "curves": self.curves,
            "arcs": self.arcs,
            "components": [
                {"type": kind, "crossings": list(crossings)}
                for kind, crossings in self.components
            ],
        }, sort_keys=True)


def trace_components(arcs):
    """Orbits of alternating intra/glue steps, classified arc vs curve.

    The census is canonical: arc crossing sequences are taken up to
    reversal, curve sequences up to rotation and reversal, and components
    are sorted, so any traversal start yields the same value.
    """
    cx = arcs.complex
    gen_name = lambda p: cx.generators[abs(p[0]) - 1]
    seen = set()
    components = []

    def walk(start):
        # start is a marked point about to cross its edge
        crossings = []
        p = start
        while True:
            seen.add(p)
            crossings.append(gen_name(p))
            q = arcs.glue[p]
            seen.add(q)
            nxt = arcs.intra[q]
            if isinstance(nxt, Anchor):
                return crossings, False
            if nxt == start:
                return crossings, True
            p = nxt

    for face_id in sorted(arcs.hole_anchors):
        for anchor in arcs.hole_anchors[face_id]:
            p = arcs.intra[anchor]
            if p in seen:
                continue
            crossings, closed = walk(p)
            assert not closed
            components.append(("arc", _canon_linear(crossings)))
    for p in arcs.marked_points():
        if p in seen:
            continue
        crossings, closed = walk(p)
        assert closed
        components.append(("curve", _canon_cyclic(crossings)))

    components.sort()
    n_curves = sum(1 for kind, _ in components if kind == "curve")
    return ComponentCensus(n_curves, len(components) - n_curves, tuple(components))


def _canon_linear(seq):
    seq = tuple(seq)
    return min(seq, tuple(reversed(seq)))


def _canon_cyclic(seq):
    seq = tuple(seq)
    cands = [seq[i:] + seq[:i] for i in range(len(seq))]
    rev = tuple(reversed(seq))
    cands += [rev[i:] + rev[:i] for i in range(len(rev))]
    return min(cands)


def raw_crossing_count(word, arcs):
    """Weighted crossings of the word as drawn: exactly its letter count.

    Each letter crosses both strands on its edge; weight 1/2 restores the
    count.  Exact rational.
    """
    n = arcs.complex.n
    for d in word:
        if not isinstance(d, int) or d == 0 or abs(d) > n:
            raise WordSyntaxError(f"dart {d!r} is not a generator of this complex")
    return arcs.weight * 2 * len(word)


def strand_chains(arcs):
    """Disk-face visit chains of every strand, for gallery enumeration.

    Returns (closed_chains, open_chains).  A visit is (face_id, entry point,
    exit point); consecutive visits cross the edge of the exit point.  Open
    chains come from hole-to-hole strands with the holed-face ends dropped
    (they may be empty when a strand crosses a single edge between holes).
    """
    cx = arcs.complex
    closed, open_ = [], []
    seen = set()

    def visits_from(entry):
        # entry is a marked point just placed inside its face
        chain = []
        p = entry
        while True:
            face = cx.face_of_dart(p[0])
            nxt = arcs.intra[p]
            if isinstance(nxt, Anchor):
                return chain, False
            chain.append((face.id, p, nxt))
            seen.add(p)
            seen.add(nxt)
            q = arcs.glue[nxt]
            if q == entry:
                return chain, True
            p = q

    for face_id in sorted(arcs.hole_anchors):
        for anchor in arcs.hole_anchors[face_id]:
            start = arcs.intra[anchor]          # marked point in the holed face
            if start in seen:
                continue
            seen.add(start)
            chain, closed_flag = visits_from(arcs.glue[start])
            assert not closed_flag
            # mark the far end too
            if chain:
                last_exit = chain[-1][2]
                seen.add(arcs.glue[last_exit])
            else:
                seen.add(arcs.glue[start])
            open_.append(chain)
    for p in arcs.marked_points():
        if p in seen:
            continue
        chain, closed_flag = visits_from(p)
        assert closed_flag and chain
        closed.append(chain)
    return closed, open_
