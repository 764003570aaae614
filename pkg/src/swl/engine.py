"""Word length and conjugacy length by move-closure rewriting.

A non-geodesic word runs along more than half of the boundary of some
region swept out by a strand of the arc system (a gallery); replacing that
run by the complementary boundary path shortens it.  Closing a word under
all length-nonincreasing replacements therefore finds the true length.
The catalog here admits every >=-half replacement, a sound superset of the
minimal move set, and the oracle suite certifies completeness.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arcsys import build_arc_system, raw_crossing_count, strand_chains
from .words import (
    cyclic_canon,
    free_reduce,
    inverse,
    rotations,
    word_key,
)


@dataclass(frozen=True)
class GalleryRegion:
    """Union of disk polygons crossed by one strand segment."""

    polygons: tuple          # face ids along the chain
    exterior_cycle: tuple    # cyclic dart sequence of the region boundary
    interior_edges: tuple    # generator index per crossing, in chain order
    crossing_darts: tuple    # exit dart per crossing, for cover embedding

    def __len__(self):
        return len(self.polygons)


def _chain_region(cx, faces, crossings):
    """Glue the face copies of a chain along the crossing edges.

    tokens are (copy index, side position); gluing replaces the exit-side
    token by the next copy's cycle minus its entry side.
    """
    sides = [cx.faces[f].sides for f in faces]
    tokens = [(0, p) for p in range(len(sides[0]))]
    for t, d in enumerate(crossings):
        exit_pos = sides[t].index(d)
        entry_pos = sides[t + 1].index(-d)
        m = len(sides[t + 1])
        at = tokens.index((t, exit_pos))
        patch = [(t + 1, (entry_pos + j) % m) for j in range(1, m)]
        tokens[at:at + 1] = patch
    cycle = tuple(sides[c][p] for c, p in tokens)
    return cycle


def _canon_cycle(cycle):
    cands = rotations(cycle) + rotations(inverse(cycle))
    return min(cands, key=word_key)


def enumerate_galleries(complex_, arcs, max_exterior):
    """All strand-segment regions with exterior cycle <= max_exterior.

    Includes every single disk polygon and every longer chain, with
    duplicates (same boundary cycle up to rotation and reversal) removed.
    """
    if max_exterior < 3:
        raise ValueError("max_exterior must be >= 3")
    closed, open_ = strand_chains(arcs)
    out = []
    seen = set()

    def emit(faces, crossings):
        cycle = _chain_region(complex_, faces, crossings)
        key = _canon_cycle(cycle)
        if key in seen:
            return
        seen.add(key)
        gens = tuple(abs(d) for d in crossings)
        out.append(GalleryRegion(tuple(faces), cycle, gens, tuple(crossings)))

    def extend(visit_at, start, limit):
        faces, crossings = [], []
        ext = 0
        for t in range(limit):
            face_id, _entry, exit_pt = visit_at(start + t)
            m = len(complex_.faces[face_id].sides)
            ext = m if t == 0 else ext + m - 2
            if ext > max_exterior:
                return
            faces.append(face_id)
            if t > 0:
                crossings.append(prev_exit[0])
            emit(faces, crossings)
            prev_exit = exit_pt

    hard_cap = max_exterior + 2  # guards degenerate (< 3)-gon chains
    for chain in open_:
        for i in range(len(chain)):
            extend(lambda t: chain[t], i, min(len(chain) - i, hard_cap))
    for chain in closed:
        k = len(chain)
        for i in range(k):
            extend(lambda t: chain[t % k], i, hard_cap)
    out.sort(key=lambda g: (len(g.exterior_cycle), word_key(g.exterior_cycle)))
    return out


def _catalog(galleries, bound):
    """(pattern, replacement) pairs: runs of >= half a boundary cycle and
    their complements, both traversal directions, indexed by first dart."""
    pairs = set()
    for g in galleries:
        for cycle in (g.exterior_cycle, inverse(g.exterior_cycle)):
            c = len(cycle)
            doubled = cycle + cycle
            for t in range((c + 1) // 2, c + 1):
                for o in range(c):
                    pattern = doubled[o:o + t]
                    comp = doubled[o + t:o + c]
                    pairs.add((pattern, inverse(comp)))
    by_first = {}
    for pattern, repl in sorted(pairs, key=lambda pr: (word_key(pr[0]), word_key(pr[1]))):
        by_first.setdefault(pattern[0], []).append((pattern, repl))
    return by_first


class GeodesicEngine:
    """Shortest-word queries against one complex; results are memoized.

    Queries are pure functions of the immutable complex and arc system, so
    a single engine may serve concurrent readers.
    """

    def __init__(self, complex_, arcs=None):
        self.complex = complex_
        self.arcs = arcs if arcs is not None else build_arc_system(complex_)
        self.free_basis = not complex_.disk_faces
        self._galleries = {}
        self._catalog_cache = None
        self._catalog_bound = 0
        self._memo = {}
        self._cyclic_memo = {}

    def galleries(self, max_exterior):
        if max_exterior not in self._galleries:
            self._galleries[max_exterior] = enumerate_galleries(
                self.complex, self.arcs, max_exterior)
        return self._galleries[max_exterior]

    def _moves_table(self, bound):
        if self._catalog_cache is None or bound > self._catalog_bound:
            self._catalog_cache = _catalog(self.galleries(max(bound, 3)), bound)
            self._catalog_bound = max(bound, 3)
        return self._catalog_cache

    def apply_moves(self, word):
        """One replacement applied every possible way; results freely reduced."""
        w = word
        table = self._moves_table(2 * len(w) + 2)
        out = set()
        for i, d in enumerate(w):
            for pattern, repl in table.get(d, ()):
                t = len(pattern)
                if i + t <= len(w) and w[i:i + t] == pattern:
                    out.add(free_reduce(w[:i] + repl + w[i + t:]))
        return out

    def shortest_word(self, word):
        """(|w|, witness): exhaustive closure under nonincreasing moves.

        The witness is the lexicographically least word in the terminal
        same-length closure; every word met along the way names the same
        group element, so all of them share the cached result.
        """
        w = free_reduce(word)
        if w in self._memo:
            return self._memo[w]
        if self.free_basis:
            res = (len(w), w)
            self._memo[w] = res
            return res
        self._moves_table(2 * len(w) + 2)
        all_seen = set()
        cur = w
        result = None
        while result is None:
            seen = {cur}
            frontier = [cur]
            shorter = []
            while frontier:
                nxt = []
                for u in frontier:
                    hit = self._memo.get(u)
                    if hit is not None:
                        result = hit
                        break
                    for v in self.apply_moves(u):
                        if len(v) < len(cur):
                            shorter.append(v)
                        elif v not in seen:
                            seen.add(v)
                            nxt.append(v)
                if result is not None:
                    break
                frontier = nxt
            all_seen |= seen
            if result is not None:
                break
            if shorter:
                cur = min(shorter, key=lambda v: (len(v), word_key(v)))
            else:
                result = (len(cur), min(seen, key=word_key))
        for u in all_seen:
            self._memo[u] = result
        return result

    def is_shortest(self, word):
        return self.shortest_word(word)[0] == len(free_reduce(word))

    def cyclic_shortest(self, word):
        """(conjugacy length, cyclic witness): closure over all rotations."""
        w = cyclic_canon(word)
        if w in self._cyclic_memo:
            return self._cyclic_memo[w]
        if self.free_basis:
            res = (len(w), w)
            self._cyclic_memo[w] = res
            return res
        self._moves_table(2 * len(w) + 2)
        all_seen = set()
        cur = w
        result = None
        while result is None:
            seen = {cur}
            frontier = [cur]
            shorter = []
            while frontier:
                nxt = []
                for u in frontier:
                    hit = self._cyclic_memo.get(u)
                    if hit is not None:
                        result = hit
                        break
                    for rot in rotations(u):
                        for v in self.apply_moves(rot):
                            v = cyclic_canon(v)
                            if len(v) < len(cur):
                                shorter.append(v)
                            elif v not in seen:
                                seen.add(v)
                                nxt.append(v)
                if result is not None:
                    break
                frontier = nxt
            all_seen |= seen
            if result is not None:
                break
            if shorter:
                cur = min(shorter, key=lambda v: (len(v), word_key(v)))
            else:
                result = (len(cur), min(seen, key=word_key))
        for u in all_seen:
            self._cyclic_memo[u] = result
        return result

    def intersection_number(self, word, cyclic=False):
        """Crossing weight of the class with the arc system: its length, exactly."""
        if cyclic:
            _, witness = self.cyclic_shortest(word)
        else:
            _, witness = self.shortest_word(word)
        return Fraction(raw_crossing_count(witness, self.arcs))


def shortest_word(complex_, word, arcs=None):
    return GeodesicEngine(complex_, arcs).shortest_word(word)


def cyclic_shortest(complex_, word, arcs=None):
    return GeodesicEngine(complex_, arcs).cyclic_shortest(word)
