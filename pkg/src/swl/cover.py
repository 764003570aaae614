"""Universal-cover tiling balls: the independent ground truth.

Vertices are lifts of the base point, so the 1-skeleton is the Cayley
graph.  Disk faces develop into tiles by corner completion: around any
vertex, consecutive rotation slots span one corner of one tile, and
walking a tile's relator identifies existing edges before creating fresh
ones.  Holed faces are never filled; an edge bordered by holed faces on
both sides is free and grows tree-like.

Word length is breadth-first distance; conjugacy length is the minimal
displacement min_v d(v, w v) over a ball, an upper bound that stabilizes
once the ball meets the axis of w.
"""

import json
import os
from array import array
from collections import deque

from .errors import CoverError, VertexCapError
from .surface import DISK
from .words import dart_key, free_reduce

DEFAULT_VERTEX_CAP = 5_000_000
FORWARD_BUDGET = 400_000


class TilingBall:
    def __init__(self, complex_, cap=None, record_tiles=True, forward_budget=FORWARD_BUDGET):
        self.complex = complex_
        self.deg = 2 * complex_.n
        if cap is None:
            cap = int(os.environ.get("SWL_VERTEX_CAP", DEFAULT_VERTEX_CAP))
        self.cap = cap
        self.record_tiles = record_tiles
        self.forward_budget = forward_budget
        self._slots = array("i")
        self._corner_done = array("H")
        self._completed = bytearray()
        self.edge_count = 0
        self.tiles = []
        self.tile_round = []
        self._corner_tile = {}
        self.tiles_built = 0
        self._round_tag = 0
        self._key = {}
        for d in complex_.darts:
            self._key[d] = dart_key(d)
        self._rot = list(complex_.spec.rotation)
        self._disk_dart = frozenset(
            d for f in complex_.disk_faces for d in f.sides)
        # every vertex at distance < _ensured_radius is completed; the
        # cached table is exact for values <= _ensured_radius and stays so
        # as the graph grows, because later edges attach only farther out
        self._ensured_radius = 0
        self._dist_table = None
        self.origin = self._new_vertex()

    # -- storage ------------------------------------------------------

    @property
    def num_vertices(self):
        return len(self._completed)

    def _new_vertex(self):
        if self.num_vertices >= self.cap:
            raise VertexCapError(
                f"vertex cap {self.cap} exceeded (set SWL_VERTEX_CAP to raise)")
        self._slots.extend([-1] * self.deg)
        self._corner_done.append(0)
        self._completed.append(0)
        return self.num_vertices - 1

    def slot(self, v, d):
        return self._slots[v * self.deg + self._key[d]]

    def _add_edge(self, u, d, w):
        iu = u * self.deg + self._key[d]
        iw = w * self.deg + self._key[-d]
        if self._slots[iu] != -1 or self._slots[iw] != -1:
            raise CoverError("edge slot already occupied during development")
        self._slots[iu] = w
        self._slots[iw] = u
        self.edge_count += 1

    # -- development --------------------------------------------------

    def _complete_tile(self, v, x):
        """Develop the tile whose side x departs from v."""
        if self._corner_done[v] >> self._key[x] & 1:
            return
        cx = self.complex
        fid, k = cx.side_of[x]
        sides = cx.faces[fid].sides
        m = len(sides)
        seq = sides[k:] + sides[:k]
        u = [-1] * (m + 1)
        u[0] = u[m] = v
        i = 0
        while i < m:
            w = self.slot(u[i], seq[i])
            if w < 0:
                break
            if i == m - 1 and w != v:
                raise CoverError("tile boundary fails to close")
            u[i + 1] = w
            i += 1
        if i < m:
            j = m
            while j - 1 > i:
                w = self.slot(u[j], -seq[j - 1])
                if w < 0:
                    break
                u[j - 1] = w
                j -= 1
            for t in range(i + 1, j):
                u[t] = self._new_vertex()
            for t in range(i, j):
                self._add_edge(u[t], seq[t], u[t + 1])
        for t in range(m):
            self._corner_done[u[t]] |= 1 << self._key[seq[t]]
        self.tiles_built += 1
        if self.record_tiles:
            boundary = [0] * m
            for t in range(m):
                boundary[(k + t) % m] = u[t]
            tid = len(self.tiles)
            self.tiles.append((fid, tuple(boundary)))
            self.tile_round.append(self._round_tag)
            for t in range(m):
                self._corner_tile[(u[t], self._key[seq[t]])] = tid

    def tile_at(self, v, x):
        """(face id, boundary vertices aligned to face.sides) of the tile
        whose side x departs from v, developing it if necessary."""
        if not self.record_tiles:
            raise CoverError("tiles were not recorded for this ball")
        self._complete_tile(v, x)
        return self.tiles[self._corner_tile[(v, self._key[x])]]

    def complete_vertex(self, v):
        """Fill every slot at v: disk-corner tiles, then free edges."""
        if self._completed[v]:
            return
        for x in self._rot:
            if x in self._disk_dart and not self._corner_done[v] >> self._key[x] & 1:
                self._complete_tile(v, x)
        base = v * self.deg
        for d in self._rot:
            if self._slots[base + self._key[d]] == -1:
                w = self._new_vertex()
                self._add_edge(v, d, w)
        self._completed[v] = 1

    def build_ball(self, radius):
        """Layered completion: round k completes every vertex known so far,
        so the tiles of round k are the faces touching the previous region."""
        for _ in range(radius):
            self._round_tag += 1
            pending = [v for v in range(self.num_vertices) if not self._completed[v]]
            for v in pending:
                self.complete_vertex(v)
        return self

    def ensure_radius(self, radius):
        """Complete every vertex at distance <= radius - 1."""
        if radius <= self._ensured_radius:
            return
        while True:
            dist = self.bfs()
            todo = [v for v in range(self.num_vertices)
                    if not self._completed[v] and 0 <= dist[v] <= radius - 1]
            if not todo:
                break
            for v in todo:
                self.complete_vertex(v)
        self._ensured_radius = radius
        self._dist_table = dist

    def dist_table(self):
        """Origin distances, exact for entries <= the ensured radius."""
        if self._dist_table is None:
            self._dist_table = self.bfs()
        return self._dist_table

    # -- queries ------------------------------------------------------

    def bfs(self, start=None, limit=None):
        """Distances over the currently built graph; -1 for unreached."""
        if start is None:
            start = self.origin
        dist = [-1] * self.num_vertices
        dist[start] = 0
        queue = deque([start])
        deg, slots = self.deg, self._slots
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if limit is not None and dv >= limit:
                continue
            base = v * deg
            for k in range(deg):
                w = slots[base + k]
                if w >= 0 and dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
        return dist

    def trace_path(self, word, start=None, auto_extend=True):
        """Endpoint of the unique lift of the word from start."""
        v = self.origin if start is None else start
        for d in word:
            w = self.slot(v, d)
            if w < 0:
                if not auto_extend:
                    raise CoverError("path leaves the built region")
                self.complete_vertex(v)
                w = self.slot(v, d)
            v = w
        return v

    def _grow_forward(self, target):
        # implicit growth stops at the vertex budget; explicit ensure_radius
        # calls (translation length, ball builds) are not budget-limited
        while self._ensured_radius < target:
            if self._ensured_radius >= 1 and self.num_vertices > self.forward_budget:
                break
            self.ensure_radius(self._ensured_radius + 1)
        return self._ensured_radius

    def oracle_word_length(self, word):
        """Exact Cayley distance from the origin to the endpoint of word.

        Uses the origin ball directly when it is deep enough, otherwise a
        backward search from the endpoint meeting the origin ball.
        """
        w = free_reduce(word)
        if not w:
            return 0
        radius = self._grow_forward(len(w))
        x = self.trace_path(w)
        dfwd = self.dist_table()
        dx = dfwd[x] if x < len(dfwd) else -1
        if 0 <= dx <= radius:
            return dx
        best = len(w)
        frontier = [x]
        back = {x: 0}
        depth = 0
        # paths of value c cross the trusted sphere by backward depth
        # c - radius, so depths past best - radius cannot improve best
        while frontier and depth + 1 <= best - radius:
            depth += 1
            nxt = []
            for u in frontier:
                if not self._completed[u]:
                    self.complete_vertex(u)
                base = u * self.deg
                for k in range(self.deg):
                    t = self._slots[base + k]
                    if t < 0 or t in back:
                        continue
                    back[t] = depth
                    dt = dfwd[t] if t < len(dfwd) else -1
                    if 0 <= dt <= radius:
                        best = min(best, dt + depth)
                    nxt.append(t)
            frontier = nxt
        return best

    def _local_dist(self, a, b, limit):
        """d(a, b) if < limit else None; read-only over the built region."""
        if a == b:
            return 0
        dist = {a: 0}
        frontier = [a]
        depth = 0
        while frontier and depth + 1 < limit:
            depth += 1
            nxt = []
            for u in frontier:
                base = u * self.deg
                for k in range(self.deg):
                    t = self._slots[base + k]
                    if t < 0 or t in dist:
                        continue
                    if t == b:
                        return depth
                    dist[t] = depth
                    nxt.append(t)
            frontier = nxt
        return None

    def oracle_conjugacy_length(self, word, radius=None):
        """min over the radius-R ball of the displacement d(v, w v).

        The vertex spelled by u maps under the deck transformation of w to
        the endpoint of w u from the origin; displacements are computed
        along the breadth-first tree so each image costs one edge step.
        A certified upper bound on the conjugacy length; callers check
        stabilization across increasing R.  Non-increasing in R.
        """
        w = free_reduce(word)
        if not w:
            return 0
        if radius is None:
            radius = len(w) + 4
        if radius < 1:
            raise ValueError("radius must be >= 1")
        # completing through the shell makes the displacement scans below
        # read-only inside the trusted region
        self.ensure_radius(radius + 1)
        dist0 = self.dist_table()
        # breadth-first tree with dart labels, image phi[v] = w . v
        phi = {self.origin: self.trace_path(w)}
        order = [self.origin]
        queue = deque([self.origin])
        seen = {self.origin}
        while queue:
            v = queue.popleft()
            if dist0[v] >= radius:
                continue
            for d in self.complex.darts:
                t = self.slot(v, d)
                if t >= 0 and t not in seen:
                    seen.add(t)
                    phi[t] = self.trace_path((d,), start=phi[v])
                    order.append(t)
                    queue.append(t)
        best = self.oracle_word_length(w)  # displacement of the origin
        if best == 0:
            return 0
        for v in order:
            e = phi[v]
            if e == v:
                return 0
            # only improvements whose geodesics provably stay inside the
            # completed region are searched; deeper minima enter as the
            # radius grows, which is what the stabilization check observes
            limit = min(best, radius - dist0[v] + 1)
            if limit <= 1:
                continue
            if e < len(dist0):
                # dist0 entries are exact only inside the completed radius
                d0e = dist0[e]
                if 0 <= d0e <= radius + 1 and abs(dist0[v] - d0e) >= limit:
                    continue
            d = self._local_dist(v, e, limit)
            if d is not None and d < best:
                best = d
                if best == 1:
                    break
        return best

    # -- reporting ----------------------------------------------------

    def face_layers(self):
        """Post-hoc layer index per recorded tile: layer-k tiles are those
        with a vertex in the union of the layers below (layer 1 at origin)."""
        if not self.record_tiles:
            raise CoverError("tiles were not recorded for this ball")
        layers = {}
        region = {self.origin}
        layer = 0
        while True:
            layer += 1
            new = [i for i, (_, verts) in enumerate(self.tiles)
                   if i not in layers and any(v in region for v in verts)]
            if not new:
                return layers
            for i in new:
                layers[i] = layer
                region.update(self.tiles[i][1])

    def stats(self):
        layers = self.face_layers() if self.record_tiles else {}
        return {
            "vertices": self.num_vertices,
            "edges": self.edge_count,
            "faces": self.tiles_built,
            "layers": max(layers.values()) if layers else 0,
        }

    def stats_json(self):
        return json.dumps(self.stats(), sort_keys=True)

    def to_dot(self):
        # each geometric edge appears exactly once as a positive-dart slot
        lines = ["graph ball {"]
        for v in range(self.num_vertices):
            base = v * self.deg
            for d in self.complex.darts:
                if d > 0:
                    w = self._slots[base + self._key[d]]
                    if w >= 0:
                        name = self.complex.generators[d - 1]
                        lines.append(f'  {v} -- {w} [label="{name}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def embed_gallery(ball, gallery):
    """Materialize a gallery chain as concrete tiles of the ball.

    Returns (vertices, edges, tiles) of the embedded region; edges are
    canonical (vertex, dart-key) pair sets and tiles are deduplicated, so
    a chain revisiting a tile contributes it once, as in the region it
    sweeps out.
    """
    cx = ball.complex
    fid0 = gallery.polygons[0]
    tile = ball.tile_at(ball.origin, cx.faces[fid0].sides[0])
    chain = [tile]
    for d in gallery.crossing_darts:
        fid, boundary = chain[-1]
        pos = cx.side_of[d][1]
        m = len(boundary)
        w = boundary[(pos + 1) % m]
        chain.append(ball.tile_at(w, -d))
    tiles = []
    for t in chain:
        if t not in tiles:
            tiles.append(t)
    verts = set()
    edges = set()
    for fid, boundary in tiles:
        sides = cx.faces[fid].sides
        m = len(boundary)
        for i in range(m):
            u, w = boundary[i], boundary[(i + 1) % m]
            d = sides[i]
            edges.add(frozenset(((u, dart_key(d)), (w, dart_key(-d)))))
            verts.add(u)
            verts.add(w)
    return verts, edges, tiles


def region_valences(verts, edges):
    """Number of region edges incident to each region vertex."""
    val = {v: 0 for v in verts}
    for edge in edges:
        for v, _ in edge:
            val[v] += 1
    return val


def build_ball(complex_, radius, cap=None):
    return TilingBall(complex_, cap=cap).build_ball(radius)


def oracle_word_length(complex_, word, cap=None):
    return TilingBall(complex_, cap=cap, record_tiles=False).oracle_word_length(word)


def oracle_conjugacy_length(complex_, word, radius=None, cap=None):
    return TilingBall(complex_, cap=cap, record_tiles=False).oracle_conjugacy_length(word, radius)
