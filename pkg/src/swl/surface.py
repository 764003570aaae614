"""One-vertex combinatorial maps: parsing, face tracing, genus/boundary.

A generating set of pairwise-disjoint simple loops based at a single point
is encoded as a rotation system: the cyclic counterclockwise order of the
2n darts around the vertex.  Cutting the surface along the loops yields the
complementary polygons; these are exactly the faces traced here.
"""

import itertools
import json
from dataclasses import dataclass

from .errors import (
    DuplicateDartError,
    MissingSectionError,
    SearchSizeError,
    SpecFormatError,
    UnknownFaceError,
    UnknownSymbolError,
    ValidationError,
)
from .words import dart_key, format_word

DISK = "disk"
HOLED = "holed"


@dataclass(frozen=True)
class SurfaceSpec:
    """Parsed spec document: generator names, rotation, holed face ids."""

    generators: tuple
    rotation: tuple
    holed_faces: frozenset

    @property
    def n(self):
        return len(self.generators)


@dataclass(frozen=True)
class Face:
    id: int
    sides: tuple  # cyclic dart sequence, starts at its least dart
    kind: str

    def __len__(self):
        return len(self.sides)


class Complex:
    """Traced cut decomposition of the surface along the generating loops.

    Immutable after construction; safe to share between engine and oracle.
    """

    def __init__(self, spec, faces, genus, boundary_count, euler_char):
        self.spec = spec
        self.faces = tuple(faces)
        self.genus = genus
        self.boundary_count = boundary_count
        self.euler_char = euler_char
        self.generators = spec.generators
        self.n = spec.n
        # dart -> (face id, position); every dart lies in exactly one face
        self.side_of = {}
        for f in self.faces:
            for pos, d in enumerate(f.sides):
                self.side_of[d] = (f.id, pos)
        rot = spec.rotation
        self.rot_succ = {rot[i - 1]: rot[i] for i in range(len(rot))}
        self.rot_pred = {rot[i]: rot[i - 1] for i in range(len(rot))}
        self.disk_faces = tuple(f for f in self.faces if f.kind == DISK)

    def __eq__(self, other):
        return isinstance(other, Complex) and self.spec == other.spec and self.faces == other.faces

    def __hash__(self):
        return hash((self.spec, self.faces))

    def __repr__(self):
        return (f"Complex(n={self.n}, faces={len(self.faces)}, g={self.genus}, "
                f"r={self.boundary_count})")

    @property
    def darts(self):
        return [d for k in range(1, self.n + 1) for d in (k, -k)]

    def face(self, face_id):
        if not 0 <= face_id < len(self.faces):
            raise UnknownFaceError(f"no face with id {face_id}")
        return self.faces[face_id]

    def face_of_dart(self, d):
        return self.faces[self.side_of[d][0]]

    def to_spec_text(self):
        gens = " ".join(self.generators)
        rot = " ".join(_dart_name(d, self.generators) for d in self.spec.rotation)
        holed = " ".join(str(i) for i in sorted(self.spec.holed_faces))
        return f"generators: {gens}\nrotation: {rot}\nholed: {holed}\n"

    def to_json_dict(self):
        return {
            "genus": self.genus,
            "boundary": self.boundary_count,
            "euler": self.euler_char,
            "faces": [
                {"id": f.id, "kind": f.kind, "word": format_word(f.sides, self.generators)}
                for f in self.faces
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _dart_name(d, generators):
    name = generators[abs(d) - 1]
    return name if d > 0 else name + "'"


def parse_surface_spec(text):
    """Parse the line-oriented spec format.

    ``generators: a b`` / ``rotation: a b a' b'`` / ``holed: 0`` with ``#``
    comments.  Checks well-formedness only; admissibility is build_complex's
    job.
    """
    sections = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise SpecFormatError(f"expected 'key: values' line, got {line!r}")
        key, _, rest = line.partition(":")
        key = key.strip()
        if key not in ("generators", "rotation", "holed"):
            raise SpecFormatError(f"unknown section {key!r}")
        if key in sections:
            raise SpecFormatError(f"section {key!r} given twice")
        sections[key] = rest.split()

    for key in ("generators", "rotation"):
        if key not in sections:
            raise MissingSectionError(f"missing section {key!r}")
    if "holed" not in sections:
        raise MissingSectionError("missing section 'holed' (may be empty)")

    generators = tuple(sections["generators"])
    if len(generators) < 2:
        raise SpecFormatError("need at least 2 generators")
    if len(set(generators)) != len(generators):
        raise SpecFormatError("duplicate generator name")
    for g in generators:
        if g.endswith("'") or not g[0].isalpha():
            raise SpecFormatError(f"bad generator name {g!r}")

    index = {g: i + 1 for i, g in enumerate(generators)}
    rotation = []
    seen = set()
    for token in sections["rotation"]:
        name, inv = (token[:-1], True) if token.endswith("'") else (token, False)
        if name not in index:
            raise UnknownSymbolError(f"unknown symbol {token!r} in rotation")
        d = -index[name] if inv else index[name]
        if d in seen:
            raise DuplicateDartError(f"dart {token!r} listed twice in rotation")
        seen.add(d)
        rotation.append(d)
    if len(rotation) != 2 * len(generators):
        missing = [_dart_name(d, generators)
                   for k in range(1, len(generators) + 1)
                   for d in (k, -k) if d not in seen]
        raise SpecFormatError(f"rotation must list all darts; missing {missing}")

    holed = set()
    for token in sections["holed"]:
        if not token.lstrip("-").isdigit():
            raise UnknownSymbolError(f"holed face id {token!r} is not an integer")
        holed.add(int(token))

    return SurfaceSpec(generators, tuple(rotation), frozenset(holed))


def trace_faces(rotation):
    """Face orbits of the rotation system.

    The face-successor of dart d is the rotation-predecessor of its inverse,
    so the standard square rotation ``a b a' b'`` traces the single face
    ``a b a' b'``.  Faces are numbered by least unvisited dart and each cycle
    starts at its least dart.
    """
    pred = {rotation[i]: rotation[i - 1] for i in range(len(rotation))}
    unvisited = set(rotation)
    faces = []
    for start in sorted(rotation, key=dart_key):
        if start not in unvisited:
            continue
        cycle = []
        d = start
        while True:
            cycle.append(d)
            unvisited.discard(d)
            d = pred[-d]
            if d == start:
                break
        faces.append(tuple(cycle))
    return faces


def build_complex(spec):
    """Trace faces, attach holes, and compute genus / boundary / Euler."""
    cycles = trace_faces(spec.rotation)
    for i in spec.holed_faces:
        if not 0 <= i < len(cycles):
            raise ValidationError(f"holed face index {i} out of range (0..{len(cycles) - 1})")
    faces = [Face(i, c, HOLED if i in spec.holed_faces else DISK) for i, c in enumerate(cycles)]
    n = spec.n
    r = len(spec.holed_faces)
    n_disk = len(faces) - r
    euler = 1 - n + n_disk
    genus = (2 - r - euler) // 2
    assert 2 - 2 * genus - r == euler
    if 3 * genus + r <= 3:
        raise ValidationError(
            f"degenerate surface: 3g+r = {3 * genus + r} <= 3 (g={genus}, r={r})")
    return Complex(spec, faces, genus, r, euler)


def face_boundary_word(complex_, face_id):
    """Boundary word of a face, starting at its canonical (least) dart."""
    return complex_.face(face_id).sides


def search_generating_sets(n, predicate=None, max_results=None):
    """All rotation systems on n generators (up to rotation of the sequence)
    whose traced complex is admissible and satisfies the predicate.

    Enumerates every holed-face subset per rotation.  Deterministic order.
    """
    if not 2 <= n <= 5:
        raise SearchSizeError(f"search supports 2 <= n <= 5, got {n}")
    darts = sorted((d for k in range(1, n + 1) for d in (k, -k)), key=dart_key)
    first, rest = darts[0], darts[1:]
    generators = tuple(_default_names(n))
    out = []
    for perm in itertools.permutations(rest):
        rotation = (first,) + perm
        cycles = trace_faces(rotation)
        nf = len(cycles)
        for bits in range(1 << nf):
            holed = frozenset(i for i in range(nf) if bits >> i & 1)
            spec = SurfaceSpec(generators, rotation, holed)
            try:
                cx = build_complex(spec)
            except ValidationError:
                continue
            if predicate is None or predicate(cx):
                out.append(spec)
                if max_results is not None and len(out) >= max_results:
                    return out
    return out


def _default_names(n):
    names = ["a", "b", "c", "d", "e"]
    return names[:n]


# canonical text of the three complexes used throughout the test suite
TORUS_SPEC = "generators: a b\nrotation: a b a' b'\nholed: 0\n"
GENUS2_SPEC = ("generators: a1 b1 a2 b2\n"
               "rotation: a1 b2 a2' b2' a2 b1 a1' b1'\n"
               "holed:\n")
TORUS_TRIANGLES_SPEC = "generators: a b c\nrotation: a c b a' c' b'\nholed: 1\n"
