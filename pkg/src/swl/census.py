"""Counting simple closed curves on the one-holed torus by word length.

Unoriented free homotopy classes of essential simple closed curves are the
coprime slope classes (p, q) ~ (-p, -q).  The canonical cyclically reduced
representative of slope class (p, q) is a Christoffel word, whose length
|p| + |q| in the standard basis equals its conjugacy length; counting
classes with length at most L and fitting log count against log L recovers
the quadratic growth exponent 6g - 6 + 2r = 2.
"""

import json
import math
import statistics
from dataclasses import dataclass

from .errors import InsufficientDataError, ValidationError
from .surface import HOLED


def canonical_slope(p, q):
    """Representative of (p, q) ~ (-p, -q): p > 0, or (0, 1)."""
    if p == 0 and q == 0:
        raise ValidationError("slope (0, 0) is not a curve class")
    if math.gcd(abs(p), abs(q)) != 1:
        raise ValidationError(f"slope ({p}, {q}) is not primitive")
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return p, q


def slope_classes(max_length):
    """All canonical coprime classes with |p| + |q| <= max_length."""
    out = []
    if max_length >= 1:
        out.append((0, 1))
    for p in range(1, max_length + 1):
        for q in range(-(max_length - p), max_length - p + 1):
            if math.gcd(p, abs(q)) == 1:
                out.append((p, q))
    return out


def christoffel_word(p, q):
    """Cyclically reduced word of length |p| + |q| with abelianization (p, q).

    Cutting sequence of the segment from (0, 0) to (p, |q|): crossings of
    vertical grid lines emit the first generator, horizontal ones the
    second; exact integer comparisons keep it deterministic.
    """
    p, q = canonical_slope(p, q)
    b = 2 if q >= 0 else -2
    qq = abs(q)
    if p == 0:
        return (b,)
    if qq == 0:
        return (1,)
    events = [(k * qq, 0) for k in range(1, p + 1)]       # time k/p scaled by p*q
    events += [(k * p, 1) for k in range(1, qq + 1)]
    events.sort()
    return tuple(1 if kind == 0 else b for _, kind in events)


def abelianization(word):
    p = sum(1 if d == 1 else -1 if d == -1 else 0 for d in word)
    q = sum(1 if d == 2 else -1 if d == -2 else 0 for d in word)
    return p, q


def _require_torus(complex_):
    if complex_.genus != 1 or complex_.boundary_count != 1:
        raise ValidationError("orbit counting needs a one-holed torus (g=1, r=1)")


def _is_standard_basis(complex_):
    return (complex_.n == 2 and len(complex_.faces) == 1
            and complex_.faces[0].kind == HOLED)


def orbit_count_torus(complex_, L, mode="fast", engine=None, enumeration_factor=1):
    """Number of slope classes with conjugacy length at most L.

    fast mode uses length = |p| + |q| (standard basis only); engine mode
    measures each Christoffel word with cyclic_shortest.  For a basis whose
    generators have standard length up to k, pass enumeration_factor=k so
    the slope sweep provably covers every class of length <= L.
    """
    _require_torus(complex_)
    if mode == "fast":
        if not _is_standard_basis(complex_):
            raise ValidationError("fast mode requires the standard one-holed torus basis")
        return len(slope_classes(L))
    if mode != "engine":
        raise ValidationError(f"unknown mode {mode!r}")
    if engine is None:
        from .engine import GeodesicEngine
        engine = GeodesicEngine(complex_)
    count = 0
    for p, q in slope_classes(L * enumeration_factor):
        if engine.cyclic_shortest(christoffel_word(p, q))[0] <= L:
            count += 1
    return count


@dataclass(frozen=True)
class CountSeries:
    pairs: tuple  # of (L, count)
    exponent: float
    constant: float

    def to_csv(self):
        return "L,count\n" + "".join(f"{L},{c}\n" for L, c in self.pairs)

    def summary_json(self, mode, basis):
        return json.dumps({
            "exponent": self.exponent,
            "constant": self.constant,
            "mode": mode,
            "basis": basis,
        }, sort_keys=True)


def fit_exponent(pairs):
    """Least-squares slope and scale of count ~ constant * L^exponent."""
    pairs = [(L, c) for L, c in pairs if c > 0]
    if len(pairs) < 4:
        raise InsufficientDataError("need at least 4 positive data points")
    ls = [L for L, _ in pairs]
    if max(ls) < 4 * min(ls):
        raise InsufficientDataError("L values must span at least 2 octaves")
    xs = [math.log(L) for L, _ in pairs]
    ys = [math.log(c) for _, c in pairs]
    fit = statistics.linear_regression(xs, ys)
    return fit.slope, math.exp(fit.intercept)


def count_series(complex_, lengths, mode="fast", engine=None, enumeration_factor=1):
    pairs = tuple((L, orbit_count_torus(complex_, L, mode, engine, enumeration_factor))
                  for L in sorted(lengths))
    exponent, constant = fit_exponent(pairs)
    return CountSeries(pairs, exponent, constant)
