"""Words over a generating set.

A dart is a signed nonzero int: +k is the k-th generator (1-based), -k its
inverse.  A word is a tuple of darts.  Cyclic words are plain words kept in
a canonical rotation; see :func:`cyclic_canon`.
"""

import re

from .errors import WordSyntaxError

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)('?)(?:\^(-?\d+))?$")


def dart_key(d):
    """Total order on darts: a < a' < b < b' < ...  (generator, then sign)."""
    return ((abs(d) - 1) << 1) | (d < 0)


def word_key(word):
    return tuple(dart_key(d) for d in word)


def inverse(word):
    return tuple(-d for d in reversed(word))


def free_reduce(word):
    """Cancel adjacent inverse pairs until none remain."""
    out = []
    for d in word:
        if out and out[-1] == -d:
            out.pop()
        else:
            out.append(d)
    return tuple(out)


def cyclic_free_reduce(word):
    """Free reduction followed by cancellation across the wrap-around."""
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def rotations(word):
    if not word:
        return [()]
    return [word[i:] + word[:i] for i in range(len(word))]


def cyclic_canon(word):
    """Canonical form of a cyclic word: cyclically reduced, least rotation."""
    w = cyclic_free_reduce(word)
    if not w:
        return ()
    return min(rotations(w), key=word_key)


def parse_word(text, generators):
    """Parse a word string: whitespace tokens, ' for inverse, ^k powers.

    ``a b a' b' c^3 c'^2`` -> darts; unknown names raise WordSyntaxError.
    """
    index = {name: i + 1 for i, name in enumerate(generators)}
    darts = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise WordSyntaxError(f"bad word token {token!r}")
        name, prime, power = m.group(1), m.group(2), m.group(3)
        if name not in index:
            raise WordSyntaxError(f"unknown generator {name!r} in word")
        d = index[name] * (-1 if prime else 1)
        k = 1 if power is None else int(power)
        if k < 0:
            d, k = -d, -k
        darts.extend([d] * k)
    return tuple(darts)


def format_word(word, generators):
    """Inverse of parse_word for single letters; empty word prints ``1``."""
    if not word:
        return "1"
    parts = []
    for d in word:
        name = generators[abs(d) - 1]
        parts.append(name if d > 0 else name + "'")
    return " ".join(parts)
