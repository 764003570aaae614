"""Shared generators and independent oracles for the test suite."""

import random


def alphabet(n):
    return [d for k in range(1, n + 1) for d in (k, -k)]


def all_reduced_words(n, max_len, include_empty=True):
    """Every freely reduced word of length <= max_len, by length."""
    words = [()] if include_empty else []
    frontier = [()]
    letters = alphabet(n)
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for d in letters:
                if w and w[-1] == -d:
                    continue
                nxt.append(w + (d,))
        words.extend(nxt)
        frontier = nxt
    return words


def random_reduced_word(rng, n, length):
    letters = alphabet(n)
    w = []
    for _ in range(length):
        choices = [d for d in letters if not w or d != -w[-1]]
        w.append(rng.choice(choices))
    return tuple(w)


def random_cyclically_reduced_word(rng, n, length):
    for _ in range(1000):
        w = random_reduced_word(rng, n, length)
        if len(w) < 2 or w[0] != -w[-1]:
            return w
    raise AssertionError("could not sample a cyclically reduced word")


def seeded(seed=20240515):
    return random.Random(seed)


def totient_sum(limit):
    """Sum of Euler phi over 2..limit by sieve; the count of coprime pairs
    (p, q) with p, q >= 1 and p + q <= limit, independent of gcd loops."""
    sieve = list(range(limit + 1))
    for i in range(2, limit + 1):
        if sieve[i] == i:  # prime
            for j in range(i, limit + 1, i):
                sieve[j] -= sieve[j] // i
    return sum(sieve[2:limit + 1])


def brute_force_class_count(limit):
    """2 axis classes plus the two sign choices of each interior pair."""
    return 2 + 2 * totient_sum(limit)


def per_edge_crossings(census, generators):
    counts = {g: 0 for g in generators}
    for _, seq in census.components:
        for g in seq:
            counts[g] += 1
    return counts
