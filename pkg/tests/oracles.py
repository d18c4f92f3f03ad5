"""Independent slow oracles used only by the test suite.

Two reference word-problem deciders, implemented from first principles and
sharing no code with the package internals they certify:

* the action of the disk braid group B_n(D) on the free group F_n
  (faithful, so automorphism equality decides word equality in B_n(D));

* the induced action of the sphere braid group B_n(S^2) on the free group
  F_{n-1} = pi_1(S^2 minus n points).  Equal sphere braids act by
  automorphisms that differ by an inner automorphism, and the kernel of the
  outer action on the marked sphere is exactly the order-two center.  An
  innerness check plus a Z/2 "level three" parity therefore decides
  equality of pure sphere braids.

Free group elements are tuples of nonzero ints (sign = exponent), always
kept reduced.
"""

from __future__ import annotations

import itertools

from hlfib.words import concat, free_reduce, inverse


# ---------------------------------------------------------------------------
# free-group substitution machinery


def substitute(word, images):
    """Apply the endomorphism generator i -> images[i] to a reduced word."""
    out = []
    for v in word:
        img = images[abs(v)] if v > 0 else inverse(images[abs(v)])
        for u in img:
            if out and out[-1] == -u:
                out.pop()
            else:
                out.append(u)
    return tuple(out)


class FreeAutomorphism:
    """Automorphism of the free group on generators 1..rank."""

    def __init__(self, rank, images=None):
        self.rank = rank
        if images is None:
            images = {i: (i,) for i in range(1, rank + 1)}
        self.images = {i: free_reduce(images[i]) for i in range(1, rank + 1)}

    def __call__(self, word):
        return substitute(free_reduce(word), self.images)

    def compose_letter(self, letter_images):
        """Post-compose: first apply self, then the map given by letter_images."""
        return FreeAutomorphism(
            self.rank,
            {i: substitute(self.images[i], letter_images) for i in self.images},
        )

    def __eq__(self, other):
        return self.rank == other.rank and self.images == other.images

    def key(self):
        return tuple(self.images[i] for i in range(1, self.rank + 1))


# ---------------------------------------------------------------------------
# disk braid group action (Artin): faithful on B_n(D)


def _disk_letter_images(v, n):
    """Images of generators 1..n of F_n under the braid letter v."""
    p = abs(v)
    images = {i: (i,) for i in range(1, n + 1)}
    if v > 0:
        images[p] = (p, p + 1, -p)
        images[p + 1] = (p,)
    else:
        images[p] = (p + 1,)
        images[p + 1] = (-(p + 1), p, p + 1)
    return images


def disk_action(word, n):
    """Automorphism of F_n induced by a braid word (letters applied in order)."""
    auto = FreeAutomorphism(n)
    for v in word:
        auto = auto.compose_letter(_disk_letter_images(v, n))
    return auto


def disk_equal(w1, w2, n):
    """Word problem for B_n(D) via the faithful Artin action."""
    return disk_action(tuple(w1), n) == disk_action(tuple(w2), n)


# ---------------------------------------------------------------------------
# sphere braid group action on pi_1(S^2 - n points) = F_{n-1}


def _sphere_letter_images(v, n):
    """Same formulas with t_n eliminated by t_n = (t_1 ... t_{n-1})^-1."""
    t_n = inverse(tuple(range(1, n)))
    p = abs(v)
    images = {i: (i,) for i in range(1, n)}
    if p < n - 1:
        if v > 0:
            images[p] = (p, p + 1, -p)
            images[p + 1] = (p,)
        else:
            images[p] = (p + 1,)
            images[p + 1] = (-(p + 1), p, p + 1)
    else:
        # crossing of the last two strands; t_n is the eliminated generator
        if v > 0:
            images[n - 1] = free_reduce(concat((n - 1,), t_n, (-(n - 1),)))
        else:
            images[n - 1] = free_reduce(t_n)
    return images


def sphere_action(word, n):
    """Automorphism of F_{n-1} induced by a sphere braid word."""
    auto = FreeAutomorphism(n - 1)
    for v in word:
        auto = auto.compose_letter(_sphere_letter_images(v, n))
    return auto


def _conjugator_onto(word, target):
    """If word = u target u^-1 in the free group, return u, else None."""
    w = free_reduce(word)
    if len(w) % 2 == 0:
        return None
    mid = len(w) // 2
    if w[mid] != target:
        return None
    u = w[:mid]
    if free_reduce(concat(u, (target,), inverse(u))) != w:
        return None
    return u


def sphere_is_inner(word, n):
    """True iff the sphere action of a pure braid word is an inner automorphism."""
    auto = sphere_action(tuple(word), n)
    u0 = _conjugator_onto(auto.images[1], 1)
    if u0 is None:
        return False
    # remaining freedom is conjugation by powers of t_1
    c = free_reduce(concat(inverse(u0), auto.images[2], u0))
    bound = len(c) + 2
    for m in range(-bound, bound + 1):
        t1m = (1,) * m if m >= 0 else (-1,) * (-m)
        u = free_reduce(concat(u0, t1m))
        if all(
            free_reduce(concat(inverse(u), auto.images[i], u)) == (i,)
            for i in range(1, n)
        ):
            return True
    return False


def _tracked_parity(word, n):
    """Exponent count of crossings among the strands starting at 1, 2, 3, mod 4."""
    pos = list(range(n + 1))  # pos[strand] = position
    at = list(range(n + 1))  # at[position] = strand
    e = 0
    for v in word:
        p = abs(v)
        a, b = at[p], at[p + 1]
        if a <= 3 and b <= 3:
            e += 1 if v > 0 else -1
        at[p], at[p + 1] = b, a
        pos[a], pos[b] = p + 1, p
    return e % 4


def sphere_level3_bit(word, n):
    """Z/2 class of a pure sphere braid after forgetting all but three strands."""
    e = _tracked_parity(tuple(word), n)
    if e % 2:
        raise ValueError("word is not pure on the tracked strands")
    return (e // 2) % 2


def sphere_pure_class(word, n):
    """Reference decision for pure sphere braid words.

    Returns "one", "dirac", or "other".
    """
    if not sphere_is_inner(word, n):
        return "other"
    return "dirac" if sphere_level3_bit(word, n) else "one"


def sphere_equal(w1, w2, n):
    """Reference word problem for pure sphere braid words."""
    return sphere_pure_class(concat(tuple(w1), inverse(tuple(w2))), n) == "one"


# ---------------------------------------------------------------------------
# helpers for building test words


def a_gen_word(i, j):
    """The standard pure generator A_ij as a braid word."""
    assert 1 <= i < j
    pre = tuple(range(j - 1, i, -1))
    return concat(pre, (i, i), inverse(pre))


def delta(n):
    return tuple(range(1, n)) * n


def relator_words(n):
    """The defining relators of the sphere braid group on n strands."""
    rels = []
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            rels.append(("r1", i, j, free_reduce((i, j, -i, -j))))
    for i in range(1, n - 1):
        rels.append(("r2", i, 0, (i, i + 1, i, -(i + 1), -i, -(i + 1))))
    rels.append(("r3", 0, 0, tuple(range(1, n)) + tuple(range(n - 1, 0, -1))))
    return rels


def random_pure_word(rng, n, length):
    """A random word with trivial permutation, built from conjugated squares."""
    out = []
    while len(out) < length:
        u = [rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(rng.randrange(0, 4))]
        i = rng.choice([1, -1]) * rng.randrange(1, n)
        out.extend(u + [i, i] + [-v for v in reversed(u)])
    return tuple(out)


def brute_words(n, max_len):
    """All braid words up to a length, for exhaustive small checks."""
    letters = [v for i in range(1, n) for v in (i, -i)]
    for length in range(max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            yield combo
