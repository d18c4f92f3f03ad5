"""Words in signed generator alphabets.

A word is a tuple of nonzero integers: ``v > 0`` is the generator with
index ``v``, ``v < 0`` its inverse.  This encoding is shared by all three
alphabets used in the package (braid generators of the sphere braid group,
the generators of the mapping class group of the marked sphere, and the
Dehn twist generators of the hyperelliptic mapping class group).
"""

from __future__ import annotations

from collections.abc import Iterable


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for v in letters:
        if v == 0:
            raise ValueError("zero is not a valid letter")
        if out and out[-1] == -v:
            out.pop()
        else:
            out.append(v)
    return tuple(out)


def inverse(letters: Iterable[int]) -> tuple[int, ...]:
    """The inverse word (reversed, with signs flipped)."""
    return tuple(-v for v in reversed(tuple(letters)))


def concat(*parts: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for part in parts:
        out.extend(part)
    return tuple(out)


def conjugate(u: Iterable[int], w: Iterable[int]) -> tuple[int, ...]:
    """The word ``u w u^-1`` (not reduced)."""
    u = tuple(u)
    return concat(u, w, inverse(u))


def commutator(a: Iterable[int], b: Iterable[int]) -> tuple[int, ...]:
    """The word ``a b a^-1 b^-1`` (not reduced)."""
    a, b = tuple(a), tuple(b)
    return concat(a, b, inverse(a), inverse(b))


def power(w: Iterable[int], k: int) -> tuple[int, ...]:
    """The word ``w^k`` for any integer ``k``."""
    w = tuple(w)
    if k < 0:
        w, k = inverse(w), -k
    return w * k


def check_letters(letters: Iterable[int], max_index: int) -> tuple[int, ...]:
    """Validate letter indices against an alphabet of size ``max_index``."""
    w = tuple(letters)
    for v in w:
        if v == 0 or abs(v) > max_index:
            raise ValueError(f"letter {v} out of range 1..{max_index}")
    return w


def exponent_sum(letters: Iterable[int]) -> int:
    return sum(1 if v > 0 else -1 for v in letters)
