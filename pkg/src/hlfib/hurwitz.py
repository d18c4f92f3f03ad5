"""Monodromy factorizations of hyperelliptic Lefschetz fibrations.

A :class:`MonodromyData` records a factorization over a closed oriented
base: the fiber genus, the base genus, one word per handle generator, and
an ordered list of factors, each a conjugated standard twist.  The global
relation (handle commutators followed by the factors) must be trivial in
the hyperelliptic mapping class group; :func:`validate` checks exactly
that.  Invariants (singular fiber counts, Euler characteristic, the
localized signature, and the order-two twist count ``w``) and the stable
isomorphism decision follow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .braid_kernel import BraidWord, DiracClass, dirac_class
from .mcg_kernel import AlphabetKind, IotaClass, MCWord, chain_twist_letters, iota_class
from .words import commutator, concat, free_reduce, inverse

__all__ = [
    "TwistCore",
    "ChainCore",
    "Factor",
    "MonodromyData",
    "ValidationReport",
    "FiberCounts",
    "InvariantReport",
    "StableDecision",
    "validate",
    "fiber_counts",
    "euler_characteristic",
    "signature",
    "w_invariant",
    "invariant_report",
    "elementary_transformation",
    "simultaneous_conjugate",
    "fiber_sum",
    "stabilize",
    "reference_system",
    "stably_isomorphic",
]


@dataclass(frozen=True)
class TwistCore:
    """A nonseparating twist letter zeta_i^sign (fiber type I)."""

    index: int
    sign: int = 1


@dataclass(frozen=True)
class ChainCore:
    """A separating twist (zeta_1 .. zeta_2h)^(sign*(4h+2)) (fiber type II_h)."""

    h: int
    sign: int = 1


Core = Union[TwistCore, ChainCore]


@dataclass(frozen=True)
class Factor:
    """A conjugated standard twist; the fiber type is read off the core."""

    conjugator: tuple[int, ...]
    core: Core

    def __post_init__(self):
        if self.core.sign not in (1, -1):
            raise ValueError("core sign must be +1 or -1")
        object.__setattr__(self, "conjugator", free_reduce(self.conjugator))

    def core_letters(self) -> tuple[int, ...]:
        if isinstance(self.core, TwistCore):
            return (self.core.sign * self.core.index,)
        return chain_twist_letters(self.core.h, self.core.sign)

    def letters(self) -> tuple[int, ...]:
        return free_reduce(concat(self.conjugator, self.core_letters(), inverse(self.conjugator)))


def twist(index: int, sign: int = 1, conjugator=()) -> Factor:
    return Factor(tuple(conjugator), TwistCore(index, sign))


def chain(h: int, sign: int = 1, conjugator=()) -> Factor:
    return Factor(tuple(conjugator), ChainCore(h, sign))


@dataclass(frozen=True)
class MonodromyData:
    """A Hurwitz system over a genus ``base_genus`` base surface.

    ``handle_words`` lists the images of the 2k handle generators in
    order a_1, b_1, .., a_k, b_k.  The global relation word is the
    product of handle commutators followed by the factor words.
    """

    g: int
    base_genus: int
    handle_words: tuple[tuple[int, ...], ...]
    factors: tuple[Factor, ...]

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("fiber genus must be at least 2")
        if self.base_genus < 0:
            raise ValueError("base genus must be nonnegative")
        if len(self.handle_words) != 2 * self.base_genus:
            raise ValueError("expected 2 * base_genus handle words")
        m = 2 * self.g + 1
        object.__setattr__(self, "handle_words", tuple(free_reduce(w) for w in self.handle_words))
        for w in self.handle_words:
            for v in w:
                if not 1 <= abs(v) <= m:
                    raise ValueError(f"handle letter {v} out of range")
        for f in self.factors:
            for v in f.conjugator:
                if not 1 <= abs(v) <= m:
                    raise ValueError(f"conjugator letter {v} out of range")
            if isinstance(f.core, TwistCore) and not 1 <= f.core.index <= m:
                raise ValueError(f"twist index {f.core.index} out of range")
            if isinstance(f.core, ChainCore) and not 1 <= f.core.h <= self.g // 2:
                raise ValueError(f"chain parameter {f.core.h} out of range")

    def global_letters(self) -> tuple[int, ...]:
        parts = []
        for i in range(self.base_genus):
            parts.append(commutator(self.handle_words[2 * i], self.handle_words[2 * i + 1]))
        parts.extend(f.letters() for f in self.factors)
        return free_reduce(concat(*parts))

    def global_word(self) -> MCWord:
        return MCWord(AlphabetKind.ZETA, self.g, self.global_letters())

    def factor_product_letters(self) -> tuple[int, ...]:
        return free_reduce(concat(*(f.letters() for f in self.factors))) if self.factors else ()


# ---------------------------------------------------------------------------
# validation and invariants


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    checks: tuple[tuple[str, bool, str], ...]

    def failures(self) -> tuple[str, ...]:
        return tuple(f"{name}: {detail}" for name, passed, detail in self.checks if not passed)


def validate(m: MonodromyData) -> ValidationReport:
    """Check the global relation in the hyperelliptic mapping class group."""
    cls = iota_class(m.global_word())
    if cls == IotaClass.ONE:
        checks = (("global_relation", True, "trivial"),)
    elif cls == IotaClass.IOTA:
        checks = (("global_relation", False, "equals the involution class iota"),)
    else:
        checks = (("global_relation", False, "nontrivial in the marked-sphere group"),)
    return ValidationReport(all(c[1] for c in checks), checks)


@dataclass(frozen=True)
class FiberCounts:
    """Counts of singular fibers by type; nh tuples are indexed by h-1."""

    n0_pos: int
    n0_neg: int
    nh_pos: tuple[int, ...]
    nh_neg: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.n0_pos + self.n0_neg + sum(self.nh_pos) + sum(self.nh_neg)


def fiber_counts(m: MonodromyData) -> FiberCounts:
    """Tally factor cores: type I by sign, type II_h by h and sign."""
    hmax = m.g // 2
    n0 = [0, 0]
    nh_pos = [0] * hmax
    nh_neg = [0] * hmax
    for f in m.factors:
        if isinstance(f.core, TwistCore):
            n0[0 if f.core.sign > 0 else 1] += 1
        else:
            (nh_pos if f.core.sign > 0 else nh_neg)[f.core.h - 1] += 1
    return FiberCounts(n0[0], n0[1], tuple(nh_pos), tuple(nh_neg))


def euler_characteristic(m: MonodromyData) -> int:
    n = fiber_counts(m).total
    return (2 - 2 * m.g) * (2 - 2 * m.base_genus) + n


def signature(m: MonodromyData) -> int:
    """Signature of the total space, localized on the singular fibers.

    Each nonseparating twist contributes -(g+1)/(2g+1) and each
    separating twist of type II_h contributes 4h(g-h)/(2g+1) - 1, with
    signs reversed for negative-type fibers; the rational total must be
    an integer.
    """
    g = m.g
    counts = fiber_counts(m)
    total = Fraction(-(g + 1), 2 * g + 1) * (counts.n0_pos - counts.n0_neg)
    for h in range(1, g // 2 + 1):
        contribution = Fraction(4 * h * (g - h), 2 * g + 1) - 1
        total += contribution * (counts.nh_pos[h - 1] - counts.nh_neg[h - 1])
    if total.denominator != 1:
        raise ValueError(f"signature is not an integer: {total}")
    return int(total)


def w_invariant(m: MonodromyData) -> int:
    """Number mod 2 of order-two central braid lifts carried by the system.

    The global relation word is lifted letterwise to the sphere braid
    group on 2g+2 strands; for valid data the lift is the identity or the
    full twist, and w is 1 exactly in the latter case.  The value is an
    isomorphism invariant only for odd g.
    """
    word = m.global_letters()
    cls = dirac_class(BraidWord(2 * m.g + 2, word))
    if cls == DiracClass.NOT_IN_KERNEL:
        raise ValueError("monodromy data is not valid (global relation nontrivial)")
    return 1 if cls == DiracClass.DIRAC else 0


@dataclass(frozen=True)
class InvariantReport:
    g: int
    base_genus: int
    n0_pos: int
    n0_neg: int
    nh_pos: tuple[int, ...]
    nh_neg: tuple[int, ...]
    n: int
    chi: int
    sigma: int
    w: int
    w_is_invariant: bool


def invariant_report(m: MonodromyData) -> InvariantReport:
    counts = fiber_counts(m)
    return InvariantReport(
        g=m.g,
        base_genus=m.base_genus,
        n0_pos=counts.n0_pos,
        n0_neg=counts.n0_neg,
        nh_pos=counts.nh_pos,
        nh_neg=counts.nh_neg,
        n=counts.total,
        chi=euler_characteristic(m),
        sigma=signature(m),
        w=w_invariant(m),
        w_is_invariant=m.g % 2 == 1,
    )


# ---------------------------------------------------------------------------
# moves


def elementary_transformation(m: MonodromyData, index: int, direction: str) -> MonodromyData:
    """Slide two adjacent factors; the global product is unchanged.

    direction "r": (a, b) -> (b, b^-1 a b); direction "l": (a, b) ->
    (a b a^-1, a).  The conjugate is renormalized by absorbing the moved
    factor's word into the conjugator.
    """
    if not 0 <= index < len(m.factors) - 1:
        raise IndexError(f"no adjacent factor pair at {index}")
    a, b = m.factors[index], m.factors[index + 1]
    if direction == "r":
        moved = Factor(free_reduce(concat(inverse(b.letters()), a.conjugator)), a.core)
        pair = (b, moved)
    elif direction == "l":
        moved = Factor(free_reduce(concat(a.letters(), b.conjugator)), b.core)
        pair = (moved, a)
    else:
        raise ValueError("direction must be 'l' or 'r'")
    factors = m.factors[:index] + pair + m.factors[index + 2:]
    return MonodromyData(m.g, m.base_genus, m.handle_words, factors)


def simultaneous_conjugate(m: MonodromyData, word) -> MonodromyData:
    """Conjugate every factor and handle word by the given zeta word."""
    u = tuple(word)
    factors = tuple(Factor(free_reduce(concat(u, f.conjugator)), f.core) for f in m.factors)
    handles = tuple(free_reduce(concat(u, h, inverse(u))) for h in m.handle_words)
    return MonodromyData(m.g, m.base_genus, handles, factors)


def fiber_sum(m1: MonodromyData, m2: MonodromyData, twist_word=()) -> MonodromyData:
    """Join two systems over the connected sum of their bases.

    The second system's factors are conjugated by the gluing word.  When
    the second base has positive genus its handle words are additionally
    conjugated past the first system's factor product, so that the fixed
    handles-then-factors ordering of the global relation stays trivial.
    """
    if m1.g != m2.g:
        raise ValueError("fiber genus mismatch")
    t = tuple(twist_word)
    factors = m1.factors + tuple(
        Factor(free_reduce(concat(t, f.conjugator)), f.core) for f in m2.factors
    )
    if m2.base_genus:
        u = free_reduce(concat(m1.factor_product_letters(), t))
        extra = tuple(free_reduce(concat(u, h, inverse(u))) for h in m2.handle_words)
    else:
        extra = ()
    return MonodromyData(m1.g, m1.base_genus + m2.base_genus, m1.handle_words + extra, factors)


def reference_system(g: int) -> MonodromyData:
    """The sphere-base system (zeta_1 .. zeta_{2g+1} zeta_{2g+1} .. zeta_1)^2."""
    m = 2 * g + 1
    ramp = tuple(range(1, m + 1)) + tuple(range(m, 0, -1))
    return MonodromyData(g, 0, (), tuple(twist(i) for i in ramp * 2))


def stabilize(m: MonodromyData, n: int) -> MonodromyData:
    """n successive untwisted fiber sums with the reference system."""
    if n < 0:
        raise ValueError("stabilization count must be nonnegative")
    out = m
    for _ in range(n):
        out = fiber_sum(out, reference_system(m.g))
    return out


# ---------------------------------------------------------------------------
# stable isomorphism


@dataclass(frozen=True)
class StableDecision:
    isomorphic: bool
    reasons: tuple[str, ...]
    reports: tuple[InvariantReport, InvariantReport]


def stably_isomorphic(m1: MonodromyData, m2: MonodromyData) -> StableDecision:
    """Decide stable isomorphism from fiber counts and, for odd g, from w."""
    if m1.g != m2.g:
        raise ValueError("fiber genus mismatch")
    if m1.base_genus != m2.base_genus:
        raise ValueError("base genus mismatch")
    for m in (m1, m2):
        report = validate(m)
        if not report.ok:
            raise ValueError(f"invalid monodromy data: {report.failures()}")
    r1, r2 = invariant_report(m1), invariant_report(m2)
    reasons = []
    if (r1.n0_pos, r1.n0_neg) != (r2.n0_pos, r2.n0_neg):
        reasons.append(f"type I counts differ ({r1.n0_pos},{r1.n0_neg}) vs ({r2.n0_pos},{r2.n0_neg})")
    if (r1.nh_pos, r1.nh_neg) != (r2.nh_pos, r2.nh_neg):
        reasons.append("type II counts differ")
    if m1.g % 2 == 1 and r1.w != r2.w:
        reasons.append(f"w differs ({r1.w} vs {r2.w})")
    return StableDecision(not reasons, tuple(reasons), (r1, r2))


# ---------------------------------------------------------------------------
# file format


def to_json_dict(m: MonodromyData) -> dict:
    factors = []
    for f in m.factors:
        if isinstance(f.core, TwistCore):
            core = {"kind": "twist", "index": f.core.index, "sign": f.core.sign}
        else:
            core = {"kind": "chain", "h": f.core.h, "sign": f.core.sign}
        factors.append({"conjugator": list(f.conjugator), "core": core})
    return {
        "fiber_genus": m.g,
        "base_genus": m.base_genus,
        "handle_words": [list(w) for w in m.handle_words],
        "factors": factors,
    }


def from_json_dict(data: dict) -> MonodromyData:
    try:
        factors = []
        for item in data["factors"]:
            core = item["core"]
            if core["kind"] == "twist":
                c: Core = TwistCore(int(core["index"]), int(core["sign"]))
            elif core["kind"] == "chain":
                c = ChainCore(int(core["h"]), int(core["sign"]))
            else:
                raise ValueError(f"unknown core kind {core['kind']!r}")
            factors.append(Factor(tuple(int(v) for v in item["conjugator"]), c))
        return MonodromyData(
            int(data["fiber_genus"]),
            int(data["base_genus"]),
            tuple(tuple(int(v) for v in w) for w in data["handle_words"]),
            tuple(factors),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed monodromy file: {exc}") from exc
