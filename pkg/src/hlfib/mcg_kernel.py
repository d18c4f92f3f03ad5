"""Presentations and word problems for the marked-sphere and hyperelliptic groups.

Three presentations share the same relation shapes: the sphere braid group
(alphabet ``x``), the mapping class group of the sphere with ``2g+2``
marked points (alphabet ``xi``, one extra power relator), and the
hyperelliptic mapping class group of the genus ``g`` surface (alphabet
``zeta``, squared chain relator plus a commutator relator).  The word
problem in the marked-sphere group reduces to :func:`hlfib.braid_kernel.dirac_class`
through the order-two central extension; the hyperelliptic group is a
further order-two extension detected on integral homology, where the
extra central element (the class of the hyperelliptic involution) acts as
minus the identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .braid_kernel import BraidWord, DiracClass, dirac_class
from .words import check_letters, commutator, concat, free_reduce, inverse, power


class AlphabetKind(enum.Enum):
    X = "x"
    XI = "xi"
    ZETA = "zeta"


@dataclass(frozen=True)
class Alphabet:
    """Generator alphabet of one of the three presentations: 2g+1 letters."""

    kind: AlphabetKind
    g: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("genus must be at least 2")

    @property
    def size(self) -> int:
        return 2 * self.g + 1


@dataclass(frozen=True)
class MCWord:
    """A word over the xi or zeta alphabet for fiber genus g."""

    kind: AlphabetKind
    g: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("genus must be at least 2")
        object.__setattr__(self, "letters", check_letters(self.letters, 2 * self.g + 1))

    def inverse(self) -> "MCWord":
        return MCWord(self.kind, self.g, inverse(self.letters))

    def __mul__(self, other: "MCWord") -> "MCWord":
        if (self.kind, self.g) != (other.kind, other.g):
            raise ValueError("alphabet mismatch")
        return MCWord(self.kind, self.g, self.letters + other.letters)


def zeta_word(g: int, letters) -> MCWord:
    return MCWord(AlphabetKind.ZETA, g, tuple(letters))


def xi_word(g: int, letters) -> MCWord:
    return MCWord(AlphabetKind.XI, g, tuple(letters))


def iota_letters(g: int) -> tuple[int, ...]:
    """The chain word zeta_1 .. zeta_{2g+1} zeta_{2g+1} .. zeta_1."""
    m = 2 * g + 1
    return tuple(range(1, m + 1)) + tuple(range(m, 0, -1))


# ---------------------------------------------------------------------------
# relator tables


@dataclass(frozen=True)
class Relator:
    label: str
    params: tuple[int, ...]
    word: tuple[int, ...]


@dataclass(frozen=True)
class SLetter:
    """A meridional letter: a twist type and the word it stands for."""

    label: str
    params: tuple[int, ...]
    sign: int
    word: tuple[int, ...]


@dataclass(frozen=True)
class RelatorTable:
    presentation: str
    alphabet: Alphabet
    relators: tuple[Relator, ...]
    letters: tuple[SLetter, ...]

    def relator(self, label: str, *params: int) -> Relator:
        for r in self.relators:
            if r.label == label and r.params == tuple(params):
                return r
        raise KeyError(f"no relator {label}{params} in table {self.presentation}")

    def has_relator(self, label: str) -> bool:
        return any(r.label == label for r in self.relators)


PRESENTATIONS = ("C0", "Ctilde", "Chat")

_KINDS = {"C0": AlphabetKind.XI, "Ctilde": AlphabetKind.X, "Chat": AlphabetKind.ZETA}


def relators(kind: str, g: int) -> RelatorTable:
    """The relator table of one of the presentations C0, Ctilde, Chat."""
    if kind not in PRESENTATIONS:
        raise ValueError(f"kind must be one of {PRESENTATIONS}")
    if g < 2:
        raise ValueError("genus must be at least 2")
    m = 2 * g + 1
    rels: list[Relator] = []
    for i in range(1, m):
        for j in range(i + 2, m + 1):
            rels.append(Relator("r1", (i, j), (i, j, -i, -j)))
    for i in range(1, m):
        rels.append(Relator("r2", (i,), (i, i + 1, i, -(i + 1), -i, -(i + 1))))
    chain = tuple(range(1, m + 1)) + tuple(range(m, 0, -1))
    if kind == "Chat":
        rels.append(Relator("r3", (), chain * 2))
    else:
        rels.append(Relator("r3", (), chain))
    if kind != "Ctilde":
        rels.append(Relator("r4", (), tuple(range(1, m + 1)) * (2 * g + 2)))
    if kind == "Chat":
        rels.append(Relator("r5", (), free_reduce(commutator((1,), chain))))
    letters: list[SLetter] = []
    for i in range(1, m + 1):
        for sign in (1, -1):
            letters.append(SLetter("l0", (i,), sign, (sign * i,)))
    for h in range(1, g // 2 + 1):
        for sign in (1, -1):
            letters.append(SLetter("lh", (h,), sign, power(tuple(range(1, 2 * h + 1)), sign * (4 * h + 2))))
    return RelatorTable(kind, Alphabet(_KINDS[kind], g), tuple(rels), tuple(letters))


def chain_twist_letters(h: int, sign: int) -> tuple[int, ...]:
    """The separating twist word (zeta_1 .. zeta_{2h})^{sign*(4h+2)}."""
    return power(tuple(range(1, 2 * h + 1)), sign * (4 * h + 2))


# ---------------------------------------------------------------------------
# marked-sphere word problem


def to_sphere_braid(w: MCWord) -> BraidWord:
    """Relabel a xi or zeta word as a sphere braid word on 2g+2 strands."""
    return BraidWord(2 * w.g + 2, w.letters)


def is_trivial_M0(w: MCWord) -> bool:
    """Triviality in the mapping class group of the (2g+2)-marked sphere."""
    return dirac_class(to_sphere_braid(w)) != DiracClass.NOT_IN_KERNEL


# ---------------------------------------------------------------------------
# symplectic representation
#
# Each twist generator acts on first homology as the transvection along a
# chain curve.  The integral classes below realize the chain intersection
# pattern (consecutive curves meet once, others are disjoint) in the
# standard symplectic basis a_1, b_1, .., a_g, b_g; the choice is
# certified by the relator and involution tests, not assumed.


@dataclass(frozen=True)
class SymplecticMatrix:
    """Integer matrix preserving the standard symplectic form."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")
        J = _standard_form(n // 2)
        if _mat_mul(_transpose(self.entries), _mat_mul(J, self.entries)) != J:
            raise ValueError("matrix does not preserve the symplectic form")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __mul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        return SymplecticMatrix(_mat_mul(self.entries, other.entries))

    def is_identity(self) -> bool:
        return self.entries == _identity(self.size)

    def is_minus_identity(self) -> bool:
        return self.entries == tuple(tuple(-x for x in row) for row in _identity(self.size))


def _identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _transpose(m):
    return tuple(map(tuple, zip(*m)))


def _mat_mul(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def _standard_form(g: int) -> tuple[tuple[int, ...], ...]:
    n = 2 * g
    J = [[0] * n for _ in range(n)]
    for k in range(g):
        J[2 * k][2 * k + 1] = 1
        J[2 * k + 1][2 * k] = -1
    return tuple(map(tuple, J))


def chain_homology_vectors(g: int) -> tuple[tuple[int, ...], ...]:
    """Homology classes of the 2g+1 chain curves in the a,b basis."""
    n = 2 * g

    def a(k):
        v = [0] * n
        if k >= 1:
            v[2 * (k - 1)] = 1
        return v

    def b(k):
        v = [0] * n
        v[2 * (k - 1) + 1] = 1
        return v

    vecs = []
    for i in range(1, 2 * g + 2):
        if i == 2 * g + 1:
            v = a(g)
        elif i % 2 == 1:
            k = (i + 1) // 2
            v = [x - y for x, y in zip(a(k), a(k - 1))]
        else:
            v = b(i // 2)
        vecs.append(tuple(v))
    return tuple(vecs)


def _transvection(c: tuple[int, ...], J, sign: int) -> tuple[tuple[int, ...], ...]:
    # v |-> v + sign * <v, c> c  with <u, w> = u^T J w (right-handed twist: sign +1)
    n = len(c)
    Jc = [sum(J[i][j] * c[j] for j in range(n)) for i in range(n)]
    return tuple(tuple((1 if i == j else 0) + sign * c[i] * Jc[j] for j in range(n)) for i in range(n))


_transvection_cache: dict[int, tuple[dict[int, tuple], dict[int, tuple]]] = {}


def _generator_matrices(g: int):
    cached = _transvection_cache.get(g)
    if cached is None:
        J = _standard_form(g)
        vecs = chain_homology_vectors(g)
        pos = {i + 1: _transvection(vecs[i], J, 1) for i in range(2 * g + 1)}
        neg = {i + 1: _transvection(vecs[i], J, -1) for i in range(2 * g + 1)}
        cached = _transvection_cache.setdefault(g, (pos, neg))
    return cached


def symplectic_rep(w: MCWord) -> SymplecticMatrix:
    """Image of a zeta word on first homology; multiplicative over concatenation."""
    if w.kind != AlphabetKind.ZETA:
        raise ValueError("symplectic_rep expects a zeta word")
    pos, neg = _generator_matrices(w.g)
    m = _identity(2 * w.g)
    for v in w.letters:
        m = _mat_mul(m, pos[v] if v > 0 else neg[-v])
    return SymplecticMatrix(m)


# ---------------------------------------------------------------------------
# hyperelliptic word problem


class IotaClass(enum.Enum):
    ONE = "one"
    IOTA = "iota"
    NOT_IN_KERNEL = "not_in_kernel"


def iota_class(w: MCWord) -> IotaClass:
    """Classify a zeta word against the order-two kernel over the marked sphere."""
    if w.kind != AlphabetKind.ZETA:
        raise ValueError("iota_class expects a zeta word")
    if not is_trivial_M0(MCWord(AlphabetKind.XI, w.g, w.letters)):
        return IotaClass.NOT_IN_KERNEL
    return IotaClass.ONE if symplectic_rep(w).is_identity() else IotaClass.IOTA


def hg_is_trivial(w: MCWord) -> bool:
    """Word problem for the hyperelliptic mapping class group."""
    return iota_class(w) == IotaClass.ONE


def hg_equal(u: MCWord, v: MCWord) -> bool:
    if (u.kind, u.g) != (v.kind, v.g):
        raise ValueError("alphabet mismatch")
    return hg_is_trivial(u * v.inverse())
