"""Relator-application certificates and their checker.

A :class:`Derivation` is a replayable witness that two words define the
same element of a finitely presented group: a list of elementary steps,
each either a free insertion/deletion of a cancelling pair or an
insertion/deletion of a conjugated relator from a named table.  Replay is
exact (no implicit reduction), so checking is mechanical.

The module also provides a bounded breadth-first :func:`search` for small
certificates and the constructive :func:`centrality_filler`, which writes
down an explicit derivation of ``[x_k, delta] -> empty`` over the braid
table: the full twist is peeled one cycle at a time, conjugation by one
cycle shifts each generator index up by one through braid moves alone,
and the index wrap-around is absorbed by the sphere relator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .mcg_kernel import RelatorTable
from .words import concat, free_reduce, inverse

__all__ = [
    "FreeInsert",
    "FreeDelete",
    "RelatorInsert",
    "RelatorDelete",
    "Derivation",
    "DerivationError",
    "SearchBounds",
    "check",
    "search",
    "centrality_filler",
]


class DerivationError(ValueError):
    """A step addressed an invalid position or malformed data."""


@dataclass(frozen=True)
class FreeInsert:
    pos: int
    letter: int


@dataclass(frozen=True)
class FreeDelete:
    pos: int
    letter: int


@dataclass(frozen=True)
class RelatorInsert:
    pos: int
    conjugator: tuple[int, ...]
    label: str
    params: tuple[int, ...]
    sign: int


@dataclass(frozen=True)
class RelatorDelete:
    pos: int
    conjugator: tuple[int, ...]
    label: str
    params: tuple[int, ...]
    sign: int


Step = Union[FreeInsert, FreeDelete, RelatorInsert, RelatorDelete]


def _relator_block(step, table: RelatorTable) -> tuple[int, ...]:
    word = table.relator(step.label, *step.params).word
    if step.sign < 0:
        word = inverse(word)
    return concat(step.conjugator, word, inverse(step.conjugator))


def _apply(word: tuple[int, ...], step: Step, table: RelatorTable) -> tuple[int, ...]:
    if isinstance(step, FreeInsert):
        if not 0 <= step.pos <= len(word):
            raise DerivationError(f"insert position {step.pos} out of range")
        return word[: step.pos] + (step.letter, -step.letter) + word[step.pos:]
    if isinstance(step, FreeDelete):
        if not 0 <= step.pos <= len(word) - 2:
            raise DerivationError(f"delete position {step.pos} out of range")
        if word[step.pos] != step.letter or word[step.pos + 1] != -step.letter:
            raise DerivationError(f"letters at {step.pos} do not match the step")
        return word[: step.pos] + word[step.pos + 2:]
    if isinstance(step, RelatorInsert):
        if not 0 <= step.pos <= len(word):
            raise DerivationError(f"insert position {step.pos} out of range")
        block = _relator_block(step, table)
        return word[: step.pos] + block + word[step.pos:]
    if isinstance(step, RelatorDelete):
        block = _relator_block(step, table)
        if word[step.pos: step.pos + len(block)] != block:
            raise DerivationError(f"relator block not present at {step.pos}")
        return word[: step.pos] + word[step.pos + len(block):]
    raise DerivationError(f"unknown step {step!r}")


@dataclass(frozen=True)
class Derivation:
    """An ordered list of elementary steps; replay transforms source to target."""

    steps: tuple[Step, ...]

    def replay(self, word, table: RelatorTable) -> tuple[int, ...]:
        w = tuple(word)
        for step in self.steps:
            w = _apply(w, step, table)
        return w

    def inverse(self) -> "Derivation":
        inv: list[Step] = []
        # replaying forward records positions, so invert by undoing in reverse
        for step in reversed(self.steps):
            if isinstance(step, FreeInsert):
                inv.append(FreeDelete(step.pos, step.letter))
            elif isinstance(step, FreeDelete):
                inv.append(FreeInsert(step.pos, step.letter))
            elif isinstance(step, RelatorInsert):
                inv.append(RelatorDelete(step.pos, step.conjugator, step.label, step.params, step.sign))
            else:
                inv.append(RelatorInsert(step.pos, step.conjugator, step.label, step.params, step.sign))
        return Derivation(tuple(inv))

    def shifted(self, offset: int) -> "Derivation":
        """The same steps with every position moved right by offset."""
        moved: list[Step] = []
        for s in self.steps:
            if isinstance(s, FreeInsert):
                moved.append(FreeInsert(s.pos + offset, s.letter))
            elif isinstance(s, FreeDelete):
                moved.append(FreeDelete(s.pos + offset, s.letter))
            elif isinstance(s, RelatorInsert):
                moved.append(RelatorInsert(s.pos + offset, s.conjugator, s.label, s.params, s.sign))
            else:
                moved.append(RelatorDelete(s.pos + offset, s.conjugator, s.label, s.params, s.sign))
        return Derivation(tuple(moved))

    def relator_count(self, label: str) -> int:
        return sum(
            1
            for s in self.steps
            if isinstance(s, (RelatorInsert, RelatorDelete)) and s.label == label
        )

    def __len__(self) -> int:
        return len(self.steps)


def check(d: Derivation, source, target, table: RelatorTable) -> bool:
    """True iff replaying the steps transforms source into target exactly."""
    return d.replay(tuple(source), table) == tuple(target)


# ---------------------------------------------------------------------------
# bounded search


@dataclass(frozen=True)
class SearchBounds:
    max_inserts: int = 3
    max_length: int = 40
    max_nodes: int = 200_000


def _reduction_steps(word: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[Step, ...]]:
    """Fully reduce a word, recording the free deletions performed."""
    w = list(word)
    steps: list[Step] = []
    i = 0
    while i < len(w) - 1:
        if w[i] == -w[i + 1]:
            steps.append(FreeDelete(i, w[i]))
            del w[i: i + 2]
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(w), tuple(steps)


def _unreduction_steps(reduced: tuple[int, ...], word: tuple[int, ...]) -> tuple[Step, ...]:
    """Free insertions turning the reduced form back into the exact word."""
    _, dels = _reduction_steps(word)
    return tuple(FreeInsert(d.pos, d.letter) for d in reversed(dels))


def search(source, target, table: RelatorTable, bounds: SearchBounds = SearchBounds()):
    """Breadth-first search for a derivation from source to target.

    Moves are relator insertions (all table relators, both signs, every
    position) followed by full free reduction.  Returns a checked
    :class:`Derivation` or None; absence of a result is inconclusive.
    """
    source = tuple(source)
    target = tuple(target)
    red_target, target_dels = _reduction_steps(target)
    start, start_steps = _reduction_steps(source)
    frontier: list[tuple[tuple[int, ...], tuple[Step, ...]]] = [(start, start_steps)]
    seen = {start}
    nodes = 0
    for depth in range(bounds.max_inserts + 1):
        for word, steps in frontier:
            if word == red_target:
                full = steps + _unreduction_steps(red_target, target)
                d = Derivation(tuple(full))
                assert check(d, source, target, table)
                return d
        nxt: list[tuple[tuple[int, ...], tuple[Step, ...]]] = []
        if depth == bounds.max_inserts:
            break
        for word, steps in frontier:
            for rel in table.relators:
                for sign in (1, -1):
                    block = rel.word if sign > 0 else inverse(rel.word)
                    for pos in range(len(word) + 1):
                        nodes += 1
                        if nodes > bounds.max_nodes:
                            return None
                        cand = word[:pos] + block + word[pos:]
                        red, dels = _reduction_steps(cand)
                        if len(red) > bounds.max_length or red in seen:
                            continue
                        seen.add(red)
                        ins = RelatorInsert(pos, (), rel.label, rel.params, sign)
                        adj = dels
                        nxt.append((red, steps + (ins,) + adj))
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# constructive centrality filler


class _Builder:
    """Grow a derivation while tracking the current word."""

    def __init__(self, word: tuple[int, ...], table: RelatorTable):
        self.word = tuple(word)
        self.table = table
        self.steps: list[Step] = []

    def _do(self, step: Step) -> None:
        self.word = _apply(self.word, step, self.table)
        self.steps.append(step)

    def free_delete(self, pos: int) -> None:
        self._do(FreeDelete(pos, self.word[pos]))

    def reduce_span(self, lo: int, hi: int) -> int:
        """Cancel adjacent pairs inside word[lo:hi]; returns letters removed."""
        removed = 0
        changed = True
        while changed:
            changed = False
            i = max(lo, 0)
            while i < min(hi - removed, len(self.word)) - 1:
                if self.word[i] == -self.word[i + 1]:
                    self.free_delete(i)
                    removed += 2
                    changed = True
                    i = max(i - 1, lo)
                else:
                    i += 1
        return removed

    def insert_equivalent(self, pos: int, target_word: tuple[int, ...], labels=("r1", "r2", "r3")) -> int:
        """Insert a conjugated relator that reduces to target_word.

        Solves for a conjugator among prefixes of the target; after the
        insertion the inserted region is fully reduced in place, leaving
        exactly target_word there.  Returns len(target_word).
        """
        tw = free_reduce(target_word)
        for rel in self.table.relators:
            if rel.label not in labels:
                continue
            for sign in (1, -1):
                block = rel.word if sign > 0 else inverse(rel.word)
                for d in range(len(tw) // 2 + 1):
                    u = tw[:d]
                    if free_reduce(concat(u, block, inverse(u))) == tw:
                        step = RelatorInsert(pos, u, rel.label, rel.params, sign)
                        self._do(step)
                        raw_len = len(block) + 2 * len(u)
                        self.reduce_span(pos, pos + raw_len)
                        if self.word[pos: pos + len(tw)] != tw:
                            raise DerivationError("inserted block did not reduce to target")
                        return len(tw)
        raise DerivationError(f"no relator conjugate matches {target_word}")

    def rewrite(self, pos: int, old: tuple[int, ...], new: tuple[int, ...], labels=("r1", "r2", "r3")) -> None:
        """Replace word[pos:pos+len(old)] by new, justified by one relator."""
        old, new = tuple(old), tuple(new)
        if self.word[pos: pos + len(old)] != old:
            raise DerivationError(f"expected {old} at {pos}, found {self.word[pos:pos+len(old)]}")
        tw_len = self.insert_equivalent(pos, concat(new, inverse(old)), labels)
        # the region reads (new . old^-1) . old; cancel the middle exactly
        self.reduce_span(pos, pos + tw_len + len(old))
        if self.word[pos: pos + len(new)] != new:
            raise DerivationError("rewrite did not produce the expected word")


def _cycle_word(n: int) -> tuple[int, ...]:
    return tuple(range(1, n))


def _transport_left(b: _Builder, pos: int, j: int, e: int, n: int) -> None:
    """Rewrite ``c . x_j^e`` at pos into ``x_{j+1}^e . c`` (j <= n-2).

    One commuting swap per letter of the cycle plus a single braid triple;
    each local move is one relator insertion and its free cancellations.
    """
    if b.word[pos: pos + n] != _cycle_word(n) + (j * e,):
        raise DerivationError("transport pattern not present")
    cur = pos + (n - 1)
    for m in range(n - 1, j + 1, -1):
        b.rewrite(cur - 1, (m, j * e), (j * e, m), labels=("r1",))
        cur -= 1
    if e > 0:
        b.rewrite(cur - 2, (j, j + 1, j), (j + 1, j, j + 1), labels=("r2",))
    else:
        b.rewrite(cur - 2, (j, j + 1, -j), (-(j + 1), j, j + 1), labels=("r2",))
    lead_pos = cur - 2
    lead = (j + 1) * e
    for m in range(j - 1, 0, -1):
        b.rewrite(lead_pos - 1, (m, lead), (lead, m), labels=("r1",))
        lead_pos -= 1
    if b.word[pos: pos + n] != (lead,) + _cycle_word(n):
        raise DerivationError("transport did not produce the expected word")


def centrality_filler(k: int, g: int) -> Derivation:
    """Derivation of ``[x_k, delta] -> empty`` over the braid table Ctilde(g).

    The conjugate ``delta x_k delta^-1 x_k^-1`` is resolved first: the
    full twist is peeled one cycle ``c = x_1 .. x_{2g+1}`` at a time,
    conjugation by ``c`` shifts the generator index up by one through
    braid moves alone, and the wrap past the top index applies the chain
    relator ``r3`` twice.  After ``2g+2`` cycles the letter returns to
    ``x_k``.  Inverting that derivation and cancelling gives the filler
    for the commutator itself.  The step count is bounded by a fixed
    multiple of ``g**2`` (asserted in the tests).
    """
    from .mcg_kernel import relators as _relators

    n = 2 * g + 2
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n-1}")
    table = _relators("Ctilde", g)
    c = _cycle_word(n)
    delta = c * n
    conjugated = _conjugation_filler(k, g, table)

    word = concat((k,), delta, (-k,), inverse(delta))
    b = _Builder(word, table)
    for step in conjugated.inverse().shifted(len(word)).steps:
        b._do(step)
    b.reduce_span(0, len(b.word))
    if b.word != ():
        raise AssertionError(f"filler did not close: {b.word}")
    return Derivation(tuple(b.steps))


def _conjugation_filler(k: int, g: int, table: RelatorTable) -> Derivation:
    """Derivation of ``delta x_k delta^-1 x_k^-1 -> empty``; see above."""
    n = 2 * g + 2
    c = _cycle_word(n)
    delta = c * n
    word = concat(delta, (k,), inverse(delta), (-k,))
    b = _Builder(word, table)

    # Invariant at the start of iteration t (t = 1..n):
    #   word = c^(n-t+1) . seg . c^-(..) . x_k^-1
    # where seg is the conjugated letter so far: a single letter x_j, or
    # after the wrap the two-block word (x_1..x_{n-2})^-1 . c^-1 with the
    # trailing c^-1 absorbed from the tail.
    state: tuple[str, int] = ("x", k)
    for t in range(1, n + 1):
        blocks_left = n - t + 1
        in_lo = (blocks_left - 1) * (n - 1)  # start of the innermost c
        if state[0] == "x":
            j = state[1]
            if j <= n - 2:
                _transport_left(b, in_lo, j, 1, n)
                # cancel the transported c against the adjacent c^-1
                b.reduce_span(in_lo + 1, in_lo + 1 + 2 * (n - 1))
                state = ("x", j + 1)
            else:
                # wrap: c . x_{n-1} -> (x_1 .. x_{n-2})^-1, one r3
                b.rewrite(in_lo, concat(c, (n - 1,)), tuple(-i for i in range(1, n - 1)), labels=("r3",))
                state = ("wrap", 1)
        else:
            # seg = (-1,..,-(n-2)) . c^-1; transport each seg letter through
            # the preceding c, raising indices, then resolve with one r3
            pos = in_lo
            for i in range(1, n - 1):
                _transport_left(b, pos, i, -1, n)
                pos += 1
            b.reduce_span(pos, pos + 2 * (n - 1))
            seg = tuple(-i for i in range(2, n)) + inverse(c)
            if b.word[in_lo: in_lo + len(seg)] != seg:
                raise DerivationError("wrap resolution pattern not present")
            b.rewrite(in_lo, seg, (1,), labels=("r3",))
            state = ("x", 1)
    if state != ("x", k):
        raise AssertionError(f"conjugation orbit did not close: {state}")
    b.reduce_span(0, len(b.word))
    if b.word != ():
        raise AssertionError(f"conjugation filler did not close: {b.word}")
    return Derivation(tuple(b.steps))
