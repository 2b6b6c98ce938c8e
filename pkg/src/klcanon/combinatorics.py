"""
Symmetric group and sequence combinatorics.

Permutations are in one-line notation on ``1..n``; products apply the right
factor first, ``(w * x)(a) = w(x(a))``.  A permutation acts on sequences by
moving entries between positions, so the simple reflection ``s_i`` swaps the
entries in slots ``i`` and ``i + 1``:

>>> s1 = Permutation.simple(1, 3)
>>> s1.act((2, 1, 1))
(1, 2, 1)
>>> (Permutation.simple(1, 3) * Permutation.simple(2, 3)).act((3, 2, 1))
(1, 3, 2)
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, LengthMismatch

__all__ = [
    "Permutation", "ParabolicContext", "parabolic_context", "weight_of",
    "act", "inversions", "i0", "min_coset_reps", "bruhat_leq", "longest_element",
    "reduced_word", "subword_leq", "all_permutations", "sequences_of_weight",
    "parse_permutation", "parse_sequence", "format_sequence",
]

SignedSequence = tuple  # tuple[int, ...] with entries in 1..k


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"s_{i} is not a generator of S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> Permutation:
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise LengthMismatch("permutations of different degree")
        return Permutation(tuple(self.images[b - 1] for b in other.images))

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for a, b in enumerate(self.images, 1):
            inv[b - 1] = a
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        return inversions(self.images)

    def act(self, seq: Sequence[int]) -> tuple:
        """``(w I)_{w(a)} = I_a``."""
        if len(seq) != self.n:
            raise LengthMismatch(f"sequence of length {len(seq)} vs permutation of degree {self.n}")
        out = [None] * self.n
        for a, b in enumerate(self.images):
            out[b - 1] = seq[a]
        return tuple(out)

    def left_descents(self) -> list[int]:
        """Indices i with l(s_i w) < l(w), i.e. i+1 appears before i in one-line notation."""
        pos = self.inverse.images
        return [i for i in range(1, self.n) if pos[i - 1] > pos[i]]

    def right_descents(self) -> list[int]:
        im = self.images
        return [i for i in range(1, self.n) if im[i - 1] > im[i]]

    def __str__(self):
        return ",".join(map(str, self.images))

    def __repr__(self):
        return f"Permutation('{self}')"


def parse_permutation(text: str) -> Permutation:
    try:
        images = tuple(int(t) for t in text.replace(" ", "").split(","))
        return Permutation(images)
    except ValueError as exc:
        raise ValueError(f"malformed permutation {text!r}: {exc}") from None


_SIGN_TO_INT = {"+": 1, "-": 2, "−": 2}


def parse_sequence(text: str, k: int | None = None) -> tuple[int, ...]:
    """
    Parse ``"+-"`` words (``+`` is 1, ``-`` is 2) or comma-separated integers.

    >>> parse_sequence("+-+")
    (1, 2, 1)
    >>> parse_sequence("3,1,2")
    (3, 1, 2)
    """
    text = text.strip()
    if text == "":
        return ()
    if all(ch in _SIGN_TO_INT for ch in text):
        seq = tuple(_SIGN_TO_INT[ch] for ch in text)
    else:
        try:
            seq = tuple(int(t) for t in text.split(","))
        except ValueError:
            bad = next((t for t in text.split(",") if not t.strip().lstrip("-").isdigit()), text)
            raise ValueError(f"malformed sequence token {bad!r}") from None
    if k is not None:
        for x in seq:
            if not 1 <= x <= k:
                raise ValueError(f"sequence entry {x} outside 1..{k}")
    return seq


def format_sequence(seq: Sequence[int], k: int = 2) -> str:
    if k == 2 and all(x in (1, 2) for x in seq):
        return "".join("+" if x == 1 else "-" for x in seq)
    return ",".join(map(str, seq))


def act(w: Permutation, seq: Sequence[int]) -> tuple:
    return w.act(seq)


def inversions(seq: Sequence[int]) -> int:
    """
    Number of pairs ``a < b`` with ``seq[a] > seq[b]``.

    >>> inversions((2, 2, 1, 1))
    4
    """
    count = 0
    for a in range(len(seq)):
        x = seq[a]
        for b in range(a + 1, len(seq)):
            if x > seq[b]:
                count += 1
    return count


def weight_of(seq: Sequence[int], k: int) -> tuple[int, ...]:
    counts = [0] * k
    for x in seq:
        counts[x - 1] += 1
    return tuple(counts)


def i0(weight: Sequence[int]) -> tuple[int, ...]:
    """
    The weakly decreasing sequence with ``weight[k-1]`` copies of ``k`` first.

    >>> i0((2, 2))
    (2, 2, 1, 1)
    >>> i0((1, 1, 1))
    (3, 2, 1)
    """
    out: list[int] = []
    for letter in range(len(weight), 0, -1):
        out.extend([letter] * weight[letter - 1])
    return tuple(out)


def sequences_of_weight(weight: Sequence[int]) -> list[tuple[int, ...]]:
    """All sequences of the given weight, in lexicographic order."""
    n = sum(weight)
    out: list[tuple[int, ...]] = []
    counts = list(weight)
    cur: list[int] = []

    def rec():
        if len(cur) == n:
            out.append(tuple(cur))
            return
        for letter in range(1, len(counts) + 1):
            if counts[letter - 1]:
                counts[letter - 1] -= 1
                cur.append(letter)
                rec()
                cur.pop()
                counts[letter - 1] += 1

    rec()
    return out


def _perm_for_sequence(base: Sequence[int], seq: Sequence[int]) -> Permutation:
    """The minimal sigma with sigma(base) = seq, matching equal letters in order."""
    slots: dict[int, list[int]] = {}
    for b, x in enumerate(seq, 1):
        slots.setdefault(x, []).append(b)
    taken: dict[int, int] = {}
    images = []
    for x in base:
        j = taken.get(x, 0)
        images.append(slots[x][j])
        taken[x] = j + 1
    return Permutation(tuple(images))


@dataclass(frozen=True, eq=False)
class ParabolicContext:
    """
    A weight ``m`` together with the parabolic subgroup ``W_J`` of ``S_n``
    stabilizing ``I0(m)``, and the minimal coset representatives ``W^J``.

    Representatives are indexed ``0..N-1`` sorted by length; the index of a
    representative is shared by its sequence ``sigma(I0(m))``.
    """
    weight: tuple[int, ...]
    n: int = field(init=False)
    base: tuple[int, ...] = field(init=False)
    J: frozenset = field(init=False)
    reps: tuple[Permutation, ...] = field(init=False, repr=False)
    seqs: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    lengths: tuple[int, ...] = field(init=False, repr=False)
    index: dict = field(init=False, repr=False)
    seq_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        set_ = functools.partial(object.__setattr__, self)
        weight = tuple(self.weight)
        if any(m < 0 for m in weight):
            raise ValueError("weight entries must be nonnegative")
        base = i0(weight)
        n = len(base)
        set_("weight", weight)
        set_("n", n)
        set_("base", base)
        set_("J", frozenset(j for j in range(1, n) if base[j - 1] == base[j]))
        top = inversions(base)
        entries = []
        for seq in sequences_of_weight(weight):
            entries.append((top - inversions(seq), seq))
        entries.sort()
        seqs = tuple(s for _, s in entries)
        reps = tuple(_perm_for_sequence(base, s) for s in seqs)
        set_("seqs", seqs)
        set_("reps", reps)
        set_("lengths", tuple(l for l, _ in entries))
        set_("index", {p: i for i, p in enumerate(reps)})
        set_("seq_index", {s: i for i, s in enumerate(seqs)})

    @property
    def k(self) -> int:
        return len(self.weight)

    def __len__(self):
        return len(self.reps)

    def __eq__(self, other):
        return isinstance(other, ParabolicContext) and self.weight == other.weight

    def __hash__(self):
        return hash(self.weight)

    def contains(self, w: Permutation) -> bool:
        return w in self.index

    @cached_property
    def steps(self) -> tuple:
        """
        ``steps[i-1][idx] = (kind, target)`` describing ``s_i`` acting on the
        representative at ``idx``: kind 0 goes down in length, 1 goes up and
        stays in ``W^J``, 2 leaves ``W^J`` (target is ``idx`` itself).
        """
        out = []
        for i in range(1, self.n):
            row = []
            for idx, seq in enumerate(self.seqs):
                a, b = seq[i - 1], seq[i]
                if a == b:
                    row.append((2, idx))
                    continue
                swapped = seq[: i - 1] + (b, a) + seq[i + 1:]
                row.append((1 if a > b else 0, self.seq_index[swapped]))
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def bruhat_below(self) -> tuple[frozenset, ...]:
        """``bruhat_below[j]`` is the set of indices ``i`` with reps[i] <= reps[j]."""
        keys = [_rank_key(p) for p in self.reps]
        out = []
        for j in range(len(self.reps)):
            out.append(frozenset(i for i in range(len(self.reps))
                                 if self.lengths[i] <= self.lengths[j] and _dominated(keys[i], keys[j])))
        return tuple(out)


@functools.lru_cache(maxsize=None)
def parabolic_context(weight: tuple[int, ...]) -> ParabolicContext:
    return ParabolicContext(tuple(weight))


def min_coset_reps(ctx: ParabolicContext) -> list[Permutation]:
    """Minimal-length coset representatives of ``S_n / W_J``, sorted by length."""
    return list(ctx.reps)


def _rank_key(w: Permutation) -> tuple[tuple[int, ...], ...]:
    # r[i][j] = #{a <= i : w(a) >= j}
    n = w.n
    rows = []
    counts = [0] * (n + 2)
    for i in range(n):
        x = w.images[i]
        for j in range(1, x + 1):
            counts[j] += 1
        rows.append(tuple(counts[1:n + 1]))
    return tuple(rows)


def _dominated(a, b) -> bool:
    return all(x <= y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def bruhat_leq(y: Permutation, w: Permutation) -> bool:
    """
    Bruhat comparison by rank-matrix dominance.

    >>> bruhat_leq(Permutation.simple(1, 3), Permutation.simple(2, 3))
    False
    """
    if y.n != w.n:
        raise LengthMismatch("permutations of different degree")
    if y.length > w.length:
        return False
    return _dominated(_rank_key(y), _rank_key(w))


def subword_leq(y: Permutation, w: Permutation) -> bool:
    """Bruhat comparison by the subword property; exponential, used as an oracle."""
    if y.n != w.n:
        raise LengthMismatch("permutations of different degree")
    word = reduced_word(w)
    ly = y.length
    for positions in itertools.combinations(range(len(word)), ly):
        if Permutation.from_word([word[p] for p in positions], w.n) == y:
            return True
    return False


def longest_element(ctx: ParabolicContext) -> Permutation:
    """The longest element of ``W_J``: reverses each block of equal letters of ``I0(m)``."""
    images = list(range(1, ctx.n + 1))
    start = 0
    for m in reversed(ctx.weight):
        images[start:start + m] = reversed(images[start:start + m])
        start += m
    return Permutation(tuple(images))


def reduced_word(w: Permutation) -> list[int]:
    """
    Lexicographically smallest reduced word, found by repeatedly peeling off the
    smallest left descent.

    >>> reduced_word(Permutation((3, 2, 1)))
    [1, 2, 1]
    """
    word = []
    pos = list(w.inverse.images)  # pos[v-1] = position of value v
    while True:
        for i in range(1, w.n):
            if pos[i - 1] > pos[i]:
                word.append(i)
                pos[i - 1], pos[i] = pos[i], pos[i - 1]
                break
        else:
            return word


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
