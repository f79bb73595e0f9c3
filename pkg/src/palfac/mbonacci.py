"""The m-bonacci morphisms and the word families built from them.

``z_singular(m, n)`` is the p-singular word z_n^(m) (palindromic building
blocks of the m-bonacci word), ``q_block`` and ``p_word`` are the blocks
of its palindromic c-factorization and ``g_prefix`` the prefixes g_n.
The Fibonacci singular words have their own recurrence in
``fib_singular`` so that the m=2 identification can be checked rather
than assumed.
"""

from __future__ import annotations

import os
import threading
from functools import lru_cache
from typing import Optional

from .errors import (
    BudgetExceeded,
    EmptyWord,
    IndexBelowRange,
    InvalidM,
    NonBinaryAlphabet,
    StripMismatch,
)
from .words import Morphism, Word, apply_morphism, concat, reverse, strip_suffix

DEFAULT_BUDGET_MB = 256


def default_budget_bytes() -> int:
    """Construction budget in bytes; ``PALFAC_BUDGET_MB`` overrides the default."""
    raw = os.environ.get("PALFAC_BUDGET_MB")
    mb = float(raw) if raw else DEFAULT_BUDGET_MB
    return int(mb * (1 << 20))


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise InvalidM(f"m must be an integer >= 2, got {m!r}")


@lru_cache(maxsize=None)
def phi_m(m: int) -> Morphism:
    """i -> 0(i+1) for i < m-1 and (m-1) -> 0."""
    _check_m(m)
    images = [bytes((0, i + 1)) for i in range(m - 1)] + [b"\x00"]
    return Morphism([Word(img, m) for img in images], m)


_h_cache: dict[int, list[Word]] = {}
_h_lock = threading.Lock()


def h(m: int, n: int) -> Word:
    """phi_m^n(0)."""
    _check_m(m)
    if n < 0:
        raise IndexBelowRange(f"h is defined for n >= 0, got {n}")
    with _h_lock:
        seq = _h_cache.setdefault(m, [Word(b"\x00", m)])
        while len(seq) <= n:
            seq.append(apply_morphism(phi_m(m), seq[-1]))
        return seq[n]


def mbonacci_prefix(m: int, n: int) -> Word:
    """First n letters of the m-bonacci word."""
    from .words import fixed_point_prefix

    return fixed_point_prefix(phi_m(m), 0, n)


def fibonacci_number(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


_fib_singular_cache: list[Word] = [Word(b"", 2), Word(b"\x00", 2), Word(b"\x01", 2), Word(b"\x00\x00", 2)]


def fib_singular(n: int) -> Word:
    """The Fibonacci singular word f_n for n >= 1: 0, 1, 00, 101, 00100, ..."""
    if n < 1:
        raise IndexBelowRange(f"singular words are indexed from 1, got {n}")
    seq = _fib_singular_cache
    while len(seq) <= n:
        k = len(seq)
        seq.append(seq[k - 2] + seq[k - 3] + seq[k - 2])
    return seq[n]


def flip_last(w: Word) -> Word:
    """Replace the last letter a of a binary word by 1 - a."""
    if not len(w):
        raise EmptyWord("flip_last needs a non-empty word")
    if w.alphabet_size != 2 or max(w.letters) > 1:
        raise NonBinaryAlphabet("flip_last works on binary words only")
    return Word(w.letters[:-1] + bytes((1 - w.letters[-1],)), 2)


class PSingularSeq:
    """Memoized p-singular words z_{-1}, z_0, z_1, ... for a fixed m.

    Words are built on demand from the recursive definition.  Building a
    word that would push the cached total past ``budget`` bytes raises
    ``BudgetExceeded``.  Reads are safe from several threads.
    """

    def __init__(self, m: int, budget: Optional[int] = None):
        _check_m(m)
        self.m = m
        # None means the environment is consulted each time a word is built
        self._budget = budget
        # index i holds z_{i-1}
        self._words: list[Word] = [Word(b"", m), Word(b"\x00", m)]
        self._bytes = 1
        self._lock = threading.Lock()

    @property
    def budget(self) -> int:
        return default_budget_bytes() if self._budget is None else self._budget

    def __repr__(self) -> str:
        return f"PSingularSeq(m={self.m}, cached={len(self._words) - 1})"

    def __getitem__(self, n: int) -> Word:
        return self.z(n)

    def z(self, n: int) -> Word:
        if n < -1:
            raise IndexBelowRange(f"z_n is defined for n >= -1, got {n}")
        words = self._words
        if n + 1 < len(words):
            return words[n + 1]
        with self._lock:
            while len(words) <= n + 1:
                k = len(words) - 1
                size = z_length(self.m, k)
                budget = self.budget
                if self._bytes + size > budget:
                    raise BudgetExceeded(
                        f"z_{k}^({self.m}) has {size} letters; budget is {budget} bytes")
                words.append(self._build(k))
                self._bytes += size
            return words[n + 1]

    def _build(self, n: int) -> Word:
        m, words = self.m, self._words

        def zz(i: int) -> bytes:
            return words[i + 1].letters

        if n <= m - 1:
            # centred at the letter n
            left = [zz(i) for i in range(n - 2, -1, -1)]
            centre = bytes((n,))
        else:
            # centred at z_{n-(m+1)}
            left = [zz(i) for i in range(n - 2, n - m - 1, -1)]
            centre = zz(n - m - 1)
        return Word(b"".join(left) + centre + b"".join(reversed(left)), m)

    def lengths(self, upto: int) -> list[int]:
        return [len(self.z(i)) for i in range(-1, upto + 1)]


_sequences: dict[int, PSingularSeq] = {}
_seq_lock = threading.Lock()


def sequence(m: int) -> PSingularSeq:
    """Shared p-singular sequence for m."""
    _check_m(m)
    with _seq_lock:
        seq = _sequences.get(m)
        if seq is None:
            seq = _sequences[m] = PSingularSeq(m)
        return seq


def z_singular(m: int, n: int) -> Word:
    return sequence(m).z(n)


def z_singular_closed(m: int, n: int) -> Word:
    """z_n from reversed iterates of phi_m.

    For odd n this is (h_1^R h_3^R ... h_n^R) with the suffix
    (h_0^R h_2^R ... h_{n-1}^R) removed; even n swaps the parities.
    """
    _check_m(m)
    if n < 0:
        raise IndexBelowRange(f"closed form is stated for n >= 0, got {n}")
    top = concat([reverse(h(m, i)) for i in range(n % 2, n + 1, 2)], m)
    rest = concat([reverse(h(m, i)) for i in range(1 - n % 2, n, 2)], m)
    try:
        return strip_suffix(top, rest)
    except ValueError as exc:
        raise StripMismatch(f"closed form for z_{n}^({m}) failed: {exc}") from exc


@lru_cache(maxsize=None)
def _length_table(m: int) -> list[int]:
    return [0, 1]


def z_length(m: int, n: int) -> int:
    """|z_n^(m)| from the length recurrences alone (exact integers)."""
    _check_m(m)
    if n < -1:
        raise IndexBelowRange(f"z_n is defined for n >= -1, got {n}")
    tab = _length_table(m)  # tab[i] = |z_{i-1}|
    while len(tab) <= n + 1:
        k = len(tab) - 1
        if k <= m - 1:
            tab.append(tab[k] + 2 * tab[k - 1])
        else:
            total = sum(tab[k - m + 1:k + 1])
            if m % 2:
                total += -1 if k % 2 else 1
            tab.append(total)
    return tab[n + 1]


class LengthTable:
    """Lengths |z_n^(m)| (and, for m = 2, the Fibonacci numbers) on demand."""

    def __init__(self, m: int):
        _check_m(m)
        self.m = m

    def __getitem__(self, n: int) -> int:
        return z_length(self.m, n)

    def fibonacci(self, n: int) -> int:
        return fibonacci_number(n)


def p_word(m: int, seq: Optional[PSingularSeq] = None) -> Word:
    """z_0 z_1 ... z_{m-3} z_{m-2} z_{m-3} ... z_0 (m-1)."""
    _check_m(m)
    seq = seq or sequence(m)
    left = [seq.z(i) for i in range(0, m - 2)]
    return concat(left + [seq.z(m - 2)] + left[::-1] + [Word(bytes((m - 1,)), m)], m)


def p_word_pal_decomposition(m: int, seq: Optional[PSingularSeq] = None) -> list[Word]:
    """The 2m-2 palindromic blocks z_0, 1, z_0, 2, z_0 z_1 z_0, 3, ..., (m-1) of p_m."""
    _check_m(m)
    seq = seq or sequence(m)
    out = [seq.z(0), Word(b"\x01", m)]
    for k in range(2, m):
        left = [seq.z(i) for i in range(0, k - 2)]
        out.append(concat(left + [seq.z(k - 2)] + left[::-1], m))
        out.append(Word(bytes((k,)), m))
    return out


def q_block(m: int, n: int, seq: Optional[PSingularSeq] = None) -> Word:
    """Q(n) = z_{n-(m-1)} ... z_{n-1} z_n z_{n-1} ... z_{n-(m-1)} for n >= m-2."""
    _check_m(m)
    if n < m - 2:
        raise IndexBelowRange(f"Q(n) needs n >= m-2 = {m - 2}, got {n}")
    seq = seq or sequence(m)
    left = [seq.z(i) for i in range(n - (m - 1), n)]
    return concat(left + [seq.z(n)] + left[::-1], m)


def g_prefix(m: int, n: int, seq: Optional[PSingularSeq] = None) -> Word:
    """g_n = p_m Q(m-2) Q(m-1) ... Q(n-1) for n >= m-2."""
    _check_m(m)
    if n < m - 2:
        raise IndexBelowRange(f"g_n needs n >= m-2 = {m - 2}, got {n}")
    seq = seq or sequence(m)
    return concat([p_word(m, seq)] + [q_block(m, k, seq) for k in range(m - 2, n)], m)


def fib_prefix_g(n: int) -> Word:
    """The Fibonacci prefixes g'_n (n >= 2), equal to g_{n-1} for m = 2."""
    if n < 2:
        raise IndexBelowRange(f"g'_n needs n >= 2, got {n}")
    return g_prefix(2, n - 1)


def phi_m_preimage(m: int, w: Word) -> Optional[Word]:
    """The unique x with phi_m(x) = w, or None.

    The blocks 01, 02, ..., 0(m-1), 0 form a code, and reading left to
    right a 0 followed by a non-zero letter can only start a two-letter
    block.
    """
    t = w.letters
    if not t:
        return Word(b"", m)
    # splitting at the zeros leaves one piece per block: empty for "0", c for "0c"
    pieces = t.split(b"\x00")
    if pieces[0] or max(map(len, pieces)) > 1:
        return None
    table = bytes([m - 1]) + bytes(range(255))
    return Word(b"".join(q or b"\x00" for q in pieces[1:]).translate(table), m)
