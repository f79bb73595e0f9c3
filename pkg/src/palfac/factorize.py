"""The z, c, pz and pc factorizations of finite words.

Every mode is a function of the longest previous factor LPF(s) at the
cursor s, because w[s:s+L] has an earlier starting occurrence exactly
when L <= LPF(s):

* Z: length LPF(s) + 1, or a stall when that runs past the end;
* C: length max(LPF(s), 1);
* PZ: the shortest palindromic prefix longer than LPF(s), or a stall;
* PC: the longest palindromic prefix of length at most LPF(s), or one letter.

Shortest and longest are unique, so there are never ties to break.
``factorize_naive`` follows the rules literally with direct scans and is
the oracle for ``factorize_indexed``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import EmptyInput
from .index import OccurrenceIndex
from .words import Word


class Mode(str, enum.Enum):
    Z = "z"
    C = "c"
    PZ = "pz"
    PC = "pc"

    @classmethod
    def parse(cls, value: "Mode | str") -> "Mode":
        if isinstance(value, Mode):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown mode {value!r}; expected one of z, c, pz, pc") from None


@dataclass(frozen=True)
class Factor:
    start: int
    length: int
    certified: bool

    @property
    def end(self) -> int:
        return self.start + self.length


@dataclass(frozen=True)
class Factorization:
    mode: Mode
    source: Word = field(repr=False)
    factors: tuple[Factor, ...]
    residue_start: int
    stalled: bool = False

    @property
    def source_length(self) -> int:
        return len(self.source)

    @property
    def residue(self) -> Word:
        return self.source[self.residue_start:]

    @property
    def stalled_at(self) -> Optional[int]:
        """Start of the residue when the z or pz rule stalled, else None."""
        return self.residue_start if self.stalled else None

    def text(self, i: int) -> Word:
        f = self.factors[i]
        return self.source[f.start:f.end]

    def texts(self) -> list[Word]:
        return [self.text(i) for i in range(len(self.factors))]

    def strings(self) -> list[str]:
        return [str(x) for x in self.texts()]

    def key(self) -> tuple:
        """Everything that must agree between two engines."""
        return (self.mode, self.factors, self.residue_start)

    def certified_factors(self) -> list[Factor]:
        out = []
        for f in self.factors:
            if not f.certified:
                break
            out.append(f)
        return out

    def __len__(self) -> int:
        return len(self.factors)


def _certified(mode: Mode, end: int, n: int) -> bool:
    if mode in (Mode.Z, Mode.PZ):
        # every shorter candidate was refuted and earlier occurrences cannot change
        return True
    if mode is Mode.C:
        # the one-letter extension was refuted inside the window
        return end < n
    return False


def _run(w: Word, mode: Mode, step: Callable[[int], Optional[int]]) -> Factorization:
    n = len(w)
    if n == 0:
        raise EmptyInput("cannot factorize the empty word")
    factors = []
    s = 0
    while s < n:
        L = step(s)
        if L is None:
            break
        factors.append(Factor(s, L, _certified(mode, s + L, n)))
        s += L
    return Factorization(mode, w, tuple(factors), s, stalled=s < n)


def _naive_step(t: bytes, mode: Mode) -> Callable[[int], Optional[int]]:
    n = len(t)

    def occurs_before(s: int, L: int) -> bool:
        # a start j < s means the match lies inside t[0 : s-1+L]
        return t.find(t[s:s + L], 0, s - 1 + L) != -1

    def is_pal(s: int, L: int) -> bool:
        u = t[s:s + L]
        return u == u[::-1]

    def z(s):
        for L in range(1, n - s + 1):
            if not occurs_before(s, L):
                return L
        return None

    def c(s):
        L = 1
        while s + L <= n and occurs_before(s, L):
            L += 1
        return max(L - 1, 1)

    def pz(s):
        for L in range(1, n - s + 1):
            if is_pal(s, L) and not occurs_before(s, L):
                return L
        return None

    def pc(s):
        best = 1
        for L in range(1, n - s + 1):
            if not occurs_before(s, L):
                break
            if is_pal(s, L):
                best = L
        return best

    return {Mode.Z: z, Mode.C: c, Mode.PZ: pz, Mode.PC: pc}[mode]


def factorize_naive(w: Word, mode: Mode | str) -> Factorization:
    """Reference engine: quadratic-or-worse direct scans."""
    mode = Mode.parse(mode)
    return _run(w, mode, _naive_step(w.letters, mode))


def _indexed_step(idx: OccurrenceIndex, mode: Mode) -> Callable[[int], Optional[int]]:
    n = idx.n

    def z(s):
        L = idx.lpf(s)
        return L + 1 if s + L < n else None

    def c(s):
        return max(idx.lpf(s), 1)

    def pz(s):
        return idx.shortest_pal_prefix_above(s, idx.lpf(s))

    def pc(s):
        L = idx.lpf(s)
        if L == 0:
            return 1
        return idx.longest_pal_prefix_at_most(s, L)

    return {Mode.Z: z, Mode.C: c, Mode.PZ: pz, Mode.PC: pc}[mode]


def factorize_indexed(w: Word, mode: Mode | str, index: Optional[OccurrenceIndex] = None) -> Factorization:
    """Suffix-array / palindromic-tree engine; same output as ``factorize_naive``."""
    mode = Mode.parse(mode)
    if not len(w):
        raise EmptyInput("cannot factorize the empty word")
    index = index or OccurrenceIndex(w)
    return _run(w, mode, _indexed_step(index, mode))


factorize = factorize_indexed


def agreement(a: Factorization, b: Factorization) -> int:
    """Number of leading factors on which two factorizations coincide."""
    k = 0
    for fa, fb in zip(a.factors, b.factors):
        if (fa.start, fa.length) != (fb.start, fb.length):
            break
        k += 1
    return k


def certify_by_agreement(family, mode: Mode | str, n: int) -> Factorization:
    """Factorize the n- and 2n-letter prefixes and keep the common leading factors.

    The kept factors are all marked certified.  This assumes the
    underlying infinite word is aperiodic; for the m-bonacci words the
    verifier confirms the answers against the closed forms.
    """
    from .errors import GenerationFailed

    mode = Mode.parse(mode)
    try:
        long_word = family.prefix(2 * n)
    except GenerationFailed:
        raise
    except (ValueError, MemoryError, RuntimeError) as exc:
        raise GenerationFailed(f"{family} could not produce {2 * n} letters: {exc}") from exc
    if len(long_word) < 2 * n:
        raise GenerationFailed(f"{family} produced only {len(long_word)} of {2 * n} letters")
    short = factorize_indexed(long_word[:n], mode)
    long = factorize_indexed(long_word, mode)
    k = agreement(short, long)
    kept = tuple(Factor(f.start, f.length, True) for f in short.factors[:k])
    end = kept[-1].end if kept else 0
    return Factorization(mode, short.source, kept, end, stalled=short.stalled and k == len(short.factors))
