"""Occurrence index: suffix array, nearest-smaller searches and a palindromic tree.

The quantity every factorization mode needs is the longest previous
factor at a position s: the largest L such that w[s:s+L] also starts at
some j < s (the two windows may overlap).  Among the suffixes starting
before s, the one sharing the longest prefix with w[s:] is adjacent to
it in suffix-array order once the later suffixes are ignored, so LPF(s)
is the larger of two longest-common-prefix values against the nearest
ranks on either side holding a smaller start.

Palindromic prefixes of w[s:] are palindromic suffixes of the reversed
word ending at n-1-s, which the palindromic tree of the reversed word
lists through its suffix links.  Series links group that chain into
O(log n) arithmetic progressions.
"""

from __future__ import annotations

from typing import Iterator, Optional

import numpy as np

from .words import Word

# below this length the pure-Python structures are faster than numpy
SMALL = 2048


def suffix_array(t: bytes) -> list[int] | np.ndarray:
    n = len(t)
    if n < SMALL:
        return sorted(range(n), key=lambda i: t[i:])
    return _suffix_array_doubling(t)


def _suffix_array_doubling(t: bytes) -> np.ndarray:
    """Prefix doubling with numpy sorts; O(n log^2 n) but vectorized."""
    n = len(t)
    rank = np.frombuffer(t, dtype=np.uint8).astype(np.int64)
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        second[:n - k] = rank[k:]
        key = rank * (n + 2) + (second + 1)
        sa = np.argsort(key, kind="stable")
        sk = key[sa]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.concatenate(([0], np.cumsum(sk[1:] != sk[:-1])))
        rank = new_rank
        if rank[sa[-1]] == n - 1 or k >= n:
            return sa.astype(np.int32)
        k *= 2


def lcp_at(t: bytes, i: int, j: int) -> int:
    """Length of the longest common prefix of t[i:] and t[j:]."""
    n = len(t)
    limit = n - max(i, j)
    if limit <= 0 or t[i] != t[j]:
        return 0
    # gallop on slice equality (memcmp), then bisect
    lo, step = 1, 1
    while True:
        hi = min(lo + step, limit)
        if t[i + lo:i + hi] != t[j + lo:j + hi]:
            break
        lo = hi
        if lo == limit:
            return limit
        step *= 2
    # t[i:i+lo] == t[j:j+lo], mismatch somewhere in [lo, hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if t[i + lo:i + mid] == t[j + lo:j + mid]:
            lo = mid
        else:
            hi = mid
    return lo


class _MinTable:
    """Sparse table of range minima over the suffix array (values are start positions)."""

    def __init__(self, sa: np.ndarray):
        self.levels = [sa]
        k = 1
        while 2 * k <= len(sa):
            prev = self.levels[-1]
            self.levels.append(np.minimum(prev[:-k], prev[k:]))
            k *= 2

    def prev_smaller(self, r: int, s: int) -> int:
        """Largest rank r' < r with sa[r'] < s, or -1."""
        pos = r
        for k in range(len(self.levels) - 1, -1, -1):
            size = 1 << k
            if pos - size >= 0 and self.levels[k][pos - size] >= s:
                pos -= size
        return pos - 1

    def next_smaller(self, r: int, s: int) -> int:
        """Smallest rank r' > r with sa[r'] < s, or -1."""
        n = len(self.levels[0])
        pos = r + 1
        for k in range(len(self.levels) - 1, -1, -1):
            size = 1 << k
            if pos + size <= n and self.levels[k][pos] >= s:
                pos += size
        return pos if pos < n else -1

    def range_min(self, lo: int, hi: int) -> int:
        """min(sa[lo:hi]) for lo < hi."""
        k = (hi - lo).bit_length() - 1
        lev = self.levels[k]
        return int(min(lev[lo], lev[hi - (1 << k)]))


class PalTree:
    """Palindromic tree (eertree) of a byte string.

    Node 0 is the imaginary root of length -1 and node 1 the empty
    palindrome.  ``ends[i]`` is the longest palindromic suffix of t[:i+1].
    """

    def __init__(self, t: bytes):
        length = [-1, 0]
        link = [0, 0]
        diff = [0, 0]
        slink = [0, 0]
        trans: dict[int, int] = {}
        ends = [0] * len(t)
        last = 1
        for i, c in enumerate(t):
            cur = last
            while True:
                L = length[cur]
                if i - 1 - L >= 0 and t[i - 1 - L] == c:
                    break
                cur = link[cur]
            key = cur * 256 + c
            nxt = trans.get(key)
            if nxt is None:
                nxt = len(length)
                L = length[cur] + 2
                length.append(L)
                if L == 1:
                    lk = 1
                else:
                    p = link[cur]
                    while True:
                        Lp = length[p]
                        if i - 1 - Lp >= 0 and t[i - 1 - Lp] == c:
                            break
                        p = link[p]
                    lk = trans[p * 256 + c]
                link.append(lk)
                d = L - length[lk]
                diff.append(d)
                slink.append(slink[lk] if d == diff[lk] else lk)
                trans[key] = nxt
            last = nxt
            ends[i] = nxt
        self.length, self.link, self.diff, self.slink, self.ends = length, link, diff, slink, ends

    def suffix_lengths(self, i: int) -> Iterator[int]:
        """Lengths of the non-empty palindromic suffixes of t[:i+1], longest first."""
        v, length, link = self.ends[i], self.length, self.link
        while length[v] > 0:
            yield length[v]
            v = link[v]

    def series(self, i: int) -> Iterator[tuple[int, int, int]]:
        """The palindromic suffixes of t[:i+1] as progressions (longest, shortest, step)."""
        v = self.ends[i]
        length, diff, slink = self.length, self.diff, self.slink
        while length[v] > 0:
            u = slink[v]
            yield length[v], length[u] + diff[v], diff[v]
            v = u

    def smallest_above(self, i: int, bound: int) -> Optional[int]:
        """Shortest palindromic suffix of t[:i+1] longer than ``bound``."""
        best = None
        for top, low, step in self.series(i):
            if top <= bound:
                break
            if low > bound:
                best = low
            else:
                best = low + ((bound - low) // step + 1) * step
                break
        return best

    def largest_at_most(self, i: int, bound: int) -> Optional[int]:
        """Longest palindromic suffix of t[:i+1] of length at most ``bound`` (>= 1)."""
        for top, low, step in self.series(i):
            if low > bound:
                continue
            if top <= bound:
                return top
            return low + ((bound - low) // step) * step
        return None


class OccurrenceIndex:
    """Leftmost-occurrence and palindromic-prefix queries over one word.

    The suffix array is built eagerly; the palindromic tree only when a
    palindromic query first needs it.
    """

    def __init__(self, w: Word | bytes):
        t = w.letters if isinstance(w, Word) else bytes(w)
        self.text = t
        self.n = n = len(t)
        self.sa = suffix_array(t)
        self.small = n < SMALL
        if self.small:
            self.rank = [0] * n
            for r, p in enumerate(self.sa):
                self.rank[p] = r
            self._mins = None
        else:
            rank = np.empty(n, dtype=np.int32)
            rank[self.sa] = np.arange(n, dtype=np.int32)
            self.rank = rank
            self._mins = _MinTable(self.sa)
        self._pal: Optional[PalTree] = None

    @property
    def paltree(self) -> PalTree:
        if self._pal is None:
            self._pal = PalTree(self.text[::-1])
        return self._pal

    def _neighbours(self, s: int) -> tuple[int, int]:
        r = int(self.rank[s])
        if self.small:
            sa = self.sa
            lo = r - 1
            while lo >= 0 and sa[lo] >= s:
                lo -= 1
            hi = r + 1
            while hi < self.n and sa[hi] >= s:
                hi += 1
            return (sa[lo] if lo >= 0 else -1), (sa[hi] if hi < self.n else -1)
        mins = self._mins
        lo, hi = mins.prev_smaller(r, s), mins.next_smaller(r, s)
        return (int(self.sa[lo]) if lo >= 0 else -1), (int(self.sa[hi]) if hi >= 0 else -1)

    def lpf(self, s: int) -> int:
        """Longest previous factor at s (0 at s = 0)."""
        best = 0
        for j in self._neighbours(s):
            if j >= 0:
                best = max(best, lcp_at(self.text, s, j))
        return best

    def leftmost_occurrence(self, a: int, b: int) -> int:
        """Smallest start of w[a:b] anywhere in w."""
        if not 0 <= a <= b <= self.n:
            raise ValueError("range outside the word")
        L = b - a
        if L == 0:
            return 0
        t, sa, n = self.text, self.sa, self.n
        pat = t[a:b]
        r = int(self.rank[a])
        # suffixes sharing the first L letters form a contiguous rank block around r
        lo, hi = 0, r
        while lo < hi:
            mid = (lo + hi) // 2
            p = int(sa[mid])
            if t[p:p + L] < pat:
                lo = mid + 1
            else:
                hi = mid
        first = lo
        lo, hi = r + 1, n
        while lo < hi:
            mid = (lo + hi) // 2
            p = int(sa[mid])
            if t[p:p + L] == pat:
                lo = mid + 1
            else:
                hi = mid
        if self.small:
            return min(sa[first:lo])
        return self._mins.range_min(first, lo)

    def earliest_occurrence_before(self, start: int, length: int) -> Optional[int]:
        if start + length > self.n or start < 0 or length < 0:
            raise ValueError("window exceeds the text")
        j = self.leftmost_occurrence(start, start + length)
        return j if j < start else None

    def palindromic_prefix_lengths(self, s: int) -> list[int]:
        """All L >= 1 with w[s:s+L] a palindrome, ascending."""
        if not 0 <= s < self.n:
            return []
        return sorted(self.paltree.suffix_lengths(self.n - 1 - s))

    def shortest_pal_prefix_above(self, s: int, bound: int) -> Optional[int]:
        return self.paltree.smallest_above(self.n - 1 - s, bound)

    def longest_pal_prefix_at_most(self, s: int, bound: int) -> Optional[int]:
        return self.paltree.largest_at_most(self.n - 1 - s, bound)


def build_index(w: Word) -> OccurrenceIndex:
    return OccurrenceIndex(w)
