"""Desk-scale checks of the structural results about singular and p-singular words.

Each ``check_*`` function returns a ``CheckReport``.  A failing report
always carries the first counterexample found (where, what was expected,
what was seen).  Statements about infinite words are checked on finite
prefixes; the depth used is recorded in the report parameters.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Optional

from . import mbonacci as mb
from .errors import BudgetExceeded
from .factorize import Mode, certify_by_agreement, factorize_indexed
from .families import FamilyHandle, Fibonacci, MBonacci, ThueMorse, staircase
from .index import OccurrenceIndex, PalTree
from .mbonacci import PSingularSeq
from .words import Word, apply_morphism, concat, is_factor, is_palindrome, occurrences, reverse


@dataclass
class CheckReport:
    name: str
    parameters: dict
    passed: bool
    counterexample: Optional[dict] = None
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def outcome(self) -> tuple:
        """The reproducible part of the report (timing excluded)."""
        return (self.name, tuple(sorted(self.parameters.items())), self.passed, repr(self.counterexample))


def _show(x: Any, limit: int = 120) -> Any:
    if isinstance(x, Word):
        x = str(x)
    if isinstance(x, str) and len(x) > limit:
        return x[:limit] + f"...({len(x)} letters)"
    return x


class _Recorder:
    def __init__(self, name: str, **params):
        self.name = name
        self.params = params
        self.counterexample: Optional[dict] = None
        self.notes: dict = {}
        self.t0 = time.perf_counter()

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def expect(self, ok: bool, location: str, expected: Any = True, actual: Any = False) -> bool:
        if not ok and self.counterexample is None:
            self.counterexample = {"location": location, "expected": _show(expected), "actual": _show(actual)}
        return ok

    def equal(self, location: str, expected: Any, actual: Any) -> bool:
        return self.expect(expected == actual, location, expected, actual)

    def report(self) -> CheckReport:
        return CheckReport(self.name, self.params, self.counterexample is None, self.counterexample,
                           time.perf_counter() - self.t0, self.notes)


# index bookkeeping between engine positions (0-based) and the indices used in the statements

_STATEMENT_OFFSETS = {
    "z_fib": lambda m: 1,       # z(fib) = (f_1, f_2, ...)
    "pz_fib": lambda m: 1,
    "pc_fib": lambda m: -1,     # pc(fib) = (c_{-1}, c_0, c_1, ...)
    "pz_mbonacci": lambda m: 0,  # pz(w_m) = (z_0, z_1, ...)
    "pc_mbonacci": lambda m: -m,  # pc(w_m) = (c_{-m}, c_{-(m-1)}, ...)
}


def statement_index_offset(theorem: str, m: int = 2) -> int:
    try:
        return _STATEMENT_OFFSETS[theorem](m)
    except KeyError:
        raise ValueError(f"no index convention for {theorem!r}") from None


def statement_index(theorem: str, engine_index: int, m: int = 2) -> int:
    return engine_index + statement_index_offset(theorem, m)


def engine_index(theorem: str, statement_idx: int, m: int = 2) -> int:
    return statement_idx - statement_index_offset(theorem, m)


def _compare_factors(rec: _Recorder, got: list[Word], expected: list[Word], theorem: str, m: int) -> None:
    if not rec.expect(len(got) >= len(expected), "factor count", len(expected), len(got)):
        return
    for i, want in enumerate(expected):
        if not rec.equal(f"factor {i} ({theorem} index {statement_index(theorem, i, m)})", want, got[i]):
            return


def _certified_texts(f) -> list[Word]:
    return [f.source[x.start:x.end] for x in f.certified_factors()]


def _check_budget(length: int) -> None:
    budget = mb.default_budget_bytes()
    if length > budget:
        raise BudgetExceeded(f"a window of {length} letters exceeds the budget of {budget} bytes")


# --- factorizations of the Fibonacci word -------------------------------------------

def check_z_fib(k: int) -> CheckReport:
    rec = _Recorder("check_z_fib", k=k)
    expected = [mb.fib_singular(n) for n in range(1, k + 1)]
    window = 2 * sum(len(x) for x in expected)
    _check_budget(window)
    got = _certified_texts(factorize_indexed(Fibonacci().prefix(window), Mode.Z))
    rec.params["window"] = window
    _compare_factors(rec, got, expected, "z_fib", 2)
    return rec.report()


def check_pz_fib(k: int) -> CheckReport:
    rec = _Recorder("check_pz_fib", k=k)
    expected = [mb.fib_singular(n) for n in range(1, k + 1)]
    window = 2 * sum(len(x) for x in expected)
    _check_budget(window)
    w = Fibonacci().prefix(window)
    got = _certified_texts(factorize_indexed(w, Mode.PZ))
    rec.params["window"] = window
    _compare_factors(rec, got, expected, "pz_fib", 2)
    # on the Fibonacci word the plain and palindromic z-factorizations coincide
    z = _certified_texts(factorize_indexed(w, Mode.Z))
    rec.equal("pz equals z", z[:k], got[:k])
    return rec.report()


def pc_fib_expected(k: int) -> list[Word]:
    """c_{-1}, c_0, c_1 = 0, 1, 0 and c_n = f_{n-1} f_n f_{n-1} for 2 <= n <= k."""
    f = mb.fib_singular
    head = [Word(b"\x00", 2), Word(b"\x01", 2), Word(b"\x00", 2)]
    return head + [f(n - 1) + f(n) + f(n - 1) for n in range(2, k + 1)]


def check_pc_fib(k: int) -> CheckReport:
    rec = _Recorder("check_pc_fib", k=k)
    expected = pc_fib_expected(k)
    window = sum(len(x) for x in expected) + 1
    _check_budget(2 * window)
    got = _certified_texts(certify_by_agreement(Fibonacci(), Mode.PC, window))
    rec.params["window"] = window
    _compare_factors(rec, got, expected, "pc_fib", 2)
    return rec.report()


# --- palindromic factorizations of the m-bonacci words ------------------------------

def check_pz_mbonacci(m: int, k: Optional[int] = None, window: Optional[int] = None) -> CheckReport:
    """pz(w_m) = (z_0, z_1, ...): the first k+1 factors, or every factor inside ``window``."""
    rec = _Recorder("check_pz_mbonacci", m=m, k=k, window=window)
    seq = mb.sequence(m)
    if window is None:
        k = 6 if k is None else k
        expected = [seq.z(i) for i in range(k + 1)]
        window = sum(len(x) for x in expected)
        rec.params["window"] = window
    _check_budget(window)
    got = _certified_texts(factorize_indexed(MBonacci(m).prefix(window), Mode.PZ))
    if k is None:
        expected = [seq.z(i) for i in range(len(got))]
    rec.notes["factors_checked"] = len(expected)
    _compare_factors(rec, got, expected, "pz_mbonacci", m)
    return rec.report()


def pc_mbonacci_expected(m: int, k: int, seq: Optional[PSingularSeq] = None) -> list[Word]:
    """The blocks of p_m followed by Q(m-2), ..., Q(k)."""
    seq = seq or mb.sequence(m)
    return mb.p_word_pal_decomposition(m, seq) + [mb.q_block(m, n, seq) for n in range(m - 2, k + 1)]


def check_pc_mbonacci(m: int, k: Optional[int] = None, window: Optional[int] = None) -> CheckReport:
    rec = _Recorder("check_pc_mbonacci", m=m, k=k, window=window)
    if window is None:
        k = max(m, 4) if k is None else k
        expected = pc_mbonacci_expected(m, k)
        window = sum(len(x) for x in expected) + 1
        rec.params["window"] = window
    _check_budget(2 * window)
    got = _certified_texts(certify_by_agreement(MBonacci(m), Mode.PC, window))
    if k is None:
        # enough Q(n) to cover every certified factor
        n = m - 2
        expected = pc_mbonacci_expected(m, n)
        while len(expected) < len(got):
            n += 1
            expected = pc_mbonacci_expected(m, n)
        expected = expected[:len(got)]
    rec.notes["factors_checked"] = len(expected)
    rec.notes["statement_index_offset"] = statement_index_offset("pc_mbonacci", m)
    _compare_factors(rec, got, expected, "pc_mbonacci", m)
    return rec.report()


# --- identities between words ---------------------------------------------------------

def check_singular_identities(m: int, n_max: int, seq: Optional[PSingularSeq] = None) -> CheckReport:
    """Recurrences of the singular words, the phi-shift identity, closed form vs recursion.

    ``seq`` may be supplied to check a specific (for instance deliberately
    corrupted) sequence instead of the shared one.
    """
    rec = _Recorder("check_singular_identities", m=m, n_max=n_max)
    seq = seq or mb.sequence(m)
    phi = mb.phi_m(m)
    zero = Word(b"\x00", m)
    for n in range(0, n_max + 1):
        img = apply_morphism(phi, seq.z(n - 1))
        if n % 2:
            ok = img.letters.startswith(b"\x00")
            if not rec.expect(ok, f"phi-shift n={n}: phi(z_{n - 1}) starts with 0", True, str(img)[:1]):
                break
            want = img[1:]
        else:
            want = img + zero
        if not rec.equal(f"phi-shift n={n}", want, seq.z(n)):
            break
        if not rec.equal(f"closed form n={n}", mb.z_singular_closed(m, n), seq.z(n)):
            break
        if not rec.expect(is_palindrome(seq.z(n)), f"z_{n} palindrome", True, str(seq.z(n))):
            break
    if m == 2 and not rec.failed:
        f = mb.fib_singular
        for n in range(1, n_max + 2):
            if not rec.equal(f"f_{n} = z_{n - 1}", f(n), seq.z(n - 1)):
                break
            rec.equal(f"|f_{n}| = F_{n}", mb.fibonacci_number(n), len(f(n)))
            if n >= 4:
                rec.equal(f"f_{n} = f_{n-2} f_{n-3} f_{n-2}", f(n), f(n - 2) + f(n - 3) + f(n - 2))
            rec.equal(f"f_{n + 2} = f_{n} f'_{n + 1}", f(n + 2), f(n) + mb.flip_last(f(n + 1)))
            if n >= 3:
                alpha = Word(bytes((0 if n % 2 else 1,)), 2)
                rec.equal(f"f_{n} = alpha_{n} f_1 ... f_{n - 2}", f(n), alpha + concat([f(i) for i in range(1, n - 1)], 2))
    return rec.report()


def check_cross_m(m: int) -> CheckReport:
    """z^(m)_n = z^(m+1)_n for -1 <= n <= m-1, and the two differ at n = m."""
    rec = _Recorder("check_cross_m", m=m)
    for n in range(-1, m):
        if not rec.equal(f"n={n}", mb.z_singular(m, n), mb.z_singular(m + 1, n)):
            break
    rec.expect(mb.z_singular(m, m) != mb.z_singular(m + 1, m), f"n={m} differs", "different", "equal")
    return rec.report()


def _lengths_from_sum_formula(m: int, n_max: int) -> list[int]:
    """|z_{-1}|, ..., |z_{n_max}| from the sum formula (n <= m-1) and the m-term recurrence."""
    out = [0, 1]  # out[i] = |z_{i-1}|
    for n in range(1, n_max + 1):
        if n <= m - 1:
            out.append(2 * sum(out[1:n]) + 1)  # 2 (|z_0| + ... + |z_{n-2}|) + 1
        else:
            out.append(sum(out[n - m + 1:n + 1]) + ((-1) ** n if m % 2 else 0))
    return out


def check_lengths(m: int, n_max: int, construct_max: int = 18) -> CheckReport:
    rec = _Recorder("check_lengths", m=m, n_max=n_max, construct_max=construct_max)
    alt = _lengths_from_sum_formula(m, n_max)
    table = mb.LengthTable(m)
    for n in range(-1, n_max + 1):
        L = table[n]
        if not rec.equal(f"recurrences agree at n={n}", alt[n + 1], L):
            break
        if n >= m - 1 and n >= 1:
            # the m-term recurrence also holds on the edge n = m-1
            s = sum(table[n - i] for i in range(1, m + 1)) + ((-1) ** n if m % 2 else 0)
            if not rec.equal(f"m-term recurrence at n={n}", s, L):
                break
        if 1 <= n <= m - 1:
            rec.equal(f"|z_n| = |z_n-1| + 2|z_n-2| at n={n}", table[n - 1] + 2 * table[n - 2], L)
        if m == 2 and n >= 0:
            rec.equal(f"|z_{n}| = F_{n + 1}", mb.fibonacci_number(n + 1), L)
        if 0 <= n <= m - 1:
            rec.expect(L >= sum(table[k] for k in range(-1, n)), f"|z_{n}| >= sum of shorter at n={n}")
        if n >= 1:
            rec.expect(L >= table[n - 1] + table[n - 2], f"|z_n| >= |z_n-1| + |z_n-2| at n={n}")
            if n + 1 <= n_max:
                rec.expect(table[n + 1] > L, f"|z_n+1| > |z_n| at n={n}")
        if n <= construct_max:
            rec.equal(f"constructed length n={n}", L, len(mb.z_singular(m, n)))
        if rec.failed:
            break
    return rec.report()


def _boundary(m: int, n: int) -> Optional[tuple[str, str]]:
    if n < 2:
        return None
    if n % 2 == 0:
        edge = "00" if m == 2 else "020"
        return edge, edge
    if m == 2:
        return "101", "101"
    if m == 3:
        return "100", "001"
    return "103", "301"


def check_structure(m: int, n_max: int, preimage_window: Optional[int] = None) -> CheckReport:
    """Non-factor, suffix/prefix, letter-absence, two-occurrence, nothing-to-add,
    palindromic-preimage and palindromic-prefix-set statements."""
    rec = _Recorder("check_structure", m=m, n_max=n_max)
    seq = mb.sequence(m)
    z = seq.z
    zl = lambda n: len(z(n))  # noqa: E731

    # first and last letters
    for n in range(0, n_max + 1):
        letter = "0" if n % 2 == 0 else "1"
        s = str(z(n))
        rec.expect(s[0] == letter and s[-1] == letter, f"z_{n} starts and ends with {letter}", letter, s[0] + s[-1])
        edge = _boundary(m, n)
        if edge:
            rec.expect(s.startswith(edge[0]) and s.endswith(edge[1]), f"z_{n} boundary", edge, (s[:3], s[-3:]))

    # letter absence
    for n in range(0, m):
        for i in range(-1, n):
            rec.expect(n not in z(i).letters, f"letter {n} absent from z_{i}", "absent", "present")

    for n in range(0, n_max + 1):
        rec.expect(not is_factor(z(n), z(n + 1)), f"z_{n} not a factor of z_{n + 1}", "not a factor", "factor")
        if n >= 1:
            prod = concat([z(k) for k in range(n)], m)
            rec.expect(not is_factor(z(n), prod), f"z_{n} not a factor of z_0...z_{n - 1}", "not a factor", "factor")
        a, b = z(n - 1).letters, z(n).letters
        common = [L for L in range(1, min(len(a), len(b)) + 1) if a[-L:] == b[:L]]
        rec.expect(not common, f"suffix of z_{n - 1} that is a prefix of z_{n}", "only the empty word", common[:3])
        if rec.failed:
            return rec.report()

    # exactly two occurrences of z_n in g_{n+1}
    for n in range(m - 1, n_max + 1):
        g = mb.g_prefix(m, n + 1, seq)
        positions = [sum(zl(k) for k in range(n)), sum(zl(k) for k in range(n + 2))]
        rec.equal(f"occurrences of z_{n} in g_{n + 1}", positions, occurrences(z(n), g))

    # nothing to add after Q(n+1)
    checked_depth = {}
    for n in range(m - 1, n_max + 1):
        depth = zl(n + 1)
        q1 = mb.q_block(m, n + 1, seq)
        u1 = (z(n - (m - 1)) + q1 + mb.q_block(m, n + 2, seq)).letters[:depth]
        u2 = mb.q_block(m, n + 2, seq).letters[:depth]
        lcp = 0
        while lcp < depth and u1[lcp] == u2[lcp]:
            lcp += 1
        checked_depth[n] = lcp
        for L in range(1, lcp + 1):
            cand = q1.letters + u1[:L]
            if not rec.expect(cand != cand[::-1], f"Q({n + 1}) w palindrome for |w|={L}", "not a palindrome", "palindrome"):
                break
    rec.notes["nothing_to_add_common_prefix_lengths"] = checked_depth

    # palindromic factors have palindromic preimages; the work grows with the
    # square of the window, so by default it follows the depth of the run
    if preimage_window is None:
        preimage_window = min(3000, 4 * sum(zl(k) for k in range(n_max + 1)))
    rec.notes["preimage_window"] = preimage_window
    w = MBonacci(m).prefix(preimage_window).letters
    tree = PalTree(w)
    seen = set()
    phi = mb.phi_m(m)
    for i, node in enumerate(tree.ends):
        if node in seen:
            continue
        seen.add(node)
        L = tree.length[node]
        p = w[i - L + 1:i + 1]
        if p[0] == 0:
            pre = mb.phi_m_preimage(m, Word(p[:-1], m)) if p[-1] == 0 else None
            ok = pre is not None and apply_morphism(phi, pre).letters + b"\x00" == p
        else:
            pre = mb.phi_m_preimage(m, Word(b"\x00" + p, m))
            ok = pre is not None and apply_morphism(phi, pre).letters == b"\x00" + p
        if not rec.expect(ok, f"preimage of palindrome {Word(p, m)}", "exists", None):
            break
        if not rec.expect(is_palindrome(pre) and pre.letters in w, f"preimage {pre} of {Word(p, m)}",
                          "palindromic factor", str(pre)):
            break
    rec.notes["palindromes_checked"] = len(seen)

    # palindromic prefixes of z_n
    for n in range(-1, n_max + 1):
        t = z(n).letters
        got = {t[:L] for L in range(0, len(t) + 1) if t[:L] == t[:L][::-1]}
        want = {b""} | {z(k).letters for k in range(n % 2 if n >= 0 else 1, n + 1, 2)}
        rec.equal(f"palindromic prefixes of z_{n}", sorted(map(len, want)), sorted(map(len, got)))
        rec.expect(got == want, f"palindromic prefix words of z_{n}")
    return rec.report()


def check_global_factorizations(m: int, window: int) -> CheckReport:
    rec = _Recorder("check_global_factorizations", m=m, window=window)
    _check_budget(window)
    seq = mb.sequence(m)
    w = MBonacci(m).prefix(window).letters

    out = bytearray()
    n = 0
    while len(out) < window:
        out += seq.z(n).letters
        n += 1
    rec.equal("w = z_0 z_1 z_2 ...", w, bytes(out[:window]))
    pw = mb.p_word(m, seq)
    rec.equal("p_m prefix", w[:len(pw)], pw.letters)
    rest = bytearray(pw.letters)
    n = m - 2
    while len(rest) < window:
        rest += mb.q_block(m, n, seq).letters
        n += 1
    rec.equal("w = p_m Q(m-2) Q(m-1) ...", w, bytes(rest[:window]))
    if m == 2:
        f = mb.fib_singular
        out = bytearray(b"\x00\x01\x00")
        n = 2
        while len(out) < window:
            out += (f(n - 1) + f(n) + f(n - 1)).letters
            n += 1
        rec.equal("fib = 010 prod f_{n-1} f_n f_{n-1}", w, bytes(out[:window]))
    n = m - 2
    while True:
        g = mb.g_prefix(m, n, seq)
        if len(g) > window:
            break
        rec.expect(w.startswith(g.letters), f"g_{n} prefix of w_{m}", "prefix", str(g))
        if n >= m - 1:
            closed = concat([seq.z(k) for k in range(0, n - m + 1)] + [mb.q_block(m, n, seq), seq.z(n - m)], m)
            rec.equal(f"g_{n} = z_0...z_(n-m) Q(n) z_(n-m)", g, closed)
        if m == 2 and n >= 2:
            fn = n + 1  # g'_{n+1} = g_n
            f = mb.fib_singular
            parts = [f(i) for i in range(1, fn)] + [f(fn), f(fn - 1), f(fn - 2)]
            rec.equal(f"g'_{fn} = f_1 ... f_{fn - 1} f_{fn} f_{fn - 1} f_{fn - 2}", g, concat(parts, 2))
        n += 1
    return rec.report()


def check_pal_prefix_identity(m: int, n_max: int) -> CheckReport:
    """u_{n+2} = z_0 ... z_{n-1} z_n z_{n-1} ... z_0 are the palindromic prefixes of w_m."""
    rec = _Recorder("check_pal_prefix_identity", m=m, n_max=n_max)
    seq = mb.sequence(m)
    us = []
    for n in range(0, n_max + 1):
        left = [seq.z(k) for k in range(n)]
        u = concat(left + [seq.z(n)] + left[::-1], m)
        rec.expect(is_palindrome(u), f"u_{n + 2} palindrome", True, str(u))
        rec.equal(f"u_{n + 2} = h_0^R ... h_{n}^R", concat([reverse(mb.h(m, k)) for k in range(n + 1)], m), u)
        rec.equal(f"u_{n + 2} = h_{n} ... h_0", concat([mb.h(m, k) for k in range(n, -1, -1)], m), u)
        if us:
            rec.expect(len(u) > len(us[-1]), f"|u_{n + 2}| > |u_{n + 1}|", len(us[-1]), len(u))
        us.append(u)
    top = len(us[-1]) if us else 0
    _check_budget(top)
    w = MBonacci(m).prefix(top)
    for i, u in enumerate(us):
        rec.expect(w.letters.startswith(u.letters), f"u_{i + 2} prefix of w_{m}", "prefix", str(u))
    # no other palindromic prefixes occur in between
    if top:
        lengths = OccurrenceIndex(w).palindromic_prefix_lengths(0)
        rec.equal("all palindromic prefixes", [len(u) for u in us], lengths)
    return rec.report()


def check_family_membership(family: FamilyHandle, window: int, expect_equal: Optional[bool] = None) -> CheckReport:
    """Compare the certified z and pz factors of a prefix.

    Without ``expect_equal`` the report passes when the lists agree so far.
    With it, the report passes when agreement matches the expectation (so a
    word known to diverge can be probed too).
    """
    rec = _Recorder("check_family_membership", family=repr(family), window=window, expect_equal=expect_equal)
    w = family.prefix(window)
    z = factorize_indexed(w, Mode.Z).certified_factors()
    pz = factorize_indexed(w, Mode.PZ).certified_factors()
    divergence = None
    for i, (a, b) in enumerate(zip(z, pz)):
        if (a.start, a.length) != (b.start, b.length):
            divergence = i
            break
    equal = divergence is None
    rec.notes.update(equal=equal, divergence_index=divergence, z_factors=len(z), pz_factors=len(pz))
    if divergence is not None:
        rec.notes["z_factor"] = _show(w[z[divergence].start:z[divergence].end])
        rec.notes["pz_factor"] = _show(w[pz[divergence].start:pz[divergence].end])
    want = True if expect_equal is None else expect_equal
    rec.expect(equal == want, "z versus pz", "equal" if want else "divergent",
               "equal" if equal else f"diverge at factor {divergence}")
    return rec.report()


# --- the whole suite -----------------------------------------------------------------

def _suite(m_max: int, depth: int, window: int) -> list[tuple[str, Callable[[], CheckReport]]]:
    jobs: list[tuple[str, Callable[[], CheckReport]]] = []
    k = max(depth, 1)
    jobs.append(("check_z_fib", lambda: check_z_fib(k)))
    jobs.append(("check_pz_fib", lambda: check_pz_fib(k)))
    jobs.append(("check_pc_fib", lambda: check_pc_fib(k)))
    for m in range(2, m_max + 1):
        jobs += [
            ("check_pz_mbonacci", lambda m=m: check_pz_mbonacci(m, k)),
            ("check_pc_mbonacci", lambda m=m: check_pc_mbonacci(m, max(k, m - 2))),
            ("check_singular_identities", lambda m=m: check_singular_identities(m, depth)),
            ("check_cross_m", lambda m=m: check_cross_m(m)),
            ("check_lengths", lambda m=m: check_lengths(m, max(depth, 200), construct_max=depth)),
            ("check_structure", lambda m=m: check_structure(m, depth)),
            ("check_global_factorizations", lambda m=m: check_global_factorizations(m, window)),
            ("check_pal_prefix_identity", lambda m=m: check_pal_prefix_identity(m, depth)),
        ]
    probe = min(window, 10_000)
    jobs += [
        ("check_family_membership", lambda: check_family_membership(Fibonacci(), probe)),
        ("check_family_membership", lambda: check_family_membership(staircase(), probe)),
        ("check_family_membership", lambda: check_family_membership(ThueMorse(), probe, expect_equal=False)),
    ]
    return jobs


CHECK_NAMES = (
    "check_z_fib", "check_pz_fib", "check_pc_fib", "check_pz_mbonacci", "check_pc_mbonacci",
    "check_singular_identities", "check_cross_m", "check_lengths", "check_structure",
    "check_global_factorizations", "check_pal_prefix_identity", "check_family_membership",
)


def _guarded(name: str, job: Callable[[], CheckReport]) -> CheckReport:
    t0 = time.perf_counter()
    try:
        return job()
    except Exception as exc:  # a crashing check is a failed check, never an aborted suite
        return CheckReport(name, {}, False, {"location": "exception", "expected": "no error",
                                             "actual": f"{type(exc).__name__}: {exc}"},
                           time.perf_counter() - t0)


def run_all(m_max: int = 5, depth: int = 12, window: int = 100_000, only: Optional[list[str]] = None,
            workers: int = 1) -> list[CheckReport]:
    """Run every check for m in [2, m_max]; reports come back in a fixed order."""
    jobs = _suite(m_max, depth, window)
    if only:
        unknown = set(only) - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
        jobs = [j for j in jobs if j[0] in only]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda j: _guarded(*j), jobs))
    return [_guarded(*j) for j in jobs]
