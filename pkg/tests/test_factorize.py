import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palfac import (
    EmptyInput,
    GenerationFailed,
    Mode,
    Word,
    certify_by_agreement,
    factorize_indexed,
    factorize_naive,
    is_palindrome,
)
from palfac.factorize import agreement
from palfac.families import Fibonacci, FamilyHandle, MBonacci, ThueMorse

W = Word.parse
MODES = list(Mode)

FIB_LISTS = {
    "z": ["0", "1", "00", "101", "00100", "10100101"],
    "c": ["0", "1", "0", "010", "10010", "01010010"],
    "pz": ["0", "1", "00", "101", "00100", "10100101"],
    "pc": ["0", "1", "0", "010", "1001", "0010100"],
}


@pytest.mark.parametrize("mode", FIB_LISTS)
def test_fibonacci_first_factors(mode):
    w = Fibonacci().prefix(2000)
    assert factorize_indexed(w, mode).strings()[:6] == FIB_LISTS[mode]
    assert factorize_naive(w, mode).strings()[:6] == FIB_LISTS[mode]


def test_c_factors_may_overlap_their_earlier_occurrence():
    # "000" at position 1 is matched by its occurrence at position 0
    for mode in ("c", "pc"):
        assert factorize_indexed(W("0000"), mode).strings() == ["0", "000"]
        assert factorize_naive(W("0000"), mode).strings() == ["0", "000"]
    assert factorize_indexed(W("01010"), "c").strings() == ["0", "1", "010"]


def test_trivial_palindromic_z_examples():
    f = factorize_indexed(W("012"), "pz")
    assert f.strings() == ["0", "1", "2"] and str(f.residue) == "" and f.stalled_at is None
    g = factorize_indexed(W("010"), "pz")
    assert g.strings() == ["0", "1"] and str(g.residue) == "0" and g.stalled_at == 2


@pytest.mark.parametrize("mode", MODES)
def test_single_letter(mode):
    f = factorize_indexed(W("1"), mode)
    assert f.strings() == ["1"] and f.residue_start == 1


def test_empty_input():
    for engine in (factorize_naive, factorize_indexed):
        with pytest.raises(EmptyInput):
            engine(Word(b"", 2), "z")


def test_unknown_mode():
    with pytest.raises(ValueError):
        Mode.parse("lz78")


def test_certification_flags():
    w = W("0100")
    assert all(f.certified for f in factorize_indexed(w, "z").factors)
    c = factorize_indexed(w, "c")
    assert [f.certified for f in c.factors] == [True, True, True, False]
    assert not any(f.certified for f in factorize_indexed(w, "pc").factors)


def _check_semantics(w: Word, f):
    t = w.letters
    assert f.residue_start == (f.factors[-1].end if f.factors else 0)
    assert b"".join(x.letters for x in f.texts()) + f.residue.letters == t
    for fac in f.factors:
        s, L = fac.start, fac.length
        u = t[s:s + L]
        old = t.find(u, 0, s - 1 + L) != -1 if s else False
        if f.mode in (Mode.PZ, Mode.PC):
            assert is_palindrome(Word(u, w.alphabet_size))
        if f.mode in (Mode.Z, Mode.PZ):
            assert not old
        if f.mode in (Mode.C, Mode.PC) and L > 1:
            assert old
    if f.stalled:
        assert f.mode in (Mode.Z, Mode.PZ)


@settings(max_examples=300)
@given(st.integers(1, 3).flatmap(lambda k: st.lists(st.integers(0, k - 1), min_size=1, max_size=120)
                                 .map(lambda xs: Word(xs, k))),
       st.sampled_from(MODES))
def test_engines_agree_and_tile(w, mode):
    a = factorize_naive(w, mode)
    b = factorize_indexed(w, mode)
    assert a.key() == b.key()
    assert [x.certified for x in a.factors] == [x.certified for x in b.factors]
    _check_semantics(w, b)


def test_exhaustive_short_binary_words():
    for n in range(1, 11):
        for bits in itertools.product(b"\x00\x01", repeat=n):
            w = Word(bytes(bits), 2)
            for mode in MODES:
                assert factorize_naive(w, mode).key() == factorize_indexed(w, mode).key(), (bits, mode)


def test_random_ternary_words():
    rng = random.Random(2024)
    for _ in range(500):
        w = Word(bytes(rng.randrange(3) for _ in range(rng.randrange(1, 301))), 3)
        for mode in MODES:
            assert factorize_naive(w, mode).key() == factorize_indexed(w, mode).key()


@pytest.mark.parametrize("mode", MODES)
def test_prefix_windows_are_consistent(mode):
    w = MBonacci(3).prefix(2 ** 17)
    previous = None
    for k in range(10, 18):
        f = factorize_indexed(w[:2 ** k], mode)
        if previous is not None:
            stable = previous.certified_factors()
            assert agreement(previous, f) >= len(stable)
        previous = f


def test_certify_by_agreement_examples():
    pc = certify_by_agreement(Fibonacci(), "pc", 10_000)
    assert pc.strings()[:6] == FIB_LISTS["pc"]
    assert all(f.certified for f in pc.factors)
    pz = certify_by_agreement(MBonacci(3), "pz", 10_000)
    assert pz.strings()[:5] == ["0", "1", "020", "1001", "020101020"]
    tm = certify_by_agreement(ThueMorse(), "pz", 64)
    # "11" at position 2 already occurs at position 1, so the third factor is "101"
    assert tm.strings()[:4] == ["0", "1", "101", "00"]


class _Short(FamilyHandle):
    kind = "short"

    def _generate(self, n):
        return b"\x00\x01" * 10


def test_certify_reports_generation_failure():
    with pytest.raises(GenerationFailed):
        certify_by_agreement(_Short(), "z", 100)
