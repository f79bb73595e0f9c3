import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from palfac import (
    EPSILON,
    AlphabetMismatch,
    EmptyWordInSet,
    InputTooLarge,
    Morphism,
    NotAPrefix,
    NotASuffix,
    NotProlongable,
    OccurrenceIndex,
    ParseError,
    Word,
    apply_morphism,
    earliest_occurrence_before,
    fixed_point_prefix,
    is_code,
    is_factor,
    is_palindrome,
    is_prolongable,
    parse_morphism,
    phi_m,
    render,
    reverse,
    strip_prefix,
    strip_suffix,
)
from palfac.families import THUE_MORSE

W = Word.parse
FIB = Morphism(["01", "0"])


def words(alphabet=2, max_size=30):
    return st.lists(st.integers(0, alphabet - 1), max_size=max_size).map(lambda xs: Word(xs, alphabet))


def test_parse_and_render_round_trip():
    assert render(W("0102")) == "0102"
    w = Word([0, 11, 3], 12)
    assert render(w) == "0,11,3"
    assert W("0,11,3", 12) == w
    assert W("") == EPSILON
    with pytest.raises(ParseError):
        W("01x")
    with pytest.raises(ParseError):
        W("012", 2)


def test_word_is_immutable_and_hashable():
    w = W("010")
    with pytest.raises(AttributeError):
        w.letters = b""
    assert {w: 1}[W("010")] == 1
    assert w[1:] == W("10")
    assert w + W("1") == W("0101")


@pytest.mark.parametrize("w, expected", [("01", "10"), ("", ""), ("00100", "00100")])
def test_reverse(w, expected):
    assert reverse(W(w)) == W(expected)


@given(words())
def test_reverse_is_an_involution(w):
    assert reverse(reverse(w)) == w


@pytest.mark.parametrize("w, expected", [("1001", True), ("01", False), ("", True), ("2", True)])
def test_is_palindrome(w, expected):
    assert is_palindrome(W(w)) is expected


@pytest.mark.parametrize("u, z, expected", [("101", "00100", False), ("", "0", True), ("020", "0201001020", True)])
def test_is_factor(u, z, expected):
    assert is_factor(W(u), W(z)) is expected


@pytest.mark.parametrize("text, start, length, expected", [
    ("0100101", 3, 3, 0),
    ("01", 1, 1, None),
    ("000", 1, 2, 0),
])
def test_earliest_occurrence_before_examples(text, start, length, expected):
    assert earliest_occurrence_before(W(text), start, length) == expected
    assert OccurrenceIndex(W(text)).earliest_occurrence_before(start, length) == expected


def test_earliest_occurrence_before_rejects_out_of_range_window():
    with pytest.raises(ValueError):
        earliest_occurrence_before(W("01"), 1, 2)


@settings(max_examples=200)
@given(st.data())
def test_occurrence_search_matches_exhaustive_scan(data):
    w = data.draw(words(alphabet=data.draw(st.integers(1, 3)), max_size=60))
    assume(len(w) >= 1)
    start = data.draw(st.integers(0, len(w) - 1))
    length = data.draw(st.integers(0, len(w) - start))
    j = earliest_occurrence_before(w, start, length)
    t = w.letters
    hits = [i for i in range(start) if t[i:i + length] == t[start:start + length]]
    assert j == (hits[0] if hits else None)
    assert OccurrenceIndex(w).earliest_occurrence_before(start, length) == j


def test_occurrence_search_on_long_words():
    import random

    rng = random.Random(7)
    w = Word(bytes(rng.randrange(2) for _ in range(2000)), 2)
    idx = OccurrenceIndex(w)
    for _ in range(200):
        s = rng.randrange(2000)
        L = rng.randrange(0, min(12, 2000 - s) + 1)
        assert idx.earliest_occurrence_before(s, L) == earliest_occurrence_before(w, s, L)


def test_strip():
    assert strip_prefix(W("01001"), W("01")) == W("001")
    assert strip_prefix(W("01"), W("0")) == W("1")
    assert strip_suffix(W("010"), W("10")) == W("0")
    assert strip_prefix(W("01"), EPSILON) == W("01")
    with pytest.raises(NotAPrefix):
        strip_prefix(W("01"), W("1"))
    with pytest.raises(NotASuffix):
        strip_suffix(W("01"), W("0"))


def test_apply_morphism_examples():
    assert apply_morphism(FIB, W("010")) == W("01001")
    assert apply_morphism(phi_m(3), W("0102")) == W("0102010")
    assert apply_morphism(THUE_MORSE, EPSILON) == EPSILON
    with pytest.raises(AlphabetMismatch):
        apply_morphism(FIB, W("2"))


@given(words(3), words(3))
def test_morphisms_are_homomorphisms(u, v):
    sigma = phi_m(3)
    assert apply_morphism(sigma, u + v) == apply_morphism(sigma, u) + apply_morphism(sigma, v)


def test_prolongability():
    assert is_prolongable(phi_m(5), 0)
    assert not is_prolongable(FIB, 1)
    erasing = Morphism(["01", ""])
    assert erasing.erasing and not is_prolongable(erasing, 0)
    with pytest.raises(NotProlongable):
        fixed_point_prefix(erasing, 0, 5)


@pytest.mark.parametrize("sigma, n, expected", [
    (FIB, 13, "0100101001001"),
    (phi_m(3), 13, "0102010010201"),
    (THUE_MORSE, 16, "0110100110010110"),
])
def test_fixed_point_prefix_examples(sigma, n, expected):
    assert fixed_point_prefix(sigma, 0, n) == W(expected)


@given(st.integers(1, 400), st.sampled_from([2, 3, 4, 7]))
def test_fixed_point_is_self_consistent(n, m):
    sigma = phi_m(m)
    w = fixed_point_prefix(sigma, 0, n)
    assert len(w) == n
    assert apply_morphism(sigma, w).letters.startswith(w.letters)


def test_parse_morphism():
    sigma = parse_morphism("# the Tribonacci morphism\n0 -> 01\n1 -> 02\n2 -> 0\n")
    assert sigma == phi_m(3)
    named = parse_morphism("a -> ab\nb -> a")
    assert named == FIB
    wide = parse_morphism("\n".join(f"{i} -> 0,{i + 1}" for i in range(11)) + "\n11 -> 0")
    assert wide == phi_m(12)
    for bad in ("", "0 => 1", "0 -> 2", "0 -> 0\n0 -> 1"):
        with pytest.raises(ParseError):
            parse_morphism(bad)


@pytest.mark.parametrize("code, expected", [
    (["01", "02", "0"], True),
    (["0", "01", "10"], False),
    (["0"], True),
    (["0", "1"], True),
    (["01", "10", "0110"], False),
    (["0", "01", "11"], True),
])
def test_is_code_examples(code, expected):
    assert is_code([W(c, 3) for c in code]) is expected


def test_is_code_errors():
    with pytest.raises(EmptyWordInSet):
        is_code([W("0"), EPSILON])
    with pytest.raises(InputTooLarge):
        is_code([Word(bytes(65), 1)])


def _brute_force_unique(code, max_len=8):
    """Two different block sequences with the same concatenation, searched exhaustively."""
    seen = {}
    frontier = [((), b"")]
    while frontier:
        nxt = []
        for seq, text in frontier:
            for i, c in enumerate(code):
                t = text + c
                if len(t) > max_len:
                    continue
                s = seq + (i,)
                if t in seen and seen[t] != s:
                    return False
                seen.setdefault(t, s)
                nxt.append((s, t))
        frontier = nxt
    return True


small_codes = st.lists(st.lists(st.integers(0, 1), min_size=1, max_size=3).map(bytes),
                       min_size=1, max_size=4, unique=True)


@settings(max_examples=150)
@given(small_codes)
def test_is_code_agrees_with_brute_force(code):
    # the brute force only looks at texts of at most 12 letters; that was enough for every drawn set
    assert is_code([Word(c, 2) for c in code]) == _brute_force_unique(code, max_len=12)


@settings(max_examples=150)
@given(small_codes, st.lists(st.lists(st.integers(0, 2), min_size=1, max_size=3).map(bytes), min_size=3, max_size=3))
def test_injective_morphisms_map_codes_to_codes(code, images):
    sigma = Morphism([Word(img, 3) for img in images], 3)
    assume(len(set(images)) == 3 and is_code(sigma.images))  # injective on words
    x = [Word(c, 3) for c in code]
    if is_code(x):
        assert is_code([apply_morphism(sigma, w) for w in x])


def test_mbonacci_blocks_form_a_code():
    for m in range(2, 7):
        assert is_code(phi_m(m).images)
