"""Finite words over small integer alphabets, morphisms and codes.

Letters are the integers ``0 .. alphabet_size - 1`` and a word stores them
as ``bytes``, so alphabets are limited to 256 letters.  Positions are
0-based throughout.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import (
    AlphabetMismatch,
    EmptyWordInSet,
    InputTooLarge,
    NotAPrefix,
    NotASuffix,
    NotProlongable,
    ParseError,
)

MAX_ALPHABET = 256

# desk-scale caps for is_code
CODE_MAX_WORDS = 64
CODE_MAX_LENGTH = 64


class Word:
    """An immutable finite word.

    Equality and hashing look at the letters only; ``alphabet_size`` is
    context used for validation and rendering.
    """

    __slots__ = ("letters", "alphabet_size")

    def __init__(self, letters: bytes | bytearray | Sequence[int] = b"", alphabet_size: Optional[int] = None):
        if not isinstance(letters, bytes):
            try:
                letters = bytes(letters)
            except ValueError as exc:
                raise ValueError(f"letters must lie in [0, {MAX_ALPHABET})") from exc
        top = max(letters) + 1 if letters else 1
        if alphabet_size is None:
            alphabet_size = top
        if not 1 <= alphabet_size <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must lie in [1, {MAX_ALPHABET}], got {alphabet_size}")
        if top > alphabet_size:
            raise ValueError(f"letter {top - 1} outside alphabet of size {alphabet_size}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "alphabet_size", alphabet_size)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str, alphabet_size: Optional[int] = None) -> "Word":
        """Read a digit string (``"0102"``) or comma-separated integers (``"0,11,3"``)."""
        text = text.strip()
        if not text:
            return cls(b"", alphabet_size)
        try:
            if "," in text:
                letters = [int(tok) for tok in text.split(",")]
            else:
                letters = [int(ch) for ch in text if not ch.isspace()]
        except ValueError as exc:
            raise ParseError(f"cannot parse word {text[:40]!r}") from exc
        try:
            return cls(letters, alphabet_size)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word(self.letters[key], self.alphabet_size)
        return self.letters[key]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters, max(self.alphabet_size, other.alphabet_size))

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({render(self)!r}, alphabet_size={self.alphabet_size})"

    def __str__(self) -> str:
        return render(self)

    def with_alphabet(self, alphabet_size: int) -> "Word":
        return Word(self.letters, alphabet_size)


EPSILON = Word(b"", 1)


def concat(words: Iterable[Word], alphabet_size: Optional[int] = None) -> Word:
    words = list(words)
    if alphabet_size is None:
        alphabet_size = max((w.alphabet_size for w in words), default=1)
    return Word(b"".join(w.letters for w in words), alphabet_size)


def render(w: Word) -> str:
    """Digits for alphabets of at most 10 letters, comma-separated integers otherwise."""
    if w.alphabet_size <= 10:
        return w.letters.translate(_DIGITS).decode("ascii")
    return ",".join(str(c) for c in w.letters)


_DIGITS = bytes((48 + i) if i < 10 else 0 for i in range(256))


def reverse(w: Word) -> Word:
    return Word(w.letters[::-1], w.alphabet_size)


def is_palindrome(w: Word) -> bool:
    return w.letters == w.letters[::-1]


def is_factor(u: Word, z: Word) -> bool:
    """True iff ``u`` occurs contiguously in ``z`` (the empty word always does)."""
    return u.letters in z.letters


def occurrences(u: Word, z: Word) -> list[int]:
    """All starting positions of ``u`` in ``z``, overlaps included."""
    pat, text = u.letters, z.letters
    if not pat:
        return list(range(len(text) + 1))
    out = []
    i = text.find(pat)
    while i != -1:
        out.append(i)
        i = text.find(pat, i + 1)
    return out


def earliest_occurrence_before(text: Word, start: int, length: int) -> Optional[int]:
    """Smallest ``j < start`` with ``text[j:j+length] == text[start:start+length]``.

    Reference implementation by direct scan.  The occurrence may overlap the
    window ``[start, start+length)``; only its starting position is
    constrained.  Returns ``None`` when no such ``j`` exists.
    """
    t = text.letters if isinstance(text, Word) else text
    if start + length > len(t) or start < 0 or length < 0:
        raise ValueError("window exceeds the text")
    pat = t[start:start + length]
    for j in range(start):
        if t[j:j + length] == pat:
            return j
    return None


def strip_prefix(z: Word, x: Word) -> Word:
    """Return ``x^{-1} z``."""
    if not z.letters.startswith(x.letters):
        raise NotAPrefix(f"{x} is not a prefix of {z}")
    return Word(z.letters[len(x):], z.alphabet_size)


def strip_suffix(z: Word, y: Word) -> Word:
    """Return ``z y^{-1}``."""
    if not z.letters.endswith(y.letters):
        raise NotASuffix(f"{y} is not a suffix of {z}")
    return Word(z.letters[:len(z) - len(y)], z.alphabet_size)


class Morphism:
    """A morphism given by the images of the letters ``0 .. alphabet_size-1``.

    Images may be empty; such a morphism is erasing and never prolongable.
    """

    __slots__ = ("alphabet_size", "images", "_table")

    def __init__(self, images: Sequence[Word | bytes | str | Sequence[int]], alphabet_size: Optional[int] = None):
        if alphabet_size is None:
            alphabet_size = len(images)
        if len(images) != alphabet_size:
            raise ValueError(f"need one image per letter: {alphabet_size} letters, {len(images)} images")
        imgs = []
        for img in images:
            if isinstance(img, str):
                img = Word.parse(img, alphabet_size)
            elif not isinstance(img, Word):
                img = Word(img, alphabet_size)
            if img.letters and max(img.letters) >= alphabet_size:
                raise ValueError(f"image {img} leaves the alphabet of size {alphabet_size}")
            imgs.append(img.with_alphabet(alphabet_size))
        object.__setattr__(self, "alphabet_size", alphabet_size)
        object.__setattr__(self, "images", tuple(imgs))
        object.__setattr__(self, "_table", [img.letters for img in imgs])

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Morphism) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        maps = ", ".join(f"{a}->{img}" for a, img in enumerate(self.images))
        return f"Morphism({maps})"

    def __call__(self, w: Word) -> Word:
        return apply_morphism(self, w)

    @property
    def erasing(self) -> bool:
        return any(not img.letters for img in self.images)

    def image(self, a: int) -> Word:
        return self.images[a]


def apply_morphism(sigma: Morphism, w: Word) -> Word:
    if w.letters and max(w.letters) >= sigma.alphabet_size:
        raise AlphabetMismatch(f"word over {w.alphabet_size} letters, morphism over {sigma.alphabet_size}")
    return Word(b"".join(map(sigma._table.__getitem__, w.letters)), sigma.alphabet_size)


def is_prolongable(sigma: Morphism, a: int) -> bool:
    if not 0 <= a < sigma.alphabet_size or sigma.erasing:
        return False
    img = sigma.images[a].letters
    return len(img) >= 2 and img[0] == a


def fixed_point_prefix(sigma: Morphism, a: int, n: int) -> Word:
    """First ``n`` letters of the fixed point of ``sigma`` starting with ``a``."""
    if not is_prolongable(sigma, a):
        raise NotProlongable(f"{sigma!r} is not prolongable on {a}")
    table = sigma._table
    out = bytearray(table[a])
    # invariant: out == sigma(out[:done])
    done = 1
    while len(out) < n:
        chunk = bytes(out[done:])
        out += b"".join(map(table.__getitem__, chunk))
        done += len(chunk)
    return Word(bytes(out[:n]), sigma.alphabet_size)


def parse_morphism(text: str) -> Morphism:
    """Parse ``LETTER -> IMAGE`` lines; the order of the lines defines the alphabet.

    Letter names are arbitrary tokens.  Images are read letter by letter, or
    as comma-separated names when they contain a comma.  Blank lines and
    ``#`` comments are ignored.
    """
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ParseError(f"line {lineno}: expected 'LETTER -> IMAGE'")
        lhs, rhs = (part.strip() for part in line.split("->", 1))
        if not lhs:
            raise ParseError(f"line {lineno}: missing letter")
        rules.append((lineno, lhs, rhs))
    if not rules:
        raise ParseError("empty morphism")
    names = {}
    for lineno, lhs, _ in rules:
        if lhs in names:
            raise ParseError(f"line {lineno}: letter {lhs!r} defined twice")
        names[lhs] = len(names)
    images = []
    for lineno, _, rhs in rules:
        tokens = [t.strip() for t in rhs.split(",")] if "," in rhs else [ch for ch in rhs if not ch.isspace()]
        try:
            images.append([names[t] for t in tokens])
        except KeyError as exc:
            raise ParseError(f"line {lineno}: unknown letter {exc.args[0]!r} in image") from exc
    if len(names) > MAX_ALPHABET:
        raise ParseError(f"at most {MAX_ALPHABET} letters supported")
    return Morphism([Word(img, len(names)) for img in images], len(names))


def is_code(words: Iterable[Word], max_words: int = CODE_MAX_WORDS, max_length: int = CODE_MAX_LENGTH) -> bool:
    """Decide unique decodability with the dangling-suffix iteration.

    Every dangling suffix is a suffix of some codeword, so the explored set
    is finite and the search terminates.
    """
    code = set()
    for w in words:
        if not len(w):
            raise EmptyWordInSet("the empty word never belongs to a code")
        code.add(w.letters)
    if len(code) > max_words or max((len(c) for c in code), default=0) > max_length:
        raise InputTooLarge(f"is_code is capped at {max_words} words of length <= {max_length}")

    def dangling(u: bytes):
        for c in code:
            if c.startswith(u):
                yield c[len(u):]
            elif u.startswith(c):
                yield u[len(c):]

    frontier = set()
    for x in code:
        for y in code:
            if x != y and y.startswith(x):
                frontier.add(y[len(x):])
    seen = set(frontier)
    while frontier:
        nxt = set()
        for u in frontier:
            for d in dangling(u):
                if not d:
                    return False
                if d not in seen:
                    seen.add(d)
                    nxt.add(d)
        frontier = nxt
    return True
