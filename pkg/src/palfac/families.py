"""Named generators of infinite words, materialized one prefix at a time."""

from __future__ import annotations

import itertools
import re
import threading
from typing import Callable, Iterable, Iterator, Optional

from .errors import GenerationFailed, ParseError
from .mbonacci import phi_m
from .words import Morphism, Word, fixed_point_prefix, is_prolongable


class FamilyHandle:
    """Base class: ``prefix(n)`` returns the first n letters.

    Prefixes are cached and grown geometrically, so ``prefix(n)`` is always
    a prefix of ``prefix(n + k)``.
    """

    kind = "abstract"
    alphabet_size = 2

    def __init__(self):
        self._cache = b""
        self._lock = threading.Lock()

    def _generate(self, n: int) -> bytes:
        raise NotImplementedError

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        with self._lock:
            if len(self._cache) < n:
                target = max(n, 2 * len(self._cache))
                data = self._generate(target)
                if len(data) < n:
                    raise GenerationFailed(f"{self} produced {len(data)} letters, {n} requested")
                self._cache = data
            return Word(self._cache[:n], self.alphabet_size)

    def describe(self) -> dict:
        return {"kind": self.kind}

    def __repr__(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.describe().items() if k != "kind")
        return f"{self.kind}({params})"


class MorphicFamily(FamilyHandle):
    """Fixed point of a morphism prolongable on ``start``."""

    kind = "custom-morphism"

    def __init__(self, sigma: Morphism, start: int = 0):
        super().__init__()
        if not is_prolongable(sigma, start):
            from .errors import NotProlongable

            raise NotProlongable(f"{sigma!r} is not prolongable on {start}")
        self.sigma = sigma
        self.start = start
        self.alphabet_size = sigma.alphabet_size

    def _generate(self, n: int) -> bytes:
        return fixed_point_prefix(self.sigma, self.start, n).letters

    def describe(self) -> dict:
        return {"kind": self.kind, "morphism": repr(self.sigma), "start": self.start}


class MBonacci(MorphicFamily):
    kind = "mbonacci"

    def __init__(self, m: int):
        super().__init__(phi_m(m), 0)
        self.m = m

    def describe(self) -> dict:
        return {"kind": self.kind, "m": self.m}


class Fibonacci(MBonacci):
    kind = "fibonacci"

    def __init__(self):
        super().__init__(2)

    def describe(self) -> dict:
        return {"kind": self.kind}


THUE_MORSE = Morphism([Word(b"\x00\x01", 2), Word(b"\x01\x00", 2)], 2)


class ThueMorse(MorphicFamily):
    kind = "thue-morse"

    def __init__(self):
        super().__init__(THUE_MORSE, 0)

    def describe(self) -> dict:
        return {"kind": self.kind}


class BlockFamily(FamilyHandle):
    """Concatenation of the blocks yielded by ``blocks()`` (a fresh iterator each call)."""

    kind = "explicit-blocks"

    def __init__(self, blocks: Callable[[], Iterable[Word]], alphabet_size: int, label: str = "custom"):
        super().__init__()
        self.blocks = blocks
        self.alphabet_size = alphabet_size
        self.label = label

    def _generate(self, n: int) -> bytes:
        out = bytearray()
        for block in self.blocks():
            out += block.letters
            if len(out) >= n:
                break
        return bytes(out[:n])

    def describe(self) -> dict:
        return {"kind": self.kind, "blocks": self.label}


_TOKEN = re.compile(r"(\d+)(\^k)?")


def parse_block_template(spec: str) -> BlockFamily:
    """``"0^k 1^k"`` means the blocks 0^k 1^k for k = 1, 2, 3, ...

    A template is a sequence of letters, each optionally raised to the
    running exponent ``^k``; whitespace is ignored.
    """
    text = re.sub(r"\s+", "", spec)
    pieces: list[tuple[int, bool]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad block template {spec!r} at {text[pos:]!r}")
        digits, power = m.group(1), m.group(2)
        if power:
            pieces.append((int(digits), True))
        else:
            pieces.extend((int(ch), False) for ch in digits)
        pos = m.end()
    if not pieces or not any(p for _, p in pieces):
        raise ParseError(f"block template {spec!r} needs at least one '^k' piece")
    size = max(a for a, _ in pieces) + 1
    if size > 256:
        raise ParseError("letters must be below 256")

    def blocks() -> Iterator[Word]:
        for k in itertools.count(1):
            yield Word(b"".join(bytes((a,)) * (k if p else 1) for a, p in pieces), size)

    return BlockFamily(blocks, max(size, 2), label=spec.strip())


def staircase() -> BlockFamily:
    """The word 0 1 0^2 1^2 0^3 1^3 ..."""
    return parse_block_template("0^k1^k")


def make_family(kind: str, m: Optional[int] = None, morphism: Optional[Morphism] = None,
                blocks: Optional[str] = None) -> FamilyHandle:
    kind = kind.lower()
    if kind in ("fibonacci", "fib"):
        return Fibonacci()
    if kind == "mbonacci":
        if m is None:
            raise ValueError("mbonacci needs m")
        return MBonacci(m)
    if kind in ("thue-morse", "thuemorse", "tm"):
        return ThueMorse()
    if kind in ("custom", "custom-morphism", "morphism"):
        if morphism is None:
            raise ValueError("custom-morphism needs a morphism")
        return MorphicFamily(morphism, 0)
    if kind in ("blocks", "explicit-blocks"):
        return parse_block_template(blocks) if blocks else staircase()
    raise ValueError(f"unknown family {kind!r}")
