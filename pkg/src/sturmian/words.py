"""Finite and infinite words over the alphabet {a, b}.

Finite words are plain ``str`` objects made of the characters ``'a'`` and
``'b'``; the empty string is the empty word.  Infinite words are
:class:`WordStream` objects, which are only ever observed through their
prefixes.
"""

from __future__ import annotations

import threading
from itertools import chain
from typing import Callable, Iterable, Iterator, Literal, Union

from .errors import IndexOutOfRange, NotAPrefix, NotASuffix, ParseError

Letter = Literal["a", "b"]
ALPHABET: tuple[str, str] = ("a", "b")
EMPTY = ""

_SWAP = str.maketrans("ab", "ba")


def parse_word(text: str) -> str:
    """Validate a word given as text; ``"ε"`` and ``""`` both mean the empty word."""
    text = text.strip()
    if text in ("ε", ""):
        return EMPTY
    bad = set(text) - set(ALPHABET)
    if bad:
        raise ParseError(f"not a word over {{a,b}}: {text!r}")
    return text


def show(w: str, machine: bool = False) -> str:
    if w:
        return w
    return "" if machine else "ε"


def exchange(w: str) -> str:
    """Letter exchange a <-> b."""
    return w.translate(_SWAP)


class WordStream:
    """A lazily computed infinite word.

    Built from an iterable of finite chunks whose concatenation is the word.
    Chunks are pulled on demand and cached, so repeated calls to
    :meth:`prefix` agree and are prefix-monotone.
    """

    def __init__(self, chunks: Iterable[str]):
        self._source: Iterator[str] = iter(chunks)
        self._parts: list[str] = []
        self._length = 0
        self._joined = ""
        self._lock = threading.Lock()

    def _fill(self, n: int) -> None:
        while self._length < n:
            try:
                chunk = next(self._source)
            except StopIteration:
                raise IndexOutOfRange(
                    f"stream ended after {self._length} letters, {n} requested"
                ) from None
            if chunk:
                self._parts.append(chunk)
                self._length += len(chunk)

    def prefix(self, n: int) -> str:
        """The first ``n`` letters."""
        if n < 0:
            raise IndexOutOfRange(f"negative prefix length {n}")
        with self._lock:
            if len(self._joined) < n:
                self._fill(n)
                self._joined = "".join(self._parts)
                self._parts = [self._joined]
            return self._joined[:n]

    def blocks(self, start: int = 0, first: int = 64) -> Iterator[str]:
        """Consecutive nonempty blocks of the word from position ``start`` on,
        doubling in size."""
        lo, hi = start, start + max(first, 1)
        while True:
            yield self.prefix(hi)[lo:]
            lo, hi = hi, 2 * hi

    def letters(self) -> Iterator[str]:
        for block in self.blocks():
            yield from block

    def __repr__(self) -> str:
        return f"WordStream({self.prefix(24)}...)"

    @classmethod
    def from_function(cls, fn: Callable[[int], str]) -> "WordStream":
        """Stream whose letter at position ``i`` is ``fn(i)``."""

        def gen() -> Iterator[str]:
            i, size = 0, 64
            while True:
                yield "".join(fn(j) for j in range(i, i + size))
                i += size
                size *= 2

        return cls(gen())


Word = Union[str, WordStream]


def concat(u: str, v: str) -> str:
    return u + v


def prepend(u: str, x: WordStream) -> WordStream:
    """The infinite word u·x."""
    return WordStream(chain([u], x.blocks()))


def strip_prefix(u: str, x: Word) -> Word:
    """u^{-1}x, for a finite or infinite word x."""
    if isinstance(x, WordStream):
        if x.prefix(len(u)) != u:
            raise NotAPrefix(f"{show(u)} is not a prefix of {x!r}")
        return shift(x, len(u))
    if not x.startswith(u):
        raise NotAPrefix(f"{show(u)} is not a prefix of {show(x)}")
    return x[len(u):]


def strip_suffix(w: str, v: str) -> str:
    """wv^{-1}."""
    if not w.endswith(v):
        raise NotASuffix(f"{show(v)} is not a suffix of {show(w)}")
    return w[: len(w) - len(v)]


def conjugate(w: str, k: int) -> str:
    """The k-th conjugate vu of w = uv, |u| = k."""
    if not 0 <= k <= len(w):
        raise IndexOutOfRange(f"conjugate index {k} outside 0..{len(w)}")
    return w[k:] + w[:k]


def shift(x: WordStream, k: int) -> WordStream:
    """The k-th conjugate of an infinite word: drop its first k letters."""
    if k < 0:
        raise IndexOutOfRange(f"negative shift {k}")
    if k == 0:
        return x
    return WordStream(x.blocks(start=k))


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def distinct_factors(w: str, n: int) -> set[str]:
    """All length-n blocks occurring in the finite word w."""
    if not 0 <= n <= len(w):
        raise IndexOutOfRange(f"factor length {n} outside 0..{len(w)}")
    return {w[i : i + n] for i in range(len(w) - n + 1)}
