"""Morphisms of {a, b}*: composition, powers, fixed points and right
conjugation of standard morphisms.

A certificate is a word over ``E`` and ``p`` (for φ) read as a composition
written left to right, the leftmost factor applied last: ``"pE"`` is φ∘E.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, overload

from .errors import (
    CertificateMismatch,
    IndexOutOfRange,
    NoCertificate,
    NoCommonPrefix,
    NotProlongable,
    ParseError,
)
from .words import WordStream, parse_word, show

_MORPHISM_RE = re.compile(r"^\s*a\s*->\s*(?P<a>[ab]*|ε)\s*;\s*b\s*->\s*(?P<b>[ab]*|ε)\s*$")


@dataclass(frozen=True)
class BinaryMorphism:
    image_a: str
    image_b: str
    certificate: Optional[str] = None

    def __post_init__(self):
        if self.certificate is not None:
            if set(self.certificate) - {"E", "p"}:
                raise ParseError(f"certificate must be a word over {{E, p}}: {self.certificate!r}")
            a, b = _evaluate(self.certificate)
            if (a, b) != (self.image_a, self.image_b):
                raise CertificateMismatch(
                    f"certificate {self.certificate!r} gives a->{a};b->{b}, "
                    f"not a->{self.image_a};b->{self.image_b}"
                )

    def image(self, c: str) -> str:
        return self.image_a if c == "a" else self.image_b

    def __call__(self, x):
        return apply(self, x)

    def __str__(self) -> str:
        return f"a->{show(self.image_a)};b->{show(self.image_b)}"

    def same_images(self, other: "BinaryMorphism") -> bool:
        return (self.image_a, self.image_b) == (other.image_a, other.image_b)

    @classmethod
    def parse(cls, text: str) -> "BinaryMorphism":
        """``a->W1;b->W2``."""
        m = _MORPHISM_RE.match(text)
        if m is None:
            raise ParseError(f"bad morphism {text!r}; expected 'a->W1;b->W2'")
        return cls(parse_word(m.group("a")), parse_word(m.group("b")))

    @classmethod
    def from_certificate(cls, cert: str) -> "BinaryMorphism":
        cert = cert.strip()
        if set(cert) - {"E", "p"}:
            raise ParseError(f"certificate must be a word over {{E, p}}: {cert!r}")
        a, b = _evaluate(cert)
        return cls(a, b, cert)


def _evaluate(cert: str) -> tuple[str, str]:
    a, b = "a", "b"
    # rightmost generator is applied first
    for g in reversed(cert):
        if g == "E":
            a, b = _swap(a), _swap(b)
        else:
            a, b = _phi(a), _phi(b)
    return a, b


def _swap(w: str) -> str:
    return w.translate(str.maketrans("ab", "ba"))


def _phi(w: str) -> str:
    return "".join("ab" if c == "a" else "a" for c in w)


IDENTITY = BinaryMorphism("a", "b", "")
E = BinaryMorphism("b", "a", "E")
PHI = BinaryMorphism("ab", "a", "p")
PHI_TILDE = BinaryMorphism("ba", "a")

_GENERATORS = {"E": E, "φ": PHI, "phi": PHI, "p": PHI, "φ̃": PHI_TILDE, "phi~": PHI_TILDE}


def generator(name: str) -> BinaryMorphism:
    """E, φ or φ̃ by name (``phi`` / ``phi~`` are accepted too)."""
    try:
        return _GENERATORS[name]
    except KeyError:
        raise ParseError(f"unknown generator {name!r}") from None


@overload
def apply(psi: BinaryMorphism, x: str) -> str: ...
@overload
def apply(psi: BinaryMorphism, x: WordStream) -> WordStream: ...


def apply(psi, x):
    """Letterwise image of a finite or infinite word."""
    if isinstance(x, WordStream):
        return WordStream(_image_blocks(psi, x))
    return "".join(psi.image_a if c == "a" else psi.image_b for c in x)


def _image_blocks(psi: BinaryMorphism, x: WordStream):
    for block in x.blocks():
        yield apply(psi, block)


def compose(psi: BinaryMorphism, xi: BinaryMorphism) -> BinaryMorphism:
    """psi∘xi, i.e. xi is applied first."""
    cert = None
    if psi.certificate is not None and xi.certificate is not None:
        cert = psi.certificate + xi.certificate
    return BinaryMorphism(apply(psi, xi.image_a), apply(psi, xi.image_b), cert)


def power(psi: BinaryMorphism, m: int) -> BinaryMorphism:
    if m < 0:
        raise IndexOutOfRange(f"negative power {m}")
    result = IDENTITY if psi.certificate is not None else BinaryMorphism("a", "b")
    for _ in range(m):
        result = compose(psi, result)
    return result


def exchange_conjugate(psi: BinaryMorphism) -> BinaryMorphism:
    """E∘psi∘E."""
    return compose(E, compose(psi, E))


def is_prolongable(psi: BinaryMorphism, c: str) -> bool:
    img = psi.image(c)
    return len(img) >= 2 and img[0] == c


def fixed_point(psi: BinaryMorphism, c: str) -> WordStream:
    """psi^ω(c) = lim psi^n(c)."""
    if not is_prolongable(psi, c):
        raise NotProlongable(f"{psi} is not prolongable on {c}")

    def chunks():
        # x = psi(x): the image of x_i is appended once x_i is known, which
        # non-erasing prolongability guarantees.
        text = psi.image(c)
        yield text
        i = 1
        while True:
            block = text[i : 2 * i]
            out = apply(psi, block)
            if not out:
                raise NotProlongable(f"{psi} erases the tail of its fixed point")
            text += out
            i += len(block)
            yield out

    return WordStream(chunks())


def common_prefix_word(psi: BinaryMorphism, k: int) -> str:
    """The length-k common prefix of psi(a)psi(a)... and psi(b)psi(b)..."""
    ia, ib = psi.image_a, psi.image_b
    if not ia or not ib:
        raise NoCommonPrefix(f"{psi} is erasing")
    ua = (ia * (k // len(ia) + 1))[:k]
    ub = (ib * (k // len(ib) + 1))[:k]
    if ua != ub:
        raise NoCommonPrefix(f"images of {psi} share no common prefix of length {k}")
    return ua


def right_conjugate(psi: BinaryMorphism, k: int) -> BinaryMorphism:
    """psi_k, the morphism with psi(w)u = u psi_k(w) for all w, |u| = k."""
    if psi.certificate is None:
        raise NoCertificate("right conjugation needs a standard morphism with a certificate")
    top = len(psi.image_a) + len(psi.image_b) - 2
    if not 0 <= k <= top:
        raise IndexOutOfRange(f"right conjugate index {k} outside 0..{top}")
    u = common_prefix_word(psi, k)
    return BinaryMorphism((psi.image_a + u)[k:], (psi.image_b + u)[k:])


_REDUCED_BAD = (re.compile(r"(Ep)+"), re.compile(r"(pE)+"))


def reduce_certificate(cert: str) -> str:
    """Cancel EE pairs."""
    out: list[str] = []
    for g in cert:
        if g == "E" and out and out[-1] == "E":
            out.pop()
        else:
            out.append(g)
    return "".join(out)


def generates_infinite_word(psi: BinaryMorphism) -> bool:
    """Whether the standard morphism psi lies in
    {φ, Eφ, φE, EφE}^+ minus ({Eφ}^+ ∪ {φE}^+)."""
    if psi.certificate is None:
        raise NoCertificate("generation criterion needs a certificate")
    w = reduce_certificate(psi.certificate)
    # any reduced word with at least one φ factors over {φ, Eφ, φE, EφE}
    if "p" not in w:
        return False
    return not any(rx.fullmatch(w) for rx in _REDUCED_BAD)
