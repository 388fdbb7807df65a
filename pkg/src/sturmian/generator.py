"""Standard sequences, characteristic Sturmian words, the mechanical-word
oracle, and the morphisms σ, σ̂ fixing c_α and c_{1-α}."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence, Union

from .cf import QuadraticSurd, SturmCF, ceil_multiple, floor_multiple, type_i_form
from .errors import CertificateMismatch, DirectiveTooShort, NotTypeI
from .morphism import BinaryMorphism, E, apply, compose, power
from .words import WordStream, exchange


@dataclass(frozen=True)
class DirectiveSequence:
    """(d_1, d_2, ...) with α = [0; 1+d_1, d_2, d_3, ...].

    Either backed by a continued fraction (infinite, periodic) or by an
    explicit finite list.
    """

    entries: tuple[int, ...]
    cf: Optional[SturmCF] = None

    @classmethod
    def from_cf(cls, cf: SturmCF) -> "DirectiveSequence":
        return cls((), cf)

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "DirectiveSequence":
        entries = tuple(int(d) for d in entries)
        if not entries:
            raise DirectiveTooShort("empty directive sequence")
        if entries[0] < 0 or any(d < 1 for d in entries[1:]):
            raise ValueError("need d_1 >= 0 and d_i >= 1 for i >= 2")
        return cls(entries)

    @property
    def finite(self) -> bool:
        return self.cf is None

    def __len__(self) -> int:
        if self.cf is not None:
            raise TypeError("CF-backed directive sequences are infinite")
        return len(self.entries)

    def d(self, i: int) -> int:
        if i < 1:
            raise IndexError(f"directive entries start at d_1, got d_{i}")
        if self.cf is not None:
            a = self.cf.partial_quotient(i)
            return a - 1 if i == 1 else a
        if i > len(self.entries):
            raise DirectiveTooShort(f"d_{i} requested, only {len(self.entries)} entries given")
        return self.entries[i - 1]


Directive = Union[SturmCF, DirectiveSequence]


def as_directive(source: Directive) -> DirectiveSequence:
    if isinstance(source, SturmCF):
        return DirectiveSequence.from_cf(source)
    return source


def standard_words(source: Directive, n: int) -> list[str]:
    """[s_{-1}, s_0, ..., s_n]."""
    dirseq = as_directive(source)
    words = ["b", "a"]
    for i in range(1, n + 1):
        words.append(words[-1] * dirseq.d(i) + words[-2])
    return words[: n + 2]


def standard_word(source: Directive, n: int) -> str:
    """s_n: s_{-1} = b, s_0 = a, s_n = s_{n-1}^{d_n} s_{n-2}."""
    if n < -1:
        raise IndexError(f"standard words start at s_{{-1}}, got s_{n}")
    return standard_words(source, n)[n + 1]


def characteristic_word(source: Directive) -> WordStream:
    """c_α = lim s_n, built from the standard-sequence recurrence."""
    if isinstance(source, SturmCF):
        type_i_form(source)
    dirseq = as_directive(source)
    if dirseq.d(1) < 1:
        raise NotTypeI("characteristic_word needs d_1 >= 1; use E-duality for 1 - α")

    def chunks():
        prev, cur = "b", "a"
        yield cur
        i = 1
        while True:
            nxt = cur * dirseq.d(i) + prev
            yield nxt[len(cur):]
            prev, cur = cur, nxt
            i += 1

    return WordStream(chunks())


def complement_word(source: Directive) -> WordStream:
    """c_{1-α} = E(c_α)."""
    return apply(E, characteristic_word(source))


def mechanical_word(
    alpha: QuadraticSurd,
    rho: Fraction | int = 0,
    variant: Literal["floor", "ceiling"] = "floor",
) -> WordStream:
    """s_{α,ρ} (floor) or s'_{α,ρ} (ceiling), computed exactly."""
    if variant not in ("floor", "ceiling"):
        raise ValueError(f"unknown variant {variant!r}")
    rho = Fraction(rho)
    rounding = floor_multiple if variant == "floor" else ceil_multiple

    def letter(n: int) -> str:
        return "a" if rounding(alpha, n + 1, rho) - rounding(alpha, n, rho) == 0 else "b"

    return WordStream.from_function(letter)


@dataclass(frozen=True)
class SturmData:
    """Directive entries d_1..d_n of a type-(i) Sturm number."""

    cf: SturmCF
    d: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def d1(self) -> int:
        return self.d[0]

    @property
    def dn(self) -> int:
        return self.d[-1]


def sturm_data(cf: SturmCF) -> SturmData:
    form = type_i_form(cf)
    return SturmData(form, (form.preperiod[0] - 1,) + form.period)


def crisp_certificate(cf: SturmCF) -> str:
    """(φE)^{d_1} E (φE)^{d_2} E ... (φE)^{d_{n-1}} E (φE)^{d_n - d_1}."""
    data = sturm_data(cf)
    parts = ["pE" * d + "E" for d in data.d[:-1]]
    parts.append("pE" * (data.dn - data.d1))
    return "".join(parts)


def build_sigma(cf: SturmCF) -> BinaryMorphism:
    """σ: a -> s_{n-1}, b -> s_{n-1}^{d_n - d_1} s_{n-2}, the standard
    morphism with fixed point c_α."""
    data = sturm_data(cf)
    s = standard_words(data.cf, data.n - 1)
    s_n1, s_n2 = s[data.n], s[data.n - 1]
    image_a, image_b = s_n1, s_n1 * (data.dn - data.d1) + s_n2
    cert = crisp_certificate(cf)
    sigma = BinaryMorphism.from_certificate(cert)
    if (sigma.image_a, sigma.image_b) != (image_a, image_b):
        raise CertificateMismatch(
            f"certificate {cert} yields {sigma}, expected a->{image_a};b->{image_b}"
        )
    return sigma


def build_sigma_hat(cf: SturmCF) -> BinaryMorphism:
    """σ̂ = EσE, whose fixed point from b is c_{1-α}."""
    data = sturm_data(cf)
    sigma_hat = compose(E, compose(build_sigma(cf), E))
    # display form: a -> ŝ_n^{d_n - d_1} ŝ_{n-1}, b -> ŝ_n with ŝ_n = E(s_{n-1})
    s = standard_words(data.cf, data.n - 1)
    hat_n, hat_n1 = exchange(s[data.n]), exchange(s[data.n - 1])
    expected = (hat_n * (data.dn - data.d1) + hat_n1, hat_n)
    if (sigma_hat.image_a, sigma_hat.image_b) != expected:
        raise CertificateMismatch(f"EσE = {sigma_hat} disagrees with a->{expected[0]};b->{expected[1]}")
    return sigma_hat


def sigma_shifts_standard(cf: SturmCF, k: int, m: int) -> bool:
    """Check σ^m(s_k) = s_{k + m(n-1)}."""
    data = sturm_data(cf)
    sigma_m = power(build_sigma(cf), m)
    target = k + m * (data.n - 1)
    return apply(sigma_m, standard_word(data.cf, k)) == standard_word(data.cf, target)
