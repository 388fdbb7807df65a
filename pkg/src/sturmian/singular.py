"""Singular and adjoining singular words, Melançon's factorization of c_α,
and the decomposition of every conjugate of c_α (and c_{1-α}) for slopes
α = [0;2,(r)] into conjugated images of σ^{j+1}(b).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator, Literal, Optional

from .cf import SturmCF, convergents, type_i_form
from .errors import IndexOutOfRange, UnsupportedSlope
from .generator import build_sigma, build_sigma_hat, characteristic_word, standard_words
from .morphism import BinaryMorphism, E, apply, compose, power, right_conjugate
from .words import WordStream, exchange, strip_suffix

FactorKind = Literal["v", "w", "conj"]


@dataclass(frozen=True)
class Factor:
    """One factor of a decomposition.

    For ``kind == "conj"`` the word is ``(σ^{j+1})_t(b)`` (or the hatted
    analogue on ``a``), where t = -1 stands for v_j itself.
    """

    j: int
    kind: FactorKind
    word: str
    conjugate_index: Optional[int] = None
    letter_arg: str = "b"
    hat: bool = False

    def label(self, unicode: bool = False) -> str:
        if self.kind != "conj":
            return f"{self.kind}_{{{self.j}}}"
        if unicode:
            base = "σ̂" if self.hat else "σ"
        else:
            base = "shat" if self.hat else "s"
        return f"({base}^{self.j + 1})_{{{self.conjugate_index}}}({self.letter_arg})"


def _d(cf: SturmCF, i: int) -> int:
    a = cf.partial_quotient(i)
    return a - 1 if i == 1 else a


def singular_word(cf: SturmCF, n: int) -> str:
    """w_n = a s_n b^{-1} (n odd), b s_n a^{-1} (n even); w_{-2} = ε,
    w_{-1} = a, w_0 = b."""
    form = type_i_form(cf)
    if n < -2:
        raise IndexOutOfRange(f"singular words start at w_{{-2}}, got w_{n}")
    seeds = {-2: "", -1: "a", 0: "b"}
    if n in seeds:
        return seeds[n]
    s_n = standard_words(form, n)[-1]
    if n % 2:
        return "a" + strip_suffix(s_n, "b")
    return "b" + strip_suffix(s_n, "a")


def adjoining_singular(cf: SturmCF, n: int) -> str:
    """v_n = a s_{n+1}^{d_{n+2}-1} s_n b^{-1} (n odd), with a and b swapped
    for n even; v_{-2} = ε."""
    form = type_i_form(cf)
    if n < -2:
        raise IndexOutOfRange(f"adjoining singular words start at v_{{-2}}, got v_{n}")
    if n == -2:
        return ""
    s = standard_words(form, n + 1)
    s_n1, s_n = s[-1], s[-2]
    body = s_n1 * (_d(form, n + 2) - 1) + s_n
    if n % 2:
        return "a" + strip_suffix(body, "b")
    return "b" + strip_suffix(body, "a")


@dataclass(frozen=True)
class MelanconFactorization:
    """c_α = ∏_{j>=-1} v_j (``flat``) = ∏_{j>=-1} (v_{2j} w_{2j+1})^{d_{2j+3}}
    (``grouped``, with each power written out).

    ``flat`` runs through v_J; ``grouped`` through the last whole group
    inside that range, so its concatenation is a prefix of the flat one and
    equal to it when J is odd.
    """

    flat: tuple[Factor, ...]
    grouped: tuple[Factor, ...]

    @property
    def flat_word(self) -> str:
        return "".join(f.word for f in self.flat)

    @property
    def grouped_word(self) -> str:
        return "".join(f.word for f in self.grouped)


def melancon_factors(cf: SturmCF, J: int) -> MelanconFactorization:
    form = type_i_form(cf)
    flat = tuple(Factor(j, "v", adjoining_singular(form, j), -1) for j in range(-1, J + 1))
    grouped: list[Factor] = []
    for j in range(-1, (J - 1) // 2 + 1):
        v = Factor(2 * j, "v", adjoining_singular(form, 2 * j), -1)
        w = Factor(2 * j + 1, "w", singular_word(form, 2 * j + 1))
        grouped.extend([v, w] * _d(form, 2 * j + 3))
    return MelanconFactorization(flat, tuple(grouped))


# ---------------------------------------------------------------------------
# conjugates of c_α for α = [0;2,(r)]


def two_r_form(cf: SturmCF) -> tuple[SturmCF, int]:
    """Return ([0;2,(r)], r) or raise UnsupportedSlope."""
    form = cf.aligned(1)
    if form is None or form.preperiod != (2,) or len(form.period) != 1:
        raise UnsupportedSlope(
            f"[{cf}] is not of the form [0;2,(r)]; no decomposition of this kind "
            "is available when d_1 >= 2 or the period is longer than one term"
        )
    return form, form.period[0]


def _denominators(cf: SturmCF, upto: int) -> list[int]:
    return convergents(cf, upto)[1]


def locate(cf: SturmCF, k: int) -> tuple[int, int]:
    """(m, p) with q_m - 1 <= k <= q_{m+1} - 2 and p = q_{m+1} - k."""
    form, _ = two_r_form(cf)
    if k < 0:
        raise IndexOutOfRange(f"negative shift {k}")
    m = 0
    q = _denominators(form, 1)
    while not (q[m] - 1 <= k <= q[m + 1] - 2):
        m += 1
        q = _denominators(form, m + 1)
    return m, q[m + 1] - k


@dataclass(frozen=True)
class RemovalForm:
    """u^{-1} v_{m-1} v_m v_{m+1} ..., with u the removed prefix of v_{m-1}."""

    cf: SturmCF
    k: int
    m: int
    p: int
    u: str

    def iter_factors(self) -> Iterator[Factor]:
        j = self.m - 1
        while True:
            yield Factor(j, "v", adjoining_singular(self.cf, j), -1)
            j += 1

    def factors(self, count: int) -> list[Factor]:
        it = self.iter_factors()
        return [next(it) for _ in range(count)]

    def stream(self) -> WordStream:
        def chunks():
            it = self.iter_factors()
            yield next(it).word[len(self.u):]
            for f in it:
                yield f.word

        return WordStream(chunks())


def removal_form(cf: SturmCF, k: int) -> RemovalForm:
    form, _ = two_r_form(cf)
    m, p = locate(form, k)
    q = _denominators(form, m + 1)
    size = q[m + 1] - q[m] + 1 - p
    u = adjoining_singular(form, m - 1)[:size]
    return RemovalForm(form, k, m, p, u)


class ConjugateDecomposition:
    """(σ^m)_k(c_α) = ∏_{j>=m-1} (σ^{j+1})_t(b), t = q_{m+1} - q_m - p.

    With ``hat=True`` this is the analogue for c_{1-α} = E(c_α): σ̂ replaces
    σ and the letter argument is a.  Factors are produced on demand; the
    first ``depth + 1`` of them are available as :attr:`factors`.
    """

    def __init__(self, cf: SturmCF, k: int, depth: int, hat: bool = False):
        form, r = two_r_form(cf)
        self.cf = form
        self.r = r
        self.k = k
        self.hat = hat
        self.m, self.p = locate(form, k)
        q = _denominators(form, self.m + 1)
        self.conj_index = q[self.m + 1] - q[self.m] - self.p
        self.first_index = self.m - 1
        self.u = adjoining_singular(form, self.m - 1)[: self.conj_index + 1]
        self.u_hat = self.u[1:]
        if hat:
            self.u, self.u_hat = exchange(self.u), exchange(self.u_hat)
        self.morphism = build_sigma_hat(form) if hat else build_sigma(form)
        self.letter = "a" if hat else "b"
        self._cache: list[Factor] = []
        self._power: BinaryMorphism | None = None
        self._lock = threading.Lock()
        self.depth = depth
        self.factors: list[Factor] = self.extend(depth + 1)

    def _next(self) -> Factor:
        j = self.first_index + len(self._cache)
        if self._power is None:
            self._power = power(self.morphism, j + 1)
        else:
            self._power = compose(self.morphism, self._power)
        t = self.conj_index
        if t == -1:
            word = adjoining_singular(self.cf, j)
            if self.hat:
                word = exchange(word)
        else:
            word = apply(right_conjugate(self._power, t), self.letter)
        return Factor(j, "conj", word, t, self.letter, self.hat)

    def extend(self, count: int) -> list[Factor]:
        """The first ``count`` factors, computing more if needed."""
        with self._lock:
            while len(self._cache) < count:
                self._cache.append(self._next())
            return self._cache[:count]

    def iter_factors(self) -> Iterator[Factor]:
        i = 0
        while True:
            i += 1
            yield self.extend(i)[-1]

    def stream(self) -> WordStream:
        return WordStream(f.word for f in self.iter_factors())

    def target(self) -> WordStream:
        """The conjugate this decomposition claims to equal, computed directly."""
        c = characteristic_word(self.cf)
        if self.hat:
            c = apply(E, c)
        return WordStream(c.blocks(start=self.k)) if self.k else c

    def word(self) -> str:
        return "".join(f.word for f in self.factors)

    def __repr__(self) -> str:
        return (
            f"ConjugateDecomposition(cf={self.cf}, k={self.k}, m={self.m}, "
            f"p={self.p}, t={self.conj_index}, hat={self.hat})"
        )


def conjugate_decomposition(cf: SturmCF, k: int, depth: int) -> ConjugateDecomposition:
    return ConjugateDecomposition(cf, k, depth)


def conjugate_decomposition_hat(cf: SturmCF, k: int, depth: int) -> ConjugateDecomposition:
    return ConjugateDecomposition(cf, k, depth, hat=True)


@dataclass(frozen=True)
class ExchangeCheck:
    """Comparison of (EψE)_k with Eψ_kE."""

    k: int
    lhs: BinaryMorphism
    rhs: BinaryMorphism

    @property
    def holds(self) -> bool:
        return self.lhs.same_images(self.rhs)


def exchange_conjugation(psi: BinaryMorphism, k: int) -> ExchangeCheck:
    lhs = right_conjugate(compose(E, compose(psi, E)), k)
    inner = right_conjugate(psi, k)
    rhs = BinaryMorphism(exchange(inner.image_b), exchange(inner.image_a))
    return ExchangeCheck(k, lhs, rhs)
