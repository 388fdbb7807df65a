"""Eventually periodic continued fractions [0; a_1, a_2, ...] and the exact
quadratic irrationals they denote.

Text syntax: ``0;a1,a2,...,(b1,...,bm)``, e.g. ``0;2,(3)`` or ``0;(2)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .errors import NotTypeI, ParseError

SturmType = Literal["type-i", "type-ii", "not-sturm"]

_CF_RE = re.compile(r"^\s*\[?\s*0\s*;\s*(?P<pre>(?:\d+\s*,\s*)*)\(\s*(?P<per>\d+(?:\s*,\s*\d+)*)\s*\)\s*\]?\s*$")


@dataclass(frozen=True)
class Convergent:
    n: int
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass(frozen=True)
class SturmCF:
    """α = [0; preperiod, (period)] with the period repeated forever."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(a) for a in self.preperiod))
        object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        if not self.period:
            raise ParseError("period must be nonempty (α irrational)")
        if any(a < 1 for a in self.preperiod + self.period):
            raise ParseError("partial quotients must be positive integers")

    @classmethod
    def parse(cls, text: str) -> "SturmCF":
        m = _CF_RE.match(text)
        if m is None:
            raise ParseError(f"bad continued fraction {text!r}; expected e.g. '0;2,(3)'")
        pre = [int(t) for t in m.group("pre").replace(" ", "").split(",") if t]
        per = [int(t) for t in m.group("per").replace(" ", "").split(",")]
        return cls(tuple(pre), tuple(per))

    def __str__(self) -> str:
        head = "".join(f"{a}," for a in self.preperiod)
        return f"0;{head}({','.join(map(str, self.period))})"

    def partial_quotient(self, i: int) -> int:
        """a_i, i >= 1, with the period extended indefinitely."""
        if i < 1:
            raise IndexError(f"partial quotients start at a_1, got a_{i}")
        k = len(self.preperiod)
        if i <= k:
            return self.preperiod[i - 1]
        return self.period[(i - k - 1) % len(self.period)]

    def convergent(self, n: int) -> Convergent:
        p, q = convergents(self, n)
        return Convergent(n, p[n], q[n])

    def minimal(self) -> "SturmCF":
        """Same number, shortest preperiod and primitive period."""
        per = self.period
        for size in range(1, len(per) + 1):
            if len(per) % size == 0 and per[:size] * (len(per) // size) == per:
                per = per[:size]
                break
        pre = list(self.preperiod)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = per[-1:] + per[:-1]
        return SturmCF(tuple(pre), per)

    def aligned(self, prelen: int) -> Optional["SturmCF"]:
        """Rewrite with a preperiod of exactly ``prelen`` terms and primitive
        period, or None when the expansion needs a longer preperiod."""
        mini = self.minimal()
        if len(mini.preperiod) > prelen:
            return None
        j = prelen - len(mini.preperiod)
        pre = tuple(mini.partial_quotient(i) for i in range(1, prelen + 1))
        r = j % len(mini.period)
        return SturmCF(pre, mini.period[r:] + mini.period[:r])

    def value(self) -> "QuadraticSurd":
        return surd_value(self)


def convergents(cf: SturmCF, n: int) -> tuple[list[int], list[int]]:
    """Numerators and denominators p_0..p_n, q_0..q_n."""
    if n < 0:
        raise IndexError("convergents are indexed from 0")
    p, q = [0], [1]
    p_prev, q_prev = 1, 0  # p_{-1}, q_{-1}
    for i in range(1, n + 1):
        a = cf.partial_quotient(i)
        p_new, q_new = a * p[-1] + p_prev, a * q[-1] + q_prev
        p_prev, q_prev = p[-1], q[-1]
        p.append(p_new)
        q.append(q_new)
    return p, q


def classify(cf: SturmCF) -> SturmType:
    one = cf.aligned(1)
    if one is not None:
        d1 = one.preperiod[0] - 1
        if d1 >= 1 and one.period[-1] >= d1:
            return "type-i"
    two = cf.aligned(2)
    if two is not None and two.preperiod[0] == 1:
        d1 = two.preperiod[1]
        if two.period[-1] >= d1:
            return "type-ii"
    return "not-sturm"


def type_i_form(cf: SturmCF) -> SturmCF:
    """[0; 1+d_1, (d_2, ..., d_n)] with d_n >= d_1 >= 1, or NotTypeI."""
    if classify(cf) != "type-i":
        raise NotTypeI(f"[{cf}] is not a Sturm number of type (i)")
    return cf.aligned(1)


def complement(cf: SturmCF) -> SturmCF:
    """Expansion of 1 - α.  Type (i) maps to type (ii) and back."""
    kind = classify(cf)
    if kind == "type-i":
        one = cf.aligned(1)
        return SturmCF((1, one.preperiod[0] - 1), one.period)
    if kind == "type-ii":
        two = cf.aligned(2)
        return SturmCF((1 + two.preperiod[1],), two.period)
    raise NotTypeI(f"[{cf}] is not a Sturm number")


# ---------------------------------------------------------------------------
# quadratic surds


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = t^2 * d with d squarefree; returns (t, d)."""
    t, d = 1, n
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            t *= f
        f += 1
    return t, d


def _floor_surd(A: int, B: int, D: int, C: int) -> int:
    """floor((A + B*sqrt(D)) / C) in integer arithmetic."""
    if C == 0:
        raise ZeroDivisionError("zero denominator")
    if C < 0:
        A, B, C = -A, -B, -C
    r = math.isqrt(B * B * D)
    if B >= 0:
        fl = r
    else:
        fl = -r if r * r == B * B * D else -r - 1
    return (A + fl) // C


@dataclass(frozen=True)
class QuadraticSurd:
    """The real number (P + sqrt(D)) / Q, kept in a canonical reduced form."""

    P: int
    D: int
    Q: int

    def __post_init__(self):
        if self.Q == 0:
            raise ZeroDivisionError("Q must be nonzero")
        if self.D <= 0 or math.isqrt(self.D) ** 2 == self.D:
            raise ValueError(f"D = {self.D} must be a positive nonsquare")
        x = Fraction(self.P, self.Q)
        t, d = _squarefree_split(self.D)
        y = Fraction(t, self.Q)
        q = abs(math.lcm(x.denominator, y.denominator))
        if y < 0:
            q = -q
        object.__setattr__(self, "P", int(x * q))
        object.__setattr__(self, "Q", q)
        object.__setattr__(self, "D", int((y * q) ** 2) * d)

    @classmethod
    def from_expression(cls, A: int, B: int, D: int, C: int) -> "QuadraticSurd":
        """(A + B*sqrt(D)) / C with B != 0."""
        if B == 0:
            raise ValueError("rational value, not a surd")
        sign = 1 if B > 0 else -1
        return cls(sign * A, B * B * D, sign * C)

    def __float__(self) -> float:
        return (self.P + math.sqrt(self.D)) / self.Q

    def __str__(self) -> str:
        if self.Q > 0:
            sign = "-" if self.P < 0 else ""
            return f"({sign}{abs(self.P)} + √{self.D})/{self.Q}" if self.P else f"√{self.D}/{self.Q}"
        P = -self.P
        return f"({P} - √{self.D})/{-self.Q}" if P else f"-√{self.D}/{-self.Q}"

    def floor(self) -> int:
        return _floor_surd(self.P, 1, self.D, self.Q)

    def continued_fraction(self) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        """(a_0, preperiod, period) of the exact expansion."""
        P, D, Q = self.P, self.D, self.Q
        if (D - P * P) % Q:
            P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
        terms: list[int] = []
        seen: dict[tuple[int, int], int] = {}
        while (P, Q) not in seen:
            seen[(P, Q)] = len(terms)
            a = _floor_surd(P, 1, D, Q)
            terms.append(a)
            P = a * Q - P
            Q = (D - P * P) // Q
        start = seen[(P, Q)]
        if start == 0:
            # purely periodic from a_0 on: unroll once so a_0 sits outside
            return terms[0], (), tuple(terms[1:] + terms[:1])
        return terms[0], tuple(terms[1:start]), tuple(terms[start:])

    def to_cf(self) -> SturmCF:
        a0, pre, per = self.continued_fraction()
        if a0 != 0:
            raise ValueError(f"{self} is not in (0, 1)")
        return SturmCF(pre, per)


def _matrix(terms) -> tuple[int, int, int, int]:
    m00, m01, m10, m11 = 1, 0, 0, 1
    for a in terms:
        m00, m01, m10, m11 = m00 * a + m01, m00, m10 * a + m11, m10
    return m00, m01, m10, m11


def surd_value(cf: SturmCF) -> QuadraticSurd:
    """Exact value of the periodic continued fraction."""
    # tail y = [b_1; b_2, ..., b_m, y] is the root > 1 of
    # m10*y^2 + (m11 - m00)*y - m01 = 0
    m00, m01, m10, m11 = _matrix(cf.period)
    A, B = m00 - m11, 2 * m10
    disc = (m11 - m00) ** 2 + 4 * m10 * m01
    # α = [0; pre, y] = (n00*y + n01) / (n10*y + n11)
    n00, n01, n10, n11 = _matrix((0,) + cf.preperiod)
    X, Y = n00 * A + n01 * B, n10 * A + n11 * B
    num_rat = X * Y - n00 * n10 * disc
    num_irr = n00 * Y - X * n10
    den = Y * Y - n10 * n10 * disc
    return QuadraticSurd.from_expression(num_rat, num_irr, disc, den)


def floor_multiple(alpha: QuadraticSurd, n: int, rho: Fraction | int = 0) -> int:
    """floor(n*alpha + rho), exactly."""
    rho = Fraction(rho)
    p, q = rho.numerator, rho.denominator
    return _floor_surd(n * alpha.P * q + p * alpha.Q, n * q, alpha.D, alpha.Q * q)


def ceil_multiple(alpha: QuadraticSurd, n: int, rho: Fraction | int = 0) -> int:
    """ceil(n*alpha + rho), exactly."""
    rho = Fraction(rho)
    p, q = rho.numerator, rho.denominator
    return -_floor_surd(-(n * alpha.P * q + p * alpha.Q), -n * q, alpha.D, alpha.Q * q)


def parse_rho(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational intercept {text!r}") from exc
