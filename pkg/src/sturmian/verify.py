"""Named verification suites run by ``sturmian verify``.

Each suite recomputes one family of identities two ways and counts
disagreements.  Suites are independent, so they are run one after another
and reported in a fixed order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .cf import SturmCF, classify, convergents, surd_value
from .errors import UnsupportedSlope
from .generator import (
    build_sigma,
    build_sigma_hat,
    characteristic_word,
    mechanical_word,
    sigma_shifts_standard,
    standard_words,
    sturm_data,
)
from .morphism import E, apply, fixed_point, generates_infinite_word, power, right_conjugate
from .singular import (
    adjoining_singular,
    conjugate_decomposition,
    conjugate_decomposition_hat,
    exchange_conjugation,
    melancon_factors,
    removal_form,
    singular_word,
    two_r_form,
)
from .words import distinct_factors, exchange, is_palindrome

MAX_INDEX = 12


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    first_failure: Optional[str] = None
    skipped: Optional[str] = None

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = what

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        if self.skipped:
            return f"{self.name}: skipped ({self.skipped})"
        line = f"{self.name}: {self.checked} checks, {self.failures} failures"
        if self.first_failure:
            line += f"; first counterexample: {self.first_failure}"
        return line


def _indices(cf: SturmCF, max_len: int) -> range:
    """n in 0..12, dropping those whose s_{n+2} would exceed 100*max_len."""
    q = convergents(cf, MAX_INDEX + 2)[1]
    top = 0
    while top < MAX_INDEX and q[top + 3] <= 100 * max_len:
        top += 1
    return range(0, top + 1)


def suite_palindrome(cf: SturmCF, max_len: int) -> SuiteResult:
    res = SuiteResult("palindrome")
    for n in [-2, -1] + list(_indices(cf, max_len)):
        res.check(is_palindrome(singular_word(cf, n)), f"w_{n} not a palindrome")
        res.check(is_palindrome(adjoining_singular(cf, n)), f"v_{n} not a palindrome")
    return res


def suite_lengths(cf: SturmCF, max_len: int) -> SuiteResult:
    res = SuiteResult("lengths")
    idx = _indices(cf, max_len)
    q = convergents(cf, idx[-1] + 3)[1]
    s = standard_words(cf, idx[-1] + 1)  # s[i] is s_{i-1}
    for n in idx:
        res.check(len(s[n + 1]) == q[n], f"|s_{n}| != q_{n}")
        if n >= 1:
            tail = s[n + 1][-2:]
            res.check(tail == ("ab" if n % 2 else "ba"), f"s_{n} ends with {tail}")
        res.check(s[n + 2].startswith(s[n + 1]), f"s_{n} not a prefix of s_{n + 1}")
    for m in [-1] + list(idx)[:-1]:
        res.check(
            len(adjoining_singular(cf, m)) == q[m + 2] - q[m + 1],
            f"|v_{m}| != q_{m + 2} - q_{m + 1}",
        )
    try:
        form, _ = two_r_form(cf)
    except UnsupportedSlope:
        return res
    sigma = build_sigma(form)
    for m in list(idx)[:-1]:
        sm = power(sigma, m)
        res.check(len(sm.image_a + sm.image_b) == q[m + 1], f"|σ^{m}(ab)| != q_{m + 1}")
        vm = adjoining_singular(form, m)
        img = power(sigma, m + 1).image_b
        x, y = ("a", "b") if m % 2 else ("b", "a")
        res.check(vm == x + img[:-1] and img.endswith(y), f"v_{m} != {x} σ^{m + 1}(b) {y}^-1")
        res.check(power(sigma, m + 2).image_b.startswith(img), f"σ^{m + 1}(b) not a prefix of σ^{m + 2}(b)")
    return res


def suite_fixedpoint(cf: SturmCF, max_len: int) -> SuiteResult:
    res = SuiteResult("fixedpoint")
    data = sturm_data(cf)
    sigma, sigma_hat = build_sigma(cf), build_sigma_hat(cf)
    c = characteristic_word(cf).prefix(max_len)
    res.check(apply(sigma, c)[:max_len] == c, "σ(c_α) != c_α")
    res.check(fixed_point(sigma, "a").prefix(max_len) == c, "σ^ω(a) != c_α")
    res.check(fixed_point(sigma_hat, "b").prefix(max_len) == exchange(c), "σ̂^ω(b) != E(c_α)")
    res.check(generates_infinite_word(sigma), "σ fails the generation criterion")
    sigma_hat_again = apply(E, apply(sigma, "b")), apply(E, apply(sigma, "a"))
    res.check((sigma_hat.image_a, sigma_hat.image_b) == sigma_hat_again, "σ̂ != EσE")
    n = data.n
    for m in range(1, 5):
        top = m * (n - 1)
        if len(standard_words(data.cf, top)[-1]) > 100 * max_len:
            break
        s = standard_words(data.cf, top)
        sm = power(sigma, m)
        res.check(sm.image_a == s[top + 1], f"σ^{m}(a) != s_{top}")
        res.check(sm.image_b == s[top + 1] * (data.dn - data.d1) + s[top], f"σ^{m}(b) mismatch")
        for k in range(0, 4):
            res.check(sigma_shifts_standard(cf, k, m), f"σ^{m}(s_{k}) != s_{k + top}")
    return res


def suite_conjugate_shift(cf: SturmCF, max_len: int, seed: int = 0) -> SuiteResult:
    res = SuiteResult("lemma22")
    rng = random.Random(seed)
    sigma = build_sigma(cf)
    c_stream = characteristic_word(cf)
    L = min(max_len, 2000)
    top = len(sigma.image_a) + len(sigma.image_b) - 2
    q = convergents(cf, 4)[1]
    c = c_stream.prefix(L + max(top, q[4]))
    seen = set()
    for k in range(top + 1):
        conj = right_conjugate(sigma, k)
        u = c[:k]
        seen.add((conj.image_a, conj.image_b))
        for _ in range(50):
            w = "".join(rng.choice("ab") for _ in range(rng.randint(0, 40)))
            res.check(apply(sigma, w) + u == u + apply(conj, w), f"σ(w)u != uσ_{k}(w) for w={w}")
        res.check(apply(conj, c)[:L] == c[k : k + L], f"σ_{k}(c_α) != shift(c_α, {k})")
        res.check(exchange_conjugation(sigma, k).holds, f"(EσE)_{k} != Eσ_{k}E")
    res.check(len(seen) == top + 1, f"{len(seen)} distinct right conjugates, expected {top + 1}")
    for m in range(1, 4):
        sm = power(sigma, m)
        if len(sm.image_a) > L:
            break
        for k in range(0, q[m + 1] - 1):
            got = apply(right_conjugate(sm, k), c[: L + k])[:L]
            res.check(got == c[k : k + L], f"(σ^{m})_{k}(c_α) != shift(c_α, {k})")
    return res


def _decomposition_sweep(cf: SturmCF, max_len: int, hat: bool) -> SuiteResult:
    res = SuiteResult("theorem-hat" if hat else "theorem-main")
    try:
        form, _ = two_r_form(cf)
    except UnsupportedSlope:
        res.skipped = "slope not of the form [0;2,(r)]"
        return res
    L = min(max_len, 2000)
    base = characteristic_word(form)
    if hat:
        base = apply(E, base)
    c = base.prefix(L + convergents(form, 7)[1][6])
    q = convergents(form, 7)[1]
    build = conjugate_decomposition_hat if hat else conjugate_decomposition
    for m in range(0, 6):
        for p in range(2, q[m + 1] - q[m] + 2):
            k = q[m + 1] - p
            dec = build(form, k, 2)
            got = dec.stream().prefix(L)
            res.check(got == c[k : k + L], f"k={k} (m={m}, p={p})")
            if not hat:
                rf = removal_form(form, k)
                res.check(rf.stream().prefix(L) == got, f"removal form disagrees at k={k}")
    return res


def suite_decomposition(cf: SturmCF, max_len: int) -> SuiteResult:
    return _decomposition_sweep(cf, max_len, hat=False)


def suite_decomposition_hat(cf: SturmCF, max_len: int) -> SuiteResult:
    return _decomposition_sweep(cf, max_len, hat=True)


def suite_melancon(cf: SturmCF, max_len: int) -> SuiteResult:
    res = SuiteResult("melancon")
    c = characteristic_word(cf)
    J = 1
    while True:
        mf = melancon_factors(cf, J)
        flat, grouped = mf.flat_word, mf.grouped_word
        res.check(flat == c.prefix(len(flat)), f"∏ v_j up to j={J} is not a prefix of c_α")
        res.check(flat.startswith(grouped), f"grouped form disagrees at J={J}")
        if J % 2:
            res.check(flat == grouped, f"grouped and flat lengths differ at J={J}")
        if len(flat) >= max_len or J >= 2 * MAX_INDEX:
            break
        J += 1
    return res


def suite_mechanical(cf: SturmCF, max_len: int) -> SuiteResult:
    res = SuiteResult("mechanical")
    alpha = surd_value(cf)
    c = characteristic_word(cf).prefix(max_len)
    floor_word = mechanical_word(alpha, 0, "floor").prefix(max_len + 1)
    ceil_word = mechanical_word(alpha, 0, "ceiling").prefix(max_len + 1)
    res.check(floor_word == "a" + c, "s_{α,0} != a c_α")
    res.check(ceil_word == "b" + c, "s'_{α,0} != b c_α")
    return res


def suite_complexity(cf: SturmCF, max_len: int) -> SuiteResult:
    res = SuiteResult("complexity")
    c = characteristic_word(cf)
    for n in range(1, 21):
        window = c.prefix(50 * n)
        count = len(distinct_factors(window, n))
        res.check(count == n + 1, f"{count} factors of length {n}, expected {n + 1}")
    return res


SUITES: dict[str, Callable[[SturmCF, int], SuiteResult]] = {
    "palindrome": suite_palindrome,
    "lengths": suite_lengths,
    "fixedpoint": suite_fixedpoint,
    "lemma22": suite_conjugate_shift,
    "theorem-main": suite_decomposition,
    "theorem-hat": suite_decomposition_hat,
    "melancon": suite_melancon,
    "mechanical": suite_mechanical,
    "complexity": suite_complexity,
}


def run_suites(cf: SturmCF, names: list[str], max_len: int) -> list[SuiteResult]:
    if classify(cf) != "type-i":
        sturm_data(cf)  # raises NotTypeI
    return [SUITES[name](cf, max_len) for name in names]
