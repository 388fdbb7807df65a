import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sturmian.cf import SturmCF, convergents
from sturmian.errors import IndexOutOfRange, NotTypeI, UnsupportedSlope
from sturmian.generator import build_sigma, characteristic_word
from sturmian.morphism import E, PHI, PHI_TILDE, apply, compose, fixed_point, power, right_conjugate
from sturmian.singular import (
    Factor,
    adjoining_singular,
    conjugate_decomposition,
    conjugate_decomposition_hat,
    exchange_conjugation,
    locate,
    melancon_factors,
    removal_form,
    singular_word,
    two_r_form,
)
from sturmian.words import exchange, is_palindrome

EXAMPLE = SturmCF.parse("0;2,(3)")
SILVER = SturmCF.parse("0;(2)")
FIB = SturmCF.parse("0;2,(1)")

# (k, m, t) for [0;(2)], k = 0..11
TABLE_ROWS = [
    (0, 0, -1),
    (1, 1, -1), (2, 1, 0), (3, 1, 1),
    (4, 2, -1), (5, 2, 0), (6, 2, 1), (7, 2, 2), (8, 2, 3), (9, 2, 4), (10, 2, 5),
    (11, 3, -1),
]  # fmt: skip

two_r_cfs = st.integers(1, 4).map(lambda r: SturmCF((2,), (r,)))


def shifted(cf: SturmCF, k: int, length: int, hat: bool = False) -> str:
    c = characteristic_word(cf).prefix(k + length)[k:]
    return exchange(c) if hat else c


@pytest.mark.parametrize("n, expected", [(-2, ""), (-1, "a"), (0, "b"), (1, "aa"), (2, "bababab")])
def test_singular_word(n, expected):
    assert singular_word(EXAMPLE, n) == expected


@pytest.mark.parametrize(
    "n, expected", [(-2, ""), (-1, "a"), (0, "babab"), (1, "aabababaabababaa")]
)
def test_adjoining_singular_example(n, expected):
    assert adjoining_singular(EXAMPLE, n) == expected


def test_index_and_type_errors():
    with pytest.raises(IndexOutOfRange):
        singular_word(EXAMPLE, -3)
    with pytest.raises(IndexOutOfRange):
        adjoining_singular(EXAMPLE, -3)
    with pytest.raises(NotTypeI):
        singular_word(SturmCF.parse("0;1,1,(3)"), 2)


@pytest.mark.parametrize("text", ["0;2,(1)", "0;2,(3)", "0;(2)", "0;3,(2,3)", "0;(3,1)"])
def test_palindromes_and_lengths(text):
    cf = SturmCF.parse(text)
    q = convergents(cf, 12)[1]
    for n in range(-2, 9):
        assert is_palindrome(singular_word(cf, n))
        assert is_palindrome(adjoining_singular(cf, n))
    for m in range(-1, 9):
        assert len(adjoining_singular(cf, m)) == q[m + 2] - q[m + 1]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_adjoining_words_from_sigma_powers(r):
    cf = SturmCF((2,), (r,))
    sigma = build_sigma(cf)
    for m in range(-1, 8):
        img = power(sigma, m + 1).image_b
        x, y = ("a", "b") if m % 2 else ("b", "a")
        assert img.endswith(y)
        assert adjoining_singular(cf, m) == x + img[:-1]
        if m >= 0:
            assert power(sigma, m + 2).image_b.startswith(img)


def test_melancon_example():
    mf = melancon_factors(EXAMPLE, 1)
    assert [f.word for f in mf.flat] == ["a", "babab", "aabababaabababaa"]
    assert mf.flat_word == "abababaabababaabababaa"
    assert mf.grouped[0].word == "" and mf.grouped[1].word == "a"


@pytest.mark.parametrize("text", ["0;2,(1)", "0;2,(3)", "0;(2)", "0;3,(2,3)", "0;4,(3,5)"])
def test_melancon_forms_agree_with_characteristic_word(text):
    cf = SturmCF.parse(text)
    c = characteristic_word(cf)
    for J in range(-1, 9):
        mf = melancon_factors(cf, J)
        assert mf.flat_word == c.prefix(len(mf.flat_word))
        assert mf.flat_word.startswith(mf.grouped_word)
        if J % 2:
            assert mf.flat_word == mf.grouped_word


def test_fibonacci_singular_segmentation():
    word = melancon_factors(FIB, 6).flat_word
    assert word == fixed_point(PHI, "a").prefix(len(word))


@pytest.mark.parametrize("k, expected", [(0, (0, 2)), (4, (2, 8)), (11, (3, 18))])
def test_locate(k, expected):
    assert locate(SILVER, k) == expected


@given(two_r_cfs, st.integers(0, 5000))
def test_locate_tiles_the_shifts(cf, k):
    m, p = locate(cf, k)
    q = convergents(cf, m + 1)[1]
    assert q[m] - 1 <= k <= q[m + 1] - 2
    assert p == q[m + 1] - k
    assert 2 <= p <= q[m + 1] - q[m] + 1


def test_locate_rejects():
    with pytest.raises(UnsupportedSlope):
        locate(SturmCF.parse("0;3,(2,3)"), 0)
    with pytest.raises(IndexOutOfRange):
        locate(SILVER, -1)


@pytest.mark.parametrize("text", ["0;3,(2,3)", "0;(3,1)", "0;3,(3)"])
def test_two_r_form_rejects_other_slopes(text):
    with pytest.raises(UnsupportedSlope):
        two_r_form(SturmCF.parse(text))


def test_two_r_form_accepts_rotated_spelling():
    assert two_r_form(SturmCF.parse("0;2,(3,3)")) == (EXAMPLE, 3)
    assert two_r_form(SILVER) == (SturmCF.parse("0;2,(2)"), 2)


@pytest.mark.parametrize(
    "k, u, first_j",
    [(0, "", -1), (1, "", 0), (2, "b", 0), (3, "ba", 0), (4, "bab", 0), (5, "baba", 0), (6, "", 1)],
)
def test_removal_form_example(k, u, first_j):
    rf = removal_form(EXAMPLE, k)
    assert rf.u == u
    assert rf.factors(1)[0].j == first_j
    assert rf.stream().prefix(500) == shifted(EXAMPLE, k, 500)


@pytest.mark.parametrize("k, m, t", TABLE_ROWS)
def test_conjugate_table_indices(k, m, t):
    dec = conjugate_decomposition(SILVER, k, 3)
    assert (dec.m, dec.conj_index) == (m, t)
    assert dec.stream().prefix(1000) == shifted(SILVER, k, 1000)


def test_decomposition_examples():
    dec = conjugate_decomposition(SILVER, 2, 3)
    assert dec.conj_index == 0
    assert [f.j + 1 for f in dec.factors] == [1, 2, 3, 4]
    assert dec.factors[0].label() == "(s^1)_{0}(b)"
    assert dec.factors[0].label(unicode=True) == "(σ^1)_{0}(b)"
    dec = conjugate_decomposition(SILVER, 10, 2)
    assert dec.conj_index == 5 and len(dec.factors) == 3
    assert [f.j + 1 for f in dec.factors] == [2, 3, 4]


def test_sentinel_factors_are_adjoining_words():
    dec = conjugate_decomposition(SILVER, 0, 4)
    assert [f.word for f in dec.factors[:2]] == ["a", "bab"]
    assert dec.factors[0].label() == "(s^0)_{-1}(b)"
    q = convergents(SILVER, 8)[1]
    for f in dec.factors:
        assert f.word == adjoining_singular(SILVER, f.j)
        assert len(f.word) == q[f.j + 2] - q[f.j + 1]


def test_factors_are_conjugated_sigma_images():
    sigma = build_sigma(SILVER)
    dec = conjugate_decomposition(SILVER, 7, 4)
    for f in dec.factors:
        assert f.word == apply(right_conjugate(power(sigma, f.j + 1), f.conjugate_index), "b")


def test_factor_list_extends_lazily():
    dec = conjugate_decomposition(EXAMPLE, 3, 1)
    assert len(dec.factors) == 2
    more = dec.extend(5)
    assert more[:2] == dec.factors
    assert dec.word() == "".join(f.word for f in more[:2])


@pytest.mark.parametrize("r", [1, 2, 3])
def test_decomposition_grid(r):
    cf = SturmCF((2,), (r,))
    q = convergents(cf, 7)[1]
    c = characteristic_word(cf).prefix(2000 + q[6])
    for m in range(6):
        for p in range(2, q[m + 1] - q[m] + 2):
            k = q[m + 1] - p
            dec = conjugate_decomposition(cf, k, 2)
            assert (dec.m, dec.p) == (m, p)
            assert dec.stream().prefix(2000) == c[k : k + 2000]
            assert removal_form(cf, k).stream().prefix(2000) == c[k : k + 2000]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_hat_decomposition_is_factorwise_exchange(r):
    cf = SturmCF((2,), (r,))
    q = convergents(cf, 6)[1]
    for k in range(q[5]):
        plain = conjugate_decomposition(cf, k, 3)
        hat = conjugate_decomposition_hat(cf, k, 3)
        assert [f.word for f in hat.factors] == [exchange(f.word) for f in plain.factors]
        assert all(f.letter_arg == "a" and f.hat for f in hat.factors)
    dec = conjugate_decomposition_hat(SILVER, 3, 3)
    assert dec.stream().prefix(800) == shifted(SILVER, 3, 800, hat=True)
    assert conjugate_decomposition_hat(FIB, 0, 2).factors[0].label() == "(shat^0)_{-1}(a)"


def test_fibonacci_specialization():
    # with q_n = F_n: k = F_{m+1} - p and factor j equals (φ^j)_{F_{m-1} - p}(a)
    q = convergents(FIB, 12)[1]
    for m in range(1, 8):
        for p in range(2, q[m - 1] + 1):
            k = q[m + 1] - p
            t = q[m - 1] - p
            dec = conjugate_decomposition(FIB, k, 3)
            assert dec.conj_index == t
            for f in dec.factors:
                assert f.word == apply(right_conjugate(power(PHI, f.j), t), "a")


def test_exchange_conjugation():
    check = exchange_conjugation(PHI, 1)
    assert check.holds
    assert check.rhs.same_images(compose(E, compose(PHI_TILDE, E)))
    sigma = build_sigma(SILVER)
    assert exchange_conjugation(sigma, 0).lhs.same_images(compose(E, compose(sigma, E)))
    assert all(exchange_conjugation(sigma, k).holds for k in range(4))
    with pytest.raises(IndexOutOfRange):
        exchange_conjugation(sigma, 4)


def test_decomposition_rejects_unsupported_slopes():
    with pytest.raises(UnsupportedSlope):
        conjugate_decomposition(SturmCF.parse("0;3,(2,3)"), 1, 2)
    with pytest.raises(UnsupportedSlope):
        removal_form(SturmCF.parse("0;(3,1)"), 1)


def test_factor_labels_for_other_kinds():
    assert Factor(3, "v", "aba").label() == "v_{3}"
    assert Factor(1, "w", "aa").label() == "w_{1}"


@settings(max_examples=40, deadline=None)
@given(two_r_cfs, st.integers(0, 400))
def test_decomposition_reproduces_every_shift(cf, k):
    dec = conjugate_decomposition(cf, k, 3)
    total = min(600, sum(len(f.word) for f in dec.extend(6)))
    assert dec.stream().prefix(total) == shifted(cf, k, total)
