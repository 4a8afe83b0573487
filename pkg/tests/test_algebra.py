import pytest
from hypothesis import given, strategies as st

from lissbraid.algebra import (
    A_MAT,
    AbWord,
    CYCLE_123,
    CYCLE_132,
    PERM_ID,
    Psl2Mat,
    SWAP_13,
    a_conjugate,
    ab_to_frieze,
    cyclically_equal,
    factor_of,
    frieze_inverse,
    frieze_to_matrix,
    reduce_frieze,
    s3_image,
    second_half,
    trace_class,
)
from lissbraid.errors import NotPalindromic, OddACount

frieze_words = st.text(alphabet="pbqd", max_size=50)


# --- reduction -------------------------------------------------------------

@pytest.mark.parametrize("raw,expected", [
    ("pp", "b"),
    ("pb", ""),
    ("bp", ""),
    ("qd", ""),
    ("ppp", ""),
    ("dppd", "dbd"),
    ("dppdpddp", "dbdpqp"),
    ("dppdqbbq", ""),
])
def test_reduce_frieze_examples(raw, expected):
    assert reduce_frieze(raw) == expected
    # matrix oracle: reduction must not change the group element
    assert frieze_to_matrix(raw) == frieze_to_matrix(expected)


@given(frieze_words)
def test_reduce_idempotent_and_alternating(w):
    r = reduce_frieze(w)
    assert reduce_frieze(r) == r
    assert all(factor_of(a) != factor_of(b) for a, b in zip(r, r[1:]))


@given(frieze_words, frieze_words)
def test_reduce_is_group_homomorphism(u, v):
    assert frieze_to_matrix(reduce_frieze(u + v)) == frieze_to_matrix(u) * frieze_to_matrix(v)


@given(frieze_words)
def test_inverse_word(w):
    assert frieze_to_matrix(w) * frieze_to_matrix(frieze_inverse(w)) == Psl2Mat.identity()


def test_reduce_rejects_bad_letters():
    with pytest.raises(ValueError):
        reduce_frieze("px")


# --- matrices --------------------------------------------------------------

def test_frieze_to_matrix_examples():
    assert frieze_to_matrix("dbdpqp") == Psl2Mat(10, 3, 3, 1)
    assert frieze_to_matrix("") == Psl2Mat.identity()
    assert frieze_to_matrix("dp") == Psl2Mat(2, 1, 1, 1)


def test_sign_normalization():
    m = Psl2Mat(-2, -1, -1, -1)
    assert (m.a, m.b, m.c, m.d) == (2, 1, 1, 1)
    assert Psl2Mat(0, -1, 1, 0) == Psl2Mat(0, 1, -1, 0)
    # normalizing twice is normalizing once, and the value is hashable
    assert Psl2Mat(m.a, m.b, m.c, m.d) == m
    assert len({m, Psl2Mat(-2, -1, -1, -1)}) == 1


def test_bad_determinant_rejected():
    with pytest.raises(ValueError):
        Psl2Mat(1, 0, 0, 2)


@pytest.mark.parametrize("mat,expected", [
    (Psl2Mat(10, 3, 3, 1), "hyperbolic"),
    (Psl2Mat(1, 1, 0, 1), "parabolic"),
    (Psl2Mat(0, -1, 1, 0), "elliptic"),
])
def test_trace_class(mat, expected):
    assert trace_class(mat) == expected


# --- A,B-words -------------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("ABBAB", "dp"),
    ("BABBA", "pd"),
    ("BB", "b"),
])
def test_ab_to_frieze_examples(text, expected):
    assert ab_to_frieze(text) == expected


def test_ab_word_roundtrip_printing():
    w = AbWord(["A", "BB", "A", "B"])
    assert str(w) == "ABBAB"
    assert AbWord.from_string("ABBAB") == w


def test_odd_a_count_rejected():
    with pytest.raises(OddACount):
        ab_to_frieze("AB")


ab_symbols = st.lists(st.sampled_from(["A", "B", "BB"]), max_size=40)


@given(ab_symbols)
def test_ab_translation_preserves_matrix(symbols):
    if sum(1 for s in symbols if s == "A") % 2:
        symbols = symbols + ["A"]
    w = AbWord(symbols)
    assert frieze_to_matrix(ab_to_frieze(w)) == w.to_matrix()


# --- S3 image --------------------------------------------------------------

def test_s3_image_examples():
    assert s3_image("dp") == CYCLE_132
    assert s3_image("dbd") == CYCLE_123
    assert s3_image("") == PERM_ID


@given(frieze_words, frieze_words)
def test_s3_image_homomorphism(u, v):
    assert s3_image(u + v) == s3_image(u) * s3_image(v)


@given(frieze_words)
def test_s3_image_conjugation(w):
    assert s3_image(a_conjugate(w)) == SWAP_13 * s3_image(w) * SWAP_13


# --- conjugation and halves ------------------------------------------------

def test_a_conjugate_examples():
    assert a_conjugate("dbd") == "bdb"
    assert a_conjugate("pq") == "qp"
    assert a_conjugate("") == ""


@given(frieze_words)
def test_a_conjugate_matrix(w):
    m = frieze_to_matrix(w)
    assert frieze_to_matrix(a_conjugate(w)) == A_MAT * m * A_MAT


def test_second_half_examples():
    assert second_half("dbd") == "pqp"
    assert second_half("bqpqbqpqb") == "qbdbqbdbq"
    assert second_half("p") == "d"


def test_second_half_is_a_inverse_a():
    for h in ("dbd", "bqpqbqpqb", "p", "bdbqpqbdbdbqpqbdb"):
        lhs = frieze_to_matrix(second_half(h))
        assert lhs == A_MAT * frieze_to_matrix(h).inverse() * A_MAT


def test_second_half_needs_palindrome():
    with pytest.raises(NotPalindromic):
        second_half("pq")


# --- cyclic equality -------------------------------------------------------

@pytest.mark.parametrize("w1,w2,expected", [
    ("dbdpqp", "pqpdbd", True),
    ("dbdpqp", "dbdpqb", False),
    ("pbq", "q", True),
    ("", "", True),
    ("p", "b", False),
])
def test_cyclically_equal_examples(w1, w2, expected):
    assert cyclically_equal(w1, w2) is expected


@given(frieze_words, st.integers(0, 49))
def test_cyclic_equality_invariances(w, k):
    r = reduce_frieze(w)
    if r:
        k %= len(r)
        rotated = r[k:] + r[:k]
        assert cyclically_equal(r, rotated)
        assert cyclically_equal(a_conjugate(r), a_conjugate(rotated))


@given(frieze_words, frieze_words)
def test_cyclic_equality_symmetric(u, v):
    assert cyclically_equal(u, v) == cyclically_equal(v, u)
