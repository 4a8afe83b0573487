"""Combinatorics on binary words: Christoffel words and relatives.

Binary words are plain strings over "01".
"""

from __future__ import annotations

from math import gcd

from .errors import AllOnes, MultiplePalindromes, NoPalindrome


def _check_binary(word: str) -> str:
    if any(ch not in "01" for ch in word):
        raise ValueError(f"not a word over '01': {word!r}")
    return word


def christoffel(p: int, q: int) -> str:
    """Lower Christoffel word of slope q/p: length p+q, q ones, p zeros.

    The k-th symbol is floor(qk/(p+q)) - floor(q(k-1)/(p+q)).
    """
    if p <= 0 or q < 0 or gcd(p, q) != 1:
        raise ValueError(f"need coprime p > 0, q >= 0, got {(p, q)}")
    s = p + q
    return "".join(str(q * k // s - q * (k - 1) // s) for k in range(1, s + 1))


def rotations(word: str):
    for i in range(len(word)):
        yield word[i:] + word[:i]


def palindromic_conjugate(word: str) -> str:
    """The unique rotation of the word that is a palindrome.

    Exhaustive rotation scan; uniqueness failures signal that the input
    was not a Christoffel word of odd length.
    """
    _check_binary(word)
    found = {w for w in rotations(word) if w == w[::-1]}
    if not found:
        raise NoPalindrome(f"no palindromic rotation of {word!r}")
    if len(found) > 1:
        raise MultiplePalindromes(f"{len(found)} palindromic rotations of {word!r}")
    return found.pop()


def phi_n(level: int, word: str) -> str:
    """Letter substitution 0 -> (101)^(N-1) 1,  1 -> (101)^N 1."""
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    image = {"0": "101" * (level - 1) + "1", "1": "101" * level + "1"}
    return "".join(image[ch] for ch in _check_binary(word))


def varphi_n(level: int, word: str) -> tuple[int, ...]:
    """Letter replacement 0 -> N, 1 -> N+1."""
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    return tuple(level + int(ch) for ch in _check_binary(word))


def difference_seq(m_abs: int, ell_abs: int) -> str:
    """One period (length m) of floor(L(k+1/2)/m) - floor(L(k-1/2)/m), L = ell.

    Entries are in {0,1} for ell <= m; this is the mod-2 difference of the
    epsilon bit sequence of a type with these |m| and |ell|.
    """
    if m_abs < 1 or ell_abs < 1 or ell_abs > m_abs or gcd(m_abs, ell_abs) != 1:
        raise ValueError(f"need coprime 1 <= ell <= m, got {(m_abs, ell_abs)}")
    out = []
    for k in range(1, m_abs + 1):
        hi = (2 * ell_abs * k + ell_abs) // (2 * m_abs)
        lo = (2 * ell_abs * k - ell_abs) // (2 * m_abs)
        out.append(str(hi - lo))
    return "".join(out)


def cluster_lengths(word: str, cyclic: bool = True) -> set[int]:
    """Set of lengths of maximal runs of 1s, optionally in the cyclic reading."""
    _check_binary(word)
    if not word:
        return set()
    if cyclic:
        if "0" not in word:
            raise AllOnes(f"cyclic word {word!r} has no 0")
        # rotate a 0 to the front so runs never wrap, then read linearly
        i = word.index("0")
        word = word[i:] + word[:i]
    return {len(run) for run in word.split("0") if run}
