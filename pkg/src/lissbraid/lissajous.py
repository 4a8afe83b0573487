"""Lissajous types, the collision criterion, and the braid words W and H.

A type is a coprime pair (m, n) of nonzero frequencies for the curve
sin(2*pi*m*t) + i*sin(2*pi*n*t).  Types with 3 | mn degenerate; the
rest normalize (by harmless sign flips) to m = n = 1 mod 3, and the
motion of the three points L(t-1/3), L(t), L(t+1/3) is collision-free
exactly when ell = (m-n)/3 is odd.  For collision-free types the braid
word W of a third of a period, and its first half H, are built from a
doubly palindromic 01-sequence of length 2|m|.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebra import AbWord, ab_to_frieze
from .errors import CollisionType, DivisibleByThree, NotCoprime


def _sgn(x: int) -> int:
    return 1 if x > 0 else -1


@dataclass(frozen=True)
class NormalizedType:
    """A type with both residues 1 mod 3, plus ell = (m - n) / 3."""

    m: int
    n: int
    ell: int

    def to_json_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "ell": self.ell}


@dataclass(frozen=True)
class EpsSeq:
    """The 01-sequence of length 2|m| and its sign form.

    signs[k] = sgn(m*ell) * (2*bits[k] - 1); both halves of bits are
    palindromic and complementary to each other.
    """

    bits: tuple[int, ...]
    signs: tuple[int, ...]
    sgn_m: int

    def bit_string(self) -> str:
        return "".join(str(b) for b in self.bits)


def normalize(m: int, n: int) -> NormalizedType:
    """Flip signs of m and n independently until both are 1 mod 3."""
    if m == 0 or n == 0:
        raise NotCoprime(f"frequencies must be nonzero: {(m, n)}")
    if m % 3 == 0 or n % 3 == 0:
        raise DivisibleByThree(f"3 divides a frequency of {(m, n)}")
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd{(m, n)} != 1")
    m_star = m if m % 3 == 1 else -m
    n_star = n if n % 3 == 1 else -n
    return NormalizedType(m_star, n_star, (m_star - n_star) // 3)


def is_collision_free(m: int, n: int) -> bool:
    """True iff 3 does not divide mn and the normalized ell is odd."""
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd{(m, n)} != 1")
    if m == 0 or n == 0 or m % 3 == 0 or n % 3 == 0:
        return False
    return normalize(m, n).ell % 2 != 0


def _check_collision_free(nt: NormalizedType) -> None:
    if nt.ell % 2 == 0:
        raise CollisionType(f"type {(nt.m, nt.n)} has even ell = {nt.ell}")


def epsilon_seq(nt: NormalizedType) -> EpsSeq:
    """The 01-sequence bits[k] = floor(|ell|k/|m| - |ell|/(2|m|)) mod 2.

    Evaluated as floor((2|ell|k - |ell|) / (2|m|)) in exact integers;
    the argument is never an integer since |ell| is odd.
    """
    _check_collision_free(nt)
    am, al = abs(nt.m), abs(nt.ell)
    if gcd(am, al) != 1:
        raise NotCoprime(f"gcd(|m|, |ell|) != 1 for {(nt.m, nt.n)}")
    bits = tuple(((2 * al * k - al) // (2 * am)) % 2 for k in range(1, 2 * am + 1))
    s = _sgn(nt.m * nt.ell)
    signs = tuple(s * (2 * b - 1) for b in bits)
    return EpsSeq(bits, signs, _sgn(nt.m))


def _ab_from_signs(signs, sgn_m: int, last_exp_from_first: bool) -> AbWord:
    # A^{(1 - sgn(m) e_1)/2} B^{e_1} A^{(e_1-e_2)/2} ... B^{e_k} A^{end}
    # where the end exponent reuses e_1 for the half word H and uses the
    # final sign for the full word W.
    symbols = []
    if (1 - sgn_m * signs[0]) // 2:
        symbols.append("A")
    for i, e in enumerate(signs):
        symbols.append("B" if e == 1 else "BB")
        if i + 1 < len(signs) and (signs[i] - signs[i + 1]) // 2 != 0:
            symbols.append("A")
    end_sign = signs[0] if last_exp_from_first else signs[-1]
    if (1 - sgn_m * end_sign) // 2:
        symbols.append("A")
    return AbWord(symbols)


def build_W(nt: NormalizedType) -> AbWord:
    """The braid word of one third of the motion's period, in A and B."""
    eps = epsilon_seq(nt)
    return _ab_from_signs(eps.signs, eps.sgn_m, last_exp_from_first=False)


def build_H(nt: NormalizedType) -> str:
    """First half of W, as a reduced pbqd-word of odd length."""
    eps = epsilon_seq(nt)
    half = eps.signs[: abs(nt.m)]
    return ab_to_frieze(_ab_from_signs(half, eps.sgn_m, last_exp_from_first=True))


def is_primitive(m: int, n: int) -> bool:
    """Membership in the primitive family: mn < 0, residues 1 mod 3,
    m != n mod 6, |m| < |n| <= 2|m|, coprime."""
    if m == 0 or n == 0 or gcd(m, n) != 1:
        return False
    if m % 3 != 1 or n % 3 != 1 or (m - n) % 6 == 0:
        return False
    return m * n < 0 and abs(m) < abs(n) <= 2 * abs(m)


def _window_shift(ell: int, m: int) -> tuple[int, int, int]:
    """Unique ell' in (+-ell + 2mZ) with m*ell' > 0 and |ell'| <= |m|.

    Returns (ell', s, j) with ell' = s*ell + 2*m*j.  Prefers s = +1 when
    both sign classes reach the window (they then agree on ell').
    """
    a = abs(m)
    for s in (1, -1):
        r = (s * ell) % (2 * a)
        if m > 0 and 0 < r <= a:
            new = r
        elif m < 0 and r >= a:
            new = r - 2 * a
        else:
            continue
        j, rem = divmod(new - s * ell, 2 * m)
        assert rem == 0
        return new, s, j
    raise AssertionError(f"no window representative for ell={ell}, m={m}")


def reduce_to_p0_detail(nt: NormalizedType) -> tuple[tuple[int, int], bool]:
    """Primitive representative and whether the roles of H got swapped.

    Repeatedly shifts ell into the window m*ell > 0, |ell| <= |m| and
    swaps the roles of m and n while |ell| < (2/3)|m|; each swap strictly
    decreases |m|.  The flag records whether H of the input type equals
    H of the result (False) or of the result with arguments swapped (True).
    """
    _check_collision_free(nt)
    m, ell = nt.m, nt.ell
    swapped = False
    while True:
        ell, s, j = _window_shift(ell, m)
        if (s == -1) != (j % 2 == 1):
            swapped = not swapped
        n = m - 3 * ell
        if 3 * abs(ell) > 2 * abs(m):
            return (m, n), swapped
        swapped = not swapped
        m, ell = n, -ell


def reduce_to_p0(nt: NormalizedType) -> tuple[int, int]:
    """The primitive type whose class contains the given one."""
    return reduce_to_p0_detail(nt)[0]
