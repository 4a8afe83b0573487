"""Word and matrix algebra for the 3-braid quotient group.

The quotient of the 3-strand braid group by its center is PSL(2,Z),
generated by A (order 2) and B (order 3).  Its index-2 subgroup is the
free product Z/3 * Z/3 with free factors {1, p, b} and {1, q, d}, where

    p = B,  b = B^2,  q = ABA,  d = AB^2A.

Elements of the subgroup are handled as reduced words over the four
letters "pbqd" (plain strings), elements of the full group as 2x2
integer matrices of determinant 1 up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPalindromic, OddACount

FRIEZE_LETTERS = "pbqd"

# free-product factor and exponent (p = g, b = g^2 in the first factor, etc.)
_FACTOR = {"p": 0, "b": 0, "q": 1, "d": 1}
_EXPONENT = {"p": 1, "b": 2, "q": 1, "d": 2}
_LETTER = {(0, 1): "p", (0, 2): "b", (1, 1): "q", (1, 2): "d"}

_A_CONJUGATE = str.maketrans("pbqd", "qdpb")   # conjugation by A
_HALF_SWAP = str.maketrans("pbqd", "dqbp")     # p<->d, b<->q
_INVERSE = str.maketrans("pbqd", "bpdq")       # x -> x^-1 within its factor


def factor_of(letter: str) -> int:
    """Free-product factor of a letter: 0 for p,b and 1 for q,d."""
    return _FACTOR[letter]


def check_frieze(word: str) -> str:
    if any(ch not in _FACTOR for ch in word):
        raise ValueError(f"not a word over 'pbqd': {word!r}")
    return word


def reduce_frieze(word: str) -> str:
    """Unique reduced form of a word over p,b,q,d.

    Stack-based left-to-right scan; adjacent letters of a common factor
    combine by exponent addition mod 3 (so pp -> b, pb -> empty, ...).
    The result alternates factors.
    """
    check_frieze(word)
    stack: list[tuple[int, int]] = []
    for ch in word:
        fac, exp = _FACTOR[ch], _EXPONENT[ch]
        while stack and stack[-1][0] == fac:
            exp = (stack.pop()[1] + exp) % 3
            if exp == 0:
                break
        if exp != 0:
            stack.append((fac, exp))
    return "".join(_LETTER[item] for item in stack)


def frieze_inverse(word: str) -> str:
    """Inverse word (reversed, with each letter inverted in its factor)."""
    return check_frieze(word).translate(_INVERSE)[::-1]


def a_conjugate(word: str) -> str:
    """Conjugation by A, realised letter-wise as p<->q, b<->d."""
    return check_frieze(word).translate(_A_CONJUGATE)


def second_half(half: str) -> str:
    """The word A h^-1 A for a palindromic word h: interchange p<->d, b<->q.

    Raises NotPalindromic when the letter sequence is not its own reverse
    (the letter-wise form of A h^-1 A needs palindromicity).
    """
    check_frieze(half)
    if half != half[::-1]:
        raise NotPalindromic(f"{half!r} is not a letter palindrome")
    return half.translate(_HALF_SWAP)


def _cyclic_reduce(word: str) -> str:
    w = reduce_frieze(word)
    while len(w) >= 2 and _FACTOR[w[0]] == _FACTOR[w[-1]]:
        fac = _FACTOR[w[0]]
        exp = (_EXPONENT[w[-1]] + _EXPONENT[w[0]]) % 3
        mid = w[1:-1]
        w = mid if exp == 0 else mid + _LETTER[(fac, exp)]
        w = reduce_frieze(w)
    return w


def cyclically_equal(w1: str, w2: str) -> bool:
    """Conjugacy test in the free product: cyclic reductions agree up to rotation."""
    u, v = _cyclic_reduce(w1), _cyclic_reduce(w2)
    if len(u) != len(v):
        return False
    if not u:
        return True
    return v in u + u


@dataclass(frozen=True)
class Psl2Mat:
    """Sign-normalized 2x2 integer matrix of determinant 1.

    The representative of {M, -M} with the first nonzero entry of
    (a, b, c, d) positive, so instances are canonical and hashable.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant is not 1: {(self.a, self.b, self.c, self.d)}")
        for entry in (self.a, self.b, self.c, self.d):
            if entry != 0:
                if entry < 0:
                    object.__setattr__(self, "a", -self.a)
                    object.__setattr__(self, "b", -self.b)
                    object.__setattr__(self, "c", -self.c)
                    object.__setattr__(self, "d", -self.d)
                break

    @classmethod
    def identity(cls) -> "Psl2Mat":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "Psl2Mat":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def __mul__(self, other: "Psl2Mat") -> "Psl2Mat":
        return Psl2Mat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Psl2Mat":
        return Psl2Mat(self.d, -self.b, -self.c, self.a)

    def trace(self) -> int:
        """Trace of the sign-normalized representative."""
        return self.a + self.d

    def to_rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"±[[{self.a},{self.b}],[{self.c},{self.d}]]"


A_MAT = Psl2Mat(0, 1, -1, 0)

LETTER_MATS = {
    "p": Psl2Mat(1, 1, -1, 0),
    "b": Psl2Mat(0, 1, -1, -1),
    "q": Psl2Mat(0, -1, 1, -1),
    "d": Psl2Mat(1, -1, 1, 0),
}


def frieze_to_matrix(word: str) -> Psl2Mat:
    """Product of the per-letter matrices; the empty word is the identity."""
    mat = Psl2Mat.identity()
    for ch in check_frieze(word):
        mat = mat * LETTER_MATS[ch]
    return mat


def trace_class(mat: Psl2Mat) -> str:
    """'elliptic', 'parabolic' or 'hyperbolic' by |trace| against 2."""
    t = abs(mat.trace())
    if t < 2:
        return "elliptic"
    if t == 2:
        return "parabolic"
    return "hyperbolic"


class AbWord:
    """Word over the symbols A, B and B^-1 of the full group.

    B^-1 is stored as its own symbol "BB" (it equals B^2, which is how
    it prints).  No group relations are applied at the word level.
    """

    __slots__ = ("symbols",)

    def __init__(self, symbols=()):
        symbols = tuple(symbols)
        for sym in symbols:
            if sym not in ("A", "B", "BB"):
                raise ValueError(f"bad symbol {sym!r}")
        self.symbols = symbols

    @classmethod
    def from_string(cls, text: str) -> "AbWord":
        """Parse a printed word, reading maximal runs 'BB' as B^-1."""
        out, i = [], 0
        while i < len(text):
            if text[i] == "A":
                out.append("A")
                i += 1
            elif text.startswith("BB", i):
                out.append("BB")
                i += 2
            elif text[i] == "B":
                out.append("B")
                i += 1
            else:
                raise ValueError(f"bad character {text[i]!r} in {text!r}")
        return cls(out)

    def to_matrix(self) -> Psl2Mat:
        mat = Psl2Mat.identity()
        for sym in self.symbols:
            mat = mat * (A_MAT if sym == "A" else LETTER_MATS["p" if sym == "B" else "b"])
        return mat

    def __str__(self) -> str:
        return "".join(self.symbols)

    def __repr__(self) -> str:
        return f"AbWord({str(self)!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, AbWord) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)


def ab_to_frieze(word: AbWord | str) -> str:
    """Translate an A,B-word with evenly many A's into a reduced pbqd-word.

    Left-to-right scan keeping the parity of A's seen so far: B at even
    parity gives p, B^-1 gives b; at odd parity they give q and d.
    """
    if isinstance(word, str):
        word = AbWord.from_string(word)
    if sum(1 for sym in word if sym == "A") % 2:
        raise OddACount(f"odd number of A's in {word}")
    parity = 0
    letters = []
    for sym in word:
        if sym == "A":
            parity ^= 1
        elif sym == "B":
            letters.append("p" if parity == 0 else "q")
        else:
            letters.append("b" if parity == 0 else "d")
    reduced = reduce_frieze("".join(letters))
    if frieze_to_matrix(reduced) != word.to_matrix():
        raise AssertionError(f"translation of {word} lost group equality")
    return reduced


@dataclass(frozen=True)
class Perm3:
    """Permutation of {1,2,3}, stored as the image tuple (s(1), s(2), s(3))."""

    image: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.image) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1,2,3: {self.image}")

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Perm3") -> "Perm3":
        """Composition self after other."""
        return Perm3(tuple(self(other(i)) for i in (1, 2, 3)))

    def inverse(self) -> "Perm3":
        img = [0, 0, 0]
        for i in (1, 2, 3):
            img[self(i) - 1] = i
        return Perm3(tuple(img))

    def __str__(self) -> str:
        names = {(1, 2, 3): "id", (2, 3, 1): "(123)", (3, 1, 2): "(132)",
                 (2, 1, 3): "(12)", (1, 3, 2): "(23)", (3, 2, 1): "(13)"}
        return names[self.image]


PERM_ID = Perm3((1, 2, 3))
CYCLE_123 = Perm3((2, 3, 1))
CYCLE_132 = Perm3((3, 1, 2))
SWAP_13 = Perm3((3, 2, 1))

_S3_IMAGE = {"p": CYCLE_123, "d": CYCLE_123, "b": CYCLE_132, "q": CYCLE_132}


def s3_image(word: str) -> Perm3:
    """Image of a pbqd-word in S3, fixed by p,d -> (123) and b,q -> (132)."""
    perm = PERM_ID
    for ch in check_frieze(word):
        perm = perm * _S3_IMAGE[ch]
    return perm
