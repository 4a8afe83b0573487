"""The level/slope correspondence and the cluster construction of H.

Every primitive type (m, n) carries a unique label (N, q/p) with
gcd(p, q) = gcd(p+q, 6) = 1; the correspondence is the pair of exact
integer identities

    p = (3N+1)|ell| - (2N+1)|m|,     |m| = p(3N-2) + q(3N+1),
    q = (2N-1)|m| - (3N-2)|ell|,     |ell| = p(2N-1) + q(2N+1),

and the word H of the type is recovered from the label alone by
concatenating odd clusters whose radii come from the palindromic
conjugate of the Christoffel word of slope q/p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import CollisionType, InvalidLabel, NotPrimitive
from .lissajous import is_collision_free, is_primitive, normalize, reduce_to_p0
from .words import christoffel, palindromic_conjugate, varphi_n


@dataclass(frozen=True)
class LevelSlope:
    """Classification label: level N >= 1 and slope q/p >= 0."""

    level: int
    p: int
    q: int

    def __post_init__(self):
        if self.level < 1 or self.p < 1 or self.q < 0:
            raise InvalidLabel(f"bad label ranges: {self}")
        if gcd(self.p, self.q) != 1:
            raise InvalidLabel(f"gcd(p, q) != 1: {self}")
        if gcd(self.p + self.q, 6) != 1:
            raise InvalidLabel(f"gcd(p + q, 6) != 1: {self}")

    @property
    def slope_str(self) -> str:
        return f"{self.q}/{self.p}"

    def to_json_dict(self) -> dict:
        return {"level": self.level, "slope": self.slope_str}

    def __str__(self) -> str:
        return f"(N={self.level}, {self.slope_str})"


@dataclass(frozen=True)
class ClusterSeq:
    """Palindromic radii in {N, N+1} and the induced cluster word.

    The word is a concatenation of blocks (xy)^(r-1) x, alternating
    between the left alphabet {b,d} and the right alphabet {p,q}; at
    each junction b pairs with q and d pairs with p.
    """

    radii: tuple[int, ...]
    leading: str
    letters: str


def level_slope_of(m: int, n: int) -> LevelSlope:
    """Label of a primitive type, by exact integer inequalities."""
    if not is_primitive(m, n):
        raise NotPrimitive(f"{(m, n)} is not primitive")
    big_m, big_l = abs(m), abs((m - n) // 3)
    # unique N in the half-open interval of length 1 determined by
    # (2N+1)/(3N+1) < |ell|/|m| <= (2N-1)/(3N-2)
    level = (2 * big_l - big_m) // (3 * big_l - 2 * big_m)
    p = (3 * level + 1) * big_l - (2 * level + 1) * big_m
    q = (2 * level - 1) * big_m - (3 * level - 2) * big_l
    # redundant check via the alternate characterization of N on -n/m:
    # (3N+2)/(3N+1) < |n|/|m| <= (3N-1)/(3N-2)
    big_n = abs(n)
    assert (3 * level + 2) * big_m < (3 * level + 1) * big_n
    assert (3 * level - 2) * big_n <= (3 * level - 1) * big_m
    return LevelSlope(level, p, q)


def type_of(label: LevelSlope) -> tuple[int, int]:
    """Primitive type of a label; inverse of level_slope_of."""
    level, p, q = label.level, label.p, label.q
    big_m = p * (3 * level - 2) + q * (3 * level + 1)
    big_l = p * (2 * level - 1) + q * (2 * level + 1)
    s = 1 if big_m % 3 == 1 else -1
    m = s * big_m
    n = m - 3 * s * big_l
    assert is_primitive(m, n), f"label {label} produced non-primitive {(m, n)}"
    return m, n


_PARTNER = {"b": "q", "q": "b", "d": "p", "p": "d"}
_OTHER = {"b": "d", "d": "b", "p": "q", "q": "p"}


def clusters_of(label: LevelSlope) -> ClusterSeq:
    """Cluster form of H for a label: radii, leading letter, and the word."""
    pal = palindromic_conjugate(christoffel(label.p, label.q))
    radii = varphi_n(label.level, pal)
    m, _ = type_of(label)
    lead = "d" if m > 0 else "b"
    parts = []
    for r in radii:
        other = _OTHER[lead]
        parts.append((lead + other) * (r - 1) + lead)
        lead = _PARTNER[lead]
    return ClusterSeq(radii=radii, leading=parts[0][0], letters="".join(parts))


def class_equal(t1: tuple[int, int], t2: tuple[int, int]) -> bool:
    """Whether two collision-free types produce the same braid class."""
    for t in (t1, t2):
        if not is_collision_free(*t):
            raise CollisionType(f"type {t} is not collision-free")
    return reduce_to_p0(normalize(*t1)) == reduce_to_p0(normalize(*t2))


def enumerate_p0(max_m: int) -> list[tuple[int, int]]:
    """All primitive types with |m| <= max_m, sorted by (|m|, |n|)."""
    out = []
    for am in range(1, max_m + 1):
        if am % 3 == 0:
            continue
        m = am if am % 3 == 1 else -am
        for an in range(am + 1, 2 * am + 1):
            n = -an if m > 0 else an
            if n % 3 != 1 or gcd(am, an) != 1 or (m - n) % 6 == 0:
                continue
            out.append((m, n))
    return sorted(out, key=lambda t: (abs(t[0]), abs(t[1])))


def enumerate_labels(max_sum: int, max_level: int) -> list[LevelSlope]:
    """All labels with p + q <= max_sum and level <= max_level."""
    out = []
    for s in range(1, max_sum + 1):
        if gcd(s, 6) != 1:
            continue
        for q in range(0, s):
            p = s - q
            if gcd(p, q) != 1:
                continue
            for level in range(1, max_level + 1):
                out.append(LevelSlope(level, p, q))
    return sorted(out, key=lambda l: (l.level, l.p + l.q, l.q))
