import cmath
import math
import xml.etree.ElementTree as ET
from fractions import Fraction
from math import gcd

import numpy as np
import pytest

from lissbraid.algebra import Psl2Mat
from lissbraid.classify import enumerate_p0, level_slope_of
from lissbraid.errors import CollisionType, OnBorder
from lissbraid.lissajous import epsilon_seq, normalize
from lissbraid.shapetrace import (
    EQ_PERIOD_TOL,
    RHO,
    collision_scan,
    csv_shape,
    epsilon_oracle,
    farey_edges,
    periodicity_defect,
    psi_values,
    region_itinerary,
    region_of,
    sample_curve,
    start_offset,
    svg_halfplane,
    svg_shape,
    syzygy_oracle,
)
from lissbraid.syzygy import omega, syzygy_sequence


def test_curve_endpoints():
    nt = normalize(4, -5)
    # psi(0) = rho exactly, psi(1/3) = -1 exactly (the offset only nudges t)
    assert abs(complex(psi_values(nt, 0.05, np.array([0.0]))[0]) - RHO) < 1e-12
    assert abs(complex(psi_values(nt, 0.05, np.array([1 / 3]))[0]) + 1.0) < 1e-9
    # sampled ends sit at the offset times delta and 1/3 + delta
    samples = sample_curve(nt, steps=500)
    assert abs(samples[0].psi - RHO) < 0.05
    assert abs(samples[-1].psi + 1.0) < 0.05


def test_equator_times():
    nt = normalize(-11, 16)
    for k in range(1, 12):
        t = k / (6 * abs(nt.ell))
        assert abs(abs(complex(psi_values(nt, 0.05, np.array([t]))[0])) - 1.0) < 1e-12


def test_periodicity_third_turn():
    for mn in [(4, -5), (-8, 13), (1, -2)]:
        assert periodicity_defect(normalize(*mn)) < EQ_PERIOD_TOL


@pytest.mark.parametrize("mn,expected", [
    ((1, -2), (0, 1)),
    ((4, -5), (0, 1, 1, 0, 1, 0, 0, 1)),
])
def test_epsilon_oracle_examples(mn, expected):
    assert epsilon_oracle(normalize(*mn)) == expected


def test_epsilon_oracle_22_bits():
    nt = normalize(-11, 16)
    assert epsilon_oracle(nt) == epsilon_seq(nt).bits


def test_epsilon_oracle_matches_formula():
    for m, n in enumerate_p0(20):
        nt = normalize(m, n)
        assert epsilon_oracle(nt) == epsilon_seq(nt).bits


def test_epsilon_oracle_nonprimitive_types():
    # normalized collision-free types outside the primitive family
    for m, n in [(1, 4), (-2, -5), (7, -2), (4, 19), (-8, 1), (13, -32)]:
        nt = normalize(m, n)
        assert epsilon_oracle(nt) == epsilon_seq(nt).bits


def test_collision_scan_examples():
    assert collision_scan(4, -5) > 1e-3
    assert collision_scan(-5, 7) < 1e-6
    assert collision_scan(3, 2) < 1e-6
    with pytest.raises(ValueError):
        collision_scan(2, 4)


def test_region_of_examples():
    assert region_of(1.5 * cmath.exp(0.3j)).label == "I-"
    assert region_of(0.5 * cmath.exp(0.3j)).label == "I+"
    assert region_of(1.5 * cmath.exp(1j * (0.3 + 2 * math.pi / 3))).label == "II-"
    assert region_of(0.5 * cmath.exp(1j * (0.3 + 4 * math.pi / 3))).label == "III+"


def test_region_of_borders():
    with pytest.raises(OnBorder):
        region_of(cmath.exp(0.4j))          # on the equator
    with pytest.raises(OnBorder):
        region_of(1.5 + 0j)                  # on the ray through 1
    with pytest.raises(OnBorder):
        region_of(1.5 * cmath.exp(2j * math.pi / 3))


def test_region_itineraries():
    assert region_itinerary(normalize(1, -2)) == ["I-", "I+", "III+", "III-", "II-"]
    assert region_itinerary(normalize(1, 4)) == ["I-", "III-", "III+", "II+", "II-"]
    assert region_itinerary(normalize(-2, 1)) == [
        "I-", "II-", "III-", "III+", "I+", "II+", "II-"]
    assert region_itinerary(normalize(-2, -5)) == [
        "I-", "I+", "II+", "III+", "III-", "I-", "II-"]


def test_syzygy_oracle_nonprimitive_smoke():
    # works for any collision-free normalized type; (1,4) shares the class
    # of (1,-2) and crosses the same arcs
    seq = syzygy_oracle(normalize(1, 4))
    assert len(seq) == 6
    assert seq in "132132132132"


def test_syzygy_oracle_examples():
    got = syzygy_oracle(normalize(-8, 13))
    expected = syzygy_sequence(-8, 13)
    assert len(got) == len(expected)
    assert got in expected + expected
    assert syzygy_oracle(normalize(1, -2)) in "132132132132"


def test_syzygy_oracle_crossing_count():
    for mn in [(4, -5), (-8, 13), (7, -8)]:
        m, n = mn
        label = level_slope_of(m, n)
        assert len(syzygy_oracle(normalize(m, n))) == 6 * len(omega(label))


def test_syzygy_oracle_matches_symbolic():
    for m, n in enumerate_p0(8):
        numeric = syzygy_oracle(normalize(m, n))
        symbolic = syzygy_sequence(m, n)
        assert numeric in symbolic + symbolic


def test_sample_curve_rejects_collision_types():
    with pytest.raises(CollisionType):
        sample_curve(normalize(-5, 7))


def _polyline_points(path):
    root = ET.parse(path).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    poly = root.find(f"{ns}polyline")
    pts = []
    for tok in poly.attrib["points"].split():
        x, y = tok.split(",")
        pts.append((float(x), float(y)))
    return pts


def test_svg_shape(tmp_path):
    nt = normalize(4, -5)
    out = str(tmp_path / "shape.svg")
    assert svg_shape(nt, 0.05, 6000, out) == out
    pts = _polyline_points(out)
    # start point within 0.01 of the compressed rho (radius 1/2, angle 60 deg)
    cx, cy, scale = 500.0, 500.0, 450.0
    x0 = (pts[0][0] - cx) / scale
    y0 = (cy - pts[0][1]) / scale
    target = 0.5 * cmath.exp(1j * math.pi / 3)
    assert abs(complex(x0, y0) - target) < 0.01
    # full-period curve crosses the compressed equator 6*|omega| times;
    # vertices rounded onto the circle itself are skipped
    radii = [math.hypot(x - cx, cy - y) / scale for x, y in pts]
    sides = [r > 0.5 for r in radii if abs(r - 0.5) > 1e-6]
    crossings = sum(1 for s0, s1 in zip(sides, sides[1:]) if s0 != s1)
    assert crossings == 6 * len(omega(level_slope_of(4, -5)))


def test_csv_shape(tmp_path):
    nt = normalize(4, -5)
    out = str(tmp_path / "shape.csv")
    csv_shape(nt, 0.05, 100, out)
    lines = open(out).read().splitlines()
    assert lines[0] == "t,re_psi,im_psi"
    assert len(lines) == 101
    t, re, im = map(float, lines[1].split(","))
    assert abs(t - start_offset(nt)) < 1e-15
    assert abs(complex(re, im)) > 0


def test_farey_edges_oracle():
    # brute-force neighbor enumeration over [0,1]
    fracs = sorted({Fraction(p, q) for q in range(1, 4) for p in range(0, q + 1) if gcd(p, q) == 1})
    brute = [
        (u, v)
        for i, u in enumerate(fracs)
        for v in fracs[i + 1:]
        if abs(u.numerator * v.denominator - u.denominator * v.numerator) == 1
    ]
    assert len(brute) == 7
    assert sorted(farey_edges(0, 1, 3)) == sorted(brute)
    # max denominator 1: consecutive integers only
    assert farey_edges(0, 3, 1) == [
        (Fraction(0), Fraction(1)), (Fraction(1), Fraction(2)), (Fraction(2), Fraction(3))
    ]


def test_svg_halfplane(tmp_path):
    out = str(tmp_path / "axis.svg")
    svg_halfplane(Psl2Mat(10, 3, 3, 1), 3, out)
    text = open(out).read()
    root = ET.fromstring(text)
    assert root.tag.endswith("svg")
    assert "3.302776" in text and "-0.302776" in text
