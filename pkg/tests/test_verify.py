"""Smoke checks for the cross-validation suites at reduced bounds."""

import pytest

from lissbraid.verify import SUITES

BOUNDS = {
    "epsilon": {"max_m": 12, "nonprimitive_max": 8},
    "collision": {"max_freq": 7},
    "bijection": {"max_m": 40, "max_sum": 20, "max_level": 4},
    "cf": {"max_m": 20},
    "cluster": {"max_m": 30, "seed": 1},
    "syzygy": {"max_m": 8},
}


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    cases = SUITES[name](**BOUNDS[name])
    assert cases
    failures = [c for c in cases if not c[1]]
    assert not failures, failures[:5]
