"""Run the doctests embedded in the library modules."""

import doctest

from absorder import cycles, perms, series


def test_perms_doctests():
    assert doctest.testmod(perms).failed == 0


def test_cycles_doctests():
    assert doctest.testmod(cycles).failed == 0


def test_series_doctests():
    assert doctest.testmod(series).failed == 0
