import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dp_width, segment_feasible
from queenfn import _kernels
from queenfn.core import Arrangement, LinearMap, materialize, validate
from queenfn.width import fit_class, fit_segment, min_width, orbit_min_width
from queenfn.errors import InvalidInput

perms = st.integers(1, 14).flatmap(lambda n: st.permutations(range(1, n + 1)))


def test_fit_segment_examples():
    a = Arrangement.of([2, 4, 6, 1, 3, 5])
    assert fit_segment(a, 1, 6) == (LinearMap(2, 0), LinearMap(2, 0))
    b = Arrangement.of([2, 4, 1, 3, 5])
    assert fit_segment(b, 1, 5) is None
    assert fit_segment(b, 1, 2) is not None
    with pytest.raises(InvalidInput):
        fit_segment(b, 0, 3)


def test_fit_class_smallest_multiplier():
    a = Arrangement.of([2, 4, 6, 1, 3, 5])
    assert fit_class(a, []) == LinearMap(1, 0)
    # a single point is fit by every multiplier; the smallest wins
    assert fit_class(a, [3]) == LinearMap(1, 3)


def test_fit_class_without_modular_inverse():
    # n + 1 = 8, even rows 2 and 6 differ by 4; multipliers 2 and 4 are not invertible mod 8
    a = Arrangement.of([5, 4, 1, 8, 3, 7, 2, 6])
    m = fit_class(a, [2, 4, 6, 8])
    pts = [(i, a.perm[i - 1]) for i in (2, 4, 6, 8)]
    assert (m is None) == (not any(all((k * i + b) % 9 == v for i, v in pts) for k in range(1, 9) for b in range(9)))


@given(perms, st.data())
def test_fit_segment_matches_brute_force(p, data):
    n = len(p)
    lo = data.draw(st.integers(1, n))
    hi = data.draw(st.integers(lo, n))
    a = Arrangement.of(p)
    fit = fit_segment(a, lo, hi)
    assert (fit is not None) == segment_feasible(p, lo, hi)
    if fit is not None:
        odd, even = fit
        m = n + 1
        for i in range(lo, hi + 1):
            f = odd if i % 2 else even
            assert (f.a * i + f.b) % m == p[i - 1]


@given(perms, st.data())
def test_feasibility_closed_under_restriction(p, data):
    n = len(p)
    lo = data.draw(st.integers(1, n))
    hi = data.draw(st.integers(lo, n))
    if segment_feasible(p, lo, hi):
        lo2 = data.draw(st.integers(lo, hi))
        hi2 = data.draw(st.integers(lo2, hi))
        assert segment_feasible(p, lo2, hi2)


@given(perms)
def test_min_width_round_trip_and_optimal(p):
    a = Arrangement.of(p)
    w, f = min_width(a)
    assert f.width == w
    assert materialize(f) == a
    assert w == dp_width(p)


@given(perms)
@settings(max_examples=200)
def test_kernel_matches_python(p):
    n = len(p)
    k = _kernels.widths(np.array([p], dtype=np.int16), n)
    assert int(k[0]) == min_width(Arrangement.of(p))[0]


def test_identity_has_width_one():
    assert min_width(Arrangement.of(range(1, 20)))[0] == 1


def test_non_permutation_rejected():
    with pytest.raises(InvalidInput):
        min_width(Arrangement.of([1, 1, 2]))


def test_fifteen_board_width_two_example():
    a = Arrangement.of([3, 5, 7, 9, 11, 13, 15, 1, 6, 4, 10, 8, 14, 12, 2])
    assert a.n == 15
    w, f = min_width(a)
    assert w == 2 == dp_width(a.perm)
    assert materialize(f) == a
    assert validate(a)


def test_fifteen_board_parity_blind_segments():
    a = Arrangement.of([1, 7, 13, 3, 9, 15, 5, 11, 6, 12, 2, 8, 14, 4, 10])
    w, f = min_width(a)
    assert w == 2 == dp_width(a.perm)
    first, second = f.segments
    assert first.odd_map == first.even_map == LinearMap(6, 11)
    assert second.odd_map == second.even_map == LinearMap(6, 0)


def test_orbit_min_width_at_most_width():
    a = Arrangement.of([1, 3, 10, 7, 9, 11, 2, 4, 6, 8, 5])
    assert orbit_min_width(a) == 5 <= min_width(a)[0]
