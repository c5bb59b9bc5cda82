import pytest

from khv.diagram import parse_pd
from khv.polynomials import _count_circles
from khv.statecube import State, StateCube, enumerate_enhanced, gradings, resolve

from conftest import POS_KINK, RIGHT_TREFOIL, random_diagrams


def test_unknot_single_circle():
    d = parse_pd("U")
    assert resolve(d, State(0, 0)).count == 1


def test_kink_smoothings():
    d = parse_pd(POS_KINK)
    counts = {resolve(d, State.from_markers([m])).count for m in (1, -1)}
    assert counts == {1, 2}
    # the positive marker is the oriented smoothing of a positive crossing
    assert resolve(d, State.from_markers([1])).count == 2


def test_trefoil_oriented_state_two_circles():
    d = parse_pd(RIGHT_TREFOIL)
    assert resolve(d, State.from_markers([1, 1, 1])).count == 2


def test_circle_indexing_by_lowest_edge():
    d = parse_pd(RIGHT_TREFOIL)
    cs = resolve(d, State(0, 3))
    mins = [min(c) for c in cs.circles]
    assert mins == sorted(mins) and mins[0] == 1
    assert set(cs.membership) == set(range(1, 7))


def test_state_sigma_parity():
    for mask in range(8):
        s = State(mask, 3)
        assert abs(s.sigma) <= 3 and (s.sigma - 3) % 2 == 0


def test_unknot_enhanced_states():
    got = sorted((s.i, s.j) for s in enumerate_enhanced(parse_pd("U")))
    assert got == [(0, -1), (0, 1)]


def test_kink_enhanced_count():
    assert len(list(enumerate_enhanced(parse_pd(POS_KINK)))) == 6


def test_extremal_state_arithmetic():
    # w = 0, sigma = 4m, tau = -1 - 2m for m = 2
    assert gradings(0, 8, -5) == (-4, -9)
    for m in range(2, 7):
        assert gradings(0, 4 * m, -1 - 2 * m) == (-2 * m, -4 * m - 1)


def test_odd_w_minus_sigma_rejected():
    with pytest.raises(ValueError):
        gradings(1, 2, 0)


def _check_invariants(d):
    w = d.writhe
    n_states = 0
    total = 0
    for es in enumerate_enhanced(d):
        assert es.j - w - es.i - es.tau == 0
        assert 2 * es.i - w + es.state.sigma == 0
        if d.components % 2:
            assert es.j % 2 != 0
        else:
            assert es.j % 2 == 0
        total += 1
    for mask in range(1 << len(d.crossings)):
        n_states += 2 ** _count_circles(d, mask)
    assert total == n_states


def test_grading_invariants_corpus(corpus_entries):
    for entry in corpus_entries.values():
        _check_invariants(entry.diagram)


def test_grading_invariants_random():
    for d in random_diagrams(40):
        _check_invariants(d)


def test_enumeration_deterministic(right_trefoil):
    a = [es.key for es in StateCube(right_trefoil).enumerate_enhanced()]
    b = [es.key for es in enumerate_enhanced(right_trefoil)]
    assert a == b
    assert [k[0] for k in a] == sorted(k[0] for k in a)
