import pytest

from chromakit.formulas import complete_closed_form, cycle_closed_form, path_closed_form
from chromakit.graph import complete_graph, cycle_graph, path_graph
from chromakit.oracle import count_proper_colorings
from chromakit.polynomial import ONE, ZERO, evaluate, from_coefficients


def test_small_cycles():
    assert cycle_closed_form(1) == ZERO
    assert cycle_closed_form(2) == from_coefficients([0, -1, 1])
    assert cycle_closed_form(3) == from_coefficients([0, 2, -3, 1])


def test_small_paths():
    assert path_closed_form(1) == from_coefficients([0, 1])
    assert path_closed_form(2) == from_coefficients([0, -1, 1])
    assert evaluate(path_closed_form(5), 3) == count_proper_colorings(path_graph(5), 3) == 48


def test_complete():
    assert complete_closed_form(3) == cycle_closed_form(3)
    assert complete_closed_form(0) == ONE
    assert evaluate(complete_closed_form(4), 4) == count_proper_colorings(complete_graph(4), 4) == 24


def test_invalid_sizes():
    for fn in (cycle_closed_form, path_closed_form):
        with pytest.raises(ValueError):
            fn(0)
    with pytest.raises(ValueError):
        complete_closed_form(-1)


@pytest.mark.parametrize("n", range(1, 21))
def test_inductive_identity(n):
    assert cycle_closed_form(n + 1) == path_closed_form(n + 1) - cycle_closed_form(n)


@pytest.mark.parametrize("n", range(1, 21))
def test_two_colorings_of_cycles(n):
    assert evaluate(cycle_closed_form(n), 2) == (2 if n % 2 == 0 else 0)


@pytest.mark.parametrize("n", range(1, 12))
def test_path_matches_integer_arithmetic(n):
    for lam in range(1, 9):
        assert evaluate(path_closed_form(n), lam) == lam * (lam - 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_cycle_matches_oracle(n):
    for lam in range(6):
        assert evaluate(cycle_closed_form(n), lam) == count_proper_colorings(cycle_graph(n), lam)


@pytest.mark.parametrize("k", range(0, 7))
def test_complete_matches_oracle(k):
    for lam in range(7):
        assert evaluate(complete_closed_form(k), lam) == count_proper_colorings(complete_graph(k), lam)
