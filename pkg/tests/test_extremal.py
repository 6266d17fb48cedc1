import pytest

from turanlab.catalog import bowtie, clique, path
from turanlab.errors import TuranLabError, UnsupportedSizeError
from turanlab.extremal import brute_force_ex, check_turan_good_at
from turanlab.graph import is_isomorphic
from turanlab.multipartite import count_copies_in_multipartite, realize_multipartite, turan_parts


def test_triangles_without_k4(k3):
    report = brute_force_ex(5, k3, 4)
    assert report.maximum == 4
    assert report.turan_is_unique_max
    assert is_isomorphic(report.extremal_graphs[0], realize_multipartite(turan_parts(3, 5)))


def test_p4_in_k5_free_graphs_on_four_vertices(p4, k4):
    report = brute_force_ex(4, p4, 5)
    assert report.maximum == 12
    assert report.extremal_graphs == [k4]
    assert report.turan_is_max


def test_forced_small_case(p3):
    good, report = check_turan_good_at(3, p3, 3)
    assert good
    assert report.maximum == 1


def test_p4_on_seven_vertices(p4):
    report = brute_force_ex(7, p4, 4)
    assert report.turan_is_max
    assert report.maximum == count_copies_in_multipartite(p4, turan_parts(3, 7))


@pytest.mark.parametrize("n, h, k", [(6, path(4), 4), (6, path(3), 3), (5, clique(3), 5)])
def test_maximal_search_agrees_with_full_search(n, h, k):
    maximal = brute_force_ex(n, h, k, maximal_only=True)
    full = brute_force_ex(n, h, k, maximal_only=False)
    assert maximal.maximum == full.maximum
    assert maximal.turan_value == full.turan_value
    assert maximal.search_space == "maximal"
    assert full.search_space == "all"
    assert full.classes_searched > maximal.classes_searched


@pytest.mark.parametrize("n, r, k", [(6, 3, 4), (7, 2, 3), (7, 3, 5)])
def test_cliques_are_maximized_uniquely(n, r, k):
    assert brute_force_ex(n, clique(r), k).turan_is_unique_max


def test_limits(p4):
    with pytest.raises(UnsupportedSizeError):
        brute_force_ex(10, p4, 4)
    with pytest.raises(UnsupportedSizeError):
        brute_force_ex(9, p4, 4, maximal_only=False)
    with pytest.raises(TuranLabError):
        brute_force_ex(5, p4, 1)


@pytest.mark.slow
@pytest.mark.parametrize(
    "h, k",
    [(path(4), 4), (path(5), 4), (path(4), 5)],
)
def test_desk_scale_turan_goodness(h, k):
    for n in range(5, 9):
        good, report = check_turan_good_at(n, h, k)
        assert good, n
        assert report.maximum == count_copies_in_multipartite(h, turan_parts(k - 1, n))


@pytest.mark.slow
@pytest.mark.parametrize("h", [path(4), bowtie()])
def test_seven_clique_free_goodness(h):
    for n in range(h.n, 9):
        good, report = check_turan_good_at(n, h, 7)
        assert good, n
        assert report.maximum == count_copies_in_multipartite(h, turan_parts(6, n))


@pytest.mark.slow
@pytest.mark.parametrize("r, k", [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5)])
def test_zykov_uniqueness_at_desk_scale(r, k):
    for n in range(5, 9):
        assert brute_force_ex(n, clique(r), k).turan_is_unique_max, n
