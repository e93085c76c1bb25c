import pytest

import khlab as K
from khlab.braid import crossing_ids
from khlab.errors import InputError, NonPositiveWordError


def test_parse_simple():
    w = K.parse_braid("1 1 1")
    assert w.strands == 2
    assert w.letters == ((1, 1), (1, 1), (1, 1))


def test_parse_mixed_signs():
    w = K.parse_braid("1 -2 1 -2")
    assert w.strands == 3
    assert w.letters == ((1, 1), (2, -1), (1, 1), (2, -1))


def test_parse_strand_directive():
    w = K.parse_braid("p=4; 1 3 1 3")
    assert w.strands == 4
    assert len(w.letters) == 4


def test_parse_free_strands_allowed():
    assert K.parse_braid("p=5; 1 1").strands == 5


def test_parse_rejects_zero():
    with pytest.raises(InputError):
        K.parse_braid("0 1")


def test_parse_rejects_malformed_token():
    with pytest.raises(InputError):
        K.parse_braid("1 x 2")


def test_parse_rejects_small_explicit_strand_count():
    with pytest.raises(InputError):
        K.parse_braid("p=2; 2")


def test_parse_empty_word():
    w = K.parse_braid("p=3;")
    assert w.strands == 3 and w.letters == ()


def test_classify_single_generator():
    ids = K.classify_crossings(K.parse_braid("1 1 1"))
    assert [(c.generator, c.occurrence) for c in ids] == [(1, 1), (1, 2), (1, 3)]


def test_classify_orders_by_generator_then_occurrence():
    ids = K.classify_crossings(K.parse_braid("2 1 2 1"))
    assert [(c.generator, c.occurrence) for c in ids] == \
        [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_classify_empty():
    assert K.classify_crossings(K.parse_braid("p=1;")) == []


def test_classify_is_sorted_and_complete():
    w = K.parse_braid("2 1 3 1 2 2")
    ids = K.classify_crossings(w)
    assert len(ids) == len(w.letters)
    assert ids == sorted(ids)
    assert sorted(crossing_ids(w)) == ids


def test_permutation_trefoil():
    perm = K.braid_permutation(K.parse_braid("1 1 1"))
    assert perm.mapping == (2, 1)
    assert perm.component_count == 1


def test_permutation_four_letters():
    perm = K.braid_permutation(K.parse_braid("1 2 1 2"))
    assert perm.component_count == 1
    assert len(perm.cycles[0]) == 3


def test_permutation_two_component_link():
    perm = K.braid_permutation(K.parse_braid("1 1"))
    assert perm.mapping == (1, 2)
    assert perm.component_count == 2


def test_closure_signs_copied():
    d = K.braid_closure(K.parse_braid("1 1 1"))
    assert d.n_plus == 3 and d.n_minus == 0
    assert d.crossing_count == 3


def test_closure_mixed_signs():
    d = K.braid_closure(K.parse_braid("1 -1"))
    assert d.n_plus == 1 and d.n_minus == 1


def test_closure_free_loops():
    d = K.braid_closure(K.parse_braid("p=2;"))
    assert d.crossing_count == 0 and d.free_loops == 2


def test_closure_crossing_count_matches_letters():
    for text in ["1 1 1", "1 2 1 2", "p=4; 1 3 1 3", "1 -2 1 -2"]:
        w = K.parse_braid(text)
        assert K.braid_closure(w).crossing_count == len(w.letters)


def test_closure_zero_resolution_circles_equal_cycle_count():
    # For positive words both equal the strand count.
    for text in ["1 1 1", "1 2 1 2", "p=4; 1 3 1 3", "1 1 2 2"]:
        w = K.parse_braid(text)
        d = K.braid_closure(w)
        res = K.resolve(d, (0,) * d.crossing_count)
        assert res.circle_count == w.strands


def test_reduced_trefoil():
    assert K.reduced_diagram(K.parse_braid("1 1 1")).letters == ((1, 1),)


def test_reduced_keeps_each_generator_once():
    r = K.reduced_diagram(K.parse_braid("1 1 2 2"))
    assert r.letters == ((1, 1), (2, 1))


def test_reduced_skips_unused_generators():
    r = K.reduced_diagram(K.parse_braid("p=4; 1 3 1 3"))
    assert r.letters == ((1, 1), (3, 1))
    assert r.strands == 4


def test_reduced_idempotent():
    for text in ["1 1 1", "1 1 2 2", "p=4; 1 3 1 3", "1 2 2 1"]:
        w = K.parse_braid(text)
        once = K.reduced_diagram(w)
        assert K.reduced_diagram(once) == once


def test_reduced_rejects_negative_letters():
    with pytest.raises(NonPositiveWordError):
        K.reduced_diagram(K.parse_braid("1 -1"))
