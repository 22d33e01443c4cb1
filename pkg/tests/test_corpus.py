import numpy as np
import pytest

from src.config.settings import CORPUS_GOOD_JR_BOUND, CORPUS_MAX_EXPONENT
from src.errors import PreconditionError
from src.reduction.joint import check_good_jr
from src.reduction.kirby_mehran import s_length
from src.verify.corpus import find_good_jr, random_primary_ideal, search_corpus
from src.verify.theorems import verify_equivalences


def test_random_ideals_are_m_primary(ring):
    rng = np.random.default_rng(3)
    for _ in range(20):
        ideal = random_primary_ideal(rng, ring)
        bounds = ideal.pure_power_bounds()
        assert bounds is not None
        assert max(bounds) <= CORPUS_MAX_EXPONENT


def test_variables_found_for_maximal_ideal(m):
    triple = find_good_jr([m, m, m])
    assert triple is not None
    assert sorted(triple.elements) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_search_rejects_bad_arguments():
    with pytest.raises(PreconditionError):
        search_corpus(1, 0)


@pytest.mark.slow
def test_corpus_is_seeded_and_admissible():
    first = search_corpus(11, 3, max_attempts=60)
    second = search_corpus(11, 3, max_attempts=60)
    assert [e.as_record() for e in first] == [e.as_record() for e in second]
    for entry in first:
        triple = entry.triple()
        assert triple.is_m_primary()
        assert check_good_jr(triple, CORPUS_GOOD_JR_BOUND).passed


@pytest.mark.slow
def test_equivalences_hold_on_corpus():
    for entry in search_corpus(5, 3, max_attempts=60):
        triple = entry.triple()
        report = verify_equivalences(*entry.ideals, triple, CORPUS_GOOD_JR_BOUND)
        assert report.consistent
        values = [s_length(triple, (k, k, k)) for k in range(1, 4)]
        assert values == sorted(values)
