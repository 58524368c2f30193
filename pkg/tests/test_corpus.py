import pytest

from koszulkit import corpus
from koszulkit.errors import InputError


def test_names_are_stable():
    assert corpus.names() == ["case66", "case54", "case55", "case71v16",
                              "socle4", "stretched32", "stretched22"]
    for name in corpus.names():
        assert corpus.has(name)
    assert not corpus.has("case00")


def test_unknown_name_raises():
    with pytest.raises(InputError):
        corpus.get_text("case00")


def test_get_ring_is_cached():
    assert corpus.get_ring("case54") is corpus.get_ring("case54")


def test_relation_counts_match_presentations():
    counts = {"case66": 6, "case54": 6, "case55": 6, "case71v16": 7,
              "socle4": 13, "stretched32": 5, "stretched22": 3}
    for name, count in counts.items():
        assert len(corpus.get_definition(name).relations) == count


def test_labels():
    for name in corpus.names():
        assert corpus.get_ring(name).label == name
