from pathlib import Path

from koszulkit import corpus
from koszulkit.resolutions import betti_table_R_over_Q
from koszulkit.tables import BettiTable, emit_betti_table

GOLDEN = Path(__file__).parent / "golden"


def test_drops_zero_entries_and_compares_by_content():
    t = BettiTable({(0, 0): 1, (1, 2): 3, (2, 4): 0}, label="a")
    assert (2, 4) not in t.entries
    assert t == BettiTable({(1, 2): 3, (0, 0): 1}, label="b")
    assert t.get(2, 4) == 0


def test_totals_and_strands():
    t = BettiTable({(0, 0): 1, (1, 2): 4, (2, 3): 2, (2, 4): 5})
    assert t.totals() == [1, 4, 7]
    assert t.max_strand == 2
    assert t.strand_row(1) == [0, 4, 2]
    assert t.strand_row(2) == [0, 0, 5]


def test_emit_single_entry():
    # Q/(x^2) over Q in one variable: Koszul relation column only.
    out = emit_betti_table(BettiTable({(0, 0): 1, (1, 2): 1}))
    assert out == ("            0 1\n"
                   "     total: 1 1\n"
                   "         0: 1 .\n"
                   "         1: . 1\n")


def test_emit_matches_golden_tables():
    for name, fname in [("case54", "betti_case54_over_poly.txt"),
                        ("socle4", "betti_socle4_over_poly.txt")]:
        table = betti_table_R_over_Q(corpus.get_ring(name))
        want = (GOLDEN / fname).read_text()
        assert emit_betti_table(table) == want
