import pytest

from kdcfg.parser import parse, recognize
from kdcfg.pumping import (
    find_pumps,
    ogden_certificate,
    pump_decompose,
    pump_word,
    pumping_certificate,
    realign,
)
from kdcfg.utils.errors import NotMember, PositionOutOfRange

LONG = "a" * 16


def _check(g, w, certificate, selected):
    d = certificate.decomposition
    assert certificate.selected_hit in selected
    assert d.covers(certificate.selected_hit)
    assert d.pumped_length > 0
    assert pump_word(d, 1).plain() == w
    for power in (0, 2):
        assert recognize(g, pump_word(d, power))


@pytest.mark.parametrize("i", range(16))
def test_every_position_can_be_pumped(g1_cnf, i):
    certificate = ogden_certificate(g1_cnf, LONG, {i})
    assert certificate is not None
    assert certificate.selected_hit == i
    _check(g1_cnf, LONG, certificate, {i})


def test_several_positions(g1_cnf):
    selected = {3, 9, 12}
    certificate = ogden_certificate(g1_cnf, LONG, selected)
    _check(g1_cnf, LONG, certificate, selected)
    assert certificate.to_payload()["selected_hit"] == certificate.selected_hit


@pytest.mark.parametrize("w", ["abbaabba", "babbbabb", "abaaaabaaa"])
def test_found_certificates_pump_a_selected_position(g1_cnf, w):
    for i in range(len(w)):
        certificate = ogden_certificate(g1_cnf, w, {i})
        if certificate is not None:
            _check(g1_cnf, w, certificate, {i})


def test_empty_selection_is_the_plain_search(g1_cnf):
    plain = pumping_certificate(g1_cnf, LONG)
    selective = ogden_certificate(g1_cnf, LONG, set())
    assert selective.decomposition == plain.decomposition
    assert selective.selected_hit is None


@pytest.mark.parametrize("bad", [16, -1, 100])
def test_position_out_of_range(g1_cnf, bad):
    with pytest.raises(PositionOutOfRange):
        ogden_certificate(g1_cnf, LONG, {0, bad})


def test_not_member(g1_cnf):
    with pytest.raises(NotMember):
        ogden_certificate(g1_cnf, "aab", {0})


def test_realign_keeps_pumped_words(g1_cnf):
    t = parse(g1_cnf, LONG)
    d = pump_decompose(t, find_pumps(t)[0])
    for q in range(16):
        aligned = realign(d, {q})
        if aligned is None:
            continue
        moved, hit = aligned
        assert hit == q and moved.covers(q)
        for power in range(4):
            assert pump_word(moved, power) == pump_word(d, power)


def test_realign_leaves_covering_decompositions_alone(g1_cnf):
    t = parse(g1_cnf, LONG)
    d = pump_decompose(t, find_pumps(t)[0])
    start, _ = next(span for span in d.windows().values() if span[1] > span[0])
    assert realign(d, {start}) == (d, start)


@pytest.mark.parametrize("i", range(16))
def test_realigned_flag_matches_the_pump(g1_cnf, i):
    certificate = ogden_certificate(g1_cnf, LONG, {i})
    from_nodes = pump_decompose(certificate.tree, certificate.pump)
    assert certificate.realigned == (certificate.decomposition != from_nodes)
