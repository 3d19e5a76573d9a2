import pytest

from wreathdecomp import goldens
from wreathdecomp.perm import f_set, format_cycles, parse_cycles


def test_every_golden_check_passes():
    failed = [(c.name, c.detail) for c in goldens.check_all("all") if not c.passed]
    assert failed == []


def test_scopes_partition_the_checks():
    appendix = goldens.check_all("appendix")
    tables = goldens.check_all("goldens")
    assert len(appendix) == 15 + 14
    assert len(goldens.check_all("all")) == len(appendix) + len(tables)
    with pytest.raises(ValueError):
        goldens.check_all("nope")


def test_f15_listing_is_exact():
    sigmas = f_set(15)
    for i, text in goldens.F15_LISTING.items():
        assert sigmas[i] == parse_cycles(text, 15), i


def test_canonical_printing_of_f15():
    assert format_cycles(f_set(15)[1]) == "(0,1,14,2,3,4,5,6,7,8,9,10,11,12,13)"
    assert format_cycles(f_set(15)[7]) == "(0,7)(1,8)(2,9)(3,10)(4,11)(5,12,14)(6,13)"


@pytest.mark.parametrize("c", [5, 7])
def test_eleven_tables_have_m_pairs(c):
    table = goldens.ELEVEN[c]
    assert len(table.d_t) == c and len(table.d_h) == 11 - c
    assert sorted(a for a, _ in table.d_t + table.d_h) == list(range(11))
    assert sorted(b for _, b in table.d_t + table.d_h) == list(range(11))


def test_checks_detect_a_corrupted_listing(monkeypatch):
    broken = dict(goldens.F15_LISTING)
    broken[3] = broken[5]
    monkeypatch.setattr(goldens, "F15_LISTING", broken)
    names = [c.name for c in goldens.check_f15() if not c.passed]
    assert names == ["F_15 sigma_3"]
