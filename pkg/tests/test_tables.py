import pytest

from dendrikit.errors import UnknownTable
from dendrikit.field import QQ, gf
from dendrikit.tables import FAMILIES, verify_table


@pytest.mark.parametrize("which", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("F", [QQ, gf(3), gf(5)], ids=["q", "gf3", "gf5"])
def test_tables_verify(which, F):
    res = verify_table(which, F)
    assert res.rows
    assert res.ok, "\n".join(f"{r.label}: {r.detail}" for r in res.rows if r.ok is False)


def test_render_shows_status():
    text = verify_table(3).render()
    assert text.startswith("Table 3")
    assert "VERIFIED" in text and "FAILED" not in text


def test_table1_notes_duplicate_column():
    notes = " ".join(verify_table(1).notes)
    assert "column 7 repeats column 4" in notes
    assert "(0,0,0,1)" in notes


def test_case_sixteen_printed_representative():
    res = verify_table(2)
    assert any(n.startswith("case 16") and "(F5)" in n for n in res.notes)


def test_every_family_has_rows():
    labels = [r.label for r in verify_table(2).rows]
    for n in FAMILIES:
        assert f"case {n}" in labels


def test_unknown_table():
    with pytest.raises(UnknownTable) as info:
        verify_table(9)
    assert str(info.value) == "no table 9; choose 1-5"
