"""Catalog contents pinned against a golden file."""

import pytest

from twoloop.catalog import catalog, lookup
from twoloop.seifert import SeifertMatrix, alexander, conway_a2, half_conway_a2

from cli_cases import GOLDEN


def test_entries():
    names = [e.name for e in catalog()]
    assert names == ["unknot", "trefoil-right", "trefoil-left", "figure-eight",
                     "wh-surface-plus", "wh-surface-minus"]
    assert lookup("trefoil-right").matrix == SeifertMatrix([[-1, 1], [0, -1]])
    assert lookup("unknot").matrix.n == 0
    with pytest.raises(ValueError):
        lookup("granny")


def test_catalog_returns_fresh_list():
    c = catalog()
    c.clear()
    assert len(catalog()) == 6


def test_invariants_golden():
    lines = []
    for e in catalog():
        a = alexander(e.matrix)
        lines.append(f"{e.name}: alexander = {a} ; a2 = {conway_a2(e.matrix)}"
                     f" ; a-cor = {half_conway_a2(e.matrix)}")
    got = "\n".join(lines) + "\n"
    expected = (GOLDEN / "catalog_invariants.txt").read_text(encoding="utf-8")
    assert got == expected
