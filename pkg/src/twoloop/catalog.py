"""Built-in Seifert matrices for the worked examples."""

from __future__ import annotations

from dataclasses import dataclass

from .seifert import SeifertMatrix


@dataclass(frozen=True)
class KnotCatalogEntry:
    name: str
    matrix: SeifertMatrix
    notes: str


_ENTRIES = [
    KnotCatalogEntry("unknot", SeifertMatrix([]),
                     "empty surface; every invariant here is trivial"),
    KnotCatalogEntry("trefoil-right", SeifertMatrix([[-1, 1], [0, -1]]),
                     "right-handed trefoil on its genus-1 surface"),
    KnotCatalogEntry("trefoil-left", SeifertMatrix([[1, 0], [-1, 1]]),
                     "mirror of trefoil-right (negated transpose)"),
    KnotCatalogEntry("figure-eight", SeifertMatrix([[1, 1], [0, -1]]),
                     "figure-eight knot; degree-2 coefficient is -1"),
    KnotCatalogEntry("wh-surface-plus", SeifertMatrix([[0, 1], [0, 1]]),
                     "genus-1 surface of a positive-clasp untwisted double"),
    KnotCatalogEntry("wh-surface-minus", SeifertMatrix([[0, 1], [0, -1]]),
                     "genus-1 surface of a negative-clasp untwisted double"),
]


def catalog() -> list[KnotCatalogEntry]:
    """All built-in entries, in a stable order."""
    return list(_ENTRIES)


def lookup(name: str) -> KnotCatalogEntry:
    for entry in _ENTRIES:
        if entry.name == name:
            return entry
    known = ", ".join(e.name for e in _ENTRIES)
    raise ValueError(f"unknown knot {name!r} (catalog: {known})")
