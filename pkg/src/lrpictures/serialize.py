"""JSON object forms for every value the command line reads or writes.

Partitions are arrays of row lengths, skew shapes are ``{"outer", "inner"}``,
cells are ``[row, col]`` pairs, tableaux carry their shape plus entry rows
(barred letters as negative ints), pictures list their cell pairs sorted by
domain cell.
"""

from __future__ import annotations

from .diagram import Partition, SkewShape, as_partition
from .picture import Picture
from .reading import AdmissibleOrder
from .tableau import Tableau


def partition_to_obj(p: Partition) -> list[int]:
    return list(p)


def partition_from_obj(obj) -> Partition:
    if not isinstance(obj, list) or not all(isinstance(v, int) for v in obj):
        raise ValueError(f"a partition must be an array of ints, got {obj!r}")
    return as_partition(obj)


def shape_to_obj(s: SkewShape) -> dict:
    return {"outer": list(s.outer), "inner": list(s.inner)}


def shape_from_obj(obj) -> SkewShape:
    if not isinstance(obj, dict) or "outer" not in obj:
        raise ValueError(f"a shape must be an object with an 'outer' array, got {obj!r}")
    return SkewShape(
        partition_from_obj(obj["outer"]), partition_from_obj(obj.get("inner", []))
    )


def tableau_to_obj(t: Tableau) -> dict:
    return {"shape": shape_to_obj(t.shape), "rows": [list(r) for r in t.rows]}


def tableau_from_obj(obj) -> Tableau:
    if not isinstance(obj, dict) or "shape" not in obj or "rows" not in obj:
        raise ValueError("a tableau must be an object with 'shape' and 'rows'")
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(
        isinstance(r, list) and all(isinstance(e, int) for e in r) for r in rows
    ):
        raise ValueError("'rows' must be an array of int arrays")
    return Tableau(shape_from_obj(obj["shape"]), tuple(tuple(r) for r in rows))


def cell_from_obj(obj) -> tuple[int, int]:
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(v, int) for v in obj)):
        raise ValueError(f"a cell must be a [row, col] pair, got {obj!r}")
    return (obj[0], obj[1])


def picture_to_obj(p: Picture) -> dict:
    return {
        "domain": shape_to_obj(p.domain),
        "codomain": shape_to_obj(p.codomain),
        "map": [[list(u), list(v)] for u, v in sorted(p.forward.items())],
    }


def picture_from_obj(obj) -> Picture:
    if not isinstance(obj, dict) or not {"domain", "codomain", "map"} <= set(obj):
        raise ValueError("a picture must be an object with 'domain', 'codomain' and 'map'")
    pairs = obj["map"]
    if not isinstance(pairs, list):
        raise ValueError("'map' must be an array of cell pairs")
    forward = {}
    for pair in pairs:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ValueError(f"each map item must be a [cell, cell] pair, got {pair!r}")
        forward[cell_from_obj(pair[0])] = cell_from_obj(pair[1])
    return Picture(shape_from_obj(obj["domain"]), shape_from_obj(obj["codomain"]), forward)


def order_to_obj(order: AdmissibleOrder) -> list:
    return [list(c) for c in order.cells]


def order_from_obj(obj) -> AdmissibleOrder:
    if not isinstance(obj, list):
        raise ValueError("an order must be an array of cells")
    return AdmissibleOrder(cell_from_obj(c) for c in obj)
