import logging
from bisect import bisect_right
from collections import Counter
from typing import Any, Sequence

from errors import NotSemistandard
from tableaux import Labeled, Tableau, first_violation

logger = logging.getLogger(__name__)

Word = tuple


def knuth_moves(w: Sequence) -> set[Word]:
    """Words one (K) or (K') step away from w, in either direction."""
    w = tuple(w)
    moves: set[Word] = set()
    for i in range(len(w) - 2):
        x, y, z = w[i:i + 3]
        swapped: list[tuple] = []
        # (K): b c a <-> b a c with a < b <= c
        if z < x <= y:
            swapped.append((x, z, y))
        if y < x <= z:
            swapped.append((x, z, y))
        # (K'): a c b <-> c a b with a <= b < c
        if x <= z < y:
            swapped.append((y, x, z))
        if y <= z < x:
            swapped.append((y, x, z))
        for triple in swapped:
            moves.add(w[:i] + triple + w[i + 3:])
    return moves


def _row_insert(rows: list[list], letter: Any) -> None:
    for row in rows:
        i = bisect_right(row, letter)
        if i == len(row):
            row.append(letter)
            return
        row[i], letter = letter, row[i]
    rows.append([letter])


def p_tableau(w: Sequence) -> Tableau:
    rows: list[list] = []
    for letter in w:
        _row_insert(rows, letter)
    return Tableau.from_rows(rows)


def knuth_equivalent(w: Sequence, w2: Sequence) -> bool:
    return p_tableau(w) == p_tableau(w2)


def phi_w(w: Sequence[int]) -> Word:
    seen: Counter = Counter()
    labeled = []
    for k in w:
        seen[k] += 1
        labeled.append(Labeled(k, seen[k]))
    return tuple(labeled)


def phi_t(t: Tableau) -> Tableau:
    violation = first_violation(t)
    if violation is not None:
        raise NotSemistandard(*violation)
    seen: Counter = Counter()
    labeled: dict = {}
    for cell, k in sorted(t.entries, key=lambda item: (-item[0][0], item[0][1])):
        seen[k] += 1
        labeled[cell] = Labeled(k, seen[k])
    return Tableau.from_mapping(labeled)


def _unlabel(entry: Any) -> Any:
    return entry.k if isinstance(entry, Labeled) else entry


def label_off(x: Tableau | Sequence) -> Tableau | Word:
    if isinstance(x, Tableau):
        return x.map(_unlabel)
    return tuple(_unlabel(letter) for letter in x)
