"""Partitions, Young-diagram boxes, residues and dominance.

Rows and columns are 1-based, English convention (row 1 on top).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zeros are stripped on construction, so ``Partition((2, 1, 0)) == Partition((2, 1))``.
    """

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, row: int) -> int:
        """Length of ``row`` (1-based), 0 beyond the last row."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return "(" + ",".join(str(p) for p in self) + ")"

    def to_json(self) -> list:
        return list(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"(5,2,2,2,1)"``, ``"5,2,2"``, ``"()"`` or ``"[3, 1]"``."""
        inner = text.strip().strip("()[]").strip()
        if not inner or inner in ("φ", "phi", "0"):
            return cls(())
        return cls(int(tok) for tok in re.split(r"[,\s]+", inner) if tok)


EMPTY = Partition(())


@dataclass(frozen=True, order=True)
class Box:
    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise ValueError(f"box coordinates are 1-based: {self}")

    @property
    def content(self) -> int:
        return self.col - self.row


class Kind(str, enum.Enum):
    ADDABLE = "A"
    REMOVABLE = "R"


class Dominance(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominance_compare(lam, mu) -> Dominance:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"dominance needs equal sizes, got {lam.size} and {mu.size}")
    ge = le = True
    a = b = 0
    for x, y in zip_longest(lam, mu, fillvalue=0):
        a += x
        b += y
        if a < b:
            ge = False
        elif a > b:
            le = False
    if ge and le:
        return Dominance.EQUAL
    if ge:
        return Dominance.GREATER
    if le:
        return Dominance.LESS
    return Dominance.INCOMPARABLE


def dominates(lam, mu) -> bool:
    """lam ⊵ mu."""
    return dominance_compare(lam, mu) in (Dominance.GREATER, Dominance.EQUAL)


def residue(box: Box, ell: int) -> int:
    return (box.col - box.row) % ell


def addable_boxes(lam) -> list[Box]:
    lam = as_partition(lam)
    out = []
    for r in range(1, len(lam) + 2):
        c = lam.part(r) + 1
        if r == 1 or lam.part(r - 1) >= c:
            out.append(Box(r, c))
    return out


def removable_boxes(lam) -> list[Box]:
    lam = as_partition(lam)
    return [Box(r, lam.part(r)) for r in range(1, len(lam) + 1) if lam.part(r) > lam.part(r + 1)]


def add_box(lam, box: Box) -> Partition:
    lam = as_partition(lam)
    parts = list(lam) + [0]
    if parts[box.row - 1] + 1 != box.col or (box.row > 1 and parts[box.row - 2] < box.col):
        raise ValueError(f"{box} is not addable to {lam}")
    parts[box.row - 1] += 1
    return Partition(parts)


def remove_box(lam, box: Box) -> Partition:
    lam = as_partition(lam)
    if box.row > len(lam) or lam[box.row - 1] != box.col or lam.part(box.row + 1) >= box.col:
        raise ValueError(f"{box} is not removable from {lam}")
    parts = list(lam)
    parts[box.row - 1] -= 1
    return Partition(parts)


def addable_removable(lam, i: int, ell: int) -> list[tuple[Box, Kind]]:
    """The i-addable and i-removable boxes of ``lam`` read from the bottom row up."""
    if not 0 <= i < ell:
        raise ValueError(f"residue {i} out of range for ell={ell}")
    found = [(b, Kind.ADDABLE) for b in addable_boxes(lam) if residue(b, ell) == i]
    found += [(b, Kind.REMOVABLE) for b in removable_boxes(lam) if residue(b, ell) == i]
    found.sort(key=lambda bk: -bk[0].row)
    return found


def _signed_count(entries) -> int:
    return sum(1 if k is Kind.ADDABLE else -1 for _, k in entries)


def hayashi_stats(lam, box: Box, i: int, ell: int) -> tuple[int, int]:
    """(N_below, N_above): addable minus removable i-boxes strictly below / above ``box``.

    ``box`` must be an i-addable or i-removable box of ``lam``.  Boxes of
    residue i other than ``box`` keep their status when ``box`` is added or
    removed, so the counts are the same on either side of the move.
    """
    entries = addable_removable(lam, i, ell)
    if not any(b == box for b, _ in entries):
        raise ValueError(f"{box} is not an {i}-addable/removable box of {as_partition(lam)}")
    below = _signed_count(e for e in entries if e[0].row > box.row)
    above = _signed_count(e for e in entries if e[0].row < box.row)
    return below, above


def n_total(lam, i: int, ell: int) -> int:
    """N_i(lam): all i-addable minus all i-removable boxes."""
    return _signed_count(addable_removable(lam, i, ell))


@lru_cache(maxsize=None)
def _partitions_tuple(n: int, maxpart: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_tuple(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions_tuple(n, n)]


def iter_partitions_upto(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def is_regular(lam, ell: int) -> bool:
    """No part is repeated ell or more times."""
    lam = as_partition(lam)
    run = 1
    for a, b in zip(lam, lam[1:]):
        run = run + 1 if a == b else 1
        if run >= ell:
            return False
    return ell > 1 or not lam


def is_restricted(lam, ell: int) -> bool:
    """Successive differences (including the last part) are below ell."""
    lam = as_partition(lam)
    return all(a - b < ell for a, b in zip(lam, tuple(lam[1:]) + (0,)))


def scale(lam, k: int) -> Partition:
    return Partition(k * p for p in as_partition(lam))


def add_componentwise(lam, mu) -> Partition:
    return Partition(a + b for a, b in zip_longest(lam, mu, fillvalue=0))


def ell_decompose(mu, ell: int) -> tuple[Partition, Partition]:
    """Split mu = mu1 + ell*mu0 with mu1 ell-restricted.

    Working from the last row up, each difference mu_r - mu_{r+1} is split
    into its residue mod ell (kept in mu1) and the multiple of ell (pushed
    into mu0).
    """
    mu = as_partition(mu)
    diffs = [a - b for a, b in zip(mu, tuple(mu[1:]) + (0,))]
    d1 = [d % ell for d in diffs]
    d0 = [d // ell for d in diffs]
    mu1 = Partition(_suffix_sums(d1))
    mu0 = Partition(_suffix_sums(d0))
    return mu1, mu0


def _suffix_sums(diffs: list[int]) -> list[int]:
    out = []
    acc = 0
    for d in reversed(diffs):
        acc += d
        out.append(acc)
    return out[::-1]


def mu_family(n: int, ell: int) -> list[Partition]:
    """[mu_0, ..., mu_N] with N = n // ell.

    mu_0 = (n); for i >= 1 the first row is (N - i)*ell + ell - 1 and the
    rest is filled with rows of length ell - 1 plus one shorter remainder.
    Each member is checked against the rim-hook description: consecutive
    members share the ell-core of (n) and decrease strictly in dominance.
    """
    if n < 1 or ell < 2:
        raise ValueError(f"mu_family needs n >= 1 and ell >= 2, got n={n}, ell={ell}")
    big_n = n // ell
    family = [Partition((n,))]
    for i in range(1, big_n + 1):
        first = (big_n - i) * ell + ell - 1
        rest = n - first
        rows = [first] + [ell - 1] * (rest // (ell - 1))
        if rest % (ell - 1):
            rows.append(rest % (ell - 1))
        family.append(Partition(rows))
    core = ell_core(family[0], ell)
    for prev, cur in zip(family, family[1:]):
        if ell_core(cur, ell) != core or dominance_compare(prev, cur) is not Dominance.GREATER:
            raise ArithmeticError(f"mu_family shape rule disagrees with rim-hook moves at n={n}, ell={ell}")
    return family


def beta_numbers(lam, length: int) -> list[int]:
    lam = as_partition(lam)
    return [lam.part(k + 1) + length - 1 - k for k in range(length)]


def ell_core(lam, ell: int) -> Partition:
    """Remove rim ell-hooks until none is left (abacus slide)."""
    lam = as_partition(lam)
    length = len(lam) + ell
    beads = set(beta_numbers(lam, length))
    moved = True
    while moved:
        moved = False
        for b in sorted(beads):
            if b >= ell and b - ell not in beads:
                beads.remove(b)
                beads.add(b - ell)
                moved = True
    ordered = sorted(beads, reverse=True)
    return Partition(ordered[k] - (length - 1 - k) for k in range(length))
