"""Misra-Miwa crystal on partitions and the Mullineux involution.

The i-signature lists the i-addable (A) and i-removable (R) boxes from the
bottom row up.  Adjacent "A R" pairs cancel repeatedly; the good box is the
box of the last surviving R, the cogood box that of the first surviving A.
With this reading the component of the empty partition consists of the
ell-restricted partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .partitions import (
    EMPTY,
    Box,
    Kind,
    Partition,
    add_box,
    addable_removable,
    as_partition,
    conjugate,
    is_regular,
    is_restricted,
    remove_box,
)


class CrystalError(ValueError):
    pass


@dataclass(frozen=True)
class SignatureWord:
    entries: tuple  # ((Box, Kind), ...) bottom-up
    reduced: tuple  # surviving entries after AR cancellation

    @property
    def letters(self) -> str:
        return "".join(k.value for _, k in self.entries)

    @property
    def reduced_letters(self) -> str:
        return "".join(k.value for _, k in self.reduced)


def signature(lam, i: int, ell: int) -> SignatureWord:
    entries = tuple(addable_removable(lam, i, ell))
    stack: list = []
    for entry in entries:
        if entry[1] is Kind.REMOVABLE and stack and stack[-1][1] is Kind.ADDABLE:
            stack.pop()
        else:
            stack.append(entry)
    # the stack is of the form R...R A...A
    return SignatureWord(entries, tuple(stack))


def good_box(lam, i: int, ell: int) -> Optional[Box]:
    rs = [b for b, k in signature(lam, i, ell).reduced if k is Kind.REMOVABLE]
    return rs[-1] if rs else None


def cogood_box(lam, i: int, ell: int) -> Optional[Box]:
    adds = [b for b, k in signature(lam, i, ell).reduced if k is Kind.ADDABLE]
    return adds[0] if adds else None


def e_tilde(lam, i: int, ell: int) -> Optional[Partition]:
    box = good_box(lam, i, ell)
    return None if box is None else remove_box(lam, box)


def f_tilde(lam, i: int, ell: int) -> Optional[Partition]:
    box = cogood_box(lam, i, ell)
    return None if box is None else add_box(lam, box)


def epsilon(lam, i: int, ell: int) -> int:
    return sum(1 for _, k in signature(lam, i, ell).reduced if k is Kind.REMOVABLE)


def phi(lam, i: int, ell: int) -> int:
    return sum(1 for _, k in signature(lam, i, ell).reduced if k is Kind.ADDABLE)


def crystal_graph(ell: int, depth: int) -> tuple[list[Partition], list[tuple[Partition, Partition, int]]]:
    """Nodes and residue-labelled edges of the crystal of |φ> up to ``depth`` steps.

    Nodes are listed level by level, each level sorted reverse-lexicographically;
    edges are sorted by (source position, residue).
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    levels = [[EMPTY]]
    edges = []
    for _ in range(depth):
        nxt = set()
        for lam in levels[-1]:
            for i in range(ell):
                mu = f_tilde(lam, i, ell)
                if mu is not None:
                    edges.append((lam, mu, i))
                    nxt.add(mu)
        levels.append(sorted(nxt, reverse=True))
    nodes = [lam for level in levels for lam in level]
    order = {lam: k for k, lam in enumerate(nodes)}
    edges.sort(key=lambda e: (order[e[0]], e[2]))
    return nodes, edges


def graph_to_dot(nodes, edges, ell: int) -> str:
    lines = [f'digraph crystal_ell{ell} {{', "  rankdir=LR;"]
    for lam in nodes:
        lines.append(f'  "{lam}";')
    for a, b, i in edges:
        lines.append(f'  "{a}" -> "{b}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(nodes, edges, ell: int) -> dict:
    return {
        "ell": ell,
        "nodes": [list(lam) for lam in nodes],
        "edges": [{"from": list(a), "to": list(b), "residue": i} for a, b, i in edges],
    }


# ---------------------------------------------------------------------------
# residue paths and the Mullineux map


def strip_path(lam, ell: int, choose=min) -> list[int]:
    """Residues i_1, ..., i_s with lam = f_{i_s} ... f_{i_1} φ.

    At each step ``choose`` picks among the residues with epsilon > 0.
    Raises CrystalError when lam is outside the component of φ.
    """
    lam = as_partition(lam)
    path = []
    while lam:
        options = [i for i in range(ell) if good_box(lam, i, ell) is not None]
        if not options:
            raise CrystalError(f"{lam} is not in the crystal component of the empty partition")
        i = choose(options)
        lam = e_tilde(lam, i, ell)
        path.append(i)
    return path[::-1]


def apply_path(path, ell: int, start=EMPTY) -> Partition:
    lam = as_partition(start)
    for i in path:
        nxt = f_tilde(lam, i, ell)
        if nxt is None:
            raise CrystalError(f"f_{i} kills {lam}")
        lam = nxt
    return lam


def mullineux_restricted(lam, ell: int, choose=min) -> Partition:
    """Negate the residue path of an ell-restricted partition in this crystal."""
    if not is_restricted(lam, ell):
        raise CrystalError(f"{as_partition(lam)} is not {ell}-restricted")
    path = strip_path(lam, ell, choose)
    return apply_path([(-i) % ell for i in path], ell)


def mullineux(nu, ell: int, choose=min) -> Partition:
    """Mullineux involution on ell-regular partitions.

    The ell-regular partitions form the crystal component of φ for the
    conjugate (top-down) signature reading, whose arrows are the conjugates
    of the ones above with negated residues.  The map is therefore computed
    as conj o mullineux_restricted o conj.
    """
    nu = as_partition(nu)
    if not is_regular(nu, ell):
        raise CrystalError(f"{nu} is not {ell}-regular")
    return conjugate(mullineux_restricted(conjugate(nu), ell, choose))
