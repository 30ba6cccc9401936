"""Sparse vectors of the level-one Fock space and its dual, with the Hayashi action.

Lower side (F, coproduct Δ^-):
    F_i|lam> = sum q^{N_below} |lam + b>,   E_i|lam> = sum q^{-N_above} |lam - b>
Upper side (F^∨, coproduct Δ^+):
    F_i<lam| = sum q^{-N_above} <lam + b|,  E_i<lam| = sum q^{N_below} <lam - b|
and K_i acts by q^{N_i(lam)} on both.  N_below / N_above count i-addable
minus i-removable boxes strictly below / above the moved box b.
The upper formulas are a shortcut for the wedge realization with Δ^+, and
the test-suite checks them against it.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from . import wedge
from .partitions import (
    Partition,
    addable_boxes,
    add_box,
    as_partition,
    hayashi_stats,
    n_total,
    partitions_of,
    remove_box,
    removable_boxes,
    residue,
)
from .qlaurent import ONE, ZERO, LaurentPoly

LOWER = "lower"
UPPER = "upper"
SIDES = (LOWER, UPPER)


class FockVector:
    """A finite combination of |lam> (side "lower") or <lam| (side "upper")."""

    __slots__ = ("side", "ell", "_terms")

    def __init__(self, terms: Mapping | None = None, side: str = LOWER, ell: int = 2):
        if side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}, got {side!r}")
        if ell < 2:
            raise ValueError("ell must be >= 2")
        self.side = side
        self.ell = ell
        clean = {}
        for lam, c in (terms or {}).items():
            c = LaurentPoly.coerce(c)
            if c:
                lam = as_partition(lam)
                clean[lam] = clean[lam] + c if lam in clean else c
        self._terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def basis(cls, lam, side: str = LOWER, ell: int = 2) -> "FockVector":
        return cls({as_partition(lam): ONE}, side, ell)

    @classmethod
    def _wrap(cls, terms: dict, side: str, ell: int) -> "FockVector":
        obj = object.__new__(cls)
        obj.side, obj.ell, obj._terms = side, ell, terms
        return obj

    # -- access -------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, lam) -> LaurentPoly:
        return self._terms.get(as_partition(lam), ZERO)

    def support(self) -> list[Partition]:
        return sorted(self._terms, key=lambda p: (p.size, tuple(-x for x in p)))

    def items(self):
        return [(lam, self._terms[lam]) for lam in self.support()]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def weight(self):
        """Common size of the support, None for the zero vector, "mixed" otherwise."""
        sizes = {lam.size for lam in self._terms}
        if not sizes:
            return None
        return sizes.pop() if len(sizes) == 1 else "mixed"

    # -- linear structure ---------------------------------------------------

    def _check(self, other: "FockVector"):
        if not isinstance(other, FockVector):
            raise TypeError(f"expected FockVector, got {type(other).__name__}")
        if other.side != self.side:
            raise TypeError(f"cannot combine a {self.side} vector with an {other.side} vector")
        if other.ell != self.ell:
            raise ValueError(f"ell mismatch: {self.ell} vs {other.ell}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            wedge._accumulate(out, lam, c)
        return FockVector._wrap(out, self.side, self.ell)

    def __neg__(self):
        return FockVector._wrap({k: -c for k, c in self._terms.items()}, self.side, self.ell)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FockVector":
        c = LaurentPoly.coerce(c)
        if not c:
            return FockVector._wrap({}, self.side, self.ell)
        return FockVector._wrap({k: v * c for k, v in self._terms.items()}, self.side, self.ell)

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self.side, self.ell, self._terms) == (other.side, other.ell, other._terms)

    def __hash__(self):
        return hash((self.side, self.ell, frozenset(self._terms.items())))

    def __repr__(self):
        return f"FockVector({self}, side={self.side!r}, ell={self.ell})"

    def __str__(self):
        if not self._terms:
            return "0"
        bra, ket = ("<", "|") if self.side == UPPER else ("|", ">")
        return " + ".join(f"({c}){bra}{lam}{ket}" for lam, c in self.items())

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "ell": self.ell,
            "terms": [{"partition": list(lam), "coeff": c.to_json()} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FockVector":
        terms = {Partition(t["partition"]): LaurentPoly.from_json(t["coeff"]) for t in data["terms"]}
        return cls(terms, data["side"], data.get("ell", 2))


def _require(v: FockVector, side: str, i: int | None = None):
    if not isinstance(v, FockVector):
        raise TypeError(f"expected FockVector, got {type(v).__name__}")
    if v.side != side:
        raise TypeError(f"operator acts on {side} vectors, got a {v.side} vector")
    if i is not None and not 0 <= i < v.ell:
        raise ValueError(f"residue {i} out of range for ell={v.ell}")


def _boxwise(v: FockVector, i: int, adding: bool, stat) -> FockVector:
    out: dict = {}
    ell = v.ell
    for lam, c in v._terms.items():
        boxes = addable_boxes(lam) if adding else removable_boxes(lam)
        for b in boxes:
            if residue(b, ell) != i:
                continue
            below, above = hayashi_stats(lam, b, i, ell)
            mu = add_box(lam, b) if adding else remove_box(lam, b)
            wedge._accumulate(out, mu, c.shift(stat(below, above)))
    return FockVector._wrap(out, v.side, ell)


# -- lower side --------------------------------------------------------------


def f_action(v: FockVector, i: int) -> FockVector:
    _require(v, LOWER, i)
    return _boxwise(v, i, True, lambda below, above: below)


def e_action(v: FockVector, i: int) -> FockVector:
    _require(v, LOWER, i)
    return _boxwise(v, i, False, lambda below, above: -above)


def k_action(v: FockVector, i: int, power: int = 1) -> FockVector:
    """K_i^power; the same diagonal action on either side."""
    if not 0 <= i < v.ell:
        raise ValueError(f"residue {i} out of range for ell={v.ell}")
    out = {lam: c.shift(power * n_total(lam, i, v.ell)) for lam, c in v._terms.items()}
    return FockVector._wrap(out, v.side, v.ell)


# -- upper side --------------------------------------------------------------


def f_action_upper(v: FockVector, i: int) -> FockVector:
    _require(v, UPPER, i)
    return _boxwise(v, i, True, lambda below, above: -above)


def e_action_upper(v: FockVector, i: int) -> FockVector:
    _require(v, UPPER, i)
    return _boxwise(v, i, False, lambda below, above: below)


def k_action_upper(v: FockVector, i: int, power: int = 1) -> FockVector:
    _require(v, UPPER, i)
    return k_action(v, i, power)


def _via_wedge(v: FockVector, gen: str, i: int, coproduct: str) -> FockVector:
    terms = wedge.generator_on_vector(v._terms, gen, i, v.ell, coproduct)
    return FockVector._wrap(terms, v.side, v.ell)


def f_action_wedge(v: FockVector, i: int) -> FockVector:
    """F_i computed in the wedge realization with the coproduct of v's side."""
    _require(v, v.side, i)
    return _via_wedge(v, "F", i, "minus" if v.side == LOWER else "plus")


def e_action_wedge(v: FockVector, i: int) -> FockVector:
    _require(v, v.side, i)
    return _via_wedge(v, "E", i, "minus" if v.side == LOWER else "plus")


# -- generic dispatch ---------------------------------------------------------


def apply_generator(v: FockVector, gen: str, i: int) -> FockVector:
    """gen in {"E", "F", "K", "Kinv"}, dispatched on the side of v."""
    if gen == "K":
        return k_action(v, i, 1)
    if gen == "Kinv":
        return k_action(v, i, -1)
    table = {
        (LOWER, "F"): f_action,
        (LOWER, "E"): e_action,
        (UPPER, "F"): f_action_upper,
        (UPPER, "E"): e_action_upper,
    }
    try:
        op = table[(v.side, gen)]
    except KeyError:
        raise ValueError(f"unknown generator {gen!r}") from None
    return op(v, i)


def apply_word(v: FockVector, word: Iterable[tuple[str, int]]) -> FockVector:
    """Apply generators right to left: word [("E",0),("F",1)] means E_0 F_1 v."""
    for gen, i in reversed(list(word)):
        v = apply_generator(v, gen, i)
    return v


def b_action(v: FockVector, k: int) -> FockVector:
    """The Heisenberg operator B_k through the wedge realization."""
    return FockVector._wrap(wedge.b_operator(v._terms, k, v.ell), v.side, v.ell)


def weight_basis(n: int) -> list[Partition]:
    """Partitions of n, reverse-lexicographic (more dominant first)."""
    return partitions_of(n)


def vacuum(side: str = LOWER, ell: int = 2) -> FockVector:
    return FockVector.basis((), side, ell)
