"""Charge-0 semi-infinite q-wedges and their straightening.

A normal wedge ``... ∧ u_{i_2} ∧ u_{i_1} ∧ u_{i_0}`` (i_0 > i_1 > ...) with
vacuum tail i_k = -k is stored by its prefix ``(i_0, i_1, ..., i_{r-1})``,
largest index first.  Partition lam corresponds to i_k = lam_k - k.

Straightening uses the two exchange relations for an adjacent pair
``u_k ∧ u_m`` with k > m:

* k ≡ m (mod ell):  u_k ∧ u_m = -u_m ∧ u_k
* otherwise, with g = (k - m) mod ell:
  u_k ∧ u_m = -q u_m ∧ u_k + (q^2 - 1) * sum_t (-q)^(t-1) u_{m+s_t} ∧ u_{k-s_t}
  where s = g, ell, ell+g, 2ell, ... while m + s_t < k - s_t.

The correction terms pull the pair inward, so every rewrite stays inside
the index window of the original pair and the process terminates.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping

from .partitions import Partition, as_partition
from .qlaurent import ONE, ZERO, LaurentPoly

MINUS_ONE = LaurentPoly.const(-1)
MINUS_Q = LaurentPoly.monomial(1, -1)
Q2_MINUS_1 = LaurentPoly({2: 1, 0: -1})


class StraighteningError(RuntimeError):
    """Raised when the rewrite guard trips; signals a convention bug."""


# ---------------------------------------------------------------------------
# normal words <-> partitions


def from_partition(lam) -> tuple[int, ...]:
    """Minimal stored prefix (i_0, ..., i_{r-1}) of |lam>."""
    lam = as_partition(lam)
    return tuple(p - k for k, p in enumerate(lam))


def to_partition(word: Iterable[int]) -> Partition:
    """Inverse of ``from_partition``; accepts any prefix length over the -k tail."""
    word = tuple(word)
    for a, b in zip(word, word[1:]):
        if a <= b:
            raise ValueError(f"not a normal wedge prefix: {word}")
    if word and word[-1] < -(len(word) - 1):
        raise ValueError(f"prefix collides with the vacuum tail: {word}")
    return Partition(i + k for k, i in enumerate(word))


def padded(word: Iterable[int], length: int) -> tuple[int, ...]:
    """Extend a stored prefix with vacuum-tail entries up to ``length``."""
    word = tuple(word)
    return word + tuple(-k for k in range(len(word), length))


def vacuum(k: int = 0) -> tuple[int, ...]:
    """Prefix of vac_{-k} = ... ∧ u_{-k-1} ∧ u_{-k}, written over the charge-0 tail.

    Only vac_0 has charge 0; for k > 0 this helper is meant to be completed
    by ``k`` explicit factors (e.g. vac_{-2} ∧ u_0 ∧ u_2).
    """
    if k == 0:
        return ()
    raise ValueError("vac_{-k} with k > 0 is not a charge-0 vector on its own")


def weight_of_word(word: Iterable[int]) -> int:
    """Sum of (i_k + k): the size of the partition a normal word represents."""
    return sum(i + k for k, i in enumerate(word))


# ---------------------------------------------------------------------------
# exchange relation


def exchange(k: int, m: int, ell: int) -> list[tuple[int, int, LaurentPoly]]:
    """Expansion of the out-of-order pair u_k ∧ u_m (k > m) as [(left, right, coeff)].

    Each returned pair is in normal order (left < right).
    """
    if k <= m:
        raise ValueError("exchange expects k > m")
    if (k - m) % ell == 0:
        return [(m, k, MINUS_ONE)]
    out = [(m, k, MINUS_Q)]
    g = (k - m) % ell
    t = 0
    while True:
        s = (t // 2) * ell + (g if t % 2 == 0 else ell)
        lo, hi = m + s, k - s
        if lo >= hi:
            break
        out.append((lo, hi, Q2_MINUS_1 * LaurentPoly.monomial(t, (-1) ** t)))
        t += 1
    return out


# ---------------------------------------------------------------------------
# straightening of finite words (left-to-right order: normal = increasing)


def _accumulate(target: dict, word, coeff: LaurentPoly):
    cur = target.get(word)
    new = coeff if cur is None else cur + coeff
    if new:
        target[word] = new
    elif cur is not None:
        del target[word]


@lru_cache(maxsize=None)
def _insert(prefix: tuple, x: int, ell: int) -> tuple:
    """Normal form of ``prefix ∧ u_x`` for an increasing ``prefix`` (left-to-right)."""
    if not prefix or prefix[-1] < x:
        return ((prefix + (x,), ONE),)
    k = prefix[-1]
    if k == x:
        return ()
    head = prefix[:-1]
    out: dict = {}
    for lo, hi, c in exchange(k, x, ell):
        for w1, c1 in _insert(head, lo, ell):
            for w2, c2 in _insert(w1, hi, ell):
                _accumulate(out, w2, c * c1 * c2)
    return tuple(out.items())


def straighten_ltr(word: Iterable[int], ell: int) -> dict:
    """Normal form of a finite left-to-right word as {increasing tuple: coeff}.

    Factors are absorbed one at a time from the left; each absorption is
    memoized, which keeps long reversed words tractable.
    """
    current = {(): ONE}
    for x in word:
        nxt: dict = {}
        for w, c in current.items():
            for w2, c2 in _insert(w, x, ell):
                _accumulate(nxt, w2, c * c2)
        current = nxt
        if not current:
            break
    return current


def straighten_queue(word: Iterable[int], ell: int, strategy: str = "leftmost") -> dict:
    """Straighten with an explicit work queue, rewriting one adjacent violation per step.

    ``strategy`` picks the leftmost or rightmost violation; both must agree
    with ``straighten_ltr``.  Only used as an independent cross-check.
    """
    word = tuple(word)
    spread = (max(word) - min(word) + 1) if word else 1
    guard = 10 * max(len(word), 1) * spread
    guard = guard ** 3  # total rewrites across all branches, not per branch
    done: dict = {}
    queue: dict = {word: ONE}
    steps = 0
    while queue:
        w, c = queue.popitem()
        pos = _find_violation(w, strategy)
        if pos is None:
            _accumulate(done, w, c)
            continue
        steps += 1
        if steps > guard:
            raise StraighteningError(f"rewrite guard exceeded on {word}")
        k, m = w[pos], w[pos + 1]
        if k == m:
            # u_k ∧ u_k vanishes by the equal-residue relation
            continue
        for lo, hi, cc in exchange(k, m, ell):
            _accumulate(queue, w[:pos] + (lo, hi) + w[pos + 2:], c * cc)
    return done


def _find_violation(w: tuple, strategy: str):
    rng = range(len(w) - 1)
    if strategy == "rightmost":
        rng = reversed(rng)
    elif strategy != "leftmost":
        raise ValueError(f"unknown strategy {strategy!r}")
    for j in rng:
        if w[j] >= w[j + 1]:
            return j
    return None


# ---------------------------------------------------------------------------
# raw semi-infinite words


def raw_to_window(raw: Iterable[int]) -> tuple[int, ...]:
    """Pad a raw stored word with tail entries until every index sits above the tail."""
    raw = tuple(raw)
    length = len(raw)
    while raw and min(raw) <= -length:
        length += 1
    return padded(raw, length)


def straighten(raw: Iterable[int], ell: int, strategy: str = "insertion") -> dict:
    """Expand a raw stored word (i_0 first) over the charge-0 tail.

    Returns {Partition: LaurentPoly}.  The raw word lists explicit entries
    for positions 0..r-1; positions >= r carry the vacuum tail -k.
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    window = raw_to_window(raw)
    ltr = window[::-1]
    if strategy == "insertion":
        normal = straighten_ltr(ltr, ell)
    else:
        normal = straighten_queue(ltr, ell, strategy)
    out: dict = {}
    for w, c in normal.items():
        _accumulate(out, to_partition(w[::-1]), c)
    return out


# ---------------------------------------------------------------------------
# Heisenberg operators


def b_operator_word(word: Iterable[int], k: int, ell: int) -> dict:
    """B_k on a single normal stored word; returns {Partition: coeff}."""
    if k == 0:
        raise ValueError("B_0 is not defined")
    word = tuple(word)
    p = len(word)
    shift = ell * k
    # positions at or beyond this bound land on a duplicate among consecutive tail entries
    span = p if k > 0 else p + ell * (-k)
    window = padded(word, span)
    out: dict = {}
    for nu in range(span):
        raw = window[:nu] + (window[nu] - shift,) + window[nu + 1:]
        for lam, c in straighten(raw, ell).items():
            _accumulate(out, lam, c)
    return out


def b_operator(vec: Mapping, k: int, ell: int) -> dict:
    """B_k on a combination {Partition: coeff} of normal wedges."""
    out: dict = {}
    for lam, c in vec.items():
        for mu, c2 in b_operator_word(from_partition(lam), k, ell).items():
            _accumulate(out, mu, c * c2)
    return out


# ---------------------------------------------------------------------------
# generator actions on wedges via the coproduct


def k_exponent_on_index(m: int, i: int, ell: int) -> int:
    return int(m % ell == i % ell) - int(m % ell == (i + 1) % ell)


def k_exponent_on_vacuum(r: int, i: int, ell: int) -> int:
    """K_i vac_{-r} = q^{δ(i ≡ -r)} vac_{-r}."""
    return int((-r) % ell == i % ell)


def generator_on_word(word: Iterable[int], gen: str, i: int, ell: int, coproduct: str) -> dict:
    """Apply E_i or F_i to a normal stored word through a coproduct.

    ``coproduct`` is ``"minus"`` (Δ^-, the lower Fock space F) or
    ``"plus"`` (Δ^+, the dual space F^∨).  The factors are the vacuum
    vac_{-r} (leftmost) followed by u_{i_{r-1}}, ..., u_{i_0}.

    Δ^-: F = F⊗1 + K⊗F   E = 1⊗E + E⊗K^-1
    Δ^+: F = F⊗K^-1 + 1⊗F E = E⊗1 + K⊗E
    """
    word = tuple(word)
    r = len(word)
    ltr = word[::-1]
    # K exponents of the factors: index 0 is the vacuum, then ltr entries
    kexp = [k_exponent_on_vacuum(r, i, ell)] + [k_exponent_on_index(m, i, ell) for m in ltr]
    n_fac = len(kexp)
    if gen == "F":
        k_side = "left" if coproduct == "minus" else "right"
        k_sign = 1 if coproduct == "minus" else -1
    elif gen == "E":
        k_side = "right" if coproduct == "minus" else "left"
        k_sign = -1 if coproduct == "minus" else 1
    else:
        raise ValueError(f"unknown generator {gen!r}")
    out: dict = {}
    for f in range(n_fac):
        moved = _act_on_factor(ltr, r, f, gen, i, ell)
        if moved is None:
            continue
        others = range(f) if k_side == "left" else range(f + 1, n_fac)
        exponent = k_sign * sum(kexp[g] for g in others)
        for lam, c in straighten(moved[::-1], ell).items():
            _accumulate(out, lam, c * LaurentPoly.monomial(exponent))
    return out


def _act_on_factor(ltr: tuple, r: int, f: int, gen: str, i: int, ell: int):
    """Raw left-to-right word after acting on factor ``f`` (0 = vacuum), or None."""
    if f == 0:
        # vacuum: F_i vac_{-r} = vac_{-r-1} ∧ u_{-r+1} when i ≡ -r; E_i vac = 0
        if gen == "E" or (-r) % ell != i % ell:
            return None
        return (-r + 1,) + ltr
    m = ltr[f - 1]
    if gen == "F":
        if m % ell != i % ell:
            return None
        return ltr[: f - 1] + (m + 1,) + ltr[f:]
    if (m - 1) % ell != i % ell:
        return None
    return ltr[: f - 1] + (m - 1,) + ltr[f:]


def generator_on_vector(vec: Mapping, gen: str, i: int, ell: int, coproduct: str) -> dict:
    out: dict = {}
    for lam, c in vec.items():
        for mu, c2 in generator_on_word(from_partition(lam), gen, i, ell, coproduct).items():
            _accumulate(out, mu, c * c2)
    return out


# ---------------------------------------------------------------------------
# test corpus for rewrite-order independence


def word_corpus(max_len: int = 4, lo: int = -6, hi: int = 6, sample: int | None = None, seed: int = 0):
    """Raw stored words of length 1..max_len with entries in [lo, hi].

    With ``sample=None`` every such word is listed; otherwise a seeded
    uniform sample of that many words (lengths weighted by their counts).
    """
    import itertools
    import random

    if sample is None:
        return [w for k in range(1, max_len + 1) for w in itertools.product(range(lo, hi + 1), repeat=k)]
    rng = random.Random(seed)
    span = hi - lo + 1
    counts = [span**k for k in range(1, max_len + 1)]
    out = []
    for _ in range(sample):
        k = rng.choices(range(1, max_len + 1), weights=counts)[0]
        out.append(tuple(rng.randint(lo, hi) for _ in range(k)))
    return out


def strategies_agree(word, ell: int, strategies=("leftmost", "rightmost")) -> bool:
    results = [straighten(word, ell, s) for s in strategies]
    return all(r == results[0] for r in results[1:])
