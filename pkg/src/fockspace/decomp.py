"""q-decomposition numbers, the row-(n) theorem, its lemmas, and reduction rules.

Two indexings are used:

* ``d_poly(lam, mu)`` is the Fock-space coefficient of |lam> in G^low(mu);
* ``hecke_d(lam, mu) = d_poly(lam', mu')`` is the same number indexed the
  way the Hecke/Schur algebra side indexes it (mu ell-regular for a simple
  Hecke module).  The reduction rules (Leclerc padding, row/column removal,
  Mullineux transport) act on hecke_d pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import canonical
from .canonical import (
    d_matrix,
    e_kernel_basis,
    expand_in_upper_basis,
    global_upper,
    upper_expansion,
)
from .crystal import CrystalError, e_tilde, epsilon, mullineux
from .fock import UPPER, FockVector, e_action_upper
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    ell_decompose,
    is_regular,
    mu_family,
    partitions_of,
    scale,
)
from .qlaurent import ONE, ZERO, LaurentPoly, quantum_int


class RuleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# decomposition numbers


def d_poly(lam, mu, ell: int) -> LaurentPoly:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size}, |{mu}| = {mu.size}")
    return d_matrix(lam.size, ell).entry(lam, mu)


def hecke_d(lam, mu, ell: int) -> LaurentPoly:
    return d_poly(conjugate(lam), conjugate(mu), ell)


def _check(name: str, passed: bool, **details) -> dict:
    return {"check": name, "passed": bool(passed), **details}


def verify_main_theorem(n: int, ell: int) -> dict:
    """Compare the G^up expansion of ⟨(n)| with sum_i q^i G^up(mu_i).

    Two checks: the row (n) of D(q), and a reconstruction of ⟨(n)| from
    G^up vectors computed by the upper triangular algorithm alone.
    """
    if n < 1 or ell < 2:
        raise ValueError(f"need n >= 1 and ell >= 2, got n={n}, ell={ell}")
    family = mu_family(n, ell)
    expected = {mu: LaurentPoly.monomial(i) for i, mu in enumerate(family)}
    found = upper_expansion((n,), ell)
    mismatches = []
    for mu in sorted(set(expected) | set(found), reverse=True):
        e, f = expected.get(mu, ZERO), found.get(mu, ZERO)
        if e != f:
            mismatches.append({"partition": list(mu), "expected": str(e), "found": str(f)})
    rebuilt = FockVector({}, UPPER, ell)
    for mu, c in expected.items():
        rebuilt = rebuilt + global_upper(mu, ell).scale(c)
    residual = rebuilt - FockVector.basis((n,), UPPER, ell)
    return {
        "check": "main_theorem",
        "n": n,
        "ell": ell,
        "passed": not mismatches and not residual,
        "family": [list(mu) for mu in family],
        "expansion": {str(mu): str(c) for mu, c in sorted(found.items(), reverse=True)},
        "mismatches": mismatches,
        "reconstruction_residual": residual.to_json()["terms"],
    }


def corollary_decomposition(n: int, ell: int) -> dict:
    """Row (n) of D at q = 1, nonzero entries only."""
    out = {}
    for mu, c in upper_expansion((n,), ell).items():
        v = c.eval_at_one()
        if v:
            out[mu] = v
    return out


# ---------------------------------------------------------------------------
# lemma checks


def check_l1(n: int, ell: int) -> dict:
    """E_i G^up(mu) against [eps] G^up(e~_i mu) for all mu ⊢ n and residues i."""
    failures = []
    exact_cases = 0
    for mu in partitions_of(n):
        g = global_upper(mu, ell)
        for i in range(ell):
            eps = epsilon(mu, i, ell)
            image = e_action_upper(g, i)
            if eps:
                image = image - global_upper(e_tilde(mu, i, ell), ell).scale(quantum_int(eps))
            if eps == 1:
                exact_cases += 1
                if image:
                    failures.append({"mu": list(mu), "i": i, "eps": eps, "residual": str(image)})
                continue
            bad = [nu for nu in expand_in_upper_basis(image) if not epsilon(nu, i, ell) < eps - 1]
            if bad:
                failures.append({"mu": list(mu), "i": i, "eps": eps, "offending": [list(b) for b in bad]})
    return _check("l1", not failures, n=n, ell=ell, eps_one_cases=exact_cases, failures=failures)


def check_l2(n: int, ell: int) -> dict:
    """dim ∩ Ker E_j = p(n/ell), and every kernel vector lives on {G^up(ell lam)}."""
    basis = e_kernel_basis(n, ell)
    expected_dim = len(partitions_of(n // ell)) if n % ell == 0 else 0
    allowed = {scale(lam, ell) for lam in partitions_of(n // ell)} if n % ell == 0 else set()
    off = []
    for v in basis:
        for mu in expand_in_upper_basis(v):
            if mu not in allowed:
                off.append(list(mu))
    return _check(
        "l2",
        len(basis) == expected_dim and not off,
        n=n,
        ell=ell,
        dimension=len(basis),
        expected_dimension=expected_dim,
        off_support=off,
    )


def _upper_coefficients_independent(n: int, ell: int) -> dict:
    """Expansion of ⟨(n)| in G^up by back-substitution against the upper algorithm."""
    target = {Partition((n,)): ONE}
    coeffs: dict = {}
    for mu in partitions_of(n):  # most dominant first; G^up(mu) has leading term ⟨mu|
        c = target.get(mu, ZERO)
        if not c:
            continue
        coeffs[mu] = c
        for lam, g in global_upper(mu, ell).terms.items():
            v = target.get(lam, ZERO) - c * g
            if v:
                target[lam] = v
            else:
                target.pop(lam, None)
    return coeffs


def check_l3(n: int, ell: int) -> dict:
    """Coefficients of |(n)> in G^low(ell lam) and of G^up(ell lam) in ⟨(n)|.

    ell*lam = (n) itself (lam = (n/ell)) is the diagonal entry, equal to 1,
    and is reported separately rather than required to vanish.
    """
    if n % ell:
        return _check("l3", True, n=n, ell=ell, note="ell does not divide n: no ell*lam of size n")
    lower_bad, upper_bad = [], []
    independent = _upper_coefficients_independent(n, ell)
    top = Partition((n,))
    diagonal = None
    for lam in partitions_of(n // ell):
        mu = scale(lam, ell)
        low = d_poly(top, mu, ell)
        up = independent.get(mu, ZERO)
        if mu == top:
            diagonal = {"lower": str(low), "upper": str(up)}
            continue
        if low:
            lower_bad.append({"mu": list(mu), "coeff": str(low)})
        if up:
            upper_bad.append({"mu": list(mu), "coeff": str(up)})
    return _check(
        "l3",
        not lower_bad and not upper_bad and diagonal == {"lower": "1", "upper": "1"},
        n=n,
        ell=ell,
        lower_nonzero=lower_bad,
        upper_nonzero=upper_bad,
        diagonal_entry=diagonal,
    )


def predicted_e_tilde(n: int, i: int, j: int, ell: int) -> Optional[Partition]:
    """e~_j(mu_i^{(n)}) as predicted by the mu-family combinatorics."""
    if j != (n - 1) % ell:
        return None
    if n % ell:
        return mu_family(n - 1, ell)[i] if n > 1 else Partition(())
    if i == 0:
        return None
    return mu_family(n - 1, ell)[i - 1]


def check_l4(max_n: int, ell: int) -> dict:
    failures = []
    for n in range(1, max_n + 1):
        for i, mu in enumerate(mu_family(n, ell)):
            for j in range(ell):
                want = predicted_e_tilde(n, i, j, ell)
                got = e_tilde(mu, j, ell)
                eps_want = 1 if want is not None else 0
                if got != want or epsilon(mu, j, ell) != eps_want:
                    failures.append({"n": n, "i": i, "j": j, "expected": want and list(want),
                                     "found": got and list(got), "eps": epsilon(mu, j, ell)})
    return _check("l4", not failures, max_n=max_n, ell=ell, failures=failures)


def d_n_vector(n: int, ell: int) -> FockVector:
    """⟨(n)| - sum_i q^i G^up(mu_i^{(n)})."""
    v = FockVector.basis((n,), UPPER, ell)
    for i, mu in enumerate(mu_family(n, ell)):
        v = v - global_upper(mu, ell).scale(LaurentPoly.monomial(i))
    return v


def check_d_n(n: int, ell: int) -> dict:
    """The difference vector lies in every Ker E_j (indeed vanishes)."""
    v = d_n_vector(n, ell)
    images = {j: e_action_upper(v, j) for j in range(ell)}
    return _check("d_n", not v and not any(images.values()), n=n, ell=ell,
                  vector=v.to_json()["terms"])


# ---------------------------------------------------------------------------
# reduction rules on Hecke-side pairs


@dataclass(frozen=True)
class ReductionStep:
    rule: str  # "leclerc" | "row_removal" | "column_removal" | "mullineux_transport"
    input_pair: tuple
    output_pair: tuple
    parameters: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "input": [list(p) for p in self.input_pair],
            "output": [list(p) for p in self.output_pair],
            "parameters": self.parameters,
        }


def leclerc_reduce(mu, n: int, ell: int) -> tuple[Partition, Partition]:
    """Pad (n) and mu to a Hecke-side pair with the same decomposition number.

    mu = mu1 + ell*mu0 with mu1 ell-restricted; with m rows,
        mu~ = (2(ell-1)(m-1), 2(ell-1)(m-2), ..., 0) + reversed(mu1) + ell*mu0
        (n)~ = (n + (ell-1)(m-1), (ell-1)(m-1) repeated m-1 times).
    The staircase step 2(ell-1) is the one making both sides the same size.
    """
    mu = as_partition(mu)
    if mu.size != n:
        raise ValueError(f"{mu} is not a partition of {n}")
    m = len(mu)
    if m == 0:
        return Partition(()), Partition(())
    mu1, mu0 = ell_decompose(mu, ell)
    rev = [mu1.part(m - k) for k in range(m)]
    stair = [2 * (ell - 1) * (m - 1 - k) for k in range(m)]
    mu_t = Partition(s + r + ell * mu0.part(k + 1) for k, (s, r) in enumerate(zip(stair, rev)))
    pad = (ell - 1) * (m - 1)
    n_t = Partition([n + pad] + [pad] * (m - 1))
    if n_t.size != mu_t.size:
        raise ArithmeticError(f"padding sizes disagree: {n_t} vs {mu_t}")
    return n_t, mu_t


def _first_mismatch(a: Partition, b: Partition, r: int) -> Optional[int]:
    for k in range(1, r + 1):
        if a.part(k) != b.part(k):
            return k
    return None


def row_column_removal(pair, mode: str, r: int) -> tuple[Partition, Partition]:
    lam, mu = (as_partition(p) for p in pair)
    if r < 0:
        raise RuleError("r must be non-negative")
    if mode == "row":
        bad = _first_mismatch(lam, mu, r)
        if bad is not None:
            raise RuleError(f"row {bad} differs: {lam.part(bad)} vs {mu.part(bad)}")
        return Partition(lam[r:]), Partition(mu[r:])
    if mode == "column":
        lc, mc = conjugate(lam), conjugate(mu)
        bad = _first_mismatch(lc, mc, r)
        if bad is not None:
            raise RuleError(f"column {bad} differs: {lc.part(bad)} vs {mc.part(bad)}")
        return conjugate(Partition(lc[r:])), conjugate(Partition(mc[r:]))
    raise RuleError(f"mode must be 'row' or 'column', got {mode!r}")


def max_removal(pair, mode: str) -> int:
    """Largest r with the first r rows (or columns) equal, stopping before both run out."""
    lam, mu = (as_partition(p) for p in pair)
    if mode == "column":
        lam, mu = conjugate(lam), conjugate(mu)
    r = 0
    while r < min(len(lam), len(mu)) and lam[r] == mu[r]:
        r += 1
    return r


def mullineux_transport(pair, ell: int) -> tuple[Partition, Partition]:
    lam, nu = (as_partition(p) for p in pair)
    if not is_regular(nu, ell):
        raise RuleError(f"{nu} is not {ell}-regular")
    return conjugate(lam), mullineux(nu, ell)


@dataclass
class ReductionChain:
    start: tuple
    steps: list
    terminal: tuple
    diagonal: bool
    stalled_reason: Optional[str] = None

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def pairs(self) -> list[tuple]:
        return [self.start] + [s.output_pair for s in self.steps]

    @property
    def conclusion(self) -> Optional[int]:
        return 1 if self.diagonal else None

    def to_json(self) -> dict:
        return {
            "start": [list(p) for p in self.start],
            "steps": [s.to_json() for s in self.steps],
            "terminal": [list(p) for p in self.terminal],
            "diagonal": self.diagonal,
            "conclusion": self.conclusion,
            "stalled_reason": self.stalled_reason,
        }


def reduce_chain(pair, ell: int, max_steps: int = 200) -> ReductionChain:
    """Greedy row removal, then column removal, then Mullineux transport.

    Removal always takes the maximal r.  Mullineux transport is never applied
    twice in a row (it is an involution up to the value), so the chain stalls
    when no removal is possible right after a transport.
    """
    start = tuple(as_partition(p) for p in pair)
    if start[0].size != start[1].size:
        raise ValueError("pair must consist of partitions of the same size")
    cur = start
    steps: list = []
    seen = {cur}
    reason = None
    while cur[0] != cur[1]:
        if len(steps) >= max_steps:
            reason = "step limit reached"
            break
        step = None
        for mode in ("row", "column"):
            r = max_removal(cur, mode)
            if r:
                out = row_column_removal(cur, mode, r)
                step = ReductionStep(f"{mode}_removal", cur, out, {"r": r})
                break
        if step is None:
            if steps and steps[-1].rule == "mullineux_transport":
                reason = "no row/column removal applies after Mullineux transport"
                break
            if not is_regular(cur[1], ell):
                reason = f"{cur[1]} is not {ell}-regular and no removal applies"
                break
            step = ReductionStep("mullineux_transport", cur, mullineux_transport(cur, ell), {})
        cur = step.output_pair
        steps.append(step)
        if cur in seen:
            reason = "cycle detected"
            break
        seen.add(cur)
    return ReductionChain(start, steps, cur, cur[0] == cur[1], reason)


def claimed_pairs_report(chain: ReductionChain, claimed: Iterable) -> list[dict]:
    """Locate each claimed pair in the chain and count the rule applications between them."""
    pairs = chain.pairs()
    index = {p: k for k, p in enumerate(pairs)}
    out = []
    prev = None
    for c in claimed:
        c = tuple(as_partition(p) for p in c)
        k = index.get(c)
        entry = {"pair": [list(p) for p in c], "found": k is not None, "position": k}
        if prev is not None and k is not None:
            entry["steps_from_previous"] = k - prev
            entry["single_step"] = k - prev == 1
        out.append(entry)
        if k is not None:
            prev = k
    return out


# ---------------------------------------------------------------------------
# oracle checks of the rules (q = 1)


def check_removal_rules(n: int, ell: int) -> dict:
    failures = []
    checked = 0
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            for mode in ("row", "column"):
                r = max_removal((lam, mu), mode)
                for rr in range(1, r + 1):
                    out = row_column_removal((lam, mu), mode, rr)
                    checked += 1
                    a = hecke_d(lam, mu, ell).eval_at_one()
                    b = hecke_d(*out, ell).eval_at_one()
                    if a != b:
                        failures.append({"pair": [list(lam), list(mu)], "mode": mode, "r": rr, "before": a, "after": b})
    return _check("ll2", not failures, n=n, ell=ell, checked=checked, failures=failures)


def check_mullineux_rule(n: int, ell: int) -> dict:
    failures = []
    checked = 0
    for nu in partitions_of(n):
        if not is_regular(nu, ell):
            continue
        for lam in partitions_of(n):
            out = mullineux_transport((lam, nu), ell)
            checked += 1
            a = hecke_d(lam, nu, ell).eval_at_one()
            b = hecke_d(*out, ell).eval_at_one()
            if a != b:
                failures.append({"pair": [list(lam), list(nu)], "image": [list(p) for p in out], "before": a, "after": b})
    return _check("ll3", not failures, n=n, ell=ell, checked=checked, failures=failures)


def check_leclerc_rule(max_size: int, ell: int) -> dict:
    """d_poly((n), mu)(1) = hecke_d((n)~, mu~)(1) whenever the padded size is at most max_size."""
    failures = []
    checked = 0
    for n in range(1, max_size + 1):
        for mu in partitions_of(n):
            n_t, mu_t = leclerc_reduce(mu, n, ell)
            if n_t.size > max_size:
                continue
            checked += 1
            a = d_poly((n,), mu, ell).eval_at_one()
            b = hecke_d(n_t, mu_t, ell).eval_at_one()
            if a != b:
                failures.append({"n": n, "mu": list(mu), "pair": [list(n_t), list(mu_t)], "before": a, "after": b})
    return _check("ll1", not failures, max_size=max_size, ell=ell, checked=checked, failures=failures)


def run_all_checks(n: int, ell: int) -> list[dict]:
    """Every check the verifier reports for one (n, ell)."""
    reports = [verify_main_theorem(n, ell)]
    reports.append(check_d_n(n, ell))
    reports.append(check_l1(n, ell))
    reports.append(check_l2(n, ell))
    reports.append(check_l3(n, ell))
    reports.append(check_l4(n, ell))
    reports.append(check_removal_rules(n, ell))
    reports.append(check_mullineux_rule(n, ell))
    return reports


__all__ = [
    "CrystalError",
    "ReductionChain",
    "ReductionStep",
    "RuleError",
    "canonical",
    "check_d_n",
    "check_l1",
    "check_l2",
    "check_l3",
    "check_l4",
    "check_leclerc_rule",
    "check_mullineux_rule",
    "check_removal_rules",
    "claimed_pairs_report",
    "corollary_decomposition",
    "d_n_vector",
    "d_poly",
    "hecke_d",
    "leclerc_reduce",
    "max_removal",
    "mullineux_transport",
    "predicted_e_tilde",
    "reduce_chain",
    "row_column_removal",
    "run_all_checks",
    "verify_main_theorem",
]
