"""Independent oracle for G^low(mu), mu ell-restricted: ladder LLT algorithm.

A(mu) = prod over ladders F_{res}^{(k)} |φ>, with divided powers, is
bar-invariant because each F_i is; subtracting bar-invariant multiples of
already-known G(lam), lam ▷ mu, pushes the off-diagonal coefficients into
qZ[q].  Only the Hayashi F-action and Laurent arithmetic are used.
"""

from functools import lru_cache

from fockspace.fock import LOWER, FockVector, f_action
from fockspace.partitions import dominates, is_restricted, partitions_of
from fockspace.qlaurent import ONE, ZERO, LaurentPoly, quantum_int


def ladders(mu, ell):
    """[(residue, count)] in increasing ladder order; box (r, c) sits on ladder (c-1) + (ell-1)(r-1)."""
    counts = {}
    for r, part in enumerate(mu, start=1):
        for c in range(1, part + 1):
            k = (c - 1) + (ell - 1) * (r - 1)
            counts[k] = counts.get(k, 0) + 1
    return [(k % ell, counts[k]) for k in sorted(counts)]


def divided_power(v, i, k):
    for _ in range(k):
        v = f_action(v, i)
    fact = ONE
    for t in range(1, k + 1):
        fact = fact * quantum_int(t)
    return FockVector({lam: c.exact_div(fact) for lam, c in v.terms.items()}, LOWER, v.ell)


def ladder_vector(mu, ell):
    v = FockVector.basis((), LOWER, ell)
    for i, k in ladders(mu, ell):
        v = divided_power(v, i, k)
    return v


@lru_cache(maxsize=None)
def llt_columns(n, ell):
    """{mu: {lam: d}} for restricted mu ⊢ n."""
    restricted = [mu for mu in partitions_of(n) if is_restricted(mu, ell)]
    cols = {}
    for mu in restricted:  # most dominant first
        v = ladder_vector(mu, ell)
        if v.coeff(mu) != ONE or any(not dominates(lam, mu) for lam in v.terms):
            raise AssertionError(f"ladder vector of {mu} is not unitriangular")
        terms = v.terms
        for lam in reversed([p for p in restricted if p in cols]):
            c = terms.get(lam, ZERO)
            if lam == mu or not c:
                continue
            # bar-invariant part to remove: constant plus symmetric non-positive part
            neg = c.negative_part()
            alpha = neg + neg.bar() + LaurentPoly.const(c.coeff(0))
            if alpha:
                for kappa, g in cols[lam].items():
                    terms[kappa] = terms.get(kappa, ZERO) - alpha * g
        cols[mu] = {lam: c for lam, c in terms.items() if c}
    return cols
