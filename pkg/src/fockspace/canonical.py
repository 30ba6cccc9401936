"""Bar involutions, global bases and the q-decomposition matrix D(q).

Upper bar.  ⟨lam| is written as a wedge of length r = |lam| (r entries are
always enough to carry every partition of the same size), the word is
reversed and straightened, and the result is multiplied by

    (-1)^{C(r,2)} q^{-c(lam)},   c(lam) = #{pairs of entries with distinct residues},

which is exactly the inverse of the leading coefficient.  This gives an
involution commuting with the Δ^+ action of F_i and with B_k for k < 0.

Lower bar.  bar|lam> = sum_mu bar(a_{mu lam}) |mu'> where bar⟨lam'| = sum a_{mu lam'} ⟨mu|.
This is an involution commuting with the Δ^- action of F_i and with B_k for
k > 0, and the two bar matrices are inverse-transpose of each other.

D(q) is computed column by column: with bar|lam> = sum_k A_{k lam}|k>, a
bar-invariant G(mu) = sum_k d_{k mu}|k> satisfies
    d_{k mu} - bar(d_{k mu}) = sum_{mu ⊴ lam ◁ k} bar(d_{lam mu}) A_{k lam},
whose right side is bar-antisymmetric; d_{k mu} is its positive part.
"""

from __future__ import annotations

import csv
import io
from functools import lru_cache
from typing import Mapping

from . import wedge
from .fock import LOWER, UPPER, FockVector, e_action_upper, weight_basis
from .partitions import Partition, as_partition, conjugate, dominates, partitions_of
from .qlaurent import ONE, ZERO, LaurentPoly


class BarError(ValueError):
    pass


# ---------------------------------------------------------------------------
# bar involutions on standard basis vectors


def reversal_normalization(lam, ell: int) -> LaurentPoly:
    """(-1)^{C(r,2)} q^{-c}: the factor applied after reversing the wedge of ⟨lam|."""
    lam = as_partition(lam)
    r = lam.size
    word = wedge.padded(wedge.from_partition(lam), r)
    distinct = sum(1 for a in range(r) for b in range(a + 1, r) if (word[a] - word[b]) % ell)
    sign = -1 if (r * (r - 1) // 2) % 2 else 1
    return LaurentPoly.monomial(-distinct, sign)


def _reverse_straighten(lam: Partition, ell: int) -> dict:
    r = lam.size
    word = wedge.padded(wedge.from_partition(lam), r)
    return wedge.straighten(word[::-1], ell)


@lru_cache(maxsize=None)
def bar_upper_table(n: int, ell: int) -> dict:
    """{lam: {mu: a_{mu lam}}} with bar⟨lam| = sum_mu a_{mu lam} ⟨mu|, lam ⊢ n."""
    table = {}
    for lam in partitions_of(n):
        raw = _reverse_straighten(lam, ell)
        norm = reversal_normalization(lam, ell)
        if raw.get(lam, ZERO) * norm != ONE:
            raise BarError(f"unexpected leading coefficient {raw.get(lam)} for {lam}, ell={ell}")
        table[lam] = {mu: c * norm for mu, c in raw.items()}
    return table


@lru_cache(maxsize=None)
def bar_lower_table(n: int, ell: int) -> dict:
    """{lam: {mu: A_{mu lam}}} with bar|lam> = sum_mu A_{mu lam} |mu>, lam ⊢ n."""
    up = bar_upper_table(n, ell)
    return {
        lam: {conjugate(mu): c.bar() for mu, c in up[conjugate(lam)].items()}
        for lam in partitions_of(n)
    }


def _apply_antilinear(v: FockVector, table_for) -> FockVector:
    n = v.weight()
    if n == "mixed":
        raise BarError("bar involution needs a homogeneous vector")
    if n is None:
        return v
    table = table_for(n, v.ell)
    out: dict = {}
    for lam, c in v.terms.items():
        cb = c.bar()
        for mu, a in table[lam].items():
            wedge._accumulate(out, mu, cb * a)
    return FockVector(out, v.side, v.ell)


def bar_upper(v: FockVector) -> FockVector:
    if v.side != UPPER:
        raise TypeError("bar_upper acts on upper vectors")
    return _apply_antilinear(v, bar_upper_table)


def bar_lower(v: FockVector) -> FockVector:
    if v.side != LOWER:
        raise TypeError("bar_lower acts on lower vectors")
    return _apply_antilinear(v, bar_lower_table)


# ---------------------------------------------------------------------------
# global bases


@lru_cache(maxsize=None)
def _d_columns(n: int, ell: int) -> dict:
    """{mu: {lam: d_{lam mu}}} for all mu ⊢ n, zero entries omitted."""
    order = weight_basis(n)
    bar = bar_lower_table(n, ell)
    cols = {}
    for j, mu in enumerate(order):
        col = {mu: ONE}
        # walk upward in dominance: earlier entries of ``order`` are more dominant
        for kappa in reversed(order[:j]):
            if not dominates(kappa, mu):
                continue
            r = ZERO
            for lam, d in col.items():
                a = bar[lam].get(kappa)
                if a is not None:
                    r = r + d.bar() * a
            if r.coeff(0) or r + r.bar():
                raise BarError(f"residual for d[{kappa},{mu}] is not bar-antisymmetric: {r}")
            d = r.positive_part()
            if d:
                col[kappa] = d
        cols[mu] = col
    return cols


def global_lower(mu, ell: int) -> FockVector:
    mu = as_partition(mu)
    return FockVector(_d_columns(mu.size, ell)[mu], LOWER, ell)


@lru_cache(maxsize=None)
def _g_upper_columns(n: int, ell: int) -> dict:
    """{lam: {mu: g}} with G^up(lam) = sum_mu g ⟨mu|, computed from the upper bar alone."""
    order = weight_basis(n)
    bar = bar_upper_table(n, ell)
    cols = {}
    for j, lam in enumerate(order):
        col = {lam: ONE}
        for kappa in order[j + 1:]:
            if not dominates(lam, kappa):
                continue
            r = ZERO
            for mu, g in col.items():
                a = bar[mu].get(kappa)
                if a is not None:
                    r = r + g.bar() * a
            if r.coeff(0) or r + r.bar():
                raise BarError(f"residual for g[{kappa},{lam}] is not bar-antisymmetric: {r}")
            g = r.positive_part()
            if g:
                col[kappa] = g
        cols[lam] = col
    return cols


def global_upper(mu, ell: int) -> FockVector:
    """G^up(mu) from the triangular algorithm on the upper bar involution."""
    mu = as_partition(mu)
    return FockVector(_g_upper_columns(mu.size, ell)[mu], UPPER, ell)


# ---------------------------------------------------------------------------
# the decomposition matrix


class DMatrix:
    """d_{lam mu}(q) for lam, mu ⊢ n, with G^low(mu) = sum_lam d_{lam mu} |lam>.

    ``order`` is ``weight_basis(n)``.  ``rows()`` is the displayed matrix:
    row r lists G^low(order[r]) against |order[0]>, |order[1]>, ..., so it is
    lower unitriangular.
    """

    def __init__(self, n: int, ell: int, columns: Mapping):
        self.n = n
        self.ell = ell
        self.order = weight_basis(n)
        self._cols = {mu: dict(col) for mu, col in columns.items()}

    def entry(self, lam, mu) -> LaurentPoly:
        return self._cols[as_partition(mu)].get(as_partition(lam), ZERO)

    __call__ = entry

    def column(self, mu) -> dict:
        return dict(self._cols[as_partition(mu)])

    def row(self, lam) -> dict:
        lam = as_partition(lam)
        return {mu: col[lam] for mu, col in self._cols.items() if lam in col}

    def rows(self) -> list[list[LaurentPoly]]:
        return [[self.entry(lam, mu) for lam in self.order] for mu in self.order]

    def __eq__(self, other):
        if not isinstance(other, DMatrix):
            return NotImplemented
        return (self.n, self.ell, self._cols) == (other.n, other.ell, other._cols)

    def nonzero(self):
        """(lam, mu, d) in order-index order."""
        idx = {p: k for k, p in enumerate(self.order)}
        out = [(lam, mu, d) for mu, col in self._cols.items() for lam, d in col.items()]
        out.sort(key=lambda t: (idx[t[0]], idx[t[1]]))
        return out

    def to_json(self) -> dict:
        idx = {p: k for k, p in enumerate(self.order)}
        return {
            "n": self.n,
            "ell": self.ell,
            "order": [list(p) for p in self.order],
            "entries": [[idx[lam], idx[mu], d.to_json()] for lam, mu, d in self.nonzero()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "DMatrix":
        order = [Partition(p) for p in data["order"]]
        cols: dict = {mu: {} for mu in order}
        for i, j, c in data["entries"]:
            cols[order[j]][order[i]] = LaurentPoly.from_json(c)
        return cls(int(data["n"]), int(data["ell"]), cols)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [str(p) for p in self.order])
        for mu, row in zip(self.order, self.rows()):
            writer.writerow([str(mu)] + [str(c) for c in row])
        return buf.getvalue()

    def to_latex(self) -> str:
        head = " & ".join(f"${p}$" for p in self.order)
        lines = [
            "\\begin{tabular}{c|" + "c" * len(self.order) + "}",
            f" & {head} \\\\",
            "\\hline",
        ]
        for mu, row in zip(self.order, self.rows()):
            cells = " & ".join(f"${latex_poly(c)}$" for c in row)
            lines.append(f"${mu}$ & {cells} \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"


def latex_poly(c: LaurentPoly) -> str:
    """Ascending LaTeX rendering, e.g. ``q^{-1} - 2 + q^{3}``."""
    if not c:
        return "0"
    out = []
    for e, a in c.items():
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{{{e}}}")
        body = str(abs(a)) if (abs(a) != 1 or not mono) else ""
        term = body + mono
        if not out:
            out.append(term if a > 0 else "-" + term)
        else:
            out.append(("+ " if a > 0 else "- ") + term)
    return " ".join(out)


@lru_cache(maxsize=None)
def d_matrix(n: int, ell: int) -> DMatrix:
    if n < 0 or ell < 2:
        raise ValueError(f"d_matrix needs n >= 0 and ell >= 2, got n={n}, ell={ell}")
    return DMatrix(n, ell, _d_columns(n, ell))


@lru_cache(maxsize=None)
def _inverse(n: int, ell: int) -> dict:
    """{(mu, lam): e} with sum_mu d_{lam mu} e_{mu kappa} = delta, by back-substitution."""
    D = d_matrix(n, ell)
    order = D.order
    inv: dict = {}
    for k, kappa in enumerate(order):
        inv[(kappa, kappa)] = ONE
        # solve downward: rows lam more dominant than kappa come first in order
        for lam in reversed(order[:k]):
            s = ZERO
            for mu, d in D.row(lam).items():
                if mu != lam and (mu, kappa) in inv:
                    s = s + d * inv[(mu, kappa)]
            if s:
                inv[(lam, kappa)] = -s
    return inv


def upper_expansion(lam, ell: int) -> dict:
    """⟨lam| = sum_mu d_{lam mu} G^up(mu), returned as {mu: d_{lam mu}}."""
    lam = as_partition(lam)
    return d_matrix(lam.size, ell).row(lam)


def global_upper_from_d(mu, ell: int) -> FockVector:
    """G^up(mu) = sum_lam e_{mu lam} ⟨lam| where e = D^{-1}."""
    mu = as_partition(mu)
    inv = _inverse(mu.size, ell)
    terms = {lam: e for (a, lam), e in inv.items() if a == mu}
    return FockVector(terms, UPPER, ell)


def expand_in_upper_basis(v: FockVector) -> dict:
    """Coefficients of an upper vector in the G^up basis."""
    if v.side != UPPER:
        raise TypeError("expected an upper vector")
    n = v.weight()
    if n is None:
        return {}
    if n == "mixed":
        raise ValueError("expected a homogeneous vector")
    out: dict = {}
    for lam, c in v.terms.items():
        for mu, d in upper_expansion(lam, v.ell).items():
            wedge._accumulate(out, mu, c * d)
    return out


def pairing(x: FockVector, y: FockVector) -> LaurentPoly:
    """⟨x, y⟩ for x upper, y lower, with ⟨lam|mu> = δ."""
    if x.side != UPPER or y.side != LOWER:
        raise TypeError("pairing takes (upper, lower)")
    yt = y.terms
    s = ZERO
    for lam, c in x.terms.items():
        d = yt.get(lam)
        if d is not None:
            s = s + c * d
    return s


# ---------------------------------------------------------------------------
# common kernel of the E_j on the upper side


def _fraction_free_kernel(rows: list[list[LaurentPoly]], ncols: int) -> list[list[LaurentPoly]]:
    """Kernel of a matrix over Z[q, q^-1] by fraction-free Gauss-Jordan elimination."""
    m = [list(r) for r in rows if any(r)]
    pivots: list[tuple[int, int]] = []
    prev = ONE
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(len(m)):
            if i == r:
                continue
            a = m[i][c]
            m[i] = [(p * m[i][j] - a * m[r][j]).exact_div(prev) for j in range(ncols)]
        prev = p
        pivots.append((r, c))
        r += 1
        if r == len(m):
            break
    # after full elimination every pivot entry equals ``prev``
    pivot_cols = {c: i for i, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = [ZERO] * ncols
        vec[f] = prev
        for c, i in pivot_cols.items():
            vec[c] = -m[i][f]
        basis.append(_normalize(vec))
    return basis


def _normalize(vec: list[LaurentPoly]) -> list[LaurentPoly]:
    """Strip integer content and a common power of q; make the first nonzero entry positive."""
    from math import gcd

    g = 0
    low = None
    for c in vec:
        if c:
            g = gcd(g, c.content())
            low = c.min_exponent() if low is None else min(low, c.min_exponent())
    if not g:
        return vec
    first = next(c for c in vec if c)
    lead = first.coeff(first.max_exponent())
    g = g if lead > 0 else -g
    out = []
    for c in vec:
        out.append(LaurentPoly({e - low: v // g for e, v in c.terms.items()}))
    return out


def e_matrix_rows(n: int, ell: int) -> tuple[list[Partition], list[list[LaurentPoly]]]:
    """Stacked matrices of the upper E_j from weight n to n-1; columns follow weight_basis(n)."""
    cols = weight_basis(n)
    targets = weight_basis(n - 1) if n >= 1 else []
    rows = []
    images = {lam: {j: e_action_upper(FockVector.basis(lam, UPPER, ell), j).terms for j in range(ell)}
              for lam in cols}
    for j in range(ell):
        for nu in targets:
            rows.append([images[lam][j].get(nu, ZERO) for lam in cols])
    return cols, rows


def e_kernel_basis(n: int, ell: int) -> list[FockVector]:
    """Basis of the common kernel of all E_j on the weight-n part of F^∨."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cols, rows = e_matrix_rows(n, ell)
    if n == 0:
        return [FockVector.basis((), UPPER, ell)]
    kernel = _fraction_free_kernel(rows, len(cols))
    return [FockVector(dict(zip(cols, vec)), UPPER, ell) for vec in kernel]
