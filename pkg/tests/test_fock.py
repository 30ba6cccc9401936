import pytest

from fockspace.fock import (
    LOWER, UPPER, FockVector, apply_word, e_action, e_action_upper, e_action_wedge, f_action,
    f_action_upper, f_action_wedge, k_action, weight_basis,
)
from fockspace.partitions import Partition, iter_partitions_upto
from fockspace.qlaurent import ONE, Q, Q_INV, ZERO, LaurentPoly, quantum_int


def ket(lam, ell=2):
    return FockVector.basis(lam, LOWER, ell)


def bra(lam, ell=2):
    return FockVector.basis(lam, UPPER, ell)


def test_lower_examples():
    assert f_action(ket(()), 0) == ket((1,))
    assert f_action(ket((1,)), 1) == ket((1, 1)) + ket((2,)).scale(Q)
    for i in range(2):
        assert not e_action(ket(()), i)


def test_upper_examples():
    assert f_action_upper(bra((1,)), 1) == bra((1, 1)).scale(Q_INV) + bra((2,))
    assert not e_action_upper(bra(()), 0)
    g = bra((2,)) - bra((1, 1)).scale(Q)
    assert not e_action_upper(g, 0) and not e_action_upper(g, 1)


def test_side_mismatch_is_a_type_error():
    with pytest.raises(TypeError):
        f_action(bra((1,)), 0)
    with pytest.raises(TypeError):
        e_action_upper(ket((1,)), 0)
    with pytest.raises(TypeError):
        ket(()) + bra(())


def test_weight_query_and_json():
    v = ket((2,)) + ket((1, 1)).scale(Q)
    assert v.weight() == 2
    assert (v + ket((1,))).weight() == "mixed"
    assert FockVector({}, LOWER, 2).weight() is None
    assert FockVector.from_json(v.to_json()) == v
    assert v.to_json()["terms"][0] == {"partition": [2], "coeff": {"0": "1"}}


def test_weight_basis():
    assert weight_basis(0) == [()]
    assert weight_basis(2) == [(2,), (1, 1)]
    assert weight_basis(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("ell", [2, 3])
@pytest.mark.parametrize("side", [LOWER, UPPER])
def test_combinatorial_action_matches_wedge(ell, side):
    for lam in iter_partitions_upto(8):
        v = FockVector.basis(lam, side, ell)
        for i in range(ell):
            f = f_action if side == LOWER else f_action_upper
            e = e_action if side == LOWER else e_action_upper
            assert f(v, i) == f_action_wedge(v, i)
            assert e(v, i) == e_action_wedge(v, i)


def cartan(i, j, ell):
    if ell == 2:
        return 2 if i == j else -2
    if i == j:
        return 2
    return -1 if (i - j) % ell in (1, ell - 1) else 0


def serre_terms(i, j, ell, gen):
    """q-Serre element for adjacent i, j as a list of (coeff, word)."""
    a = 1 - cartan(i, j, ell)
    out = []
    for k in range(a + 1):
        binom = quantum_binomial(a, k)
        word = [(gen, i)] * (a - k) + [(gen, j)] + [(gen, i)] * k
        out.append((binom * (-1) ** k, word))
    return out


def quantum_binomial(a, k):
    num, den = ONE, ONE
    for t in range(k):
        num = num * quantum_int(a - t)
        den = den * quantum_int(t + 1)
    return num.exact_div(den)


@pytest.mark.parametrize("ell", [2, 3])
@pytest.mark.parametrize("side", [LOWER, UPPER])
def test_quantum_group_relations(ell, side):
    qq = Q - Q_INV
    for lam in iter_partitions_upto(6):
        v = FockVector.basis(lam, side, ell)
        for i in range(ell):
            for j in range(ell):
                a = cartan(i, j, ell)
                assert apply_word(v, [("K", i), ("E", j)]) == apply_word(v, [("E", j), ("K", i)]).scale(Q**a)
                assert apply_word(v, [("K", i), ("F", j)]) == apply_word(v, [("F", j), ("K", i)]).scale(Q**-a)
                comm = apply_word(v, [("E", i), ("F", j)]) - apply_word(v, [("F", j), ("E", i)])
                rhs = (apply_word(v, [("K", i)]) - apply_word(v, [("Kinv", i)])) if i == j else FockVector({}, side, ell)
                assert comm.scale(qq) == rhs
                if i == j:
                    continue
                for gen in ("E", "F"):
                    if a == 0:
                        assert apply_word(v, [(gen, i), (gen, j)]) == apply_word(v, [(gen, j), (gen, i)])
                        continue
                    total = FockVector({}, side, ell)
                    for c, word in serre_terms(i, j, ell, gen):
                        total = total + apply_word(v, word).scale(c)
                    assert not total


def test_k_action_is_diagonal():
    v = ket((2, 1), 3)
    assert k_action(v, 0) == v.scale(k_action(v, 0).coeff((2, 1)))
    assert k_action(k_action(v, 1), 1, -1) == v
