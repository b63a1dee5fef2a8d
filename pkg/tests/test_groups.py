"""Subgroup machinery: closures, character matrices, annihilators, extensions."""

import numpy as np
import pytest

from paulipriv import (
    PauliClass,
    PauliSubgroup,
    PreconditionError,
    all_classes,
    annihilator,
    character_matrix,
    close,
    diagonal_subgroup,
    extend_to_maximal,
    is_abelian,
    parse_pauli,
)
from paulipriv.groups import _nullspace_mod_prime, generating_set
from helpers import brute_closure, random_abelian_subgroup, random_subgroup

# Single-site commutation table in canonical class order I, X, Z, Y,
# matching the displayed 4x4 qubit table entrywise.
H_EXPONENTS = [
    [0, 0, 0, 0],
    [0, 0, 1, 1],
    [0, 1, 0, 1],
    [0, 1, 1, 0],
]
H_SIGNS = np.array([
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
])

# Single-qutrit table as omega exponents, class order I, X, X2, Z, XZ,
# X2Z, Z2, XZ2, X2Z2.
F_EXPONENTS = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 2, 2, 2],
    [0, 0, 0, 2, 2, 2, 1, 1, 1],
    [0, 2, 1, 0, 2, 1, 0, 2, 1],
    [0, 2, 1, 1, 0, 2, 2, 1, 0],
    [0, 2, 1, 2, 1, 0, 1, 0, 2],
    [0, 1, 2, 0, 1, 2, 0, 1, 2],
    [0, 1, 2, 1, 2, 0, 2, 0, 1],
    [0, 1, 2, 2, 0, 1, 1, 2, 0],
]


def cls(s, d=2):
    return parse_pauli(s, d=d).pauli_class()


def test_close_empty():
    K = close((), d=2, n=2)
    assert len(K) == 1 and K.elements[0].is_identity


def test_close_phase_flip_group():
    K = close([cls("ZI"), cls("IZ")])
    assert len(K) == 4
    assert {c.to_string() for c in K} == {"II", "ZI", "IZ", "ZZ"}


def test_close_two_qutrit_group_vs_brute_force():
    g1 = PauliClass(3, 2, (2, 0), (1, 0))  # X2Z1 on site 1
    g2 = PauliClass(3, 2, (0, 1), (0, 1))  # X1Z1 on site 2
    K = close([g1, g2])
    assert len(K) == 9
    oracle = brute_closure([(2, 0, 1, 0), (0, 1, 0, 1)], 3, 2)
    assert {(c.x + c.z) for c in K} == oracle
    expected = {((2 * i) % 3, j % 3, i % 3, j % 3) for i in range(3) for j in range(3)}
    assert oracle == expected


def test_close_size_bound():
    gens = [cls(s) for s in ("XI", "ZI", "IX", "IZ")]
    with pytest.raises(PreconditionError):
        close(gens, max_size=8)


def test_close_mixed_spaces_rejected():
    with pytest.raises(PreconditionError):
        close([cls("X"), cls("XX")])


def test_is_abelian():
    assert is_abelian(close([cls("ZI"), cls("IZ")]))
    assert not is_abelian(close([cls("XI"), cls("ZI")]))
    assert is_abelian(close((), d=2, n=1))


def test_noncommuting_pair_dense_cross_check():
    a, b = cls("XI"), cls("ZI")
    da, db = a.to_dense(), b.to_dense()
    assert np.abs(da @ db + db @ da).max() < 1e-14  # they anticommute


def test_character_matrix_qubit_exact():
    M = character_matrix(2, 1)
    assert [c.to_string() for c in M.classes] == ["I", "X", "Z", "Y"]
    assert M.exponents.tolist() == H_EXPONENTS
    assert np.array_equal(M.to_complex(), H_SIGNS)


def test_character_matrix_qutrit_exact():
    M = character_matrix(3, 1)
    assert [c.to_string() for c in M.classes] == [
        "I", "X1", "X2", "Z1", "X1Z1", "X2Z1", "Z2", "X1Z2", "X2Z2",
    ]
    assert M.exponents.tolist() == F_EXPONENTS


def test_character_matrix_identity_row():
    for d, n in [(2, 2), (3, 1)]:
        M = character_matrix(d, n)
        assert not M.exponents[0].any()
        assert not M.exponents[:, 0].any()


def test_character_matrix_antisymmetry():
    for d, n in [(2, 2), (3, 1)]:
        M = character_matrix(d, n)
        assert ((M.exponents + M.exponents.T) % d == 0).all()


@pytest.mark.parametrize("n", [2, 3])
def test_character_matrix_tensor_power_exact(n):
    h1 = character_matrix(2, 1).to_complex()
    power = h1
    for _ in range(n - 1):
        power = np.kron(power, h1)
    assert np.array_equal(character_matrix(2, n).to_complex(), power)


def test_character_matrix_dense_commutation_oracle():
    for d, n in [(2, 1), (2, 2), (3, 1)]:
        M = character_matrix(d, n)
        values = M.to_complex()
        dense = [c.to_dense() for c in M.classes]
        for i, da in enumerate(dense):
            for j, db in enumerate(dense):
                assert np.abs(da @ db - values[i, j] * (db @ da)).max() <= 1e-9


def test_character_matrix_size_bound():
    with pytest.raises(PreconditionError):
        character_matrix(2, 8)


def test_annihilator_trivial_group():
    K = close((), d=2, n=2)
    assert len(annihilator(K)) == 16


def test_annihilator_phase_flip_is_self():
    K = close([cls("ZI"), cls("IZ")])
    ann = annihilator(K)
    assert set(ann.elements) == set(K.elements)
    assert len(K) * len(ann) == 4**2


def test_annihilator_single_z_scan_oracle():
    K = close([cls("Z")])
    ann = annihilator(K)
    # independent scan over the 4 classes of P_1
    expected = {
        c.to_string()
        for c in all_classes(2, 1)
        if np.abs(c.to_dense() @ cls("Z").to_dense()
                  - cls("Z").to_dense() @ c.to_dense()).max() < 1e-12
    }
    assert {c.to_string() for c in ann} == expected == {"I", "Z"}


def test_nullspace_mod_prime():
    rng = np.random.default_rng(4)
    for d in (2, 3, 5):
        rows = rng.integers(0, d, (4, 6))
        basis = _nullspace_mod_prime(rows, d)
        for v in basis:
            assert not ((rows @ v) % d).any()
        # dimension check against brute force over all vectors
        count = sum(
            1
            for idx in range(d**6)
            if not ((rows @ np.array([(idx // d**k) % d for k in range(6)])) % d).any()
        )
        assert d ** len(basis) == count


def test_annihilator_linear_path_matches_scan():
    # d=3, n=4 sits above the scan limit, forcing the linear-system route
    rng = np.random.default_rng(9)
    K = random_abelian_subgroup(rng, 3, 4, steps=2)
    ann = annihilator(K)
    gens = generating_set(K)
    gx = np.array([g.x for g in gens])
    gz = np.array([g.z for g in gens])
    classes = all_classes(3, 4)
    xs = np.array([c.x for c in classes])
    zs = np.array([c.z for c in classes])
    mask = ~(((xs @ gz.T - zs @ gx.T) % 3).any(axis=1))
    expected = {(c.x, c.z) for c, keep in zip(classes, mask) if keep}
    assert {(c.x, c.z) for c in ann} == expected


@pytest.mark.parametrize("d", [2, 3])
def test_annihilator_duality_counting(d):
    rng = np.random.default_rng(d)
    for n in range(1, 5):
        for _ in range(50):
            K = random_subgroup(rng, d, n)
            assert len(K) * len(annihilator(K)) == d ** (2 * n)


def test_subgroup_contained_in_annihilator_iff_abelian():
    rng = np.random.default_rng(31)
    seen_abelian = seen_non = False
    for _ in range(40):
        K = random_subgroup(rng, 2, 3)
        contained = K.issubset(annihilator(K))
        assert contained == is_abelian(K)
        seen_abelian |= contained
        seen_non |= not contained
    assert seen_abelian and seen_non


def test_double_annihilator_is_identity():
    rng = np.random.default_rng(12)
    for d, n in [(2, 2), (2, 3), (3, 2)]:
        for _ in range(20):
            K = random_subgroup(rng, d, n)
            assert set(annihilator(annihilator(K)).elements) == set(K.elements)


def test_extend_already_maximal_unchanged():
    K = close([cls("ZI"), cls("IZ")])
    assert extend_to_maximal(K) == K


def test_extend_trivial_picks_lexicographic():
    K = extend_to_maximal(close((), d=2, n=1))
    assert {c.to_string() for c in K} == {"I", "X"}


def test_extend_single_zi_exhaustive_maximality():
    K = extend_to_maximal(close([cls("ZI")]))
    assert len(K) == 4 and is_abelian(K)
    assert cls("ZI") in K
    # exhaustive scan: no commuting class remains outside
    for c in all_classes(2, 2):
        if c not in K:
            assert not all(
                np.abs(c.to_dense() @ k.to_dense() - k.to_dense() @ c.to_dense()).max()
                < 1e-12
                for k in K
            )


@pytest.mark.parametrize("d,max_n", [(2, 6), (3, 3)])
def test_extension_property_sweep(d, max_n):
    rng = np.random.default_rng(d * 100)
    for n in range(1, max_n + 1):
        for _ in range(20):
            K = random_abelian_subgroup(rng, d, n)
            M = extend_to_maximal(K)
            assert len(M) == d**n
            assert is_abelian(M)
            assert K.issubset(M)


def test_extend_rejects_nonabelian():
    with pytest.raises(PreconditionError):
        extend_to_maximal(close([cls("XI"), cls("ZI")]))


def test_diagonal_subgroup():
    D = diagonal_subgroup(2, 3)
    assert len(D) == 8 and is_abelian(D)
    assert all(not any(c.x) for c in D)


def test_subgroup_invariants():
    rng = np.random.default_rng(77)
    for _ in range(20):
        K = random_subgroup(rng, 2, 3)
        assert K.elements[0].is_identity
        assert bin(len(K)).count("1") == 1  # power of two for d = 2
        assert (4**3) % len(K) == 0
        for c in K.elements[:8]:
            assert c.inverse() in K
    with pytest.raises(PreconditionError):
        PauliSubgroup(2, 1, (cls("X"),))  # identity missing
