"""Dense *-algebra computations against explicit small oracles."""

import numpy as np
import pytest

from paulipriv import (
    Channel,
    NumericalAmbiguityError,
    PreconditionError,
    apply_channel,
    choi_equal,
    choi_matrix,
    commutant,
    conditional_expectation,
    diagonal_algebra,
    full_matrix_algebra,
    left_regular_trace,
    parse_pauli,
    scalar_algebra,
    simultaneous_diagonalize,
    span_closure,
    structure_type,
    subgroup_algebra,
)
from paulipriv import close
from paulipriv.algebra import superoperator
from helpers import X2, Z2, random_density, random_subgroup


def dense(s, d=2):
    return parse_pauli(s, d=d).to_dense()


def motivating_algebra():
    return span_closure([dense(s) for s in ("II", "IX", "YY", "YZ")])


def phase_flip_channel():
    return Channel(np.array([dense(s) / 2 for s in ("II", "ZI", "IZ", "ZZ")]))


def test_span_closure_scalars():
    alg = span_closure([np.eye(3)])
    assert alg.dim == 1
    alg.verify()


def test_span_closure_motivating_dimension():
    alg = motivating_algebra()
    assert alg.dim == 4
    alg.verify()


def test_span_closure_single_x_rank_oracle():
    alg = span_closure([X2])
    # brute-force span rank of {I, X, X^2, ...}
    rows = np.array([np.eye(2).flatten(), X2.flatten(), (X2 @ X2).flatten()])
    assert alg.dim == np.linalg.matrix_rank(rows)
    assert alg.dim == 2


def test_span_closure_generates_products():
    alg = span_closure([dense("XI"), dense("ZI")])
    assert alg.dim == 4  # I, X, Z and XZ on the first site
    assert alg.contains(dense("XI") @ dense("ZI"))


def test_commutant_of_diagonal_is_diagonal():
    c = commutant(diagonal_algebra(4))
    assert c.dim == 4
    for b in c.basis:
        assert np.abs(b - np.diag(np.diag(b))).max() < 1e-10


def test_commutant_of_full_is_scalars():
    c = commutant(full_matrix_algebra(4))
    assert c.dim == 1
    b = c.basis[0]
    assert np.abs(b - b[0, 0] * np.eye(4)).max() < 1e-10


def test_commutant_of_first_qubit_algebra():
    alg = span_closure([dense(s) for s in ("II", "XI", "YI", "ZI")])
    c = commutant(alg)
    assert c.dim == 4
    # every commutant element has the form I (x) m
    for b in c.basis:
        t = b.reshape(2, 2, 2, 2)
        m = (t[0, :, 0, :] + t[1, :, 1, :]) / 2
        assert np.abs(b - np.kron(np.eye(2), m)).max() < 1e-9


def test_commutant_dimension_identity_exhaustive_n1():
    # all five subgroups of the single-qubit class group
    from paulipriv import all_classes

    classes = all_classes(2, 1)
    seen = set()
    for i in range(4):
        for j in range(4):
            K = close([classes[i], classes[j]])
            key = tuple(sorted((c.x, c.z) for c in K))
            if key in seen:
                continue
            seen.add(key)
            alg = span_closure([c.to_dense() for c in K])
            assert alg.dim * commutant(alg).dim == 4
    assert len(seen) == 5


def test_structure_type_diagonal():
    st, _ = structure_type(diagonal_algebra(4))
    assert st.blocks == ((1, 1),) * 4


def test_structure_type_motivating():
    st, u = structure_type(motivating_algebra())
    assert st.blocks == ((2, 2),)
    assert np.abs(u @ u.conj().T - np.eye(4)).max() < 1e-10


def test_structure_type_full():
    st, _ = structure_type(full_matrix_algebra(3))
    assert st.blocks == ((1, 3),)


def test_structure_type_qutrit_pair_algebra():
    g1 = parse_pauli("X2:X1", d=3).to_dense()
    g2 = parse_pauli("X1Z2:Z1", d=3).to_dense()
    st, _ = structure_type(span_closure([g1, g2]))
    assert st.blocks == ((3, 3),)


def test_structure_type_deterministic():
    alg = motivating_algebra()
    st1, u1 = structure_type(alg)
    st2, u2 = structure_type(alg)
    assert st1.blocks == st2.blocks
    assert np.array_equal(u1, u2)


def test_structure_block_form_holds():
    alg = motivating_algebra()
    st, u = structure_type(alg)
    (k, q), = st.blocks
    for a in alg.basis:
        m = (u @ a @ u.conj().T).reshape(k, q, k, q)
        avg = np.einsum("iaib->ab", m) / k
        assert np.abs(m - np.einsum("ij,ab->iajb", np.eye(k), avg)).max() < 1e-8


def test_commutative_pauli_algebras_flat_structure():
    rng = np.random.default_rng(8)
    found = 0
    while found < 10:
        K = random_subgroup(rng, 2, 2)
        from paulipriv import is_abelian

        if not is_abelian(K):
            continue
        found += 1
        st, _ = structure_type(subgroup_algebra(K))
        ks = {k for k, _ in st.blocks}
        assert all(q == 1 for _, q in st.blocks)
        assert len(ks) == 1  # equal multiplicities


def test_simdiag_already_diagonal_gives_permutation():
    ops = [np.diag([3.0, 1.0, 2.0]), np.diag([0.0, 5.0, 5.0])]
    u = simultaneous_diagonalize(ops)
    assert np.allclose(np.abs(u), np.abs(u).round(), atol=1e-12)
    assert (np.abs(u).round() == np.abs(u)).all()
    assert ((np.abs(u) == 1).sum(axis=0) == 1).all()
    for op in ops:
        d = u @ op @ u.conj().T
        assert np.abs(d - np.diag(np.diag(d))).max() < 1e-10


def test_simdiag_single_z_identity():
    u = simultaneous_diagonalize([Z2])
    assert np.abs(u - np.eye(2)).max() < 1e-12


def test_simdiag_two_site_x():
    ops = [dense("XI"), dense("IX")]
    u = simultaneous_diagonalize(ops)
    for op in ops:
        d = u @ op @ u.conj().T
        assert np.abs(d - np.diag(np.diag(d))).max() < 1e-8


def test_simdiag_handles_normal_non_hermitian():
    xz = X2 @ Z2  # eigenvalues +-i
    u = simultaneous_diagonalize([xz])
    d = u @ xz @ u.conj().T
    assert np.abs(d - np.diag(np.diag(d))).max() < 1e-10


def test_simdiag_rejects_noncommuting():
    with pytest.raises(PreconditionError):
        simultaneous_diagonalize([X2, Z2])


def test_simdiag_rejects_nonnormal():
    with pytest.raises(PreconditionError):
        simultaneous_diagonalize([np.array([[0.0, 1.0], [0.0, 0.0]])])


def test_left_regular_trace_identity():
    for n in (2, 4):
        alg = scalar_algebra(n)
        assert left_regular_trace(alg, np.eye(n)) == pytest.approx(n * n)


def test_left_regular_trace_e11_oracle():
    d4 = diagonal_algebra(4)
    e11 = np.zeros((4, 4), dtype=complex)
    e11[0, 0] = 1.0
    # explicit 16x16 matrix of x -> e11 x on the matrix units
    units = [np.zeros((4, 4), dtype=complex) for _ in range(16)]
    for idx in range(16):
        units[idx][idx // 4, idx % 4] = 1.0
    big = np.zeros((16, 16), dtype=complex)
    for col, u in enumerate(units):
        out = (e11 @ u).reshape(-1)
        big[:, col] = out
    assert np.trace(big) == pytest.approx(4.0)
    assert left_regular_trace(d4, e11) == pytest.approx(np.trace(big))


def test_left_regular_trace_z_oracle():
    alg = span_closure([Z2])
    units = [np.zeros((2, 2), dtype=complex) for _ in range(4)]
    for idx in range(4):
        units[idx][idx // 2, idx % 2] = 1.0
    big = np.zeros((4, 4), dtype=complex)
    for col, u in enumerate(units):
        big[:, col] = (Z2 @ u).reshape(-1)
    assert np.trace(big) == pytest.approx(0.0)
    assert left_regular_trace(alg, Z2) == pytest.approx(0.0)


def test_left_regular_trace_outside_algebra():
    with pytest.raises(PreconditionError):
        left_regular_trace(span_closure([Z2]), X2)


def test_conditional_expectation_full_is_identity():
    phi = conditional_expectation(full_matrix_algebra(3))
    assert choi_equal(phi, Channel.identity(3))


def test_conditional_expectation_scalars_depolarizes():
    phi = conditional_expectation(scalar_algebra(2))
    rng = np.random.default_rng(2)
    for _ in range(10):
        rho = random_density(rng, 2)
        assert np.abs(apply_channel(phi, rho) - np.eye(2) / 2).max() < 1e-10


def test_conditional_expectation_diagonal_is_phase_flip():
    phi = conditional_expectation(diagonal_algebra(4))
    assert choi_equal(phi, phase_flip_channel())


def test_conditional_expectation_axioms_small():
    rng = np.random.default_rng(21)
    for _ in range(5):
        K = random_subgroup(rng, 2, 2)
        alg = subgroup_algebra(K)
        phi = conditional_expectation(alg)
        for a in alg.basis:
            assert np.abs(apply_channel(phi, a) - a).max() < 1e-8
        x = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        ca = (rng.standard_normal(alg.dim) @ alg.rows()).reshape(4, 4)
        cb = (rng.standard_normal(alg.dim) @ alg.rows()).reshape(4, 4)
        lhs = apply_channel(phi, ca @ x @ cb)
        rhs = ca @ apply_channel(phi, x) @ cb
        assert np.abs(lhs - rhs).max() < 1e-8
        rho = random_density(rng, 4)
        assert np.linalg.eigvalsh(apply_channel(phi, rho)).min() > -1e-10
        assert np.trace(apply_channel(phi, rho)) == pytest.approx(1.0)


def test_apply_channel_identity():
    rng = np.random.default_rng(0)
    rho = random_density(rng, 3)
    assert np.abs(apply_channel(Channel.identity(3), rho) - rho).max() < 1e-14


def test_apply_channel_phase_flip_oracle():
    phi = phase_flip_channel()
    e01 = np.zeros((4, 4), dtype=complex)
    e01[1, 1] = 1.0  # |01><01|
    assert np.abs(apply_channel(phi, e01) - e01).max() < 1e-14
    xx = dense("XX")
    # direct 4x4 arithmetic oracle
    expected = sum(k @ xx @ k.conj().T for k in phi.kraus)
    assert np.abs(expected).max() < 1e-14
    assert np.abs(apply_channel(phi, xx)).max() < 1e-14


def test_apply_channel_dimension_mismatch():
    with pytest.raises(PreconditionError):
        apply_channel(phase_flip_channel(), np.eye(2))


def test_apply_channel_preserves_trace():
    rng = np.random.default_rng(6)
    phi = phase_flip_channel()
    for _ in range(20):
        x = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        assert abs(np.trace(apply_channel(phi, x)) - np.trace(x)) < 1e-10


def test_channel_requires_trace_preservation():
    with pytest.raises(PreconditionError):
        Channel(np.array([np.eye(2) * 0.5]))


def test_choi_of_identity_channel():
    n = 3
    c = choi_matrix(Channel.identity(n))
    expected = np.zeros((9, 9), dtype=complex)
    for j in range(n):
        for k in range(n):
            ejk = np.zeros((n, n), dtype=complex)
            ejk[j, k] = 1.0
            expected += np.kron(ejk, ejk)
    assert np.abs(c - expected).max() < 1e-14


def test_choi_equal_examples():
    phi = phase_flip_channel()
    assert choi_equal(phi, phi)
    assert choi_equal(phi, conditional_expectation(diagonal_algebra(4)))
    depol = Channel(np.array([dense(s) / 2 for s in ("I", "X", "Y", "Z")]))
    assert not choi_equal(depol, Channel.identity(2))
    with pytest.raises(PreconditionError):
        choi_equal(depol, phi)


def test_superoperator_consistent_with_apply():
    rng = np.random.default_rng(13)
    phi = phase_flip_channel()
    s = superoperator(phi)
    x = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert np.abs((s @ x.reshape(-1)).reshape(4, 4) - apply_channel(phi, x)).max() < 1e-12


def test_dimension_identity_random_n2_n3():
    rng = np.random.default_rng(14)
    for n in (2, 3):
        for _ in range(10):
            K = random_subgroup(rng, 2, n)
            alg = span_closure([c.to_dense() for c in K.elements])
            assert alg.dim == len(K)
            assert alg.dim * commutant(alg).dim == 4**n
