"""Shared oracles and random generators for the test suite.

Everything here is deliberately independent of the package internals: dense
single-site matrices are hard-coded, closures are brute-forced on exponent
tuples, and commutation phases are read off dense products.
"""

from __future__ import annotations

import numpy as np

from paulipriv import PauliClass, all_classes, annihilator, close

W3 = np.exp(2j * np.pi / 3)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Z2 = np.diag([1.0, -1.0]).astype(complex)
Y2 = np.array([[0, -1j], [1j, 0]])
X3 = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=complex)
Z3 = np.diag([1.0, W3, W3**2]).astype(complex)


def site_matrix(d: int, x: int, z: int) -> np.ndarray:
    xm, zm = (X2, Z2) if d == 2 else (X3, Z3)
    assert d in (2, 3), "oracle only covers d = 2, 3"
    return np.linalg.matrix_power(xm, x) @ np.linalg.matrix_power(zm, z)


def dense_oracle(d: int, phase_exp: int, x, z) -> np.ndarray:
    """Independent dense realization of zeta^phase * kron(X^x Z^z)."""
    out = np.array([[np.exp(1j * np.pi * phase_exp / d)]], dtype=complex)
    for xk, zk in zip(x, z):
        out = np.kron(out, site_matrix(d, xk, zk))
    return out


def brute_closure(gens, d: int, n: int) -> set:
    """BFS closure over (x + z) exponent tuples of length 2n."""
    elems = {tuple([0] * (2 * n))}
    gens = [tuple(g) for g in gens]
    frontier = list(elems)
    while frontier:
        a = frontier.pop()
        for g in gens:
            c = tuple((ai + gi) % d for ai, gi in zip(a, g))
            if c not in elems:
                elems.add(c)
                frontier.append(c)
    return elems


def random_class(rng, d: int, n: int) -> PauliClass:
    return PauliClass(
        d, n, tuple(rng.integers(0, d, n).tolist()), tuple(rng.integers(0, d, n).tolist())
    )


def random_subgroup(rng, d: int, n: int):
    """Closure of a random handful of classes."""
    count = int(rng.integers(0, 2 * n + 1))
    return close([random_class(rng, d, n) for _ in range(count)], d=d, n=n)


def random_abelian_subgroup(rng, d: int, n: int, steps: int | None = None):
    """Random Abelian subgroup grown by random commuting adjunctions.

    Each step multiplies the size by d (for prime d), so ``steps`` adjunctions
    give size d**steps.  With ``steps=None`` a random count in [0, n] is used.
    """
    if steps is None:
        steps = int(rng.integers(0, n + 1))
    group = close((), d=d, n=n)
    for _ in range(steps):
        candidates = [c for c in annihilator(group) if c not in group]
        group = close(list(group.elements) + [candidates[rng.integers(len(candidates))]])
    return group


def random_maximal_abelian(rng, d: int, n: int):
    return random_abelian_subgroup(rng, d, n, steps=n)


def random_density(rng, n: int) -> np.ndarray:
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = m @ m.conj().T
    return rho / np.trace(rho)


def class_index(d: int, n: int):
    """Canonical class list plus a lookup from (x, z) tuples to positions."""
    classes = all_classes(d, n)
    return classes, {(c.x, c.z): i for i, c in enumerate(classes)}
