"""Subgroup machinery on the phase quotient of the generalized Pauli group.

The quotient of the n-site Pauli group by its phase center is the additive
group Z_d^{2n} in (x, z) coordinates, so subgroups, annihilators and maximal
Abelian extensions are all integer computations.  Dense matrices appear only
in tests and in downstream modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import NumericalAmbiguityError, PreconditionError
from .pauli import PauliClass, omega_power

__all__ = [
    "CharacterMatrix",
    "PauliSubgroup",
    "all_classes",
    "annihilator",
    "character_matrix",
    "close",
    "diagonal_subgroup",
    "extend_to_maximal",
    "generating_set",
    "is_abelian",
]

# Above this many classes the annihilator switches from a direct scan over
# all of P_n to solving the symplectic linear system over Z_d.
_SCAN_LIMIT = 4096

_DEFAULT_MAX_SIZE = 10**6


def all_classes(d: int, n: int, max_count: int = _DEFAULT_MAX_SIZE) -> list[PauliClass]:
    """Every class of P_n in canonical order (per-site (z, x), site n slow)."""
    total = d ** (2 * n)
    if total > max_count:
        raise PreconditionError(
            f"P_n has {total} classes, above the enumeration bound {max_count}"
        )
    out = []
    for digits in itertools.product(range(d), repeat=2 * n):
        # digits = (z_n, x_n, ..., z_1, x_1) per the canonical key
        z = tuple(digits[2 * k] for k in range(n - 1, -1, -1))
        x = tuple(digits[2 * k + 1] for k in range(n - 1, -1, -1))
        out.append(PauliClass(d, n, x, z))
    return out


@dataclass(frozen=True)
class PauliSubgroup:
    """A multiplicatively closed set of Pauli classes, canonically ordered."""

    d: int
    n: int
    elements: tuple[PauliClass, ...]
    _index: frozenset = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements), key=lambda c: c.key()))
        if not elems or not elems[0].is_identity:
            raise PreconditionError("a subgroup must contain the identity class")
        for c in elems:
            if c.d != self.d or c.n != self.n:
                raise PreconditionError("subgroup elements on mismatched spaces")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_index", frozenset((c.x, c.z) for c in elems))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, c: PauliClass) -> bool:
        return (c.x, c.z) in self._index

    def issubset(self, other: "PauliSubgroup") -> bool:
        return all(c in other for c in self.elements)

    def xz_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Exponent vectors of all elements as integer arrays of shape (m, n)."""
        xs = np.array([c.x for c in self.elements], dtype=np.int64)
        zs = np.array([c.z for c in self.elements], dtype=np.int64)
        return xs, zs


def close(
    generators=(),
    *,
    d: int | None = None,
    n: int | None = None,
    max_size: int = _DEFAULT_MAX_SIZE,
) -> PauliSubgroup:
    """Smallest subgroup of P_n containing the given classes.

    ``d`` and ``n`` are inferred from the generators when present; for an
    empty generator list they must be passed explicitly and the result is
    the trivial subgroup.
    """
    gens = [g if isinstance(g, PauliClass) else g.pauli_class() for g in generators]
    if gens:
        d, n = gens[0].d, gens[0].n
        for g in gens:
            if g.d != d or g.n != n:
                raise PreconditionError("generators on mismatched spaces")
    elif d is None or n is None:
        raise PreconditionError("close() with no generators needs explicit d and n")

    ident = PauliClass.identity(d, n)
    seen = {(ident.x, ident.z): ident}
    frontier = [ident]
    while frontier:
        base = frontier.pop()
        for g in gens:
            c = base * g
            key = (c.x, c.z)
            if key not in seen:
                if len(seen) >= max_size:
                    raise PreconditionError(
                        f"closure exceeded the size bound {max_size}"
                    )
                seen[key] = c
                frontier.append(c)
    return PauliSubgroup(d, n, tuple(seen.values()))


def generating_set(K: PauliSubgroup) -> list[PauliClass]:
    """A small generating set, chosen greedily in canonical order."""
    gens: list[PauliClass] = []
    span = close((), d=K.d, n=K.n)
    for c in K.elements:
        if c not in span:
            gens.append(c)
            span = close(gens)
            if len(span) == len(K):
                break
    return gens


def _chi_table(xa, za, xb, zb, d) -> np.ndarray:
    """Omega exponents chi(a, b) for all row/column pairs, shape (ma, mb)."""
    return (xa @ zb.T - za @ xb.T) % d


def is_abelian(K: PauliSubgroup) -> bool:
    """True iff chi(a, b) = 1 for every pair of elements."""
    xs, zs = K.xz_arrays()
    m = len(K)
    step = max(1, min(m, 2**22 // max(m, 1)))
    for lo in range(0, m, step):
        t = _chi_table(xs[lo : lo + step], zs[lo : lo + step], xs, zs, K.d)
        if t.any():
            return False
    return True


@dataclass(frozen=True)
class CharacterMatrix:
    """Full table of commutation phases over all classes of P_n.

    ``exponents[a, b]`` is the exponent e with class_a class_b =
    omega**e class_b class_a, stored modulo d.  Rows and columns follow the
    canonical class order, so the identity class indexes row and column 0.
    """

    d: int
    n: int
    classes: tuple[PauliClass, ...]
    exponents: np.ndarray

    def __post_init__(self):
        arr = np.array(self.exponents, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "exponents", arr)
        object.__setattr__(self, "classes", tuple(self.classes))

    def to_complex(self) -> np.ndarray:
        values = np.array([omega_power(self.d, k) for k in range(self.d)])
        return values[self.exponents]

    @property
    def size(self) -> int:
        return len(self.classes)


def character_matrix(d: int, n: int, max_side: int = 10**4) -> CharacterMatrix:
    """Materialize the chi table for all of P_n (size d^{2n} per side)."""
    side = d ** (2 * n)
    if side > max_side:
        raise PreconditionError(
            f"character matrix side {side} exceeds the bound {max_side}"
        )
    classes = all_classes(d, n)
    xs = np.array([c.x for c in classes], dtype=np.int64)
    zs = np.array([c.z for c in classes], dtype=np.int64)
    return CharacterMatrix(d, n, tuple(classes), _chi_table(xs, zs, xs, zs, d))


def _nullspace_mod_prime(rows: np.ndarray, d: int) -> list[np.ndarray]:
    """Basis of the nullspace of ``rows`` over Z_d, d prime."""
    a = rows.copy() % d
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        hit = None
        for i in range(r, nrows):
            if a[i, c] % d:
                hit = i
                break
        if hit is None:
            continue
        a[[r, hit]] = a[[hit, r]]
        inv = pow(int(a[r, c]), d - 2, d)
        a[r] = (a[r] * inv) % d
        for i in range(nrows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % d
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-a[i, f]) % d
        basis.append(v % d)
    return basis


def annihilator(
    K: PauliSubgroup, max_size: int = _DEFAULT_MAX_SIZE
) -> PauliSubgroup:
    """All classes commuting with every element of K.

    A direct scan over all d^{2n} classes is used at desk scale; beyond the
    scan limit the symplectic constraints are solved over Z_d, which requires
    d prime.
    """
    d, n = K.d, K.n
    gens = generating_set(K)
    total = d ** (2 * n)
    if total <= _SCAN_LIMIT:
        classes = all_classes(d, n)
        xs = np.array([c.x for c in classes], dtype=np.int64)
        zs = np.array([c.z for c in classes], dtype=np.int64)
        if gens:
            gx = np.array([g.x for g in gens], dtype=np.int64)
            gz = np.array([g.z for g in gens], dtype=np.int64)
            mask = ~_chi_table(xs, zs, gx, gz, d).any(axis=1)
        else:
            mask = np.ones(len(classes), dtype=bool)
        elems = tuple(c for c, keep in zip(classes, mask) if keep)
        return PauliSubgroup(d, n, elems)

    if not _is_prime(d):
        raise PreconditionError(
            f"annihilator above the scan limit needs prime d, got d={d}"
        )
    # Constraint for unknown g = (gx | gz):  a.x . gz - a.z . gx = 0 for all a.
    rows = np.array(
        [list(-np.array(g.z) % d) + list(g.x) for g in gens], dtype=np.int64
    ).reshape(len(gens), 2 * n)
    basis = _nullspace_mod_prime(rows, d)
    count = d ** len(basis)
    if count > max_size:
        raise PreconditionError(f"annihilator has {count} elements, above {max_size}")
    elems = []
    for coeffs in itertools.product(range(d), repeat=len(basis)):
        v = np.zeros(2 * n, dtype=np.int64)
        for c, b in zip(coeffs, basis):
            v = (v + c * b) % d
        elems.append(PauliClass(d, n, tuple(v[:n]), tuple(v[n:])))
    return PauliSubgroup(d, n, tuple(elems))


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    return all(d % p for p in range(2, int(d**0.5) + 1))


def extend_to_maximal(K: PauliSubgroup) -> PauliSubgroup:
    """Deterministically grow an Abelian subgroup to one of size d^n.

    Each round adjoins the canonically smallest class outside K that commutes
    with all of K; the result is Abelian of size exactly d^n and contains K.
    """
    if not is_abelian(K):
        raise PreconditionError("extend_to_maximal requires an Abelian subgroup")
    target = K.d**K.n
    while len(K) < target:
        ann = annihilator(K)
        g = next((c for c in ann if c not in K), None)
        if g is None:
            raise NumericalAmbiguityError(
                "no commuting class available before reaching maximal size"
            )
        K = close(list(K.elements) + [g])
    return K


def diagonal_subgroup(d: int, n: int) -> PauliSubgroup:
    """The maximal Abelian subgroup of all x = 0 classes (diagonal operators)."""
    gens = []
    for k in range(n):
        z = tuple(1 if j == k else 0 for j in range(n))
        gens.append(PauliClass(d, n, (0,) * n, z))
    return close(gens, d=d, n=n)
