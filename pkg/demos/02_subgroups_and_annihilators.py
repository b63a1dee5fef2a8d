"""Subgroup machinery: closures, annihilator duality, maximal extensions.

The phase quotient of the n-site Pauli group is Z_d^(2n), so subgroups are
exact integer objects.  The annihilator of K (all classes commuting with K)
satisfies the counting identity |K| |Ann K| = d^(2n), and any Abelian
subgroup extends deterministically to one of size d^n.
"""

import numpy as np

from paulipriv import annihilator, close, extend_to_maximal, is_abelian, parse_pauli


def classes(*strings, d=2):
    return [parse_pauli(s, d=d).pauli_class() for s in strings]


print("== closure of generators ==")
K = close(classes("ZI", "IZ"))
print("close({ZI, IZ}) =", ", ".join(str(c) for c in K))
print("abelian:", is_abelian(K))

print("\n== annihilators and the counting identity ==")
for gens in [(), ("Z",), ("XX", "ZZ")]:
    n = len(gens[0]) if gens else 2
    K = close(classes(*gens), d=2, n=n)
    ann = annihilator(K)
    print(f"K = close({{{','.join(gens) or ''}}}) on {n} sites: "
          f"|K| = {len(K)}, |Ann K| = {len(ann)}, product = {len(K) * len(ann)}"
          f" = 4^{n}")

print("\n== the annihilator of an Abelian group contains the group ==")
K = close(classes("XX", "ZZ"))
ann = annihilator(K)
print("K inside Ann(K):", K.issubset(ann))
print("Ann(K) =", ", ".join(str(c) for c in ann))

print("\n== growing an Abelian subgroup to maximal size ==")
K = close(classes("ZIII"))
M = extend_to_maximal(K)
print(f"seed size {len(K)} grew to {len(M)} = 2^4")
print("maximal group:", ", ".join(str(c) for c in M))
print("still abelian:", is_abelian(M), "and contains the seed:", K.issubset(M))

print("\n== the same machinery works for qutrits ==")
K3 = close(classes("X2Z1:I", d=3))
M3 = extend_to_maximal(K3)
print(f"d = 3, two sites: |K| = {len(K3)} extends to |M| = {len(M3)} = 3^2")
ann3 = annihilator(K3)
print(f"|K| |Ann K| = {len(K3) * len(ann3)} = 3^4 = {3**4}")
