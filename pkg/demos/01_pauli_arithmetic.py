"""Exact Pauli arithmetic: phases, products, and commutation tables.

Every operator is a phased word X^x Z^z per site; products and commutation
phases are integer computations, with dense matrices only for spot checks.
"""

import numpy as np

from paulipriv import character_matrix, chi_value, parse_pauli

print("== single-qubit words ==")
x, z = parse_pauli("X"), parse_pauli("Z")
print(f"X * Z        = {x * z}   (the letter Y is the derived spelling i X Z)")
print(f"Z * X        = {z * x}")
print(f"(X*Z) dense  =\n{np.round((x * z).to_dense(), 3)}")
print(f"chi(X, Z)    = {chi_value(x.pauli_class(), z.pauli_class()):+.0f}"
      "   (X Z = chi * Z X)")

print("\n== qutrit words (d = 3) ==")
x3, z3 = parse_pauli("X1", d=3), parse_pauli("Z1", d=3)
print(f"X * Z = {x3 * z3}")
print(f"Z * X = {z3 * x3}   (omega^2 = conjugate of omega)")
print(f"chi(X, Z) = {chi_value(x3.pauli_class(), z3.pauli_class()):.3f}")

print("\n== multi-site products keep exact phases ==")
a, b = parse_pauli("-iYX"), parse_pauli("+iZY")
prod = a * b
print(f"({a}) * ({b}) = {prod}")
dense_err = np.abs(prod.to_dense() - a.to_dense() @ b.to_dense()).max()
print(f"dense cross-check error: {dense_err:.1e}")

print("\n== the commutation table of one qubit site ==")
m = character_matrix(2, 1)
print("classes:", " ".join(c.to_string() for c in m.classes))
print(np.real(m.to_complex()).astype(int))

print("\n== the commutation table of one qutrit site (omega exponents) ==")
m3 = character_matrix(3, 1)
print("classes:", " ".join(c.to_string() for c in m3.classes))
print(m3.exponents)

print("\n== tables of n sites are exact tensor powers ==")
m2 = character_matrix(2, 2)
h1 = m.to_complex()
print("character_matrix(2, 2) == kron(H1, H1):",
      np.array_equal(m2.to_complex(), np.kron(h1, h1)))
