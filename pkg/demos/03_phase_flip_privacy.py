"""The motivating example: a two-qubit phase-flip channel hides a qubit.

The channel averages the four diagonal Pauli words.  Its Kraus operators all
commute, so no subSPACE can be private; yet the four-dimensional algebra
spanned by II, IX, YY, YZ is sent entirely to I/4, hiding one full qubit as
a subSYSTEM.
"""

import numpy as np

from paulipriv import (
    apply_channel,
    channel_from_subgroup,
    check_private_subsystem,
    check_privatized_algebra,
    close,
    kraus_mutually_commuting,
    parse_pauli,
    span_closure,
    structure_type,
)

dense = lambda s: parse_pauli(s).to_dense()

print("== the channel ==")
group = close([parse_pauli("ZI").pauli_class(), parse_pauli("IZ").pauli_class()])
phi = channel_from_subgroup(group)
print("Kraus operators: half of each of", ", ".join(str(c) for c in group))
print("mutually commuting Kraus:", kraus_mutually_commuting(phi),
      "-> no private subspace exists for this channel")

print("\n== the hidden qubit algebra ==")
algebra = span_closure([dense(s) for s in ("II", "IX", "YY", "YZ")])
st, u = structure_type(algebra)
print("span{II, IX, YY, YZ} has block structure", st.blocks,
      "(one qubit with multiplicity two)")

cert = check_privatized_algebra(phi, algebra)
print("privatization certificate:", "PASS" if cert.verdict else "FAIL",
      f"(max deviation {cert.max_deviation:.2e})")
print("fixed output state rho0 = I/4:",
      np.abs(cert.rho0 - np.eye(4) / 4).max() < 1e-12)

print("\n== random encoded states really are erased ==")
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(200):
    c = rng.standard_normal(3)
    c *= rng.random() ** (1 / 3) / np.linalg.norm(c)
    rho = (dense("II") + c[0] * dense("IX") + c[1] * dense("YY")
           + c[2] * dense("YZ")) / 4
    worst = max(worst, np.abs(apply_channel(phi, rho) - np.eye(4) / 4).max())
print(f"200 random encoded density operators -> I/4, worst deviation {worst:.2e}")

print("\n== the subsystem view ==")
v = u.conj().T  # isometry splitting C^4 as (multiplicity) x (hidden qubit)
cert_mixed = check_private_subsystem(phi, v, 2, 2, np.eye(2) / 2)
print("sigma_A maximally mixed:", "private" if cert_mixed.verdict else "not private")
pure = np.zeros((2, 2), dtype=complex)
pure[0, 0] = 1.0
cert_pure = check_private_subsystem(phi, v, 2, 2, pure)
print("sigma_A a pure state:   ",
      "private" if cert_pure.verdict else
      f"not private (deviation {cert_pure.max_deviation:.2f})",
      "-> privacy here holds for a particular sigma_A only")
