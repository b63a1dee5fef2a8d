"""The two-qutrit construction: a full qutrit hidden by nine commuting words.

The channel averages the nine classes X^{2i} Z^i (x) X^j Z^j.  The algebra
generated by X^2 (x) X and X Z^2 (x) Z is isomorphic to a single-qutrit
algebra and is sent entirely to I/9.  A 9 x 9 block unitary makes the
isomorphism explicit through two conjugation identities, and a deliberately
corrupted phase shows the verification has teeth.
"""

from paulipriv import two_qutrit_demo

print("== full verification run ==")
report = two_qutrit_demo()
for check in report.checks:
    mark = "pass" if check.passed else "FAIL"
    extra = f"  [{check.detail}]" if check.detail else ""
    print(f"  {mark}: {check.name} (deviation {check.deviation:.2e}){extra}")
print("block unitary normalization that makes it unitary:",
      f"{report.block_scale:.6f} = 1/sqrt(3)")
print("all checks passed:", report.passed)

print("\n== negative control: corrupt one expected phase ==")
bad = two_qutrit_demo(perturb=True)
for check in bad.checks:
    if not check.passed:
        print(f"  FAIL as intended: {check.name} "
              f"(deviation {check.deviation:.2e})  [{check.detail}]")
print("perturbed run passes:", bad.passed)
