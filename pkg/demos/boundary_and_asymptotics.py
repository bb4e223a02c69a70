#!/usr/bin/env python3
"""The boundary-trace eigenvalue problem and the large-n diagnostics.

The boundary problem is exactly solvable: its determinant factors into
rational linear factors, so the largest eigenvalue mu_n is a closed-form
rational, n(n+3)/2 with +1 for odd n.  The interior problem is not, but
its maximal root obeys clean asymptotics which the table below tracks.
"""

from fractions import Fraction

from invineq import (
    asymptotic_table,
    boundary_factor_roots,
    max_boundary_eigenvalue,
    verify_boundary,
)

print("Boundary eigenvalues (exact rationals):")
print(f"{'n':>3} {'mu_n':>6}   det roots")
for n in range(1, 13):
    assert all(rep.equal for rep in verify_boundary(n))
    mu = max_boundary_eigenvalue(n)
    roots = ", ".join(str(r) for r in boundary_factor_roots(n))
    assert mu == max(boundary_factor_roots(n))
    print(f"{n:>3} {str(mu):>6}   {{{roots}}}")

print()
print("Interior maximal eigenvalue diagnostics:")
print(f"{'n':>4} {'lambda/n^4':>12} {'lambda/f1':>12} "
      f"{'min root (even)':>16} {'min root (odd)':>16}")
rows = asymptotic_table([10, 20, 50, 100], Fraction(1, 10**12))
for row in rows:
    print(f"{row.n:>4} {float(row.lambda_over_n4):>12.8f} "
          f"{float(row.lambda_over_f1):>12.8f} "
          f"{float(row.smallest_root_even):>16.10f} "
          f"{float(row.smallest_root_odd):>16.10f}")

targets = rows[0].targets
print(f"{'limit':>4} {float(targets['inv_pi_sq']):>12.8f} "
      f"{float(targets['eight_inv_pi_sq']):>12.8f} "
      f"{float(targets['quarter_pi_sq']):>16.10f} "
      f"{float(targets['pi_sq']):>16.10f}")
print()
print("lambda/n^4 falls to 1/pi^2 and lambda/f1 to 8/pi^2 from above, while")
print("the smallest roots have already collapsed onto pi^2/4 and pi^2.")
