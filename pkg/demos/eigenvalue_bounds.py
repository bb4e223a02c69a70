#!/usr/bin/env python3
"""Certified enclosures for the maximal eigenvalue and its sandwich bounds.

The maximal eigenvalue lambda_n of the stiffness/mass pencil equals the
largest root of the characteristic polynomial of index n.  The quadratic
and cubic truncations of that polynomial give a lower bound m(n) and an
upper bound M(n):

    m(n) <= lambda_n <= f1(n)   and   lambda_n <= M(n)

with equality lambda_n = M(n) up to n = 7.  All orderings below are
certified by exact sign evaluations, not floating point.
"""

from fractions import Fraction

from invineq import bound_report, check_monotone, inverse_constant

print(f"{'n':>3} {'m(n)':>16} {'lambda_n':>16} {'f1(n)':>12} "
      f"{'M(n)':>16}  strict(m,f1,M)")
for n in range(2, 21):
    rep = bound_report(n, Fraction(1, 10**12))
    fl = rep.orderings
    assert fl.all_hold and fl.decided
    strict = f"({'<' if fl.m_strict else '='},{'<' if fl.f1_strict else '='}," \
             f"{'<' if fl.upper_strict else '='})"
    print(f"{n:>3} {float(rep.m_enclosure.mid):>16.6f} "
          f"{float(rep.lam.mid):>16.6f} {float(rep.f1):>12.1f} "
          f"{float(rep.upper_enclosure.mid):>16.6f}  {strict}")

print()
print("Equality lambda = M holds exactly through n = 7; all three bounds")
print("turn strict at n = 6, 4 and 8 respectively.")

mon = check_monotone(50)
print(f"\nStrict growth lambda_(n+1) > lambda_n certified for n < 50: {mon.ok}")

print("\nInverse-inequality constant sqrt(lambda_n), with its window:")
for n in (2, 6, 12, 20):
    rep = inverse_constant(n)
    assert rep.window_low_holds and rep.window_high_holds
    print(f"  n={n:>2}: c1 = {float(rep.value.mid):.6f}")
