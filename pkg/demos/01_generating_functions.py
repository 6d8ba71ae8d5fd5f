#!/usr/bin/env python3
"""The three headline series, built two very different ways.

c5(n) counts the 5-core partitions of n.  Its generating function is the
eta quotient f5^5/f1; the analogous quotients phi(-q^5)^5/phi(-q) and
psi(-q^5)^5/psi(-q) define the companion sequences a5(n) and b5(n).
Everything below is exact integer arithmetic.
"""

from qcore import count_t_cores, gen_a5bar, gen_b5bar, gen_c5

N = 30

c5 = gen_c5(N)
a5 = gen_a5bar(N)
b5 = gen_b5bar(N)

print(f"{'n':>4} {'c5(n)':>8} {'a5(n)':>8} {'b5(n)':>8}")
for n in range(N + 1):
    print(f"{n:>4} {c5[n]:>8} {a5[n]:>8} {b5[n]:>8}")

# The series engine and the combinatorial world agree: count the 5-cores
# of a few n by brute-force hook inspection and compare.
print("\nbrute-force 5-core counts vs series coefficients:")
for n in (0, 4, 9, 17, 25):
    count = count_t_cores(n, 5)
    print(f"  n={n:>2}: enumeration {count}, series {c5[n]}, "
          f"{'agree' if count == c5[n] else 'DISAGREE'}")

# A few structural facts visible already in the table:
#   a5(5n+2) = 4 c5(5n+1)        (look at n=2,7,12,...)
#   b5(10n+6) = b5(10n+8) = 0
print("\nspot checks:")
print("  a5(2) =", a5[2], "= 4*c5(1) =", 4 * c5[1])
print("  a5(7) =", a5[7], "= 4*c5(6) =", 4 * c5[6])
print("  b5(6) =", b5[6], " b5(8) =", b5[8], " b5(16) =", b5[16])
