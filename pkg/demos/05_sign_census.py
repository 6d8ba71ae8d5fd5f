#!/usr/bin/env python3
"""Sign statistics of b5(n), in exact rational arithmetic.

Four arithmetic progressions of b5 vanish identically and two are
strictly negative, which forces at least 30% zeros and at least 10%
negatives among n = 1..N; positives account for at least 52%.  The
frequencies below are exact fractions, not floats, and the bounds hold
with room to spare once N is past the small-N alignment wobble.
"""

from fractions import Fraction

from qcore import sign_census

BOUNDS = {"zero": Fraction(3, 10), "positive": Fraction(13, 25), "negative": Fraction(1, 10)}

print(f"{'N':>7} {'zero':>12} {'positive':>12} {'negative':>12}   bounds met?")
for order in (20, 100, 1000, 10000, 20000):
    census = sign_census("b5", order)
    met = (census.zero >= BOUNDS["zero"]
           and census.positive >= BOUNDS["positive"]
           and census.negative >= BOUNDS["negative"])
    print(f"{order:>7} {str(census.zero):>12} {str(census.positive):>12} "
          f"{str(census.negative):>12}   {'yes' if met else 'no'}")

print("\nbounds:", ", ".join(f"{k} >= {v}" for k, v in BOUNDS.items()))
print("(frequencies at finite N are empirical evidence for the limiting bounds)")
