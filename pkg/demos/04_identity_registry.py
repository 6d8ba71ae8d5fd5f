#!/usr/bin/env python3
"""Touring the identity registry.

Every identity, recurrence, and congruence the package knows about lives
in one declarative registry; the evaluator treats a record purely as data.
This demo verifies the core tier at a modest order and shows what a
failure report looks like when a recipe is deliberately corrupted.
"""

from qcore import (
    TruncatedSeries,
    gen_c5,
    register,
    summarize,
    unregister,
    verify,
    verify_all,
)
from qcore.identities import REGISTRY
from qcore.registry import SeriesEquality

print("registered records:", len(REGISTRY))
for rid in list(REGISTRY)[:8]:
    print(f"  {rid:>24}  {REGISTRY[rid].statement}")
print("  ...")

print("\nverifying the core tier at N=400:")
reports = verify_all("core", 400)
print(" ", summarize(reports))

print("\na few individual reports:")
for rid in ("thm1.a20n6", "thm3.b5_20n_5", "cor1.mod5k", "derived.triangle"):
    print(" ", verify(rid, 400).to_line())

# Fault injection: corrupt a recipe and watch the report point at the
# first wrong coefficient.
register(SeriesEquality(
    "demo.corrupt", "demo", "c5 series with a bump at q^9",
    lambda order: (gen_c5(order), gen_c5(order) + TruncatedSeries.monomial(order, 1, 9)),
))
try:
    print("\ncorrupted record:")
    print(" ", verify("demo.corrupt", 50).to_line())
finally:
    unregister("demo.corrupt")
