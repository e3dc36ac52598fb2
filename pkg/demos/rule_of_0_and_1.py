"""The Rule of 0 and 1: checking laws by trying 0 and 1.

Equations and quasi-equations valid for integers restricted to {0, 1}
are exactly the ones valid in the algebra of classes, so a truth-table
sweep is a full decision procedure.
Run with:  python3 demos/rule_of_0_and_1.py
"""

import time

from boole import check_r01, parse_horn

laws = [
    "x*(x + y - x*y) = x",
    "x*y = y*x",
    "x + y = x + y - x*y",
    "x+y=z -> x*y*z=0",
    "(x+y)*(x+y)=x+y -> x*y=0",
    "2*x = 0 -> x = 0",
    "x*y=0 & x+y=1 -> y=1-x",
]

width = max(len(law) for law in laws)
for law in laws:
    verdict = check_r01(parse_horn(law))
    if verdict.holds:
        print(f"  {law:{width}s}   holds")
    else:
        where = ",".join(f"{n}={b}" for n, b in verdict.witness.items())
        print(f"  {law:{width}s}   fails at {where}")

print()
print("The checker is a single sweep over 2**n assignments, so even")
print("twenty variables stay comfortable:")
names = tuple(f"x{i:02d}" for i in range(20))
sentence = parse_horn("*".join(names) + " = 1 -> " + " + ".join(names) + " = 20")
start = time.perf_counter()
verdict = check_r01(sentence)
elapsed = time.perf_counter() - start
print(f"  20-variable quasi-equation: holds={verdict.holds} in {elapsed:.2f}s")
