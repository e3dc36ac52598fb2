"""Developments: a polynomial is exactly its table of 0/1 values.

Run with:  python3 demos/development_tables.py
"""

from boole import (
    constituent,
    develop,
    equal_by_development,
    from_table,
    interpretable_core,
    poly,
    sigma_strings,
)

print("Constituents over x, y: idempotent, pairwise disjoint, summing to 1.")
for sigma in sigma_strings(2):
    print(f"  C_{sigma} =", constituent(sigma, ("x", "y")))

p = poly("x + y")
print()
print("Developing x + y writes it as a weighted sum of constituents:")
table = develop(p)
for sigma, coeff in table.items():
    print(f"  {sigma} -> {coeff}")
print("The 11 entry is 2: the one place x + y fails to be a class value.")
print("Rebuilding from the table returns the polynomial:", from_table(table) == p)

print()
print("Two polynomials are equal exactly when their tables agree:")
print("  x*(x + y - x*y) vs x :", equal_by_development(poly("x*(x + y - x*y)"), poly("x")))

print()
core = interpretable_core(p)
print("The interpretable core keeps the nonzero entries and forgets their size:")
print(f"  core(x + y) = {core}")
print("  same zero set, but now idempotent:", core.is_idempotent())
print("So the equation x + y = 0 is equivalent to the class equation", f"{core} = 0.")
