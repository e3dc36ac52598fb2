"""Classes as numbers: the arithmetic encodings of the set operations.

Multiplication is intersection, 1 is the universe, 0 the empty class,
and union, symmetric difference and complement all become polynomials.
Run with:  python3 demos/set_operations_as_arithmetic.py
"""

from boole import parse, poly, to_set_expression, is_totally_interpretable, variables

x, y = variables("x, y")

print("The set operations, written as arithmetic:")
for text in ["x*y", "x + (1-x)*y", "x*(1-y) + (1-x)*y", "1 - x"]:
    term = parse(text)
    print(f"  {text:22s} = {poly(text)!s:18s} as sets: {to_set_expression(term)}")

print()
print("Union has two faces: the guarded sum and the inclusion-exclusion polynomial.")
print("  x + (1-x)*y  ==  x + y - x*y :", poly("x + (1-x)*y") == poly("x + y - x*y"))

print()
print("Deriving the absorption law x ∩ (x ∪ y) = x by plain algebra:")
print("  x*(x + y - x*y)")
print("  = x^2 + x*y - x^2*y    (distribute)")
print("  = x + x*y - x*y        (variables are idempotent)")
print("  =", poly("x*(x + y - x*y)"))

print()
print("Not every term denotes a class for every assignment:")
for text in ["x + y", "x - y", "x + (1-x)*y"]:
    verdict = "totally interpretable" if is_totally_interpretable(parse(text)) else "not totally interpretable"
    print(f"  {text:14s} is {verdict}")
print("x + y only denotes a class when x and y are disjoint; the algebra")
print("still manipulates it freely and soundly, which was the whole point.")
