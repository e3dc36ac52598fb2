"""Two semantics side by side: partial classes and signed multisets.

The class semantics follows the book: sums must be disjoint and
differences contained, or the value is undefined.  The multiset ring
interprets everything, and agrees with the classes whenever the classes
have an answer.
Run with:  python3 demos/classes_and_multisets.py
"""

from boole import (
    ClassAssignment,
    Defined,
    Universe,
    chi,
    eval_multiset,
    eval_partial,
    parse,
)

universe = Universe(2)
overlapping = ClassAssignment(universe, {"x": [0], "y": [0]})
disjoint = ClassAssignment(universe, {"x": [0], "y": [1]})

term = parse("x + y")
print("x + y with x = {0}, y = {1}:", eval_partial(term, disjoint))
print("x + y with x = {0}, y = {0}:", eval_partial(term, overlapping))

print()
print("The multiset ring keeps counting where the classes give up:")
env = {name: chi(mask, universe) for name, mask in overlapping.items()}
print("  as multisets, x + y =", eval_multiset(term, env, universe=universe))
print("  the 2 records that element 0 was counted twice")

print()
print("Characteristic-function identities (the bridge between the views):")
a, b = chi([0], universe), chi([0, 1], universe)
print("  chi(A) =", a, " chi(B) =", b)
print("  chi(A)*chi(B)                 =", a * b, " (intersection)")
print("  chi(A)+chi(B)-chi(A)*chi(B)   =", a + b - a * b, " (union)")
print("  1 - chi(A)                    =", 1 - a, " (complement)")

print()
print("Whenever the class value is defined, the two semantics agree:")
term = parse("(1 - x)*y + x")
for assignment in (disjoint, overlapping):
    value = eval_partial(term, assignment)
    assert isinstance(value, Defined)
    env = {name: chi(mask, universe) for name, mask in assignment.items()}
    ring_value = eval_multiset(term, env, universe=universe)
    print(f"  {assignment}: classes {value.subset:02b}, ring {ring_value}",
          "agree:", chi(value.subset, universe) == ring_value)
