"""Reducing systems, eliminating variables, and solving for an unknown.

Run with:  python3 demos/elimination_and_solving.py
"""

from boole import eliminate, poly, reduce_system, solve

print("A system of equations collapses to one equation (sum of squares):")
system = [poly("x - x*y"), poly("y - x*y")]
reduced = reduce_system(system)
print("  { x - x*y = 0,  y - x*y = 0 }  ->  ", reduced, "= 0")
print("  (that is x + y - 2xy = 0: the symmetric difference is empty, so x = y = xy)")

print()
print("Eliminating y from y - x = 0 leaves no constraint on x:")
print("  result:", eliminate(poly("y - x"), ["y"]), "= 0")
print("Eliminating y from 1 - x*y = 0 forces x to be the universe:")
print("  result:", eliminate(poly("1 - x*y"), ["y"]), "= 0")

print()
print("Solving z*y - x = 0 for y:")
solution = solve(poly("z*y - x"), "y")
print("  condition on the parameters:", solution.condition, "= 0")
print(f"  y = {solution.particular} + {solution.parameter}*({solution.freedom})")
print("  so x must lie inside z, and then y is x plus any part of the")
print("  complement of z, the fresh parameter v choosing that part.")

print()
print("Sanity check at x={0}, z={0,1} as 0/1 points per element:")
p = poly("z*y - x")
for element, (xv, zv) in enumerate([(1, 1), (0, 1)]):
    ok = [yv for yv in (0, 1) if p.evaluate({"x": xv, "z": zv, "y": yv}) == 0]
    produced = sorted(
        solution.expression().evaluate({"x": xv, "z": zv, solution.parameter: v})
        for v in (0, 1)
    )
    print(f"  element {element}: brute force y in {ok}, formula gives {produced}")
