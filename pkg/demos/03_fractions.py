"""Right fractions in the quantum plane over F_7 with q = 2.

Every nonzero element has a central right multiple, so every fraction can be
rewritten over a central denominator.  A fraction is central exactly when it
can be written p/q with p and q both central.
"""

from skewpbw import (
    NotCentral,
    build,
    central_multiple,
    frac,
    is_central_fraction,
    membership_characterization,
    ore_solve,
)

A = build("quantum_plane", field="fp:7", q=2).algebra
x, y = A.gens()

u, v = ore_solve(x, y)
print(f"Common right multiple: x*({u}) = y*({v}) = {x * u}")

for a in (x, x + y):
    p, q = central_multiple(a)
    print(f"Central multiple of {a}: ({a})*({p}) = {q}")

print("\n1/x^3 + 1/y^3 =", frac(A.one(), x**3) + frac(A.one(), y**3))
print("x/y central?", is_central_fraction(frac(x, y)))

s = x + 2 * y
f = frac(x**3 * s, y**3 * s)
print(f"\nf = {f}")
print("f central?", is_central_fraction(f))
p, q = membership_characterization(f)
print(f"f = ({p})/({q}) with both parts central")

try:
    membership_characterization(frac(x, y))
except NotCentral as e:
    print("x/y rejected:", e)
