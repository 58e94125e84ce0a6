"""The quantum plane y x = q x y, at a root of unity and at a generic q.

With q = 2 in F_7 (order 3) the cubes x^3, y^3 are central and the center
grows like a polynomial ring in two variables.  Over Q the same relation has
only scalars in its center, and the growth hypothesis fails.
"""

from skewpbw import build, central_space, commutator, hypothesis_check, is_central

root = build("quantum_plane", field="fp:7", q=2)
A = root.algebra
x, y = A.gens()

print("Relation:", *root.relations_text())
print("y*x =", y * x)
print("(x+y)^2 =", (x + y) ** 2)
print("[y, x] =", commutator(y, x))
print("x^3 central?", is_central(x**3), "  x central?", is_central(x))

c = central_space(A, 9)
print("\nCenter up to degree 9 over F_7, q = 2:")
print("  basis:", ", ".join(map(str, c.basis)))
print("  dims by degree:", c.dims_by_degree)

generic = build("quantum_plane", field="q", q=2).algebra
print("\nOver Q with q = 2 the center up to degree 8 has dims", central_space(generic, 8).dims_by_degree)

for label, alg in (("F_7, q = 2", A), ("Q, q = 2", generic)):
    v = hypothesis_check(alg, 12, 12)
    print(f"\nGKdim(A) < GKdim(Z(A)) + 1 over {label}: {v.describe()}")
    print(f"  estimates: A ~ {v.gk_A:.3f}, Z(A) ~ {v.gk_Z:.3f}")
