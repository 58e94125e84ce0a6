"""Compute the degree-bounded center of every catalog algebra and compare it
with the recorded generators of the center."""

from skewpbw import build, central_space, compare_center
from skewpbw.catalog import names

DEGREE = 6

print(f"{'entry':<24}{'params':<34}{'dim Z<=' + str(DEGREE):>10}  verdict")
for name in names():
    entry = build(name)
    d = 4 if name in ("usl2_char2", "shift_differential") else DEGREE
    cen = central_space(entry.algebra, d)
    expected = entry.expected_elements()
    if expected is None:
        verdict = "no recorded center"
    else:
        cmp = compare_center(entry.algebra, expected, d)
        verdict = "matches " + ", ".join(entry.expected_center_generators or ["K"]) if cmp.matches else "MISMATCH"
    params = ", ".join(f"{k}={v}" for k, v in entry.params.items())
    print(f"{name:<24}{params:<34}{cen.dim:>10}  {verdict}")

print("\nQuantum polynomials in three variables (no closed form recorded):")
odd = build("quantum_polynomials", n=3).algebra
print("  center basis up to degree 6:", ", ".join(map(str, central_space(odd, 6).basis)))
