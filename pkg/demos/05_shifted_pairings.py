"""The symmetric pairing carried by a critical locus, and graph intersections.

The two-term tangent complex of a critical locus is self-dual through the
Hessian; symmetry of that matrix is exactly what makes the pairing work.
Intersecting the graphs of two closed 1-forms generalizes the picture.
Run as: python3 demos/05_shifted_pairings.py
"""

from dcrit import (NotClosedError, OneForm, hessian, intersect_graph_lagrangians,
                   minus_one_pairing, obstruction_theory, parse_one_form,
                   parse_poly)

VS = ("x", "y")


def P(src):
    return parse_poly(src, VS)


print("== the Hessian pairing ==")
for src in ("x*y", "x^3 + y^3"):
    rows = ["[" + ", ".join(str(e) for e in row) + "]" for row in hessian(P(src))]
    print(f"hessian({src:9}) = {' '.join(rows)}")
report = minus_one_pairing(P("x^3 + y^3"))
print(f"symmetric = {report.symmetric}, nondegenerate = {report.nondegenerate}")
print(f"duality map: {report.duality_map}")

print()
print("== obstruction data on the critical quotient ==")
for src in ("x^2 + y^2", "x^3 + y^3", "x^2*y^2"):
    ob = obstruction_theory(P(src))
    print(f"f = {src:9}: quotient {ob.quotient_dim!s:>8}, h0 = {ob.h0}, "
          f"h1 = {ob.h1}, hessian invertible = {ob.hessian_invertible}")

print()
print("== graph intersections ==")
f = P("x^3 + y^3")
li = intersect_graph_lagrangians(OneForm.differential_of(f), OneForm.zero(VS))
print(f"intersecting graph(df) with the zero section for f = {f}:")
print(f"  section components: "
      f"{tuple(str(c) for c in li.complex.section.components)}")
print(f"  pairing symmetric = {li.pairing.symmetric}")

alpha = OneForm.differential_of(P("x^2"))
beta = OneForm.differential_of(P("y^2"))
li2 = intersect_graph_lagrangians(alpha, beta)
print(f"graph(d(x^2)) meets graph(d(y^2)) along section "
      f"{tuple(str(c) for c in li2.complex.section.components)}")

print()
print("== closedness is a real precondition ==")
try:
    intersect_graph_lagrangians(parse_one_form("y*d_x", VS), OneForm.zero(VS))
except NotClosedError as e:
    print(f"rejected: {e}")
