"""The odd bracket on polyvector fields and the divergence that generates it.

Polyvector fields carry a bracket extending both the Lie bracket of vector
fields and their action on functions.  A choice of volume form produces a
divergence operator whose failure to be a wedge-derivation IS the bracket.
Run as: python3 demos/04_brackets_and_divergence.py
"""

from fractions import Fraction

from dcrit import (VolumeForm, bv_delta, check_bv, check_gerstenhaber,
                   de_rham, schouten, vol_contract)
from dcrit.parsing import parse_polyvector

VS = ("x", "y")


def V(src):
    return parse_polyvector(src, VS)


print("== the bracket extends familiar operations ==")
print(f"[[@x, x^2]]          = {schouten(V('@x'), V('x^2'))}   (vector field acting)")
print(f"[[x*@y, y*@x]]       = {schouten(V('x*@y'), V('y*@x'))}   (Lie bracket)")
bivector_bracket = schouten(V("@x/\\@y"), V("x*y"))
print(f"[[@x/\\@y, x*y]]      = {bivector_bracket}")

print()
print("== randomized identity suite ==")
report = check_gerstenhaber(2, trials=60, seed=0)
print(f"antisymmetry + jacobi + leibniz on {report.trials} random triples: "
      f"{report.status}")

print()
print("== the divergence operator ==")
vol = VolumeForm(VS, Fraction(1))
print(f"delta(x*@x)          = {bv_delta(vol, V('x*@x'))}")
delta_mixed = bv_delta(vol, V("x*@x/\\@y"))
print(f"delta(x*@x/\\@y)      = {delta_mixed}")
a, b = V("x*@x"), V("x")
deviation = (bv_delta(vol, a * b) - bv_delta(vol, a) * b - a * bv_delta(vol, b))
print(f"delta(a/\\b) - delta(a)/\\b - a/\\delta(b) for a = {a}, b = {b}:")
print(f"                     = {deviation}   (nonzero: delta is second order)")

print()
print("== contraction into the volume form ==")
one = V("1")
print(f"i_vol(1)             = {vol_contract(vol, one)}")
print(f"i_vol(@x)            = {vol_contract(vol, V('@x'))}")
w = vol_contract(vol, V("x^2*y*@x"))
print(f"i_vol(x^2*y*@x)      = {w}")
print(f"d of that            = {de_rham(w)}")
lhs = vol_contract(vol, bv_delta(vol, V("x^2*y*@x")))
print(f"i_vol(delta(...))    = {lhs}   (the two routes agree)")

print()
print("== the full certified suite ==")
report = check_bv(2, trials=60, seed=0)
print(f"square-zero + generating relation + intertwining: {report.status}")
print(f"witness that delta is not a derivation: "
      f"{report.details['non_derivation_witness']}")
