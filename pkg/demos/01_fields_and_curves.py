"""Finite fields and extended norm-trace curves.

Walks through the arithmetic layer: building F_16 as an extension of F_2,
trace maps between fields, and enumerating the rational points of the two
curves used throughout the demos (u=3 and u=5 over F_16).
"""

from normtrace import enumerate_points, make_curve, make_field, trace_to

# --- field arithmetic ------------------------------------------------------

F2 = make_field(2, 1)
F16 = make_field(2, 4)
print(f"F_{F16.order}: modulus encoding {F16.modulus}")

a, b = 7, 11  # elements are integers encoding polynomials in the generator
print(f"  {a} * {b} = {F16.mul(a, b)}")
print(f"  {a}^-1   = {F16.inv(a)},  check: {F16.mul(a, F16.inv(a))}")

# the trace down to F_2 takes values in the prime field
traces = {trace_to(F2, F16, x) for x in range(16)}
print(f"  trace values F_16 -> F_2: {sorted(traces)}")

# --- the curves -------------------------------------------------------------

for u in (3, 5):
    curve = make_curve(2, 1, 4, u)
    pts = enumerate_points(curve)
    print(f"\ncurve x^{u} = Tr(y) over F_16:")
    print(f"  n = {curve.n} points, genus g = {curve.genus}")
    print(f"  monomial weights: X -> {curve.weight_x}, Y -> {curve.weight_y}")
    print(f"  first points: {pts[:4]}")
    # every point satisfies the defining equation
    fld = curve.field
    assert all(fld.pow(x, u) == fld.trace_in_field(y, curve.q)
               for x, y in pts)
    print("  defining equation verified on all points")
