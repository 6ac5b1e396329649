"""Subfield subcodes and trace codes, tied together by Delsarte duality.

Two independent routes compute the subfield subcode dimension: a Groebner
route through normal forms of Frobenius powers, and a direct oracle that
expands coordinates over the prime field.  Delsarte's theorem links them:
the dual of the subcode is the trace of the dual.
"""

import random

from normtrace import (build_code, embedding, is_frobenius_invariant, kernel,
                       make_curve, make_field, row_space_basis,
                       subfield_subcode_dim, subfield_subcode_of_ent,
                       subfield_subcode_oracle, trace_code, trace_span_dim)

NT3 = make_curve(2, 1, 4, 3)
NT5 = make_curve(2, 1, 4, 5)
F2 = make_field(2, 1)
F16 = make_field(2, 4)

# --- the binary subcode of NT_3(36) ------------------------------------------

print("trace dim of Tr(NT_3(8)) over F_2:", trace_span_dim(NT3, 8, 2))
print("dim NT_3(36)|F_2 =", subfield_subcode_dim(NT3, 36, 2),
      "(= 32 - 7 by duality)")

sub = subfield_subcode_of_ent(NT3, 36, 2)
print(f"oracle route agrees: [{sub.n}, {sub.k}] binary code")

# --- Delsarte's theorem on random codes --------------------------------------

rng = random.Random(11)
emb = embedding(F2, F16)
for _ in range(3):
    rows = [[rng.randrange(16) for _ in range(8)] for _ in range(3)]
    code = row_space_basis(rows, F16, 8)
    lhs = kernel(subfield_subcode_oracle(code, emb))
    rhs = trace_code(kernel(code), emb)
    assert lhs == rhs
print("Delsarte: (C|F_2)^perp = Tr(C^perp) on random codes")

# --- Frobenius invariance ----------------------------------------------------

# When the code is invariant under x -> x^t, the subcode keeps the full
# dimension.  NT_5(60) over F_4 is not invariant: the witness monomial's
# image leaves the weight-60 space after reduction.
for s in (60, 62):
    inv = is_frobenius_invariant(NT5, s, 4)
    k = subfield_subcode_dim(NT5, s, 4)
    sup = build_code(NT5, s).k
    print(f"NT_5({s}) over F_4: invariant={inv.invariant} "
          f"(witness {inv.witness}), dim drops {sup} -> {k}")
