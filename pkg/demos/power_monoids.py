"""Subsets containing the identity, multiplied setwise.

For a finite monoid M the sets X with 1 in X form a monoid under
XY = {xy}. Its only unit is {1}, it is Dedekind-finite, and under the
divisibility preorder every element is a product of irreducibles.
Run: python3 demos/power_monoids.py
"""
from premonoid import core
from premonoid.monoids import divisibility_preorder, is_dedekind_finite, reduced_power_monoid
from premonoid.oracle import base_monoid

for name in ("Z2", "Z3", "Z2xZ2", "S3"):
    base = base_monoid(name)
    h = reduced_power_monoid(base)
    pm = core.Premonoid(h, divisibility_preorder(h))
    irr = core.irreducibles(pm)
    print(f"{name:6} |H| = {h.size:3}  units = {[h.elements[u] for u in h.unit_indices]}  "
          f"Dedekind-finite = {bool(is_dedekind_finite(h))}  irreducibles = {len(irr)}  "
          f"atoms = {len(core.atoms(pm))}  quarks = {len(core.quarks(pm))}")

# Over Z/3 the whole group {0,1,2} is {0,1}{0,1}: not an atom, and
# irreducible only if no split into strictly smaller divisors exists.
h = reduced_power_monoid(base_monoid("Z3"))
pm = core.Premonoid(h, divisibility_preorder(h))
top = h.index((0, 1, 2))
print("\n{0,1}{0,1} =", h.elements[h.mul(h.index((0, 1)), h.index((0, 1)))])
cert = core.factor_into_irreducibles(pm, top, 2)
print("factor {0,1,2}:", [h.elements[x] for x in cert.factors], cert.trace)
print("heights:", {h.elements[x]: pm.heights[x] for x in range(h.size)})
