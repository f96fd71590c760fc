"""The two generic factorization engines on a small premonoid.

A premonoid is a monoid with any preorder on it. Here the monoid is the
singular part of T_4 and b <= c means c's right fixers are among b's, which
for maps reduces to fix(c) being inside fix(b). The first engine splits any
non-irreducible element into strictly smaller pieces. The second only uses
quarks and checks a height inequality at every split, which caps the length
at (s-1) hgt(x) - (s-2). Run: python3 demos/premonoid_engines.py
"""
from collections import Counter

from premonoid import core
from premonoid import transformations as tf
from premonoid.rfix import singular_rfix_premonoid

pm = singular_rfix_premonoid(4)
m = pm.monoid
print(m, "| units", len(core.units(pm)), "| quarks", len(core.quarks(pm)),
      "| irreducibles", len(core.irreducibles(pm)), "| atoms", len(core.atoms(pm)))
print("height histogram", dict(sorted(Counter(pm.heights[x] for x in range(pm.size)).items())))

x = m.index(tf.parse_images("2,3,4,2"))
print("\ntarget 2,3,4,2 has height", pm.heights[x])

cert = core.factor_into_irreducibles(pm, x, 2)
print("irreducibles:", [tf.format_images(m.elements[f]) for f in cert.factors], cert.trace)

for s in (2, 3):
    cert = core.factor_into_quarks_bounded(pm, x, s)
    print(f"\nbounded engine, s = {s}: length {cert.length} <= {cert.bound}")
    for st in cert.steps:
        parts = " * ".join(tf.format_images(m.elements[p]) for p in st["parts"])
        print(f"  {tf.format_images(m.elements[st['element']])} = {parts}   "
              f"heights {st['part_heights']} sum {st['height_sum']} <= {st['allowed']}")
