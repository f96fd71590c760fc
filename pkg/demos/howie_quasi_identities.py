"""Writing singular self-maps as products of quasi-identities.

A quasi-identity moves exactly one point. Every non-bijective map of a
finite set is a product of them, and the recursive construction below never
uses more than 2(n - |fix|) - 1 factors. Run: python3 demos/howie_quasi_identities.py
"""
from collections import Counter

from premonoid import transformations as tf
from premonoid.factorizers import howie_factor, normalize
from premonoid.oracle import quasi_identity_bfs

# A fixed-point-free map on {1,2,3}: 1 -> 2, 2 -> 3, 3 -> 2.
t = tf.parse_images("2,3,2")
cert = howie_factor(t)
print("target   ", tf.format_images(t))
print("factors  ", [tf.format_images(q) for q in cert.factors])
print("length", cert.length, "bound", cert.bound)
print("trace    ", cert.trace)

# The first step conjugates the map into a normal form where fixed points
# come first, then the other image points, then the points outside the image.
c = normalize(t)
print("\nconjugator", tf.format_images(c.conjugator), "normal form", tf.format_images(c.normalized),
      "d =", c.d, "r =", c.r)

# Factors are applied right to left.
x = 0
for q in reversed(cert.factors):
    x = q[x]
print("point 1 goes to", x + 1)

# Breadth-first search gives the true minimum. For 2,3,2 it is 3: two
# quasi-identities always leave at least n - 2 points fixed.
bfs = quasi_identity_bfs(3)
print("\nBFS minimum for 2,3,2:", bfs.result(bfs.monoid.index(t)).min_length)

# How far is the bound from the minimum across T_4?
bfs = quasi_identity_bfs(4)
gaps = Counter()
for t in tf.all_transformations(4):
    if tf.is_singular(t):
        cert = howie_factor(t)
        gaps[cert.bound - int(bfs.dist[bfs.monoid.index(t)])] += 1
print("bound minus minimum over singular T_4:", dict(sorted(gaps.items())))

# Which split cases fire, and how often, at n = 5?
cases = Counter()
for t in tf.all_transformations(5):
    if tf.is_singular(t):
        cases.update(howie_factor(t).trace)
print("case tags over singular T_5:", dict(sorted(cases.items())))
