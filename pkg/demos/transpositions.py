"""Permutations as products of transpositions.

Peel off the transposition (j p(j)) for the smallest moved point j until a
single transposition is left. Each step fixes one more point, so at most
n - |fix| - 1 transpositions are used. Run: python3 demos/transpositions.py
"""
from premonoid import transformations as tf
from premonoid.factorizers import transposition_factor
from premonoid.oracle import transposition_bfs


def cycle_name(t):
    i, j = [k + 1 for k in range(len(t)) if t[k] != k]
    return f"({i} {j})"


for text in ("2,1,3", "2,3,1", "2,1,4,3", "3,4,5,1,2"):
    p = tf.parse_images(text)
    cert = transposition_factor(p)
    print(f"{text:10} -> {' '.join(cycle_name(t) for t in cert.factors):24} "
          f"length {cert.length}, bound {cert.bound}")

# For a permutation with c cycles (fixed points count as cycles) the minimum
# is n - c; the construction reaches it on every element of S_5.
bfs = transposition_bfs(5)
worse = 0
for p in tf.all_permutations(5):
    if not tf.is_identity(p):
        worse += transposition_factor(p).length != bfs.dist[bfs.monoid.index(p)]
print("\nS_5 elements where the construction is longer than the BFS minimum:", worse)
