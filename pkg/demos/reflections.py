"""Rational orthogonal matrices as products of reflections.

Pick the first basis vector w the matrix moves, reflect across
u = f(w) - w, and repeat. Every step enlarges the fixed subspace, so at
most n reflections appear. All arithmetic is exact over the rationals.
Run: python3 demos/reflections.py
"""
from fractions import Fraction

from premonoid import linear as la
from premonoid.factorizers import cartan_dieudonne_factor

minus_i = -la.identity(2)
cert = cartan_dieudonne_factor(minus_i)
print("-I factors as", [str(g) for g in cert.factors], "trace", cert.trace)

f = la.QMatrix(((Fraction(3, 5), Fraction(4, 5)), (Fraction(4, 5), Fraction(-3, 5))))
print("\n", f, "is a reflection:", la.is_reflection(f), "det", la.determinant(f))

# A random element of O(4): product of three reflections across small
# integer vectors. The factorization recovers at most four reflections.
g = la.random_rational_orthogonal(4, 3, seed=7)
print("\nrandom orthogonal matrix", g)
print("fix-rank", la.fix_rank(g))
cert = cartan_dieudonne_factor(g)
for r in cert.factors:
    print("  reflection", r, "fix-rank", la.fix_rank(r))
product = la.identity(4)
for r in cert.factors:
    product = product @ r
print("product equals input:", product == g, "| length", cert.length, "<= bound", cert.bound)

print("\nmatrix JSON:", la.matrix_to_json(f))
