"""
Flags, Borel cosets and the Bruhat decomposition
================================================

Build a small general linear group with its BN-pair structure, count its
complete flags, and factor a sample matrix through a Bruhat cell.
"""

import numpy as np

from steinberg.bngroup import build_gl
from steinberg.combinat import flag_count, gaussian_binomial

# build GL_3(2): every subgroup order and the Weyl group come with it
G = build_gl(3, 2)
print("group:", G)
print("|G| =", G.order_g, " |B| =", G.order_b, " |U| =", G.order_u,
      " |H| =", G.order_h)
print("flag count [G:B] =", G.index, " (formula gives", flag_count(3, 2), ")")
print()

# the number of cosets in each Bruhat cell is q^length, and the cell sizes
# sum to the flag count -- the q-analogue of |W| = n!
print("cosets per Weyl element (by length):")
dist = G.length_distribution()
for length in sorted(dist):
    print("  length", length, "->", dist[length], "cells of size",
          G.q ** length)
total = sum(count * G.q ** length for length, count in dist.items())
print("sum of cell sizes =", total, "== flag count:", total == G.index)
print()

# factor one concrete invertible matrix as b * n_w * u
g = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 0]], dtype=np.int64)
triple = G.bruhat(g)
word = G.weyl.reduced_word(triple.w)
print("sample matrix:")
print(g)
print("lands in the cell of the Weyl word", word,
      "(length", G.weyl.length(triple.w), ")")
print("upper-triangular factor:")
print(triple.b)
print("unipotent factor:")
print(triple.u)
recombined = (triple.b @ G.weyl_rep(triple.w) @ triple.u) % G.q
print("b * n_w * u recovers the matrix:", np.array_equal(recombined, g % G.q))
print()

# Gaussian binomials count the partial flags: lines and planes in F_2^3
print("lines in F_2^3:  ", gaussian_binomial(3, 1, 2))
print("planes in F_2^3: ", gaussian_binomial(3, 2, 2))
