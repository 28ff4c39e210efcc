"""
Composition series of the Steinberg module
==========================================

When the coefficient characteristic divides the flag count, the spun
submodule stops being irreducible.  A seeded Norton-style search splits it
into simple factors, and the number of factors matches a partition count.
"""

from steinberg.bngroup import build_gl
from steinberg.combinat import (composition_length_gl, format_partition,
                                quantum_characteristic,
                                steinberg_series_partitions)
from steinberg.meataxe import (composition_series, factor_multiplicities,
                               is_irreducible)
from steinberg.modrep import steinberg_module

# GL_3(2) with coefficients in GF(7): 7 divides the flag count 21
G = build_gl(3, 2)
ell = 7
st = steinberg_module(G, ell)
print("group:", G, " coefficient characteristic:", ell)
print("flag count:", G.index, " divisible by", ell, ":", G.index % ell == 0)
print("module dimension:", st.module.dim)
verdict, witness = is_irreducible(st.module)
print("irreducible:", verdict, " invariant subspace of dim:",
      None if verdict else witness.shape[0])
print()

# the full series: an ascending chain of invariant subspaces
bases, factors = composition_series(st.module)
print("composition series (subspace dimensions):",
      [b.shape[0] for b in bases])
print("factor dimensions, bottom first:", [f.dim for f in factors])
print("multiplicities:",
      [(rep.dim, mult) for rep, mult in factor_multiplicities(factors)])
print()

# the length is predicted by counting partitions of n into parts drawn
# from 1 and e * ell^j, where e is the quantum characteristic
e = quantum_characteristic(G.q, ell)
parts = steinberg_series_partitions(G.n, e, ell)
print("quantum characteristic e =", e)
print("allowed partitions of", G.n, ":",
      ", ".join(format_partition(p) for p in parts))
print("formula length:", composition_length_gl(G.n, G.q, ell),
      " computed length:", len(factors))
print()

# a second, smaller case for contrast: GL_2(2) at characteristic 3
G2 = build_gl(2, 2)
st2 = steinberg_module(G2, 3)
_, factors2 = composition_series(st2.module)
print("GL_2(2) at characteristic 3: factor dimensions",
      [f.dim for f in factors2], " formula length",
      composition_length_gl(2, 2, 3))
