"""
A Gelfand-Graev module and its head
===================================

Induce a nondegenerate linear character of the unipotent subgroup up to
the whole group, check the weighted unipotent sum is quasi-idempotent,
and find the induced module's unique simple quotient inside the Steinberg
module -- exactly once.
"""

from steinberg.bngroup import build_gl
from steinberg.modrep import gelfand_graev

G = build_gl(2, 3)
ell = 2
print("group:", G, " coefficient characteristic:", ell)

# the regular character takes values in GF(2^d) where d is the order of
# 2 modulo 3; its values on the superdiagonal generate the extension
sigma = G.regular_character(ell)
print("character field: GF(%d)" % sigma.field.order,
      " (degree", sigma.degree, "over GF(%d))" % ell)
print("values on the root subgroup:",
      [sigma.on_root(c) for c in range(G.q)])
print()

gg = gelfand_graev(G, sigma)
print("weighted unipotent sum squares to |U| times itself:",
      gg.idempotent_ok)
print("induced module dimension:", gg.module.dim,
      " (= |G| / |U| =", G.order_g // G.order_u, ")")
print()

# the head is simple, and the adjunction counts how often it can appear
print("dimension of the image of the weighted sum on the Steinberg module:",
      gg.image_dim)
print("hom space from the induced module to the Steinberg module:",
      gg.hom_dim, "dimensional")
print("head dimension:", gg.head.dim)
print("multiplicity of the head among the Steinberg composition factors:",
      gg.head_multiplicity)
print("Steinberg factor dimensions:",
      [f.dim for f in gg.steinberg_factors])
