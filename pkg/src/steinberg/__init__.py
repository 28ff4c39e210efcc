"""Exact desk-scale computations around the modular Steinberg module.

Subpackages cover finite Coxeter groups, exact finite-field linear algebra,
GL_n(q) with its split BN-pair, Iwahori-Hecke algebras with their realized
action on the Borel permutation module, a small MeatAxe, Harish-Chandra
functors, Gelfand-Graev modules, partition combinatorics for composition
lengths and socle labels, and bundled reference decomposition data.
"""

__version__ = "0.1.0"

from . import (  # noqa: F401
    bngroup,
    combinat,
    coxeter,
    gf,
    hecke,
    meataxe,
    modrep,
    polynomials,
    refdata,
)
