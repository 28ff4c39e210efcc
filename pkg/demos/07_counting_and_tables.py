"""
Counting factors and reading stored tables
==========================================

The number of Steinberg composition factors is the coefficient of a
simple generating function; its unitary twin uses the half rank and a
twisted quantum characteristic.  For two exceptional groups the socle is
read off a stored decomposition table instead.
"""

from steinberg.combinat import (composition_length_gl, composition_length_gu,
                                format_partition, quantum_characteristic,
                                quantum_characteristic_twisted,
                                socle_partition, steinberg_series_partitions)
from steinberg.refdata import (available_decomposition_tables,
                               decomposition_table, lookup_socle_label,
                               select_lambda0, select_mu0)

# linear groups: partitions of n into parts 1 and e * l^j count the factors
q, ell = 3, 2
e = quantum_characteristic(q, ell)
print("q = 3, l = 2, quantum characteristic e =", e)
for n in range(1, 9):
    parts = steinberg_series_partitions(n, e, ell)
    print("  n =", n, " length", composition_length_gl(n, q, ell), " from",
          ", ".join(format_partition(p) for p in parts))
print()

# the socle's own label: the most spread-out allowed partition
print("socle labels at e = 3:",
      ", ".join(format_partition(socle_partition(n, 3)) for n in range(2, 8)))
print()

# unitary groups at a linear prime: same series in the half rank, with the
# quantum characteristic of q^2
q, ell = 2, 5
print("unitary count at q = 2, l = 5 (twisted e =",
      quantum_characteristic_twisted(q, ell), "):")
for n in range(2, 11, 2):
    print("  n =", n, " length", composition_length_gu(n, q, ell))
print()

# exceptional groups: stored decomposition tables, rows ordered by
# a-invariant, pick the socle as the first row hitting the sign column
print("stored tables:", available_decomposition_tables())
for gtype, e in available_decomposition_tables():
    table = decomposition_table(gtype, e)
    lam = select_lambda0(table)
    print("  %s at e=%d: socle label %s, top cell %s (a = %d)" % (
        gtype, e, select_mu0(table), lam,
        table.a_invariants[table.row_labels.index(lam)]))
print()

# the remaining exceptional types carry a plain lookup table
for gtype, e in [("G2", 3), ("G2", 6), ("3D4", 3), ("2F4", 2)]:
    print("socle label for %s at e=%d: %s" % (
        gtype, e, lookup_socle_label(gtype, e)))
