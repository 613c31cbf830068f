"""Classifying length-4 patterns over alternating permutations, and ruling
out equivalences with container-length arguments.

Run:  python demos/07_equivalence_classes.py
"""
import itertools

from altperm.equivalence import classify, doubling_nonequivalence
from altperm.perms import ALTERNATING, format_perm

S4 = list(itertools.permutations((1, 2, 3, 4)))

rep = classify(S4, ALTERNATING, (1, 3, 5, 7, 9))
print("odd lengths 1..9: blocks of equal counting sequences")
for blk in rep.blocks:
    kind = "trivial (reverse orbit)" if blk.trivial else "NONTRIVIAL"
    pats = " ".join(sorted(format_perm(p) for p in blk.patterns))
    print(f"  counts {blk.counts}: {pats}   [{kind}]")

print("\nnon-equivalence by shortest-container lengths (even lengths):")
v = doubling_nonequivalence((3, 2, 1), (1, 2, 3), "even")
print(f"  321 vs 123: decided={v.decided}, witness n={v.witness_n}, counts={v.counts}")
v2 = doubling_nonequivalence((4, 3, 2, 1), (1, 2, 4, 3), "even")
print(f"  4321 vs 1243: decided={v2.decided}, witness n={v2.witness_n}, counts={v2.counts}")
