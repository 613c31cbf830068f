"""The dominance machinery: how avoiding a block-diagonal sum P (+) C on a
big triple reduces to avoiding P on smaller successor triples.

Run:  python demos/04_dominance_and_successors.py
"""
from altperm.diagrams import parse_ad, valid_transversals
from altperm.extension import (
    direct_sum,
    dominant_region,
    nondominant_set,
    realizable_nondominant_sets,
    successor,
    verify_embed2,
)

ady = parse_ad("4,4,4,4;A=1,3;D=2")
Y = ady.diagram
C = (1,)
T = next(iter(valid_transversals(ady)))
print(f"triple {ady}, transversal {T}, block C = M(1)")
print("dominant region rows:", dominant_region(Y, T, C))
print("non-dominant elements:", sorted(nondominant_set(Y, T, C)))
s = successor(ady, T, C)
print(f"successor triple: {s.child}  (rows kept {s.row_map}, cols kept {s.col_map})")

print("\nrealizable non-dominant sets and their successors:")
for N, s in sorted(realizable_nondominant_sets(ady, C).items(), key=lambda kv: sorted(kv[0])):
    print(f"  N = {sorted(N) or '{}'} -> {s.child}")

for P in ((1, 2), (2, 1)):
    label = "".join(map(str, direct_sum(P, C)))
    print(f"\ncounting identity for {label}: {verify_embed2(ady, P, C)}")
