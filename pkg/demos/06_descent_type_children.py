"""Value injection on descent-type permutations: the child map behind the
monotone counting sequences, and the strip/insert bijections behind the
plateaus of repetitive patterns.

Run:  python demos/06_descent_type_children.py
"""
from altperm.descent_type import (
    block_insert_321,
    block_remove_321,
    child,
    inject,
    repetitive_form,
    repetitive_insert,
    repetitive_strip,
)
from altperm.enumeration import generate
from altperm.perms import DescentType, contains, parse_perm

p = parse_perm("35624718")
print(f"inject 4 into {p} (rows 356|247|18): {inject(4, p, 3)}")

q = parse_perm("2134")
p = parse_perm("23514")
c1 = child(p, q, 3)
c2 = child(c1, q, 3)
print(f"\nchild chain under pattern {q}: {p} -> {c1} -> {c2}")
print(f"children keep avoiding: {not contains(c1, q)} and {not contains(c2, q)}")

print(f"\n{q} is repetitive with leading value t = {repetitive_form(q)}")
src = [w for w in generate(DescentType(3), 5) if not contains(w, q)]
print(f"the 9 avoiders of length 5 map bijectively to length 6:")
for w in src[:3]:
    s = repetitive_insert(q, w, 3)
    print(f"  {w} -> {s} -> back: {repetitive_strip(q, s, 3)}")
print("  ...")

big = parse_perm("345617892")
small, run = block_remove_321(big, 4)
print(f"\nconsecutive-block bijection for 321 at descent type 4:")
print(f"  {big} loses its top run {run} -> {small}")
print(f"  reinserting restores it: {block_insert_321(small, 4) == big}")
