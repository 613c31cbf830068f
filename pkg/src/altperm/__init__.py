"""altperm: exact enumeration and bijection verification for pattern
avoidance in alternating permutations, AD-Young diagram transversals, and
descent-type-restricted permutations."""

__version__ = "0.1.0"
