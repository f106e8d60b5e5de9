"""arithmeq: exact arithmetic for number-field decomposition invariants,
arithmetical equivalence testing, and profinite commensurability checks
for S-arithmetic groups."""

__version__ = "0.1.0"
