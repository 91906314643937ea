"""hookcert: exact re-verification that the irreducible character degree sets
of the symmetric and alternating groups differ, via certified hook-product
scans over Young diagrams.

The library is organized by job:

- partitions    diagrams, conjugation, hooks
- factored      exact prime-exponent arithmetic, targets, degrees
- primes        sieve tables and auxiliary prime selection
- enumeration   partition generators with window constraints
- kernels       the hot scan loop (compiled + pure twins)
- lemmas        the standalone analytic/arithmetic checks
- claims        the per-weight uniqueness verifications
- cli           orchestrator with reports
"""

__version__ = "0.1.0"
