"""Centralized numerical tolerances.

Three tiers, chosen for double-precision spectral decompositions at
dimensions up to ~1024:

* ``STRUCTURAL_TOL`` -- construction-time invariants (hermiticity, unit
  trace, idempotence, unit norm).
* ``ASSERTION_TOL`` -- runtime consistency assertions (imaginary parts
  that should vanish, squares of dichotomic observables).
* ``OPTIMIZER_TOL`` -- default convergence threshold of the see-saw
  optimizer; configurable per call.
"""

STRUCTURAL_TOL = 1e-10
ASSERTION_TOL = 1e-9
OPTIMIZER_TOL = 1e-8

# Conditioning A.D.A* is treated as null when its trace falls below this.
CONDITION_TOL = 1e-12

# Eigenvalues of magnitude below this are mapped to +1 by the spectral
# sign, keeping the output a valid dichotomic observable.
SIGN_TOL = 1e-12

# A filtered state counts as a generalized CHSH violation only when its
# certified bound clears 1 by this margin.
VIOLATION_MARGIN = 1e-9
