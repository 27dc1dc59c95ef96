"""Central tolerance table.

Every numeric threshold used by the library lives here so that validation,
support cutoffs and test tolerances stay consistent across modules.
Relative tolerances (``*_RTOL``) scale with a norm of the operator they are
applied to; absolute ones (``*_ATOL``) do not.
"""

# Hermitian symmetry check, relative to the Frobenius norm of the operand.
HERMITIAN_RTOL = 1e-10

# Eigendecomposition quality: reconstruction ||A - V diag(w) V^+||_F and
# unitarity ||V^+ V - I||_F, both relative to ||A||_F (or absolute for V).
RECONSTRUCTION_RTOL = 1e-10
UNITARY_ATOL = 1e-10

# Positive semidefiniteness: eigenvalues may dip this far below zero.
PSD_EIGENVALUE_TOL = 1e-10

# psd_sqrt must square back to its input within this (relative) error.
PSD_SQRT_RTOL = 1e-9

# Density matrices: |tr(rho) - 1| bound.
TRACE_ATOL = 1e-10

# Support cutoff for the quantum Fisher information sum and the symmetric
# logarithmic derivative: eigenvalue pairs with lam_i + lam_j below this
# fraction of the largest eigenvalue are treated as outside the support.
SUPPORT_RTOL = 1e-12

# Outcome probabilities at or below this floor are dropped from classical
# Fisher sums; a dropped outcome whose derivative magnitude exceeds
# SINGULAR_DPROB signals a genuinely divergent Fisher information.
PROB_FLOOR = 1e-14
SINGULAR_DPROB = 1e-7

# Outcome distributions: slack on probability positivity / normalisation.
PROB_NEGATIVE_ATOL = 1e-12
PROB_SUM_ATOL = 1e-10
DPROB_SUM_ATOL = 1e-10

# Classical probability tables must sum to one within this.
TABLE_SUM_ATOL = 1e-12

# Residual allowed when checking invariance under product-basis dephasing.
DEPHASE_ATOL = 1e-10

# Defining-relation residual allowed for the symmetric log derivative.
SLD_RESIDUAL_ATOL = 1e-8

# POVM validation: element PSD slack and deviation of the element sum from
# the identity.
POVM_PSD_TOL = 1e-10
POVM_SUM_ATOL = 1e-10

# Optimal-measurement residual test, relative to ||rho^(1/2)||_F.
OPTIMALITY_RTOL = 1e-6

# Global-optimality witness: trace of the commutator must vanish relative to
# the commutator norm; the residual verdict threshold scales with
# ||L_0||_F * ||H||_F.
WITNESS_TRACE_RTOL = 1e-8
WITNESS_RESIDUAL_RTOL = 1e-6

# Central finite differences used by the derivative oracles.
FD_STEP = 1e-6
FD_RTOL = 1e-6

# Default evaluation point for phase-dependent numerics (a deliberately
# non-special angle; Fisher quantities for unitary families do not depend
# on it).
DEFAULT_PHI = 0.7
