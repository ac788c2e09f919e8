"""Numerical thresholds used across the package.

Everything scale-dependent is expressed relative to a norm of the matrix it
guards; the constants here are the dimensionless prefactors.
"""

# LU pivot below this times ||M||_F means the system is treated as singular.
PIVOT_RELATIVE = 1e-14

# Acceptable Lyapunov residual ||A V + V A^T + D||_F relative to ||D||_F.
LYAPUNOV_RESIDUAL_RELATIVE = 1e-10

# Margin for calling a drift eigenvalue "strictly in the left half plane",
# and for calling a min eigenvalue of a physicality / NPT matrix negative.
EIGENVALUE_SIGN_MARGIN = 1e-9

# Relative agreement demanded between the Lyapunov solution and the
# frequency-integral cross-check.
ORACLE_AGREEMENT = 1e-4

# Relative tolerance on symplectic-transform checks (S J S^T = J).
SYMPLECTIC = 1e-12

# Covariance matrices are symmetrized on construction; downstream consumers
# may still verify symmetry against this.
COVARIANCE_SYMMETRY = 1e-12

# Hermitian-pair inputs: ||S - S^T|| and ||K + K^T|| relative to scale.
HERMITIAN_INPUT = 1e-9

# hbar * omega / (2 kB T) above this triggers a bath-correlation warning.
MARKOV_RATIO = 0.1
