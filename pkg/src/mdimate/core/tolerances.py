"""Numeric tolerances used by the type invariants and the verification suites."""

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9
BLOCH_TOL = 1e-12
PURITY_TOL = 1e-10

PROBABILITY_TOL = 1e-9
IMAGINARY_RESIDUE_TOL = 1e-8
CHANNEL_TRACE_TOL = 1e-9
KRAUS_COMPLETENESS_TOL = 1e-10

RECONSTRUCTION_TOL = 1e-10
ORACLE_TOL = 1e-10
PROBABILITY_SUM_TOL = 1e-12

# A Werner value at v=1 at or above -DETECTION_FLOOR means "never detectable".
DETECTION_FLOOR = 1e-12
LINEARITY_TOL = 1e-10
THRESHOLD_AGREEMENT_TOL = 1e-6
