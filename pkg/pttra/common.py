"""Common variables.

Example: ::

    from pttra.common import default_tol_real

"""

# spectrum classification
tag_real = "real"
tag_complex = "complex"
default_tol_real = 1e-8
gauge_threshold = 1e-8

# eigensolvers
max_sweeps_per_size = 50
max_dense_size = 128
symmetry_tol = 1e-12

# hamiltonian / basis
basis_nu = 0.5
basis_alpha = 0.5
basis_beta = 0.5
mass = 1.0
integer_tol = 1e-9

# three-term recursion
recursion_offdiag_tol = 1e-13

# output
dict_lock = "lock"
dict_log = "log"
file_matrix = "matrix.yaml"
file_spectrum_csv = "spectrum.csv"
file_spectrum_yaml = "spectrum.yaml"
file_wavefunction_csv = "wavefunction.csv"
file_sweep_csv = "sweep.csv"
file_compare_yaml = "compare.yaml"
file_convergence_csv = "convergence.csv"
env_output_dir = "PTTRA_OUTPUT_DIR"
default_output_dir = "./pttra_out"

# exit status
exit_success = 0
exit_failure = 1
exit_config_error = 2
exit_numeric_error = 3
