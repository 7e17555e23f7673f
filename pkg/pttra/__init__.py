from pttra import basis, cli, common, config, eigen, hamiltonian, reference, util, wavefunction, workspace

__all__ = [
    "basis",
    "cli",
    "common",
    "config",
    "eigen",
    "hamiltonian",
    "reference",
    "util",
    "wavefunction",
    "workspace",
]
