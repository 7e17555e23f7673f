"""Invariant suites of every package, runnable without pytest.

Each check raises AssertionError on failure; a TraError raised inside a check
counts as a failure of that check too. The command prints one line per suite
with its pass count and wall time and exits with 0 only when every check
passes.
"""

from __future__ import annotations

import math
import time
from argparse import ArgumentParser
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import gamma

from pttra.basis import (
    ExpansionMode,
    gauss_laguerre_rule,
    integrate,
    laguerre_norm,
    laguerre_ode_residual,
    laguerre_table,
    monomial_expansion,
)
from pttra.common import exit_failure, exit_success
from pttra.eigen import complex_eigen, householder_tridiagonalize, jacobi_matrix, symmetric_eigen, tridiag_eigen
from pttra.hamiltonian import BasisSpec, PotentialSpec, assemble, potential_matrix
from pttra.reference import reference_dataset, sweep_reality
from pttra.util import TraError, create_logger
from pttra.wavefunction import basis_eval, discrete_orthogonality, recursion_eval, reconstruct

Check = Callable[[], None]

reference_digest = "sha256:d54f7a4f0f1473825eeff810ea08385f85e323d5c8b97d1aa4e511d8f5cec82c"


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def _laguerre_orthogonality() -> None:
    for nu in (0.5, 0.0, 2.0):
        rule = gauss_laguerre_rule(nu, 12)
        table = laguerre_table(10, nu, rule.nodes)
        for n in range(11):
            norm = laguerre_norm(n, nu)
            for m in range(11):
                value = integrate(rule, lambda _: table[n] * table[m])
                _check(abs(value - (norm if n == m else 0.0)) <= 1e-9 * norm, f"<L{n}, L{m}> at nu={nu}")


def _laguerre_recurrence() -> None:
    for y in (0.1, 1.0, 10.0):
        table = laguerre_table(11, 0.5, y)
        for n in range(11):
            lower = table[n - 1] if n > 0 else 0.0
            terms = ((2 * n + 1.5) * table[n], (n + 0.5) * lower, (n + 1) * table[n + 1])
            scale = abs(y * table[n]) + sum(abs(t) for t in terms)
            error = abs(y * table[n] - (terms[0] - terms[1] - terms[2]))
            _check(error <= 1e-12 * (1.0 + scale), f"recurrence n={n}, y={y}")


def _laguerre_ode() -> None:
    for n in range(9):
        for y in (0.5, 2.0, 8.0):
            _check(abs(laguerre_ode_residual(n, 0.5, y)) <= 1e-9, f"ODE residual n={n}, y={y}")


def _quadrature_exactness() -> None:
    for alpha in (0.5, 1.5, 2.6):
        for k in range(1, 21):
            rule = gauss_laguerre_rule(alpha, k)
            for j in range(2 * k):
                exact = gamma(alpha + j + 1.0)
                value = integrate(rule, lambda y: y**j)
                _check(abs(value - exact) <= 1e-10 * exact, f"y^{j} with alpha={alpha}, K={k}")


def _expansion_modes() -> None:
    ys = np.array([0.5, 1.0, 2.0, 3.5, 5.0, 7.5, 10.0, 20.0])
    for n in range(1, 7):
        expansion = monomial_expansion(n, 0.5)
        values = expansion.evaluate(ys)
        # near the origin the alternating terms cancel down to y^N
        terms = np.abs(np.asarray(expansion.coeffs)) @ np.abs(laguerre_table(n, 0.5, ys))
        _check(bool(np.all(np.abs(values - ys**n) <= 1e-10 * terms)), f"corrected expansion N={n}")
        far = ys >= 2.0
        relative = np.abs(values[far] - ys[far] ** n) / ys[far] ** n
        _check(bool(np.all(relative <= 1e-10)), f"corrected expansion N={n}, y >= 2")
    offset = monomial_expansion(1, 0.5, ExpansionMode.paper_faithful).evaluate(ys) - ys
    _check(bool(np.allclose(offset, -0.5, rtol=0.0, atol=1e-14)), "paper_faithful offset at N=1")


def _harmonic_limit() -> None:
    h = assemble(BasisSpec(lam=math.sqrt(2.0), size=16), PotentialSpec(N=1.0)).entries.real
    scale = np.max(np.abs(h))
    _check(np.max(np.abs(h - np.diag(np.diag(h)))) <= 1e-8 * scale, "off-diagonal entries in the harmonic limit")
    _check(bool(np.all(np.abs(np.diag(h) - (4.0 * np.arange(16) + 3.0)) <= 1e-8)), "diagonal 4n + 3")


def _integer_reality() -> None:
    for n in (1, 2, 3, 4):
        for lam in (1.0, 2.9):
            h = assemble(BasisSpec(lam=lam, size=16), PotentialSpec(N=n))
            _check(h.max_imag() <= 1e-12 * h.scale(), f"imaginary entries at N={n}, lambda={lam}")
            _check(bool(np.array_equal(h.entries, h.entries.T)), f"symmetry at N={n}, lambda={lam}")


def _mode_equivalence() -> None:
    basis = BasisSpec(lam=1.3, size=12)
    for n in (1, 2, 3, 4):
        pot = PotentialSpec(N=n)
        direct = potential_matrix(basis, pot).entries
        expanded = potential_matrix(basis, pot, coefficients=monomial_expansion(n, 0.5)).entries
        _check(np.max(np.abs(direct - expanded)) <= 1e-10 * max(1.0, np.max(np.abs(direct))), f"paths at N={n}")


def _lambda_scaling() -> None:
    pot = PotentialSpec(N=1.5)
    scaled = [potential_matrix(BasisSpec(lam=lam, size=8), pot).entries * lam**3 for lam in (0.5, 1.0, 2.9)]
    for other in scaled[1:]:
        _check(np.max(np.abs(other - scaled[0])) <= 1e-12 * np.max(np.abs(scaled[0])), "lambda scaling of V")


def _similarity() -> None:
    rng = np.random.default_rng(20)
    for k in range(20):
        size = (4, 8, 12)[k % 3]
        a = rng.standard_normal((size, size))
        a = a + a.T
        symmetric = symmetric_eigen(a)
        general = complex_eigen(a)
        scale = np.linalg.norm(a)
        _check(np.max(np.abs(symmetric.values - general.values)) <= 1e-9 * scale, f"solver paths, matrix {k}, M={size}")
        assert symmetric.vectors is not None
        gram = symmetric.vectors.T @ symmetric.vectors
        _check(np.max(np.abs(gram - np.eye(size))) <= 1e-9, f"eigenvector orthogonality, matrix {k}, M={size}")


def _trace_identity() -> None:
    for n in (1.1, 1.5, 2.0):
        h = assemble(BasisSpec(lam=1.0, size=10), PotentialSpec(N=n)).entries
        spectrum = complex_eigen(h)
        trace = np.trace(h)
        _check(abs(np.sum(spectrum.values) - trace) <= 1e-8 * (1.0 + abs(trace)), f"trace identity at N={n}")


def _recursion_equivalence() -> None:
    for n in (1, 2):
        h = assemble(BasisSpec(lam=1.0, size=10), PotentialSpec(N=n)).entries.real
        t = householder_tridiagonalize(h)
        spectrum = tridiag_eigen(t)
        assert spectrum.vectors is not None
        for k, energy in enumerate(spectrum.values.real):
            v = spectrum.vectors[:, k]
            ratio = v / v[0]
            p = recursion_eval(t, float(energy)).values
            _check(np.max(np.abs(p - ratio)) <= 1e-8 * np.max(np.abs(ratio)), f"P_n(E_{k}) at N={n}")


def _characteristic_roots() -> None:
    h = assemble(BasisSpec(lam=1.0, size=10), PotentialSpec(N=1.0)).entries.real
    t = householder_tridiagonalize(h)
    energies = np.sort(tridiag_eigen(t).values.real)
    midpoints = 0.5 * (energies[1:] + energies[:-1])
    values = np.array([recursion_eval(t, float(e)).characteristic() for e in midpoints])
    local = np.abs([np.prod(e - energies) for e in midpoints]) / abs(np.prod(t.offdiag))
    _check(bool(np.all(np.abs(values) >= 1e-3 * local)), "P_M away from zero between eigenvalues")
    _check(bool(np.all(np.sign(values[1:]) == -np.sign(values[:-1]))), "P_M changes sign between eigenvalues")


def _discrete_orthogonality() -> None:
    h = assemble(BasisSpec(lam=1.0, size=8), PotentialSpec(N=1.0)).entries.real
    j = np.arange(6, dtype=float)
    laguerre_jacobi = jacobi_matrix(2.0 * j + 1.5, np.sqrt(j[1:] * (j[1:] + 0.5)))
    for t in (householder_tridiagonalize(h), laguerre_jacobi):
        _check(discrete_orthogonality(t).passed(1e-8), "discrete orthogonality")


def _wavefunctions() -> None:
    basis = BasisSpec(lam=math.sqrt(2.0), size=6)
    x = np.array([0.5, 1.0, 2.0])
    samples = reconstruct(np.eye(6)[0], basis, x)
    exact = x * np.exp(-(x**2))
    ratio = samples.psi.real / exact
    _check(np.max(np.abs(ratio / ratio[0] - 1.0)) <= 1e-8, "harmonic ground state shape")
    _check(basis_eval(3, basis, 0.0) == 0.0, "psi(0) = 0")


def _reference() -> None:
    _check(reference_dataset().digest() == reference_digest, "reference dataset digest")
    rows = sweep_reality([1.0, 2.0, 3.0], BasisSpec(lam=1.0, size=8))
    _check(all(row.n_complex == 0 for row in rows), "integer exponents give real spectra")


suites: Dict[str, List[Tuple[str, Check]]] = {
    "basis": [
        ("orthogonality", _laguerre_orthogonality),
        ("recurrence", _laguerre_recurrence),
        ("ode", _laguerre_ode),
        ("quadrature", _quadrature_exactness),
        ("expansion", _expansion_modes),
    ],
    "hamiltonian": [
        ("harmonic_limit", _harmonic_limit),
        ("integer_reality", _integer_reality),
        ("mode_equivalence", _mode_equivalence),
        ("lambda_scaling", _lambda_scaling),
    ],
    "eigen": [
        ("similarity", _similarity),
        ("trace", _trace_identity),
    ],
    "wavefunction": [
        ("recursion", _recursion_equivalence),
        ("characteristic", _characteristic_roots),
        ("orthogonality", _discrete_orthogonality),
        ("samples", _wavefunctions),
    ],
    "reference": [
        ("dataset", _reference),
    ],
}


def run_suites(names: Optional[Sequence[str]] = None) -> Dict[str, Tuple[int, int, float, List[str]]]:
    """Run the selected suites.

    Returns:
        dict[str, tuple[int, int, float, list[str]]]: Per suite, (passed,
            total, seconds, failure messages).
    """
    results = {}
    for name in names or list(suites):
        checks = suites[name]
        failures = []
        start = time.perf_counter()
        for check_name, check in checks:
            try:
                check()
            except AssertionError as e:
                failures.append(f"{check_name}: {e}")
            except TraError as e:
                failures.append(f"{check_name}: {type(e).__name__}: {e}")
        results[name] = (len(checks) - len(failures), len(checks), time.perf_counter() - start, failures)
    return results


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parses command line options and runs the invariant suites."""
    parser = ArgumentParser(prog="pttra-selftest", description="Run the invariant suites of every package.")
    parser.add_argument("--suite", action="append", choices=sorted(suites), default=None)
    parser.add_argument("--log-level", dest="log_level", type=str, default="WARNING")
    args = parser.parse_args(argv)
    logger = create_logger("pttra", args.log_level)

    results = run_suites(args.suite)
    for name, (passed, total, seconds, failures) in results.items():
        status = "PASS" if passed == total else "FAIL"
        print(f"{status} {name:<13} {passed}/{total} {seconds:8.3f} s")
        for failure in failures:
            logger.error(f"{name}/{failure}")
    if all(passed == total for passed, total, _, _ in results.values()):
        return exit_success
    return exit_failure


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
