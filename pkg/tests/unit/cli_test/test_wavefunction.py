import numpy as np
import pytest

from pttra.cli.wavefunction import main
from pttra.util import load_csv


def test_wavefunction(work_dir):
    argv = ['--bigN', '1', '--lambda', '1.4142135623730951', '--level', '0', '--points', '101', '-o', str(work_dir)]
    assert main(argv) == 0
    path = work_dir / 'wavefunction.csv'
    rows = load_csv(path)
    assert len(rows) == 101
    assert list(rows[0]) == ['x', 're', 'im', 'abs']
    x = np.array([float(row['x']) for row in rows])
    modulus = np.array([float(row['abs']) for row in rows])
    assert x[0] == -x[-1]
    assert modulus[50] <= 1e-12
    np.testing.assert_allclose(modulus, modulus[::-1], atol=1e-12)
    text = path.read_text()
    assert '# level=0' in text
    energy = next(line for line in text.splitlines() if line.startswith('# E='))
    assert float(energy[4:]) == pytest.approx(3.0)
    assert 'decay(x_tail=4.0)' in text


def test_wavefunction_plot(work_dir, capsys):
    assert main(['--bigN', '1.1', '--level', '1', '--x-max', '5', '--x-tail', '3', '--plot', '-o', str(work_dir)]) == 0
    out = capsys.readouterr().out
    assert '|psi(x)|' in out
    assert len(out.splitlines()) > 10
    text = (work_dir / 'wavefunction.csv').read_text()
    assert 'decay(x_tail=3.0)' in text
    assert 'non-integer N' in text


def test_wavefunction_errors(work_dir):
    assert main(['--size', '3', '--level', '3', '-o', str(work_dir)]) == 2
    assert main(['--x-tail', '9', '-o', str(work_dir)]) == 2
    assert main(['--points', '2', '-o', str(work_dir)]) == 2
