import numpy as np
import pytest

from pttra.cli.assemble import main
from pttra.hamiltonian import ComplexSymmetricMatrix
from pttra.util import load_yaml


def test_assemble(work_dir):
    assert main(['--bigN', '1', '--lambda', '1', '--size', '2', '--output', str(work_dir)]) == 0
    content = load_yaml(work_dir / 'matrix.yaml')
    assert content['size'] == 2
    assert content['N'] == 1.0
    assert content['mode'] == 'corrected'
    assert content['entries'][0][0] == pytest.approx(3.75, abs=1e-6)
    assert content['entries'][1][0] == pytest.approx(-1.837117, abs=1e-6)
    assert content['d'] == -0.25
    assert content['phase'] == [-1.0, 0.0]
    assert (work_dir / 'lock').is_dir()


def test_assemble_paper_faithful(work_dir):
    assert main(['--bigN', '1', '--size', '2', '--mode', 'paper_faithful', '-o', str(work_dir)]) == 0
    content = load_yaml(work_dir / 'matrix.yaml')
    assert content['mode'] == 'paper_faithful'
    assert content['entries'][0][0] == pytest.approx(3.25, abs=1e-6)


def test_assemble_complex(work_dir):
    assert main(['--bigN', '1.1', '-o', str(work_dir)]) == 0
    h = ComplexSymmetricMatrix.from_dict(load_yaml(work_dir / 'matrix.yaml'))
    assert h.size == 5
    assert not h.is_real()
    np.testing.assert_array_equal(h.entries, h.entries.T)
    assert h.annotations() == ['non-integer N: complex symmetric, non-Hermitian matrix']


def test_assemble_output_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv('PTTRA_OUTPUT_DIR', str(tmp_path / 'env'))
    assert main(['--size', '3']) == 0
    assert (tmp_path / 'env' / 'matrix.yaml').exists()


def test_assemble_config_errors(work_dir):
    assert main(['--bigN', '0', '-o', str(work_dir)]) == 2
    assert main(['--bigN', '1.5', '--mode', 'paper_faithful', '-o', str(work_dir)]) == 2
    assert main(['--size', '3', '--quad-nodes', '2', '-o', str(work_dir)]) == 2
    assert main(['--config', str(work_dir / 'missing.yml'), '-o', str(work_dir)]) == 2
    assert not (work_dir / 'matrix.yaml').exists()


def test_assemble_output_is_a_file(tmp_path):
    path = tmp_path / 'file'
    path.write_text('')
    assert main(['-o', str(path)]) == 1


def test_assemble_logfile(work_dir, tmp_path):
    logfile = tmp_path / 'logs' / 'assemble.log'
    assert main(['-o', str(work_dir), '--logfile', str(logfile), '--log-level', 'WARNING']) == 0
    assert 'wrote' in logfile.read_text()


def test_assemble_ignores_grid_tail(work_dir):
    assert main(['--x-max', '3', '-o', str(work_dir)]) == 0
    assert (work_dir / 'matrix.yaml').exists()


def test_assemble_default_logfile(work_dir):
    assert main(['-o', str(work_dir), '--log-level', 'WARNING']) == 0
    text = (work_dir / 'log' / 'assemble.log').read_text()
    assert 'wrote' in text
    assert 'matrix.yaml' in text
