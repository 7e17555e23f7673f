from pathlib import Path

import pytest

from pttra.workspace import Workspace, resolve_output_directory


def test_create(work_dir):
    workspace = Workspace(work_dir)
    assert workspace.exists() is False
    assert workspace.create() is True
    assert workspace.create() is False
    assert workspace.exists() is True
    assert workspace.lock.is_dir()
    assert workspace.log.is_dir()


def test_create_on_file(tmp_path):
    path = tmp_path / 'file'
    path.write_text('')
    with pytest.raises(NotADirectoryError):
        Workspace(path).create()


def test_check_consists(work_dir):
    workspace = Workspace(work_dir)
    assert workspace.check_consists() is False
    workspace.create()
    assert workspace.check_consists() is True
    workspace.lock.rmdir()
    assert workspace.check_consists() is False
    assert workspace.create() is True


def test_files(work_dir):
    workspace = Workspace(work_dir)
    assert workspace.matrix_file == work_dir / 'matrix.yaml'
    assert workspace.spectrum_csv_file.name == 'spectrum.csv'
    assert workspace.spectrum_yaml_file.name == 'spectrum.yaml'
    assert workspace.wavefunction_csv_file.name == 'wavefunction.csv'
    assert workspace.sweep_csv_file.name == 'sweep.csv'
    assert workspace.compare_file.name == 'compare.yaml'
    assert workspace.convergence_csv_file.name == 'convergence.csv'


def test_resolve_output_directory(monkeypatch, cd_work):
    assert resolve_output_directory() == Path('./pttra_out').resolve()
    assert resolve_output_directory(configured='conf') == (cd_work / 'conf').resolve()
    monkeypatch.setenv('PTTRA_OUTPUT_DIR', str(cd_work / 'env'))
    assert resolve_output_directory(configured='conf') == (cd_work / 'env').resolve()
    assert resolve_output_directory(flag='flag', configured='conf') == (cd_work / 'flag').resolve()
