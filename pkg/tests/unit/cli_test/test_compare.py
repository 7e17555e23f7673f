import pytest

from pttra.cli.compare import main
from pttra.util import load_yaml

reference_digest = 'sha256:d54f7a4f0f1473825eeff810ea08385f85e323d5c8b97d1aa4e511d8f5cec82c'


def test_compare(work_dir, capsys):
    assert main(['-o', str(work_dir)]) == 0
    content = load_yaml(work_dir / 'compare.yaml')
    assert list(content) == ['dataset', 'eq22', 'eq23', 'table1']
    assert content['dataset']['digest'] == reference_digest
    assert len(content['dataset']['annotations']) == 4
    assert content['eq22']['corrected']['abs_delta'][0][0] == pytest.approx(0.654, abs=1e-3)
    assert content['eq22']['paper_faithful']['abs_delta'][0][0] == pytest.approx(0.154, abs=1e-3)
    assert content['eq23']['paper_faithful'] is None
    assert content['eq23']['corrected']['parameters']['N'] == 1.1
    assert len(content['eq23']['corrected']['notes']) == 2
    assert len(content['table1']['corrected']) == 2
    assert content['table1']['paper_faithful'][1]['name'] == 'table1/reference_1'
    out = capsys.readouterr().out
    assert 'eq22 corrected' in out
    assert 'eq22 paper_faithful' in out


def test_compare_reproducible(tmp_path):
    first, second = tmp_path / 'first', tmp_path / 'second'
    assert main(['-o', str(first)]) == 0
    assert main(['-o', str(second)]) == 0
    assert (first / 'compare.yaml').read_bytes() == (second / 'compare.yaml').read_bytes()
