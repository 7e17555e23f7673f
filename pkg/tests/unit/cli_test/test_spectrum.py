import pytest

from pttra.cli import spectrum
from pttra.cli.spectrum import main
from pttra.util import NumericError, load_csv, load_yaml


def test_spectrum_csv(work_dir, capsys):
    assert main(['--bigN', '2', '--lambda', '1', '--size', '5', '-o', str(work_dir)]) == 0
    rows = load_csv(work_dir / 'spectrum.csv')
    assert [row['index'] for row in rows] == ['0', '1', '2', '3', '4']
    assert all(row['class'] == 'real' for row in rows)
    assert all(float(row['im']) == 0.0 for row in rows)
    values = [float(row['re']) for row in rows]
    assert values == sorted(values)
    text = (work_dir / 'spectrum.csv').read_text()
    assert text.startswith('# N=2.0\n')
    assert 'E[4] = ' in capsys.readouterr().out


def test_spectrum_yaml_with_compare(config_yaml, work_dir, capsys):
    assert main(['--config', str(config_yaml), '--compare', '--digits', '6', '-o', str(work_dir)]) == 0
    content = load_yaml(work_dir / 'spectrum.yaml')
    assert content['parameters'] == {'N': 2.0, 'lambda': 2.9, 'size': 5, 'mode': 'corrected'}
    assert content['n_real'] == 5
    assert content['n_complex'] == 0
    assert content['classification'] == ['real'] * 5
    assert [r['name'] for r in content['table1']] == ['table1/our_case', 'table1/reference_1']
    assert content['table1'][0]['reference'][0] == [1.4868, 0.0]
    assert 'table: our_case=1.4868, reference_1=1.4771' in capsys.readouterr().out


def test_spectrum_complex(work_dir):
    assert main(['--bigN', '1.1', '--format', 'yml', '-o', str(work_dir)]) == 0
    content = load_yaml(work_dir / 'spectrum.yaml')
    assert content['n_real'] + content['n_complex'] == 5
    assert content['annotations'] == ['non-integer N: complex symmetric, non-Hermitian matrix']
    assert content['residual'] <= 1e-10


def test_spectrum_convergence(work_dir):
    assert main(['--bigN', '2', '--convergence', '4,8', '-o', str(work_dir)]) == 0
    rows = load_csv(work_dir / 'convergence.csv')
    assert [row['size'] for row in rows] == ['4', '8']
    assert list(rows[0]) == ['size', 'E0_re', 'E0_im', 'E1_re', 'E1_im', 'E2_re', 'E2_im']


def test_spectrum_errors(work_dir):
    assert main(['--convergence', '4,x', '-o', str(work_dir)]) == 2
    assert main(['--tol-real', '0', '-o', str(work_dir)]) == 2
    assert main(['--format', 'json', '-o', str(work_dir)]) == 2


def test_spectrum_numeric_error(monkeypatch, work_dir):
    def fail(h, tol_real):
        raise NumericError('did not converge', diagnostics={'sweeps': 250})

    monkeypatch.setattr(spectrum, 'solve', fail)
    assert main(['-o', str(work_dir)]) == 3


def test_spectrum_below_one(work_dir, capsys):
    assert main(['--bigN', '0.5', '--lambda', '2.5', '--size', '5', '-o', str(work_dir)]) == 0
    rows = load_csv(work_dir / 'spectrum.csv')
    assert [row['class'] for row in rows] == ['complex'] * 5
    assert float(rows[0]['re']) == pytest.approx(2.298618, abs=1e-6)
    assert float(rows[0]['im']) == pytest.approx(-0.853004, abs=1e-6)
    assert 'N = 0.5 < 1' in capsys.readouterr().out


@pytest.mark.parametrize('argv', [['--bigN', '2', '--size', '8'], ['--bigN', '1.1', '--format', 'yaml']])
def test_spectrum_reproducible(tmp_path, argv):
    first, second = tmp_path / 'first', tmp_path / 'second'
    assert main(argv + ['-o', str(first)]) == 0
    assert main(argv + ['-o', str(second)]) == 0
    outputs = sorted(p.name for p in first.iterdir() if p.is_file())
    assert outputs in (['spectrum.csv'], ['spectrum.yaml'])
    for name in outputs:
        assert (first / name).read_bytes() == (second / name).read_bytes()
