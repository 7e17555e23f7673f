from pttra.util import (
    create_csv,
    create_yaml,
    file_create,
    format_float,
    interprocess_lock_file,
    load_csv,
    load_yaml,
    make_directory,
)


def test_interprocess_lock_file(tmp_path):
    lock = interprocess_lock_file(tmp_path / 'spectrum.csv', tmp_path / 'lock')
    assert lock == tmp_path / 'lock' / 'spectrum.csv.lock'


def test_format_float():
    assert format_float(0.1) == '0.10000000000000001'
    assert float(format_float(1.0 / 3.0)) == 1.0 / 3.0
    assert format_float(2) == '2'


def test_file_create(tmp_path):
    path = tmp_path / 'a.txt'
    file_create(path, 'hello')
    assert path.read_text() == 'hello'
    file_create(path, 'locked', tmp_path / 'lock')
    assert path.read_text() == 'locked'
    assert (tmp_path / 'lock').is_dir()


def test_create_and_load_yaml(tmp_path):
    path = tmp_path / 'a.yaml'
    content = {'size': 5, 'values': [[1.5, 0.0], [2.0, -0.25]], 'note': None}
    create_yaml(path, content, tmp_path / 'lock')
    assert load_yaml(path) == content
    # key order is kept
    assert list(load_yaml(path)) == ['size', 'values', 'note']


def test_create_and_load_csv(tmp_path):
    path = tmp_path / 'a.csv'
    create_csv(path, ['index', 're', 'class'], [[0, 0.1, 'real'], [1, None, 'complex']], comments=['N = 1.0'])
    lines = path.read_text().splitlines()
    assert lines[0] == '# N = 1.0'
    assert lines[1] == 'index,re,class'
    assert lines[2] == '0,0.10000000000000001,real'
    assert lines[3] == '1,,complex'
    rows = load_csv(path)
    assert rows == [{'index': '0', 're': '0.10000000000000001', 'class': 'real'}, {'index': '1', 're': '', 'class': 'complex'}]


def test_make_directory(tmp_path):
    d = tmp_path / 'a' / 'b'
    make_directory(d)
    assert d.is_dir()
    make_directory(d)
    assert d.is_dir()
