import logging
import os
from pathlib import Path

import numpy as np
import pytest

from pttra.hamiltonian import BasisSpec, PotentialSpec, assemble


@pytest.fixture(scope="session")
def root_dir():
    return Path(__file__).resolve().parent


@pytest.fixture(scope="session")
def data_dir(root_dir):
    return root_dir.joinpath('test_data')


@pytest.fixture
def config_yaml(data_dir):
    return data_dir.joinpath('config.yml')


@pytest.fixture
def work_dir(tmp_path):
    return tmp_path.joinpath('work')


@pytest.fixture
def cd_work(tmp_path):
    cwd = Path.cwd().resolve()
    os.chdir(tmp_path)
    yield tmp_path
    os.chdir(cwd)


@pytest.fixture
def rng():
    return np.random.default_rng(20)


@pytest.fixture
def random_symmetric(rng):
    def _random_symmetric(size):
        a = rng.standard_normal((size, size))
        return a + a.T

    return _random_symmetric


@pytest.fixture(scope="session")
def harmonic_matrix():
    def _harmonic_matrix(size=8):
        return assemble(BasisSpec(lam=np.sqrt(2.0), size=size), PotentialSpec(N=1.0))

    return _harmonic_matrix


@pytest.fixture(autouse=True)
def no_output_env(monkeypatch):
    monkeypatch.delenv('PTTRA_OUTPUT_DIR', raising=False)
    monkeypatch.delenv('LOG_LEVEL', raising=False)


@pytest.fixture(autouse=True)
def reset_logger():
    yield
    logger = logging.getLogger('pttra')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
