import pytest

from pttra.basis import ExpansionMode
from pttra.hamiltonian import PotentialSpec, is_hermitian, phase_factor
from pttra.util import ModeError, ParameterError


def test_phase_factor():
    assert phase_factor(1.0) == -1.0 + 0.0j
    assert phase_factor(2.0) == 1.0 + 0.0j
    assert phase_factor(3.0 + 1e-12) == -1.0 + 0.0j
    a = phase_factor(1.1)
    assert a.real == pytest.approx(-0.951057, abs=1e-6)
    assert a.imag == pytest.approx(-0.309017, abs=1e-6)
    assert abs(phase_factor(0.5) - 1.0j) <= 1e-15
    with pytest.raises(ParameterError):
        phase_factor(0.0)
    with pytest.raises(ParameterError):
        phase_factor(-1.0)


def test_is_hermitian():
    assert is_hermitian(1.0)
    assert is_hermitian(4.0)
    assert not is_hermitian(1.1)
    assert not is_hermitian(2.5)


def test_potential_spec():
    pot = PotentialSpec(N=2)
    assert pot.N == 2.0
    assert pot.mode is ExpansionMode.corrected
    assert pot.phase == 1.0
    assert pot.mass == 1.0
    assert pot.hermitian
    assert pot.annotations() == []
    assert pot.to_dict() == {'N': 2.0, 'mode': 'corrected', 'phase': [1.0, 0.0]}
    assert PotentialSpec(N=1, mode='paper').mode is ExpansionMode.paper_faithful


def test_potential_annotations():
    notes = PotentialSpec(N=0.5).annotations()
    assert len(notes) == 2
    assert notes[0].startswith('N = 0.5 < 1')
    assert notes[1] == 'non-integer N: complex symmetric, non-Hermitian matrix'
    assert PotentialSpec(N=1.1).annotations() == ['non-integer N: complex symmetric, non-Hermitian matrix']


def test_invalid_potential():
    with pytest.raises(ParameterError):
        PotentialSpec(N=0.0)
    with pytest.raises(ModeError):
        PotentialSpec(N=1.1, mode=ExpansionMode.paper_faithful)
    with pytest.raises(ValueError):
        PotentialSpec(N=1.0, mode='exact')
