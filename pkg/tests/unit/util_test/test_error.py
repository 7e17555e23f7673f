from pttra.util import (
    ConfigError,
    ContractError,
    DegenerateRecursionError,
    ModeError,
    NumericError,
    ParameterError,
    TraError,
)


def test_hierarchy():
    for error in (ParameterError, ModeError, ConfigError, ContractError, NumericError, DegenerateRecursionError):
        assert issubclass(error, TraError)
    assert issubclass(ModeError, ValueError)
    assert issubclass(ConfigError, ParameterError)
    assert issubclass(DegenerateRecursionError, NumericError)
    assert issubclass(NumericError, ArithmeticError)


def test_numeric_error():
    error = NumericError('did not converge', partial=[1.0], diagnostics={'sweeps': 250})
    assert str(error) == 'did not converge (sweeps=250)'
    assert error.partial == [1.0]
    plain = NumericError('did not converge')
    assert str(plain) == 'did not converge'
    assert plain.partial is None
    assert plain.diagnostics == {}
