from pttra.cli.assemble import AssembleCommand
from pttra.cli.command import AbstractCommand, build_parser, execute
from pttra.cli.compare import CompareCommand
from pttra.cli.spectrum import SpectrumCommand
from pttra.cli.sweep import SweepCommand
from pttra.cli.wavefunction import WavefunctionCommand

__all__ = [
    "AbstractCommand",
    "AssembleCommand",
    "CompareCommand",
    "SpectrumCommand",
    "SweepCommand",
    "WavefunctionCommand",
    "build_parser",
    "execute",
]
