"""
Command line front end and the structure file codec.
"""

from .formats import dump_structure, dumps_structure, load_structure, loads_structure, read_structure, write_structure
from .main import build_parser, main, run

__all__ = [
    'dump_structure',
    'dumps_structure',
    'load_structure',
    'loads_structure',
    'read_structure',
    'write_structure',
    'build_parser',
    'main',
    'run',
]
