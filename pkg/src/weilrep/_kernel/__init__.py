"""Counting kernel with a compiled fast path.

The Cython extension is preferred when it was built; otherwise the numpy
implementation in counting.py is used.  Both expose the same two functions
and agree bit-for-bit (see tests and benchmarks).
"""

from .counting import build_tables_gf2 as _build_py
from .counting import count_fibers as _count_py

python_impl = (_build_py, _count_py)

try:
    from ._fastcount import build_tables_gf2, count_fibers
    IMPLEMENTATION = "cython"
except ImportError:
    build_tables_gf2, count_fibers = _build_py, _count_py
    IMPLEMENTATION = "python"
