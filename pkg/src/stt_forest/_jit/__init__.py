"""Compiled kernels mirroring the reference classes on flat int64 arrays.

Absent values are ``-1``.  Every kernel here has a pure-Python counterpart in
the parent package; the test-suite cross-checks them state for state.
"""
