from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hfpc import _scan_py
from helpers import all_weight_w

try:
    from hfpc import _scan as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled extension not built"
)


def test_gosper_enumerates_fixed_weight():
    for n, w in ((6, 3), (8, 2), (10, 5)):
        got = []
        v = _scan_py.least_geq_with_weight(0, n, w)
        while v is not None and v < (1 << n):
            got.append(v)
            v = _scan_py.gosper_next(v)
        assert got == all_weight_w(n, w)


@given(st.integers(1, 14), st.data())
def test_least_geq_with_weight(n, data):
    w = data.draw(st.integers(0, n))
    lo = data.draw(st.integers(0, (1 << n) - 1))
    got = _scan_py.least_geq_with_weight(lo, n, w)
    brute = [x for x in range(lo, 1 << n) if bin(x).count("1") == w]
    assert got == (brute[0] if brute else None)


@needs_compiled
def test_backends_agree_two_generator():
    for fam in (0, 1, 2):
        for t in (1, 2, 3, 4):
            span = 1 << (4 * t)
            assert _scan_py.scan_two_generator(fam, t, 0, span) == compiled.scan_two_generator(fam, t, 0, span)
    # subranges and first-only mode
    assert _scan_py.scan_two_generator(1, 4, 0x1234, 0xFE10) == compiled.scan_two_generator(1, 4, 0x1234, 0xFE10)
    assert _scan_py.scan_two_generator(2, 4, 0, 1 << 16, True) == compiled.scan_two_generator(2, 4, 0, 1 << 16, True)


@needs_compiled
def test_backends_agree_quaternion():
    for t in (1, 3, 5):
        span = 1 << (4 * t)
        assert _scan_py.scan_quaternion(t, 0, span) == compiled.scan_quaternion(t, 0, span)
    assert _scan_py.scan_quaternion(3, 100, 3000) == compiled.scan_quaternion(3, 100, 3000)
    assert _scan_py.scan_quaternion(5, 0, 1 << 20, True) == compiled.scan_quaternion(5, 0, 1 << 20, True)


@needs_compiled
def test_backend_helpers_agree():
    for lo, n, w in ((0, 10, 4), (517, 12, 6), (4095, 12, 6), (1, 8, 0)):
        assert _scan_py.least_geq_with_weight(lo, n, w) == compiled.least_geq_with_weight(lo, n, w)
    for v in (1, 3, 0b1010100, 0b1111):
        assert _scan_py.gosper_next(v) == compiled.gosper_next(v)


def test_backend_selection_env(monkeypatch):
    import importlib

    import hfpc._backend as backend_mod

    monkeypatch.setenv("HFP_PURE", "1")
    importlib.reload(backend_mod)
    assert not backend_mod.COMPILED
    assert backend_mod.BACKEND_NAME == "pure-python"
    monkeypatch.delenv("HFP_PURE")
    importlib.reload(backend_mod)
