"""The pure-Python and compiled modular kernels must agree entry for entry."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comodules._kernels import backend_name, pure

try:
    from comodules._kernels import _fast
except ImportError:
    _fast = None

needs_fast = pytest.mark.skipif(_fast is None, reason="compiled backend not built")


def random_case(data, max_dim=5, moduli=(2, 4, 5, 12, 360, 2**31 - 1)):
    n = data.draw(st.sampled_from(moduli))
    nr = data.draw(st.integers(min_value=1, max_value=max_dim))
    nc = data.draw(st.integers(min_value=1, max_value=max_dim))
    rows = [[data.draw(st.integers(min_value=0, max_value=n - 1)) for _ in range(nc)]
            for _ in range(nr)]
    return n, rows


@needs_fast
@given(data=st.data())
@settings(max_examples=120, deadline=None)
def test_row_canonical_agrees(data):
    n, rows = random_case(data)
    nc = len(rows[0])
    # pad the way the caller (canonical_form) does
    height = max(len(rows), nc + 1)
    rows = rows + [[0] * nc for _ in range(height - len(rows))]
    hp, up = pure.row_canonical_mod([list(r) for r in rows], n)
    hf, uf = _fast.row_canonical_mod([list(r) for r in rows], n)
    assert hp == hf
    assert up == uf


@needs_fast
@given(data=st.data())
@settings(max_examples=80, deadline=None)
def test_matmul_agrees(data):
    n, a = random_case(data, max_dim=4)
    q = len(a[0])
    r = data.draw(st.integers(min_value=1, max_value=4))
    b = [[data.draw(st.integers(min_value=0, max_value=n - 1)) for _ in range(r)]
         for _ in range(q)]
    assert pure.matmul_mod(a, b, n) == _fast.matmul_mod(a, b, n)


def test_backend_is_reported():
    assert backend_name() in ("pure", "fast")
