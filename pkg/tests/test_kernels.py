import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rank_length
from ncnn import _pykernels, kernels

try:
    from ncnn import _kernels
except ImportError:  # extension not built
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled extension not built")


@st.composite
def signed_images(draw):
    n = draw(st.integers(1, 9))
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return tuple(s * x for s, x in zip(signs, perm))


edges = st.lists(st.tuples(st.integers(-8, 8), st.integers(-8, 8)).filter(lambda e: e[0] < e[1]),
                 max_size=12)


@given(signed_images())
def test_python_length_matches_rank(images):
    assert _pykernels.reflection_length(images) == rank_length(images)


@needs_ext
@given(signed_images())
def test_backends_agree_on_length(images):
    assert _kernels.reflection_length(list(images)) == _pykernels.reflection_length(images)


@needs_ext
@given(edges)
def test_backends_agree_on_edges(es):
    assert _kernels.has_crossing(es) == _pykernels.has_crossing(es)
    assert _kernels.has_nesting(es) == _pykernels.has_nesting(es)


def test_edge_predicates():
    assert _pykernels.has_crossing([(1, 3), (2, 4)])
    assert not _pykernels.has_crossing([(1, 4), (2, 3)])
    assert _pykernels.has_nesting([(1, 4), (2, 3)])
    assert not _pykernels.has_nesting([(1, 2), (2, 3)])


def test_selected_backend():
    assert kernels.BACKEND in ("cython", "python")
    if _kernels is not None and os.environ.get("NCNN_PURE") is None:
        assert kernels.BACKEND == "cython"


def test_pure_fallback_by_environment():
    env = dict(os.environ, NCNN_PURE="1")
    code = "import ncnn.kernels as k; from ncnn.cli import main; print(k.BACKEND); main(['count', '--family', 'D', '--rank', '4'])"
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.split() == ["python", "50"]
