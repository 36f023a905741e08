import random

import numpy as np
import pytest

import tdpoly.kernels as kernels
from tdpoly.graph import cycle_graph, path_graph, random_connected_graph, star_graph
from tdpoly.kernels import active_backend, first_dominating_size, size_counts

from helpers import naive_counts, naive_gamma


def masks_of(g):
    """Open-neighborhood bitmasks with labels compressed to bit positions."""
    bit = {v: i for i, v in enumerate(g.vertices)}
    out = np.zeros(g.order, dtype=np.int64)
    for v in g.vertices:
        for w in g.neighbors(v):
            out[bit[v]] |= 1 << bit[w]
    return out


def test_active_backend_resolution(monkeypatch):
    monkeypatch.setenv(kernels.BACKEND_ENV_VAR, "numpy")
    assert active_backend() == "numpy"
    monkeypatch.setenv(kernels.BACKEND_ENV_VAR, "numba")
    assert active_backend() == "numba"
    monkeypatch.setenv(kernels.BACKEND_ENV_VAR, "auto")
    assert active_backend() in ("numba", "numpy")
    monkeypatch.delenv(kernels.BACKEND_ENV_VAR, raising=False)
    assert active_backend() in ("numba", "numpy")
    monkeypatch.setenv(kernels.BACKEND_ENV_VAR, "cuda")
    with pytest.raises(ValueError):
        active_backend()


def test_backend_numba_without_numba_errors(monkeypatch):
    monkeypatch.setattr(kernels, "_HAS_NUMBA", False)
    monkeypatch.setenv(kernels.BACKEND_ENV_VAR, "numba")
    with pytest.raises(RuntimeError):
        active_backend()
    monkeypatch.setenv(kernels.BACKEND_ENV_VAR, "auto")
    assert active_backend() == "numpy"


def test_counts_match_naive_reference():
    for g in (path_graph(4), cycle_graph(5), star_graph(6)):
        got = size_counts(masks_of(g))
        assert got.tolist() == naive_counts(g)


def test_backends_bit_identical(monkeypatch):
    graphs = [path_graph(6), cycle_graph(7), star_graph(5)]
    rng = random.Random(11)
    graphs += [
        random_connected_graph(rng.randint(2, 9), rng.uniform(0.1, 0.8), rng.randrange(2**32))
        for _ in range(12)
    ]
    for g in graphs:
        nbr = masks_of(g)
        n = g.order
        required = rng.randrange(1 << n)
        forbidden = rng.randrange(1 << n) & ~required
        al_masks = np.array([rng.randrange(1 << n)], dtype=np.int64)
        al_mins = np.array([rng.randint(0, 2)], dtype=np.int64)
        monkeypatch.setenv(kernels.BACKEND_ENV_VAR, "numba")
        jit_plain = size_counts(nbr)
        jit_cond = size_counts(nbr, required, forbidden, al_masks, al_mins)
        jit_first = first_dominating_size(nbr)
        monkeypatch.setenv(kernels.BACKEND_ENV_VAR, "numpy")
        np_plain = size_counts(nbr)
        np_cond = size_counts(nbr, required, forbidden, al_masks, al_mins)
        np_first = first_dominating_size(nbr)
        assert jit_plain.tolist() == np_plain.tolist()
        assert jit_cond.tolist() == np_cond.tolist()
        assert jit_first == np_first


def test_first_dominating_size_matches_naive():
    for g in (path_graph(5), cycle_graph(6), star_graph(4)):
        assert first_dominating_size(masks_of(g)) == naive_gamma(g)


def test_first_dominating_size_none():
    # two isolated vertices: no neighborhood ever covers them
    assert first_dominating_size(np.zeros(2, dtype=np.int64)) == -1


def test_empty_graph_counts():
    got = size_counts(np.zeros(0, dtype=np.int64))
    assert got.tolist() == [1]
    assert first_dominating_size(np.zeros(0, dtype=np.int64)) == -1


def test_kernel_bit_limit():
    with pytest.raises(ValueError):
        size_counts(np.zeros(kernels.MAX_KERNEL_BITS + 1, dtype=np.int64))


def test_mismatched_condition_arrays_rejected():
    with pytest.raises(ValueError):
        size_counts(
            masks_of(path_graph(3)),
            atleast_masks=np.array([1], dtype=np.int64),
            atleast_mins=np.array([1, 1], dtype=np.int64),
        )


def test_required_and_forbidden_filters():
    g = path_graph(4)
    nbr = masks_of(g)
    # force vertex 3 into every counted set: {1,2,3} and {0,1,2,3} remain
    got = size_counts(nbr, required=(1 << 3))
    assert got.tolist() == [0, 0, 0, 1, 1]
    # forbid vertex 0: {1,2} and {1,2,3} remain
    assert size_counts(nbr, forbidden=1).tolist() == [0, 0, 1, 1, 0]
