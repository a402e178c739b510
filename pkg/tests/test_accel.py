import os
import subprocess
import sys

import numpy as np
import pytest

from vcblock import _kernels, brute
from vcblock._accel import HAVE_NUMBA
from vcblock.exact import opt_value
from vcblock.generators import random_graph


def test_pure_bodies_agree_with_exhaustive(rng):
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(1, 12)), 0.4)
        size, mask = _kernels.PURE["_min_cover"](list(g.masks()), g.n, (1 << g.n) - 1, g.n + 1)
        assert size == brute.opt(g)
        assert g.is_cover([v for v in range(g.n) if mask >> v & 1])


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba unavailable or disabled")
def test_compiled_matches_pure(rng):
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(1, 14)), 0.35)
        arr = np.array(g.masks(), dtype=np.int64)
        full = (1 << g.n) - 1
        jit = _kernels._min_cover(arr, g.n, np.int64(full), g.n + 1)
        pure = _kernels.PURE["_min_cover"](list(g.masks()), g.n, full, g.n + 1)
        assert tuple(map(int, jit)) == tuple(pure)
        opt = opt_value(g)
        assert int(_kernels._forced_mask(arr, g.n, opt)) == _kernels.PURE["_forced_mask"](list(g.masks()), g.n, opt)
        free = np.arange(g.n, dtype=np.int64)
        jt = _kernels._blocking_table(arr, g.n, opt, free, g.n)
        pt = _kernels.PURE["_blocking_table"](list(g.masks()), g.n, opt, list(range(g.n)), g.n)
        assert tuple(map(int, jt)) == tuple(pt)


def test_large_graphs_use_pure_path():
    from vcblock.graph import Graph

    g = Graph.cycle(70)
    assert opt_value(g) == 35


def test_flag_disables_compilation_without_changing_output():
    code = (
        "from vcblock._accel import HAVE_NUMBA; print(HAVE_NUMBA);"
        "from vcblock.cli import main; main(['verify', 'blocking'])"
    )
    outs = []
    for flag in ("1", ""):
        env = dict(os.environ, VCBLOCK_DISABLE_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
        assert res.returncode == 0, res.stderr
        outs.append(res.stdout.split("\n", 1))
    assert outs[0][0] == "False"
    assert outs[0][1] == outs[1][1]
