"""Simplicial sets, necklaces and straightening.

Spaces and reports come back as plain dicts in the same JSON layout the
``sset`` command line tool prints.
"""

import json

from . import _core
from ._core import Inconclusive, InvalidInput

__all__ = [
    "Inconclusive",
    "InvalidInput",
    "build",
    "corpus_names",
    "mapping_complex",
    "cube_oracle",
    "is_isomorphic",
    "homology",
    "q_complex",
    "compare",
    "check_fibration",
    "check_certificate",
    "validate",
    "run_acceptance",
    "cell_counts",
]


def _dump(x):
    return x if isinstance(x, str) else json.dumps(x)


def build(base):
    return json.loads(_core.build(base))


def corpus_names():
    return list(_core.corpus_names())


def mapping_complex(base, source, target, dim_bound=4, bead_bound=-1, allow_partial=False):
    return json.loads(_core.mapping_complex(base, source, target, dim_bound, bead_bound, allow_partial))


def cube_oracle(n, i, j, bound=8):
    return json.loads(_core.cube_oracle(n, i, j, bound))


def is_isomorphic(left, right):
    return _core.is_isomorphic(left, right)


def homology(base, bound=4, reduced=False):
    return json.loads(_core.homology(base, bound, reduced))


def q_complex(n, bound=4, method="necklace"):
    return json.loads(_core.q_complex(n, bound, method))


def compare(base, source, target, dim_bound=4):
    return json.loads(_core.compare(base, source, target, dim_bound))


def check_fibration(simplicial_map, kind, bound=4):
    return json.loads(_core.check_fibration(_dump(simplicial_map), kind, bound))


def check_certificate(cert):
    return json.loads(_core.check_certificate(_dump(cert)))


def validate(sset):
    return json.loads(_core.validate_sset(_dump(sset)))


def run_acceptance(only=(), seed=2024):
    return json.loads(_core.run_acceptance(list(only), seed))


def cell_counts(sset):
    cells = sset["cells"]
    return [len(cells[k]) for k in sorted(cells, key=int)]
