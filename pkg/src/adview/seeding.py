"""Deterministic RNG derivation.

Every random draw in the package flows from one user seed through a named
subsystem stream, so two subsystems never consume the same PCG64 stream and
repeated runs are bit-identical.
"""

import numpy as np

STREAM_SPLIT = 0
STREAM_FOREST = 1
STREAM_ANN = 2
STREAM_SYNTHETIC = 3


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """PCG64 generator for a subsystem stream derived from the user seed."""
    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.PCG64(seq))
