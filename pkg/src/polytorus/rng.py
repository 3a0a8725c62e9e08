"""Deterministic counter-based random streams.

Every stochastic routine in the package draws from a Philox generator keyed
by ``(seed, stream)`` with the chunk index placed in the second counter word.
Sample ``i`` of a stream is therefore a pure function of
``(seed, stream, chunk, offset)``: results are bitwise reproducible for a
fixed chunk size no matter how chunks are scheduled, and there is no global
mutable RNG state anywhere.
"""

from __future__ import annotations

import numpy as np

# stream ids; never renumber, golden tests pin the outputs
STREAM_MC = 1
STREAM_RADEMACHER = 2
STREAM_STEINHAUS = 3
STREAM_SEARCH = 4
STREAM_LP = 5
STREAM_TRIAL = 6

#: samples per chunk in every chunked Monte Carlo loop
CHUNK = 1 << 14


def generator(seed: int, stream: int, chunk: int = 0) -> np.random.Generator:
    """Generator for one chunk of one named stream.

    Distinct ``(seed, stream, chunk)`` triples yield non-overlapping Philox
    counter ranges as long as a chunk consumes fewer than 2**64 blocks,
    which it always does here.
    """
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    key = np.array([seed, stream], dtype=np.uint64)
    counter = np.array([0, chunk, 0, 0], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key, counter=counter))


def chunks(total: int, size: int = CHUNK):
    """Yield ``(chunk_index, count)`` covering ``total`` samples."""
    done = 0
    index = 0
    while done < total:
        take = min(size, total - done)
        yield index, take
        done += take
        index += 1


def uniform_angles(seed: int, count: int, dims: int, stream: int = STREAM_MC,
                   chunk: int = 0) -> np.ndarray:
    """Uniform angles in [0, 2pi), shape ``(count, dims)``."""
    gen = generator(seed, stream, chunk)
    return gen.random((count, dims)) * (2.0 * np.pi)


def rademacher_signs(seed: int, count: int, trial: int = 0) -> np.ndarray:
    """Vector of +-1 signs; entry ``i`` depends only on ``(seed, trial, i)``.

    The whole prefix is drawn in one call so that the sign at index ``i``
    never depends on how many signs the caller asked for.
    """
    gen = generator(seed, STREAM_RADEMACHER, trial)
    return (gen.integers(0, 2, size=count, dtype=np.int64) * 2 - 1).astype(np.float64)


def steinhaus_phases(seed: int, count: int, trial: int = 0) -> np.ndarray:
    """Uniform unimodular complex values, one per index."""
    gen = generator(seed, STREAM_STEINHAUS, trial)
    return np.exp(2j * np.pi * gen.random(count))
