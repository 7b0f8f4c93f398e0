import numpy as np

from trapmc.seeds import mix64, replicate_rng


def test_mix64_deterministic():
    assert mix64(12345, 7) == mix64(12345, 7)
    assert 0 <= mix64(12345, 7) < 1 << 64


def test_mix64_distinct_streams():
    seeds = {mix64(99, i) for i in range(10000)}
    assert len(seeds) == 10000
    # different masters give different streams
    assert mix64(1, 0) != mix64(2, 0)


def test_mix64_avalanche():
    # flipping one input bit should flip roughly half the output bits
    base = mix64(0xDEADBEEF, 0)
    flips = []
    for bit in range(64):
        other = mix64(0xDEADBEEF ^ (1 << bit), 0)
        flips.append(bin(base ^ other).count("1"))
    assert 16 <= np.mean(flips) <= 48


def test_replicate_rng_reproducible():
    a = replicate_rng(7, 3).random(5)
    b = replicate_rng(7, 3).random(5)
    c = replicate_rng(7, 4).random(5)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)
