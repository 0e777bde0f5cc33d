"""Deterministic seedable randomness with forkable streams.

Every randomized routine in the package draws from a SeedStream.  Results
must be exact functions of (seed, stream id), never of wall clock, hash
randomization, or thread timing, so the generator is spelled out here
instead of delegating to random.Random.
"""

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a fixed 64-bit bijective scramble."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SeedStream:
    """SplitMix64 sequence; fork(i) derives disjoint child streams."""

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int, stream: int = 0):
        self.seed = (mix64(seed) ^ mix64((stream + 1) * _GOLDEN)) & MASK64
        self._state = self.seed

    def next64(self) -> int:
        self._state = (self._state + _GOLDEN) & MASK64
        return mix64(self._state)

    def randrange(self, n: int) -> int:
        """Uniform draw from [0, n), unbiased by rejection."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        if n == 1:
            return 0
        limit = (MASK64 + 1) - (MASK64 + 1) % n
        while True:
            r = self.next64()
            if r < limit:
                return r % n

    def fork(self, i: int) -> "SeedStream":
        """Child stream i; children are disjoint from each other and the parent."""
        return SeedStream(self.seed, stream=i + 1)
