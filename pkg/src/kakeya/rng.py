"""Portable seeded randomness: SplitMix64 with index-derived substreams.

Every random draw in the package comes from a SplitMix64 stream (Steele,
Lea and Flood 2014) whose seed is derived from a master seed and a tuple of
indices via ``derive_seed``.  Both the generator and the derivation are
pure 64-bit integer arithmetic, so results are bit-identical across
platforms, runs and worker counts.

Derivation: starting from ``h = seed``, each index i is folded in as
``h = mix64(h ^ mix64((i + 1) * GOLDEN))`` where mix64 is the SplitMix64
output finalizer.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *indices: int) -> int:
    h = seed & MASK64
    for i in indices:
        h = mix64(h ^ mix64((i + 1) * GOLDEN))
    return h


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection on the top bits."""
        if n < 1:
            raise ValueError("n must be positive")
        if n == 1:
            return 0
        k = (n - 1).bit_length()
        while True:
            r = self.next_u64() >> (64 - k)
            if r < n:
                return r


def parse_seed(text) -> int:
    s = int(str(text), 0)
    if not 0 <= s <= MASK64:
        raise ValueError(f"seed {text} is not an unsigned 64-bit integer")
    return s
