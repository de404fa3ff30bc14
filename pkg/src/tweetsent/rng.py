"""SplitMix64: a tiny, portable 64-bit generator.

Used wherever the pipeline needs randomness (split shuffles, SVM sweep
order) so results do not depend on numpy or Python RNG internals.
Reference recurrence: Steele, Lea & Flood (2014), also the seeding
generator of xoshiro.
"""

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed=0):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n):
        """Integer in ``[0, n)``; plain modulo reduction (bias < n / 2**64)."""
        return self.next_u64() % n

    def shuffle(self, items):
        """In-place Fisher-Yates, walking from the last position down."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def derive_seed(seed, stream):
    """Independent 64-bit seed for a numbered sub-stream of ``seed``."""
    return SplitMix64((seed & _MASK) ^ (((stream + 1) * _GOLDEN) & _MASK)).next_u64()
