"""Seedable, splittable random streams.

Every stream is a Philox4x64-10 counter-based generator (Random123 family)
keyed by the 128-bit value ``(seed, stream_id)``.  Selecting a stream is O(1)
and two keys never share state.  Sub-streams reuse the parent key and put a
64-bit sub-stream label in the most significant word of the 256-bit counter,
so they are disjoint from the parent sequence for any realistic draw count.

All variates are derived from raw 64-bit words ``w`` so that sequences can be
reproduced outside numpy:

* ``uniform01 = (w >> 11) * 2**-53``                      in [0, 1)
* ``normal01  = Phi^{-1}(((w >> 11) + 0.5) * 2**-53)``   inverse-CDF transform
* ``bernoulli_half = w >> 63``                            top bit

``counter`` counts consumed 64-bit words.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

__all__ = ["StreamKey", "RandomStream", "new_stream"]

_MASK64 = (1 << 64) - 1
_TWO_M53 = 2.0 ** -53


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


@dataclass(frozen=True)
class StreamKey:
    """Identity of a random stream.

    ``substream`` is 0 for streams handed out directly and nonzero for
    streams derived with :meth:`RandomStream.spawn`.
    """

    seed: int
    stream_id: int = 0
    substream: int = 0

    def __post_init__(self):
        for name in ("seed", "stream_id", "substream"):
            v = getattr(self, name)
            if not (0 <= int(v) <= _MASK64):
                raise ValueError(f"{name} must be a 64-bit unsigned integer, got {v}")

    def as_dict(self) -> dict:
        return {"seed": self.seed, "stream_id": self.stream_id, "substream": self.substream}


class RandomStream:
    """A sequential source of random 64-bit words bound to one :class:`StreamKey`.

    A stream is owned by one task at a time; parallel work must use distinct
    stream ids (or :meth:`spawn`).
    """

    def __init__(self, key: StreamKey):
        self.key = key
        self.counter = 0
        self._bitgen = np.random.Philox(
            key=np.array([key.seed, key.stream_id], dtype=np.uint64),
            counter=np.array([0, 0, 0, key.substream], dtype=np.uint64),
        )

    def __repr__(self):
        k = self.key
        return (f"RandomStream(seed={k.seed}, stream_id={k.stream_id}, "
                f"substream={k.substream}, counter={self.counter})")

    def raw(self, size: int) -> np.ndarray:
        """Next ``size`` raw 64-bit words as a uint64 array."""
        size = int(size)
        if size < 0:
            raise ValueError("size must be nonnegative")
        out = np.asarray(self._bitgen.random_raw(size), dtype=np.uint64)
        self.counter += size
        return out

    def _scalar_or_array(self, arr, size):
        return float(arr[0]) if size is None else arr

    def uniform01(self, size: int | None = None):
        """Uniform draws on the half-open interval [0, 1)."""
        w = self.raw(1 if size is None else size)
        u = (w >> np.uint64(11)).astype(np.float64) * _TWO_M53
        return self._scalar_or_array(u, size)

    def normal01(self, size: int | None = None):
        """Standard normal draws by inverse-CDF of a midpoint 53-bit uniform."""
        w = self.raw(1 if size is None else size)
        u = ((w >> np.uint64(11)).astype(np.float64) + 0.5) * _TWO_M53
        z = ndtri(u)
        return self._scalar_or_array(z, size)

    def bernoulli_half(self, size: int | None = None):
        """0 or 1 with probability 1/2 each (top bit of a raw word)."""
        w = self.raw(1 if size is None else size)
        b = (w >> np.uint64(63)).astype(np.int64)
        return int(b[0]) if size is None else b

    def integers(self, k: int, size: int | None = None):
        """Uniform integers on {0, ..., k-1} via ``floor(k * uniform01)``."""
        u = self.uniform01(1 if size is None else size)
        v = np.minimum(np.floor(u * k).astype(np.int64), k - 1)
        return int(v[0]) if size is None else v

    def spawn(self, label: int) -> "RandomStream":
        """Derive an independent child stream and advance this stream by one word.

        The child sub-stream id mixes the parent sub-stream, the parent
        counter and ``label``, so repeated spawns never collide.
        """
        h = _splitmix64(self.key.substream)
        h = _splitmix64(h ^ (self.counter & _MASK64))
        h = _splitmix64(h ^ (int(label) & _MASK64))
        self.raw(1)
        # substream 0 is reserved for the parent sequence
        h = h or 1
        return RandomStream(StreamKey(self.key.seed, self.key.stream_id, h))


def new_stream(key: StreamKey | None = None, *, seed: int | None = None,
               stream_id: int = 0) -> RandomStream:
    """Return a fresh stream positioned at counter 0.

    Either pass a :class:`StreamKey` or ``seed=`` / ``stream_id=`` keywords.
    """
    if key is None:
        if seed is None:
            raise ValueError("either key or seed is required")
        key = StreamKey(int(seed), int(stream_id))
    return RandomStream(key)
