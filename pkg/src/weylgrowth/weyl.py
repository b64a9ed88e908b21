"""Breadth-first enumeration of Weyl group elements by word length.

Each group element w is named by the coordinate vector of rho - w(rho)
over the simple roots.  These vectors are pairwise distinct across the
whole group, have nonnegative entries, and applying a simple reflection
to an element of length i-1 lands at length i or i-2, never elsewhere.
That parity fact lets the enumerator keep only the last two level sets
while generating the next one; level sizes are the growth coefficients.

Coordinates are stored as checked 64-bit integers.  Internally a level is
a lexicographically sorted array of rows; when coordinates are small
enough the rows are packed into single int64 keys, which keeps the
HA3-to-order-27 run (about 6.7 million vectors) in the tens of megabytes.
"""

from __future__ import annotations

import hashlib
import json
import os
import zipfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .algebra import GeneralizedCartanMatrix

__all__ = [
    "CheckpointMismatchError",
    "GrowthSeries",
    "LevelCheckpoint",
    "gamma_reflect",
    "enumerate_levels",
    "level_sets",
    "weyl_orbit_oracle",
    "gcm_digest",
]

CHECKPOINT_VERSION = 1

# Reflection images must stay below 2**_SAFE_BITS so the pairing dot
# products cannot wrap around; crossing the budget is a hard error.
_SAFE_BITS = 62


class CheckpointMismatchError(RuntimeError):
    """A checkpoint file does not belong to this run (version or algebra)."""


@dataclass(frozen=True)
class GrowthSeries:
    """Element counts per word length, 0..order.

    ``complete`` is True only when an empty level was reached within the
    requested window, i.e. the whole finite group has been enumerated.
    """

    coeffs: tuple[int, ...]
    complete: bool
    algebra: str = ""

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        if not cs:
            raise ValueError("a growth series has at least the length-0 count")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def total(self) -> int:
        return sum(self.coeffs)


def gcm_digest(gcm: GeneralizedCartanMatrix) -> str:
    """Stable content hash of a Cartan matrix, used to key checkpoints."""
    payload = json.dumps(gcm.to_json_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def gamma_reflect(gcm: GeneralizedCartanMatrix, gamma, mu: int) -> tuple[int, ...]:
    """Apply the simple reflection mu to the vector naming a group element.

    Only coordinate mu changes: it becomes gamma[mu] + 1 - <row mu of A,
    gamma>.  Pure integer arithmetic; applying the same reflection twice
    returns the input.
    """
    if not 0 <= mu < gcm.rank:
        raise IndexError(f"node index {mu} out of range for rank {gcm.rank}")
    coords = tuple(int(g) for g in gamma)
    if len(coords) != gcm.rank:
        raise ValueError(f"vector has length {len(coords)}, expected {gcm.rank}")
    pairing = sum(a * g for a, g in zip(gcm.entries[mu], coords))
    return coords[:mu] + (coords[mu] + 1 - pairing,) + coords[mu + 1:]


class _RowCodec:
    """Packs nonnegative coordinate rows into single int64 keys.

    Big-endian field layout makes packed keys order-isomorphic to
    lexicographic row order, so sorted keys unpack to sorted rows.
    """

    def __init__(self, rank: int):
        self.bits = 63 // rank
        self.bound = 1 << self.bits
        self.shifts = (np.arange(rank - 1, -1, -1, dtype=np.int64) * self.bits)

    def fits(self, rows: np.ndarray) -> bool:
        return rows.size == 0 or (int(rows.min()) >= 0 and int(rows.max()) < self.bound)

    def pack(self, rows: np.ndarray) -> np.ndarray:
        return (rows << self.shifts).sum(axis=1)

    def unpack(self, keys: np.ndarray) -> np.ndarray:
        return ((keys[:, None] >> self.shifts) & (self.bound - 1)).astype(np.int64)


def _void_view(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows)
    return rows.view([("", rows.dtype)] * rows.shape[1]).ravel()


def _rows_member(rows: np.ndarray, pool: np.ndarray) -> np.ndarray:
    """Boolean mask of which rows occur in pool (row order irrelevant)."""
    if len(pool) == 0 or len(rows) == 0:
        return np.zeros(len(rows), dtype=bool)
    rv = _void_view(rows)
    pv = np.sort(_void_view(pool))
    idx = np.searchsorted(pv, rv)
    clipped = np.minimum(idx, len(pv) - 1)
    return (idx < len(pv)) & (pv[clipped] == rv)


def _keys_member(keys: np.ndarray, pool_sorted: np.ndarray) -> np.ndarray:
    if len(pool_sorted) == 0:
        return np.zeros(len(keys), dtype=bool)
    idx = np.searchsorted(pool_sorted, keys)
    clipped = np.minimum(idx, len(pool_sorted) - 1)
    return (idx < len(pool_sorted)) & (pool_sorted[clipped] == keys)


def _lex_sorted(rows: np.ndarray) -> np.ndarray:
    if len(rows) < 2:
        return rows
    return rows[np.lexsort(rows.T[::-1])]


def _reflect_all(A: np.ndarray, level: np.ndarray) -> np.ndarray:
    """All rank reflections of every row, stacked."""
    rank = A.shape[0]
    pair = level @ A.T  # pair[:, mu] = <row mu of A, gamma>
    blocks = []
    for mu in range(rank):
        block = level.copy()
        block[:, mu] += 1 - pair[:, mu]
        blocks.append(block)
    return np.concatenate(blocks)


def _candidate_rows(A: np.ndarray, level: np.ndarray, workers: int) -> np.ndarray:
    if workers <= 1 or len(level) < 4096:
        return _reflect_all(A, level)
    chunks = np.array_split(level, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda chunk: _reflect_all(A, chunk), chunks))
    return np.concatenate(parts)


def _check_coordinate_budget(A: np.ndarray, level: np.ndarray) -> None:
    # New coordinate magnitude is at most (max|A| * rank + 2) * current max.
    if level.size == 0:
        return
    scale = int(np.abs(A).max()) * A.shape[0] + 2
    if int(level.max()) > (1 << _SAFE_BITS) // scale:
        raise OverflowError("coordinates exceed the checked 64-bit budget")


def _next_level(
    A: np.ndarray,
    prev2: np.ndarray,
    prev1: np.ndarray,
    codec: _RowCodec,
    index: int,
    workers: int = 1,
    history: list[np.ndarray] | None = None,
) -> np.ndarray:
    """Candidates from prev1, deduplicated within and against prev2.

    With ``history`` (all earlier levels, for debug runs) every candidate
    is checked against the full past and must only ever match level
    index-2; any other match means the two-level window assumption broke.
    Rows of the result are lexicographically sorted.
    """
    _check_coordinate_budget(A, prev1)
    cands = _candidate_rows(A, prev1, workers)
    if cands.size and int(cands.min()) < 0:
        raise RuntimeError("negative coordinate generated: enumeration invariant violated")
    if history is not None:
        uniq = _lex_sorted(np.unique(cands, axis=0))
        keep = np.ones(len(uniq), dtype=bool)
        for j, past in enumerate(history):
            hits = _rows_member(uniq, past)
            if j == index - 2:
                keep &= ~hits
            elif hits.any():
                raise RuntimeError(
                    f"dedup window violated: candidate for level {index} already in level {j}"
                )
        return uniq[keep]
    if codec.fits(cands) and codec.fits(prev2):
        keys = np.unique(codec.pack(cands))
        prev_keys = codec.pack(prev2) if len(prev2) else np.zeros(0, dtype=np.int64)
        return codec.unpack(keys[~_keys_member(keys, prev_keys)])
    uniq = np.unique(cands, axis=0)
    return _lex_sorted(uniq[~_rows_member(uniq, prev2)])


@dataclass(frozen=True)
class LevelCheckpoint:
    """Resumable state after finishing a level: the two retained sets.

    ``newer`` is the just-finished level ``level_index`` and ``older`` the
    one before it; together with the counts so far that is everything the
    enumerator needs to continue.  A level is the atomic unit; there is no
    mid-level resume.
    """

    algebra_digest: str
    level_index: int
    older: np.ndarray
    newer: np.ndarray
    coeffs: tuple[int, ...]
    complete: bool
    version: int = CHECKPOINT_VERSION

    def save(self, path) -> None:
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "wb") as fh:
            np.savez(
                fh,
                version=np.int64(self.version),
                algebra_digest=np.str_(self.algebra_digest),
                level_index=np.int64(self.level_index),
                older=self.older,
                newer=self.newer,
                coeffs=np.asarray(self.coeffs, dtype=np.int64),
                complete=np.bool_(self.complete),
            )
        os.replace(tmp, path)

    @staticmethod
    def load(path) -> "LevelCheckpoint":
        try:
            with np.load(Path(path), allow_pickle=False) as data:
                version = int(data["version"])
                if version != CHECKPOINT_VERSION:
                    raise CheckpointMismatchError(
                        f"checkpoint format version {version}, expected {CHECKPOINT_VERSION}"
                    )
                return LevelCheckpoint(
                    algebra_digest=str(data["algebra_digest"]),
                    level_index=int(data["level_index"]),
                    older=data["older"].astype(np.int64),
                    newer=data["newer"].astype(np.int64),
                    coeffs=tuple(int(c) for c in data["coeffs"]),
                    complete=bool(data["complete"]),
                    version=version,
                )
        except CheckpointMismatchError:
            raise
        except (KeyError, ValueError, OSError, zipfile.BadZipFile) as exc:
            raise CheckpointMismatchError(f"unreadable checkpoint {path}: {exc}") from exc


def enumerate_levels(
    gcm: GeneralizedCartanMatrix,
    max_order: int,
    checkpoint_path=None,
    *,
    workers: int = 1,
    full_history_dedup: bool = False,
    algebra_name: str = "",
) -> GrowthSeries:
    """Grow level sets up to max_order and count them.

    The result is a pure function of (gcm, max_order): worker count,
    checkpointing, and the debug dedup mode never change the coefficients.
    If some level comes out empty the group is finite and fully
    enumerated; the series stops at the last nonempty level and is marked
    complete.

    A checkpoint file, when given, is rewritten after every finished level
    and picked up transparently on the next call; resuming a file written
    for a different matrix raises CheckpointMismatchError.
    """
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if full_history_dedup and checkpoint_path is not None:
        raise ValueError("full-history dedup requires a fresh run, not a checkpointed one")

    A = np.asarray(gcm.entries, dtype=np.int64)
    rank = gcm.rank
    digest = gcm_digest(gcm)
    coeffs = [1]
    prev2 = np.zeros((0, rank), dtype=np.int64)
    prev1 = np.zeros((1, rank), dtype=np.int64)
    first = 1

    ckpt = Path(checkpoint_path) if checkpoint_path is not None else None
    if ckpt is not None and ckpt.exists():
        state = LevelCheckpoint.load(ckpt)
        if state.algebra_digest != digest:
            raise CheckpointMismatchError("checkpoint belongs to a different algebra")
        if state.complete and max_order >= len(state.coeffs):
            return GrowthSeries(state.coeffs, True, algebra_name)
        if max_order <= state.level_index:
            return GrowthSeries(state.coeffs[: max_order + 1], False, algebra_name)
        coeffs = list(state.coeffs)
        prev2, prev1 = state.older, state.newer
        first = state.level_index + 1

    history = [prev1.copy()] if full_history_dedup else None
    codec = _RowCodec(rank)
    complete = False
    for i in range(first, max_order + 1):
        level = _next_level(A, prev2, prev1, codec, i, workers=workers, history=history)
        if len(level) == 0:
            complete = True
            if ckpt is not None:
                LevelCheckpoint(digest, i - 1, prev2, prev1, tuple(coeffs), True).save(ckpt)
            break
        coeffs.append(len(level))
        if history is not None:
            history.append(level)
        prev2, prev1 = prev1, level
        if ckpt is not None:
            LevelCheckpoint(digest, i, prev2, prev1, tuple(coeffs), False).save(ckpt)
    return GrowthSeries(tuple(coeffs), complete, algebra_name)


def level_sets(
    gcm: GeneralizedCartanMatrix,
    max_order: int,
    *,
    full_history_dedup: bool = False,
) -> list[np.ndarray]:
    """The actual level sets, for inspection and property tests.

    Returns one (n, rank) array per level starting with the zero vector at
    level 0, using the same core as :func:`enumerate_levels`.  Stops early
    at the first empty level.
    """
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    A = np.asarray(gcm.entries, dtype=np.int64)
    codec = _RowCodec(gcm.rank)
    prev2 = np.zeros((0, gcm.rank), dtype=np.int64)
    prev1 = np.zeros((1, gcm.rank), dtype=np.int64)
    levels = [prev1.copy()]
    history = [prev1.copy()] if full_history_dedup else None
    for i in range(1, max_order + 1):
        level = _next_level(A, prev2, prev1, codec, i, history=history)
        if len(level) == 0:
            break
        levels.append(level)
        if history is not None:
            history.append(level)
        prev2, prev1 = prev1, level
    return levels


def weyl_orbit_oracle(gcm: GeneralizedCartanMatrix, max_order: int, algebra_name: str = "") -> GrowthSeries:
    """Independent growth computation: BFS over the orbit of rho.

    States are weight-basis coordinate tuples starting from all ones;
    reflection mu subtracts coordinate mu times column mu of the Cartan
    matrix.  Deduplication is against the full set of visited states, so
    this shares neither representation nor dedup logic with
    :func:`enumerate_levels`.  Python integers keep it exact at any size;
    intended for small ranks and orders.
    """
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    rank = gcm.rank
    columns = [tuple(gcm.entries[nu][mu] for nu in range(rank)) for mu in range(rank)]
    start = (1,) * rank
    seen = {start}
    frontier = [start]
    coeffs = [1]
    complete = False
    for _ in range(max_order):
        nxt = []
        for state in frontier:
            for mu in range(rank):
                c = state[mu]
                if c == 0:  # reflection fixes this state
                    continue
                image = tuple(s - c * a for s, a in zip(state, columns[mu]))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        if not nxt:
            complete = True
            break
        coeffs.append(len(nxt))
        frontier = nxt
    return GrowthSeries(tuple(coeffs), complete, algebra_name)
