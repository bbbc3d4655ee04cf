"""Line classes, flats, flags and reductions of vector configurations.

All index sets refer to rows of a GaleConfiguration.  Flats are closures
in the rational linear matroid on the rows; a flat's sigma is the sum of
its member rows, and a flag is non-splitting when each sigma escapes the
span of the previous flat.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .config import GaleConfiguration
from .errors import (
    DiscforgeError,
    NotHomogeneous,
    NotIrreducible,
    PyramidInput,
)
from .lattice import IntMatrix, integer_solve, rank, row_hermite


@dataclass(frozen=True)
class Flat:
    """A closed subset of rows with its rank and member sum."""

    indices: tuple[int, ...]
    rank: int
    sigma: tuple[int, ...]


@dataclass(frozen=True)
class ReduceResult:
    """Reduced configuration plus provenance of every output row."""

    config: GaleConfiguration
    merged: tuple[tuple[int, ...], ...]
    removed_splitting: tuple[tuple[int, ...], ...]
    removed_zero: tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[tuple[int, ...], ...]
    ranks: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.parts)

    @property
    def rho(self) -> int:
        return sum(self.ranks) - self.s


def _primitive_direction(v) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    w = [x // g for x in v]
    lead = next(x for x in w if x)
    if lead < 0:
        w = [-x for x in w]
    return tuple(w)


def collinear_classes(cfg: GaleConfiguration) -> list[tuple[int, ...]]:
    """Partition of the nonzero rows by line through the origin.

    Classes are ordered by smallest member; zero rows are not classified
    and are available through cfg.zero_rows().
    """
    buckets: dict[tuple[int, ...], list[int]] = {}
    for i in range(cfg.n):
        row = cfg.row(i)
        if any(row):
            buckets.setdefault(_primitive_direction(row), []).append(i)
    return sorted((tuple(v) for v in buckets.values()), key=lambda t: t[0])


def splitting_lines(cfg: GaleConfiguration) -> list[tuple[int, ...]]:
    """Collinear classes whose member sum vanishes."""
    return [
        cls for cls in collinear_classes(cfg) if not any(cfg.sigma(cls))
    ]


def reduce(cfg: GaleConfiguration) -> ReduceResult:
    """Drop splitting classes and zero rows; merge each remaining class
    into its member sum.  Output rows are ordered by smallest original
    member."""
    merged: list[tuple[int, ...]] = []
    rows: list[tuple[int, ...]] = []
    removed: list[tuple[int, ...]] = []
    for cls in collinear_classes(cfg):
        s = cfg.sigma(cls)
        if any(s):
            merged.append(cls)
            rows.append(s)
        else:
            removed.append(cls)
    config = GaleConfiguration(
        IntMatrix(rows),
        labels=[cfg.labels[cls[0]] for cls in merged] or None,
    )
    return ReduceResult(
        config=config,
        merged=tuple(merged),
        removed_splitting=tuple(removed),
        removed_zero=cfg.zero_rows(),
    )


def is_degenerate(cfg: GaleConfiguration) -> bool:
    """Does reduction drop the rank?"""
    red = reduce(cfg).config
    return rank(red.matrix) < rank(cfg.matrix)


def _span_rank(cfg: GaleConfiguration, indices) -> int:
    rows = [cfg.row(i) for i in indices]
    return rank(IntMatrix(rows)) if rows else 0


def _in_span(cfg: GaleConfiguration, indices, vec) -> bool:
    rows = [cfg.row(i) for i in indices]
    base = rank(IntMatrix(rows)) if rows else 0
    return rank(IntMatrix(rows + [tuple(vec)])) == base


def closure(cfg: GaleConfiguration, indices) -> Flat:
    """Smallest flat containing the given rows: every row inside their
    rational span, zero rows included."""
    core = sorted(set(indices))
    members = [
        i for i in range(cfg.n) if _in_span(cfg, core, cfg.row(i))
    ]
    return Flat(
        indices=tuple(members),
        rank=_span_rank(cfg, members),
        sigma=cfg.sigma(members),
    )


def flats_of_rank(cfg: GaleConfiguration, k: int) -> list[Flat]:
    """All rank-k flats, ordered by index tuple."""
    if k < 0 or k > rank(cfg.matrix):
        raise ValueError("flat rank out of range")
    if k == 0:
        return [closure(cfg, ())]
    seen: dict[tuple[int, ...], Flat] = {}
    for sub in combinations(range(cfg.n), k):
        if _span_rank(cfg, sub) != k:
            continue
        fl = closure(cfg, sub)
        seen.setdefault(fl.indices, fl)
    return [seen[key] for key in sorted(seen)]


def is_nonsplitting_flag(cfg: GaleConfiguration, flats) -> bool:
    """Check that flats form a strictly increasing flag with each sigma
    outside the previous flat's span."""
    prev: tuple[int, ...] = ()
    prev_set: set[int] = set()
    for j, fl in enumerate(flats):
        if fl.rank != j + 1:
            return False
        if not prev_set <= set(fl.indices):
            return False
        if closure(cfg, fl.indices).indices != fl.indices:
            return False
        if fl.sigma != cfg.sigma(fl.indices):
            return False
        if _in_span(cfg, prev, fl.sigma):
            return False
        prev = fl.indices
        prev_set = set(fl.indices)
    return True


def find_nonsplitting_flag(cfg: GaleConfiguration, k: int):
    """Depth-first search for a non-splitting flag of length k.

    Returns a tuple of Flats (empty tuple for k = 0) or None.  The search
    extends each flat by the closure of one extra row, trying candidate
    flats in index order, so the first witness is deterministic.
    """
    if k == 0:
        return ()

    def extensions(fl_indices):
        cands: dict[tuple[int, ...], Flat] = {}
        inside = set(fl_indices)
        for i in range(cfg.n):
            if i in inside:
                continue
            nxt = closure(cfg, tuple(fl_indices) + (i,))
            cands.setdefault(nxt.indices, nxt)
        return [cands[key] for key in sorted(cands)]

    def dfs(chain):
        depth = len(chain)
        if depth == k:
            return tuple(chain)
        base = chain[-1].indices if chain else ()
        for cand in extensions(base):
            if cand.rank != depth + 1:
                continue
            if _in_span(cfg, base, cand.sigma):
                continue
            found = dfs(chain + [cand])
            if found is not None:
                return found
        return None

    return dfs([])


def restrict_to_span(cfg: GaleConfiguration, indices) -> GaleConfiguration:
    """Re-express the selected rows in a basis of the lattice they
    generate; the result has full column rank equal to the flat rank."""
    indices = sorted(indices)
    rows = [cfg.row(i) for i in indices]
    basis = row_hermite(IntMatrix(rows))
    coords = []
    for r in rows:
        x = integer_solve(basis, r)
        if x is None:
            raise AssertionError("generator must lie in its own row lattice")
        coords.append(x)
    return GaleConfiguration(
        IntMatrix(coords), labels=[cfg.labels[i] for i in indices]
    )


def decompose(cfg: GaleConfiguration, is_defect) -> Decomposition:
    """Greedy split into maximal homogeneous non-defect flats.

    ``is_defect`` is a callback taking a full-rank GaleConfiguration and
    returning a bool; parts are found top rank first, lexicographically
    smallest first, each a flat of the remaining configuration.
    """
    if not cfg.is_homogeneous():
        raise NotHomogeneous("decomposition needs a homogeneous configuration")
    if cfg.zero_rows():
        raise PyramidInput("zero rows cannot be decomposed")
    if any(len(cls) > 1 for cls in collinear_classes(cfg)):
        raise NotIrreducible("configuration has a collinear pair")
    remaining = list(range(cfg.n))
    parts: list[tuple[int, ...]] = []
    ranks: list[int] = []
    while remaining:
        sub = GaleConfiguration(
            IntMatrix([cfg.row(i) for i in remaining]),
            labels=[cfg.labels[i] for i in remaining],
        )
        top = rank(sub.matrix)
        found = None
        for r in range(top, 1, -1):
            for fl in flats_of_rank(sub, r):
                if not fl.indices or any(fl.sigma):
                    continue
                part_cfg = restrict_to_span(sub, fl.indices)
                if not is_defect(part_cfg):
                    found = fl
                    break
            if found is not None:
                break
        if found is None:
            raise DiscforgeError(
                "no homogeneous non-defect flat found; decomposition failed"
            )
        parts.append(tuple(remaining[i] for i in found.indices))
        ranks.append(found.rank)
        picked = set(found.indices)
        remaining = [v for i, v in enumerate(remaining) if i not in picked]
    return Decomposition(parts=tuple(parts), ranks=tuple(ranks))
