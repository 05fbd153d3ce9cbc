"""Breadth-first construction of right- and left-concatenated primes.

Generation 1 is the seed set {2, 3, 5, 7}. Generation n+1 is obtained by
attaching every block digit to every member of generation n (on the right or
on the left) and keeping the primes. The process stops at the first empty
generation: after generation 8 on the right and generation 24 on the left.
"""

from __future__ import annotations

import csv
import enum
import hashlib
import io
import json
import os
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ._parallel import chunked, flatten, ordered_map
from .digits import DigitString, concat_left, concat_right
from .primality import Kind, is_prime

ALGORITHM_VERSION = "1"
SEED_SET = (2, 3, 5, 7)
GENERATION_CAP = 100
CACHE_ENV = "CHIRAL_CACHE_DIR"


class Direction(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


_BLOCKS = {
    Direction.RIGHT: (1, 3, 7, 9),
    Direction.LEFT: (1, 2, 3, 4, 5, 6, 7, 8, 9),
}


class GenerationCapExceeded(RuntimeError):
    pass


class CacheWriteError(OSError):
    pass


@dataclass(frozen=True)
class Generation:
    direction: Direction
    index: int
    members: Tuple[DigitString, ...]
    # number of (member, block) extensions tested to build this generation
    candidates: int = 0

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item) -> bool:
        return DigitString(item) in set(self.members)

    def strings(self) -> List[str]:
        return [m.digits for m in self.members]

    def to_dict(self) -> dict:
        return {"n": self.index, "primes": self.strings()}


@dataclass(frozen=True)
class TerminationReport:
    direction: Direction
    last_nonempty_generation: int
    total_count: int
    counts_per_generation: Tuple[int, ...]
    maximal_set: Tuple[DigitString, ...]
    # size of the first empty generation's candidate pool, all composite
    final_candidates: int = 0

    def to_dict(self) -> dict:
        return {
            "direction": self.direction.value,
            "last_nonempty_generation": self.last_nonempty_generation,
            "total_count": self.total_count,
            "counts_per_generation": list(self.counts_per_generation),
            "maximal_set": [m.digits for m in self.maximal_set],
            "final_candidates": self.final_candidates,
        }


def blocks(direction: Direction) -> Tuple[int, ...]:
    return _BLOCKS[Direction(direction)]


def seed_generation(direction: Direction) -> Generation:
    direction = Direction(direction)
    return Generation(direction, 1, tuple(DigitString(p) for p in SEED_SET))


def _extend(member: DigitString, direction: Direction) -> List[DigitString]:
    out = []
    for d in _BLOCKS[direction]:
        cand = concat_right(member, d) if direction is Direction.RIGHT else concat_left(d, member)
        verdict = is_prime(cand)
        if verdict.kind is Kind.PROBABLE_PRIME:
            raise RuntimeError(f"{cand} is beyond the deterministic primality range")
        if verdict.kind is Kind.PRIME:
            out.append(cand)
    return out


def _extend_chunk(chunk: Sequence[DigitString], direction: Direction) -> List[DigitString]:
    return flatten(_extend(m, direction) for m in chunk)


def next_generation(g: Generation, workers: int = 1) -> Generation:
    """Extend every member of ``g`` by every block digit and keep the primes."""
    direction = g.direction
    chunks = chunked(g.members, workers * 4) if workers > 1 else [g.members]
    found = flatten(ordered_map(partial(_extend_chunk, direction=direction), chunks, workers))
    return Generation(
        direction,
        g.index + 1,
        tuple(sorted(set(found))),
        candidates=len(g.members) * len(_BLOCKS[direction]),
    )


def enumerate_all(
    direction: Direction, workers: int = 1, cap: int = GENERATION_CAP
) -> Tuple[List[Generation], TerminationReport]:
    """Run the recursion from the seed until a generation comes out empty."""
    g = seed_generation(direction)
    generations = [g]
    while True:
        nxt = next_generation(g, workers)
        if not nxt.members:
            break
        if nxt.index >= cap:
            raise GenerationCapExceeded(
                f"{g.direction.value} enumeration still growing at generation {nxt.index} "
                f"({len(nxt)} members)"
            )
        generations.append(nxt)
        g = nxt
    return generations, _report(generations, nxt.candidates)


def _report(generations: Sequence[Generation], final_candidates: int) -> TerminationReport:
    last = generations[-1]
    counts = tuple(len(g) for g in generations)
    return TerminationReport(
        direction=last.direction,
        last_nonempty_generation=last.index,
        total_count=sum(counts),
        counts_per_generation=counts,
        maximal_set=last.members,
        final_candidates=final_candidates,
    )


def generation_counts(direction: Direction, workers: int = 1) -> List[Tuple[int, int]]:
    """(n, |C_D[n]|) pairs: the data behind the per-generation histograms."""
    generations, _ = enumerate_all(direction, workers)
    return [(g.index, len(g)) for g in generations]


# -- persistence -------------------------------------------------------------


def content_hash(direction: Direction) -> str:
    header = {
        "algorithm_version": ALGORITHM_VERSION,
        "blocks": list(blocks(direction)),
        "direction": Direction(direction).value,
        "seed_set": list(SEED_SET),
    }
    return hashlib.sha256(json.dumps(header, sort_keys=True).encode()).hexdigest()


def to_json_dict(generations: Sequence[Generation], report: TerminationReport, seed: int = 0) -> dict:
    direction = report.direction
    return {
        "direction": direction.value,
        "seed": str(seed),
        "seed_set": [str(p) for p in SEED_SET],
        "blocks": [str(d) for d in blocks(direction)],
        "algorithm_version": ALGORITHM_VERSION,
        "content_hash": content_hash(direction),
        "generations": [g.to_dict() for g in generations],
        "termination": report.to_dict(),
    }


def from_json_dict(data: dict) -> Tuple[List[Generation], TerminationReport]:
    direction = Direction(data["direction"])
    gens = [
        Generation(direction, int(g["n"]), tuple(DigitString(p) for p in g["primes"]))
        for g in data["generations"]
    ]
    t = data["termination"]
    report = TerminationReport(
        direction=direction,
        last_nonempty_generation=int(t["last_nonempty_generation"]),
        total_count=int(t["total_count"]),
        counts_per_generation=tuple(int(c) for c in t["counts_per_generation"]),
        maximal_set=tuple(DigitString(p) for p in t["maximal_set"]),
        final_candidates=int(t.get("final_candidates", 0)),
    )
    return gens, report


def to_csv(generations: Sequence[Generation]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["generation", "prime"])
    for g in generations:
        for p in g.members:
            writer.writerow([g.index, p.digits])
    return buf.getvalue()


def default_cache_path(direction: Direction) -> Optional[Path]:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"chiral-{Direction(direction).value}.json"


def load_cache(path: Path, direction: Direction) -> Optional[Tuple[List[Generation], TerminationReport]]:
    """Cached enumeration at ``path``, or None if missing, unreadable or stale."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError):
        return None
    if data.get("content_hash") != content_hash(direction) or data.get("direction") != Direction(direction).value:
        return None
    try:
        return from_json_dict(data)
    except (KeyError, TypeError, ValueError):
        return None


def save_cache(path: Path, generations: Sequence[Generation], report: TerminationReport, seed: int = 0) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(to_json_dict(generations, report, seed), indent=1))
    tmp.replace(path)


def enumerate_cached(
    direction: Direction, cache: Optional[Path] = None, workers: int = 1, seed: int = 0
) -> Tuple[List[Generation], TerminationReport]:
    """``enumerate_all`` backed by a JSON cache file when a path is available.

    Raises ``CacheWriteError`` if the cache file cannot be written.
    """
    direction = Direction(direction)
    path = Path(cache) if cache else default_cache_path(direction)
    if path is not None:
        hit = load_cache(path, direction)
        if hit is not None:
            return hit
    result = enumerate_all(direction, workers)
    if path is not None:
        try:
            save_cache(path, *result, seed=seed)
        except OSError as e:
            raise CacheWriteError(f"cannot write cache {path}: {e}") from e
    return result

