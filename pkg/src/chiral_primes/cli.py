"""Command-line front end.

json and csv output are stable machine interfaces (numbers as decimal
strings); text output is for people and may change.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from . import analysis, anomalous, enumerator
from .digits import DigitString, compact, parse
from .enumerator import Direction
from .primality import DEFAULT_ROUNDS, DEFAULT_SEED, is_prime

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CACHE = 3


@dataclass
class RunConfig:
    command: str
    direction: Optional[Direction] = None
    seed: int = DEFAULT_SEED
    rounds: int = DEFAULT_ROUNDS
    threads: int = 1
    format: str = "text"
    cache_path: Optional[Path] = None
    k_max: int = 0
    budget: int = 0

    def __post_init__(self):
        if self.rounds < 1:
            raise ValueError("--rounds must be >= 1")
        if self.threads < 1:
            raise ValueError("--threads must be >= 1")


def _number(text: str) -> DigitString:
    try:
        return parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed number {text!r}") from None


def _number_list(text: str) -> List[DigitString]:
    return [_number(t) for t in text.split(",")]


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed gap list {text!r}") from None


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = -1
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") or not text else text + "\n")


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


# -- commands -------------------------------------------------------------------


def _enumeration(cfg: RunConfig):
    return enumerator.enumerate_cached(cfg.direction, cfg.cache_path, cfg.threads, cfg.seed)


def cmd_enumerate(cfg: RunConfig, args, out) -> int:
    gens, report = _enumeration(cfg)
    if args.max_gen is not None:
        gens = [g for g in gens if g.index <= args.max_gen]
    if cfg.format == "json":
        _emit(out, _json(enumerator.to_json_dict(gens, report, cfg.seed)))
    elif cfg.format == "csv":
        _emit(out, enumerator.to_csv(gens))
    else:
        for g in gens:
            _emit(out, f"C_{cfg.direction.value[0].upper()}[{g.index}] ({len(g)}): " + " ".join(g.strings()))
        _emit(out, f"last nonempty generation: {report.last_nonempty_generation}")
        _emit(out, f"total primes: {report.total_count}")
        maxset = [m.digits for m in report.maximal_set]
        label = "unique maximal prime" if len(maxset) == 1 else f"{len(maxset)} maximal primes"
        _emit(out, f"{label}: {' '.join(maxset)}")
    return EXIT_OK


def cmd_figure_data(cfg: RunConfig, args, out) -> int:
    gens, _ = _enumeration(cfg)
    rows = [(g.index, len(g)) for g in gens]
    if cfg.format == "json":
        _emit(out, _json([{"n": n, "count": c} for n, c in rows]))
    elif cfg.format == "csv":
        _emit(out, _csv([("n", "count")] + rows))
    else:
        peak = max(c for _, c in rows)
        for n, c in rows:
            _emit(out, f"{n:>3} {c:>5}  " + "#" * max(1, round(40 * c / peak)))
    return EXIT_OK


def cmd_chain(cfg: RunConfig, args, out) -> int:
    if args.anomalous:
        ok, report = anomalous.is_anomalously_left_truncatable(
            anomalous.GappedNumber.parse(args.number.digits), cfg.rounds, cfg.seed
        )
    else:
        report = analysis.truncation_chain(args.number, cfg.direction, cfg.rounds, cfg.seed)
    if cfg.format == "json":
        _emit(out, _json(report.to_dict()))
    elif cfg.format == "csv":
        rows = [("length", "value", "kind")]
        rows += [(len(c), c.digits, v.kind.value) for c, v in zip(report.chain, report.verdicts)]
        _emit(out, _csv(rows))
    else:
        width = max(len(c) for c in report.chain)
        for c, v in zip(report.chain, report.verdicts):
            _emit(out, f"{c.digits:>{width}}  {v}")
    return EXIT_OK if report.all_prime else EXIT_FAILED


def cmd_stats(cfg: RunConfig, args, out) -> int:
    stats = analysis.digit_stats(args.number)
    prefixes = analysis.prime_prefixes(args.number)
    if cfg.format == "json":
        data = stats.to_dict()
        data["prime_prefixes"] = [p.digits for _, p in prefixes]
        _emit(out, _json(data))
    elif cfg.format == "csv":
        rows = [("digit", "count")] + [(d, stats.per_digit_counts.get(d, 0)) for d in range(10)]
        _emit(out, _csv(rows))
    else:
        _emit(out, f"number:  {stats.subject}  ({len(stats.subject)} digits)")
        for parity, ds in (("even", (0, 2, 4, 6, 8)), ("odd", (1, 3, 5, 7, 9))):
            cells = "  ".join(f"{d}:{stats.per_digit_counts.get(d, 0)}" for d in ds)
            total = stats.even_count if parity == "even" else stats.odd_count
            _emit(out, f"{parity:<5} {total:>3}   {cells}")
        _emit(out, f"longest even run: {stats.longest_even_run or '-'} (length {stats.longest_even_run_length})")
        _emit(out, "prime prefixes:  " + (" ".join(p.digits for _, p in prefixes) or "-"))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args, out) -> int:
    if args.blocks is not None:
        gaps = args.gaps if args.gaps is not None else []
        try:
            g = anomalous.GappedNumber(tuple(args.blocks), tuple(gaps))
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        label, verdict = g.compact(), anomalous.block_concat_verify(g, cfg.rounds, cfg.seed)
        number = g.digits
    elif args.number is not None:
        number = args.number
        label, verdict = compact(number), is_prime(number, cfg.rounds, cfg.seed)
    else:
        print("error: verify needs a NUMBER or --blocks", file=sys.stderr)
        return EXIT_USAGE
    if cfg.format == "json":
        _emit(out, _json({"number": number.digits, "digits": len(number), "verdict": verdict.to_dict()}))
    elif cfg.format == "csv":
        _emit(out, _csv([("number", "kind", "divisor"), (number.digits, verdict.kind.value, verdict.divisor or "")]))
    else:
        _emit(out, f"{label}: {verdict}")
    return EXIT_OK if verdict.is_prime else EXIT_FAILED


def _render_hits(cfg: RunConfig, hits, out) -> None:
    if cfg.format == "json":
        for h in hits:
            _emit(out, json.dumps(h.to_dict()))
    elif cfg.format == "csv":
        rows = [("k", "number", "kind")] + [(h.k, h.number.digits.digits, h.verdict.kind.value) for h in hits]
        _emit(out, _csv(rows))
    else:
        for h in hits:
            _emit(out, f"k={h.k:<6} {h.number.compact()}  {h.verdict}")


def cmd_gap_search(cfg: RunConfig, args, out) -> int:
    hits = anomalous.gap_search(args.prefix, args.suffix, cfg.k_max, cfg.rounds, cfg.seed, cfg.threads)
    _render_hits(cfg, hits, out)
    return EXIT_OK


def cmd_extend(cfg: RunConfig, args, out) -> int:
    hits = anomalous.anomalous_extend(args.number, cfg.k_max, cfg.rounds, cfg.seed, cfg.threads)
    _render_hits(cfg, hits, out)
    return EXIT_OK


def cmd_band_search(cfg: RunConfig, args, out) -> int:
    cfg.direction = Direction.LEFT
    gens, _ = _enumeration(cfg)
    pool = [g for g in gens if g.index <= args.max_block_len]
    try:
        result = anomalous.band_search(
            pool, args.bands, args.min_block_len, cfg.k_max, cfg.budget, cfg.rounds, cfg.seed, cfg.threads
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    summary = {
        "examined": result.examined,
        "pool_size": result.pool_size,
        "exhausted": result.exhausted,
        "findings": len(result.findings),
    }
    if cfg.format == "json":
        _emit(out, result.to_jsonl())
        print(json.dumps(summary), file=sys.stderr)
    elif cfg.format == "csv":
        rows = [("blocks", "gaps", "number", "kind")]
        rows += [
            (" ".join(b.digits for b in f.number.blocks), " ".join(map(str, f.number.gaps)),
             f.number.digits.digits, f.verdict.kind.value)
            for f in result.findings
        ]
        _emit(out, _csv(rows))
    else:
        for f in result.findings:
            _emit(out, f"{f.number.compact():<24} {f.verdict}")
        _emit(out, "  ".join(f"{k}={v}" for k, v in summary.items()))
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=_natural, default=DEFAULT_SEED, help="seed for random Miller-Rabin bases")
    common.add_argument("--rounds", type=_natural, default=DEFAULT_ROUNDS, help="random MR rounds above 3.3e24")
    common.add_argument("--threads", type=_natural, default=1, help="worker processes")
    common.add_argument("--cache", type=Path, default=None, help="enumeration cache file")

    direction = argparse.ArgumentParser(add_help=False)
    direction.add_argument("--direction", type=Direction, choices=list(Direction), required=True)

    p = argparse.ArgumentParser(prog="chiral-primes", description="Chiral (left/right) prime concatenations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common, direction], help="all generations and the termination report")
    s.add_argument("--max-gen", type=_natural, default=None)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("figure-data", parents=[common, direction], help="(n, count) pairs per generation")
    s.set_defaults(func=cmd_figure_data)

    s = sub.add_parser("chain", parents=[common], help="truncation chain of a number")
    s.add_argument("number", type=_number)
    s.add_argument("--direction", type=Direction, choices=list(Direction), default=Direction.LEFT)
    s.add_argument("--anomalous", action="store_true", help="strip zeros uncovered by left truncation")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("stats", parents=[common], help="digit statistics and prime prefixes")
    s.add_argument("number", type=_number)
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("verify", parents=[common], help="primality of a number or a gapped block construction")
    s.add_argument("number", type=_number, nargs="?")
    s.add_argument("--blocks", type=_number_list, default=None, help="comma-separated blocks, e.g. 13,9")
    s.add_argument("--gaps", type=_int_list, default=None, help="comma-separated zero-run lengths, e.g. 5")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gap-search", parents=[common], help="k with prefix.0_k.suffix prime")
    s.add_argument("--prefix", type=_number, required=True)
    s.add_argument("--suffix", type=_number, required=True)
    s.add_argument("--max-gap", type=_natural, required=True)
    s.set_defaults(func=cmd_gap_search)

    s = sub.add_parser("extend", parents=[common], help="k with 1.0_k.NUMBER prime")
    s.add_argument("number", type=_number)
    s.add_argument("--max-gap", type=_natural, required=True)
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("band-search", parents=[common], help="gapped primes made of left-concatenated blocks")
    s.add_argument("--bands", type=_natural, default=2)
    s.add_argument("--min-block-len", type=_natural, default=2)
    s.add_argument("--max-block-len", type=_natural, default=4)
    s.add_argument("--max-gap", type=_natural, default=10)
    s.add_argument("--budget", type=_natural, default=10**6)
    s.set_defaults(func=cmd_band_search)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            direction=getattr(args, "direction", None),
            seed=args.seed,
            rounds=args.rounds,
            threads=args.threads,
            format=args.format,
            cache_path=args.cache,
            k_max=getattr(args, "max_gap", 0),
            budget=getattr(args, "budget", 0),
        )
    except ValueError as e:
        parser.error(str(e))
    try:
        return args.func(cfg, args, out)
    except enumerator.CacheWriteError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CACHE


if __name__ == "__main__":
    sys.exit(main())
