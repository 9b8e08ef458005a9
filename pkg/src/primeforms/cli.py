"""Command-line front end: range verification with checkpoint/resume,
supercongruence sweeps, ratio statistics and sieve exports.

Exit codes: 0 when everything matches published expectations (warnings
allowed), 1 on an unexpected failure (counterexample candidate), 2 on
usage or resource errors.  Every flag can be seeded from an environment
variable PRIMEFORMS_<FLAG> (dashes as underscores); explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass
from math import sqrt

from . import __version__, congruence
from .conjectures import REGISTRY, RunContext, verify_range
from .quadform import X_GT_Y_GT_0, FormSpec, ratio_stats
from .sieve import CoverageError, build

CHECKPOINT_EVERY = 10_000

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _env(name: str, default=None):
    return os.environ.get(f"PRIMEFORMS_{name.upper().replace('-', '_')}", default)


def _env_int(name: str, default=None):
    raw = _env(name)
    return default if raw is None else int(raw)


def _atomic_write(path: str, text: str) -> None:
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _fingerprint(rid: str, lo: int, hi: int, sieve_bound: int) -> str:
    key = f"{rid}|{lo}|{hi}|{sieve_bound}"
    return hashlib.sha256(key.encode()).hexdigest()[:16]


# -- verify -------------------------------------------------------------------


@dataclass
class Checkpoint:
    id: str
    lo: int
    hi: int
    sieve_bound: int
    completed_through: int
    failures: list[int]
    fingerprint: str
    witnesses: dict

    def dump(self, path: str) -> None:
        _atomic_write(path, json.dumps({
            "id": self.id, "lo": self.lo, "hi": self.hi,
            "sieve_bound": self.sieve_bound,
            "completed_through": self.completed_through,
            "failures": self.failures, "fingerprint": self.fingerprint,
            "witnesses": {str(k): list(v) if isinstance(v, tuple) else v
                          for k, v in self.witnesses.items()},
            "version": __version__,
        }, indent=1))

    @classmethod
    def load(cls, path: str) -> "Checkpoint":
        with open(path) as fh:
            raw = json.load(fh)
        wit = {int(k): tuple(v) if isinstance(v, list) else v
               for k, v in raw.get("witnesses", {}).items()}
        return cls(raw["id"], raw["lo"], raw["hi"], raw["sieve_bound"],
                   raw["completed_through"], raw["failures"],
                   raw["fingerprint"], wit)


_WORKER_CTX: RunContext | None = None
_WORKER_BOUND = 0


def _worker_init(sieve_bound: int) -> None:
    global _WORKER_CTX, _WORKER_BOUND
    if _WORKER_CTX is None or _WORKER_BOUND < sieve_bound:
        _WORKER_CTX = RunContext(build(sieve_bound))
        _WORKER_BOUND = sieve_bound


def _worker_chunk(args):
    rid, lo, hi = args
    record = REGISTRY[rid]
    rep = verify_range(record, lo, hi, _WORKER_CTX, max_witnesses=5)
    return rep.failures, rep.witness_samples


def _parallel_verify(record, lo, hi, ctx, workers, checkpoint: Checkpoint | None,
                     checkpoint_path: str | None):
    import multiprocessing as mp
    from concurrent.futures import ProcessPoolExecutor

    global _WORKER_CTX, _WORKER_BOUND
    _WORKER_CTX, _WORKER_BOUND = ctx, ctx.bound  # inherited on fork
    start = lo if checkpoint is None else checkpoint.completed_through + 1
    seed = [] if checkpoint is None else list(checkpoint.failures)
    seed_wit = {} if checkpoint is None else dict(checkpoint.witnesses)
    span = hi - start + 1
    chunk = max(1, (span + workers - 1) // workers)
    chunks = [(record.id, a, min(a + chunk - 1, hi))
              for a in range(start, hi + 1, chunk)]
    try:
        mp_ctx = mp.get_context("fork")
    except ValueError:
        mp_ctx = mp.get_context()
    t0 = time.perf_counter()
    failures_by_chunk: dict[int, list[int]] = {}
    witnesses_by_chunk: dict[int, dict] = {}
    with ProcessPoolExecutor(max_workers=workers, mp_context=mp_ctx,
                             initializer=_worker_init, initargs=(ctx.bound,)) as pool:
        futs = {pool.submit(_worker_chunk, c): i for i, c in enumerate(chunks)}
        done_prefix = 0
        from concurrent.futures import as_completed

        for fut in as_completed(futs):
            i = futs[fut]
            failures_by_chunk[i], witnesses_by_chunk[i] = fut.result()
            while done_prefix < len(chunks) and done_prefix in failures_by_chunk:
                done_prefix += 1
            if checkpoint_path:
                merged = seed + [f for j in range(done_prefix)
                                 for f in failures_by_chunk[j]]
                wit = dict(seed_wit)
                for j in range(done_prefix):
                    for k, v in sorted(witnesses_by_chunk[j].items()):
                        if len(wit) < 5:
                            wit[k] = v
                cp = Checkpoint(record.id, lo, hi, ctx.bound,
                                chunks[done_prefix - 1][2] if done_prefix else start - 1,
                                merged, _fingerprint(record.id, lo, hi, ctx.bound), wit)
                cp.dump(checkpoint_path)
    failures = seed + [f for i in range(len(chunks)) for f in failures_by_chunk[i]]
    witnesses: dict[int, object] = dict(seed_wit)
    for i in range(len(chunks)):
        for k, v in sorted(witnesses_by_chunk[i].items()):
            if len(witnesses) < 5:
                witnesses[k] = v
    elapsed = (time.perf_counter() - t0) * 1000
    from .conjectures.base import VerificationReport

    return VerificationReport(
        id=record.id, lo=lo, hi=hi, failures=failures,
        expected=record.expected.in_range(lo, hi),
        matched=record.expected.matches(failures, lo, hi),
        elapsed_ms=elapsed, witness_samples=witnesses)


def _report_csv(report, sieve_bound: int) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["id", "lo", "hi", "failure", "matched", "sieve_bound", "version"])
    if report.failures:
        for f in report.failures:
            writer.writerow([report.id, report.lo, report.hi, f,
                             report.matched, sieve_bound, __version__])
    else:
        writer.writerow([report.id, report.lo, report.hi, "",
                         report.matched, sieve_bound, __version__])
    return buf.getvalue()


def cmd_verify(args) -> int:
    rids = args.id
    unknown = [r for r in rids if r not in REGISTRY]
    if unknown:
        print(f"unknown conjecture ids: {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE

    checkpoint = None
    if args.resume:
        if not args.checkpoint or not os.path.exists(args.checkpoint):
            print("--resume requires an existing --checkpoint file", file=sys.stderr)
            return EXIT_USAGE
        checkpoint = Checkpoint.load(args.checkpoint)
        if len(rids) != 1 or rids[0] != checkpoint.id:
            print("checkpoint belongs to a different conjecture id", file=sys.stderr)
            return EXIT_USAGE

    status = EXIT_OK
    for rid in rids:
        record = REGISTRY[rid]
        lo = args.lo if args.lo is not None else record.domain.min_n
        hi = args.to if args.to is not None else record.desk_bound()
        if hi < lo:
            print(f"{rid}: empty range after normalization ({lo}..{hi})",
                  file=sys.stderr)
            return EXIT_USAGE
        sieve_bound = args.sieve_bound or max(record.sieve_need(hi), 10**6)
        if checkpoint is not None:
            expect = _fingerprint(rid, lo, hi, sieve_bound)
            if checkpoint.fingerprint != expect:
                print("checkpoint fingerprint mismatch: config changed "
                      f"(checkpoint {checkpoint.fingerprint}, config {expect})",
                      file=sys.stderr)
                return EXIT_USAGE
        try:
            ctx = RunContext(build(sieve_bound))
        except MemoryError:
            print(f"cannot allocate sieve of bound {sieve_bound}", file=sys.stderr)
            return EXIT_USAGE
        try:
            if args.workers > 1:
                report = _parallel_verify(record, lo, hi, ctx, args.workers,
                                          checkpoint, args.checkpoint)
            else:
                start = seed = seed_wit = None
                if checkpoint is not None:
                    start = checkpoint.completed_through + 1
                    seed = checkpoint.failures
                    seed_wit = checkpoint.witnesses
                progress = None
                if args.checkpoint:
                    def progress(done, failures, witnesses, rid=rid, lo=lo,
                                 hi=hi, sb=sieve_bound):
                        Checkpoint(rid, lo, hi, sb, done, list(failures),
                                   _fingerprint(rid, lo, hi, sb),
                                   dict(witnesses)).dump(args.checkpoint)
                report = verify_range(record, lo, hi, ctx,
                                      progress=progress,
                                      progress_step=CHECKPOINT_EVERY,
                                      start=start, seed_failures=seed,
                                      seed_witnesses=seed_wit)
        except CoverageError as exc:
            if args.checkpoint:
                print(f"{rid}: aborted on coverage error; checkpoint retained",
                      file=sys.stderr)
            print(f"{rid}: {exc} (try --sieve-bound)", file=sys.stderr)
            return EXIT_USAGE
        if args.checkpoint:
            Checkpoint(rid, lo, hi, sieve_bound, hi, report.failures,
                       _fingerprint(rid, lo, hi, sieve_bound),
                       dict(report.witness_samples)).dump(args.checkpoint)
        payload = report.to_dict(sieve_bound, __version__)
        if args.report:
            if args.format == "csv":
                _atomic_write(args.report, _report_csv(report, sieve_bound))
            else:
                _atomic_write(args.report, json.dumps(payload, indent=1))
        marker = "ok" if report.matched else "MISMATCH"
        print(f"{rid}: [{lo},{hi}] failures={len(report.failures)} "
              f"expected={report.expected if report.expected is not None else 'max-rule'} "
              f"{marker} ({report.elapsed_ms:.0f} ms)")
        if not report.matched:
            status = EXIT_MISMATCH
    return status


# -- congruence -----------------------------------------------------------------


def cmd_congruence(args) -> int:
    rids = args.id or sorted(congruence.SUPERCONGRUENCES)
    unknown = [r for r in rids if r not in congruence.SUPERCONGRUENCES]
    if unknown:
        print(f"unknown congruence ids: {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    if args.primes_to < 3:
        print("empty prime range", file=sys.stderr)
        return EXIT_USAGE
    table = build(max(args.primes_to + 64, 10_000))
    primes = table.primes_in(3, args.primes_to)
    tally = congruence.SkipTally()
    lines = []
    fails = 0
    for verdict in congruence.sweep(rids, primes, table):
        tally.record(verdict)
        if verdict.status == "fail":
            fails += 1
        row = {
            "id": verdict.id, "p": verdict.p, "case": verdict.case,
            "verdict": verdict.status,
            "lhs": [d.lhs for d in verdict.details if d.lhs is not None],
            "rhs": [d.rhs for d in verdict.details if d.rhs is not None],
        }
        lines.append(json.dumps(row))
    text = "\n".join(lines) + "\n"
    if args.report:
        _atomic_write(args.report, text)
    else:
        sys.stdout.write(text)
    print(f"# skip tally: {json.dumps(tally.counts)}", file=sys.stderr)
    print(f"# failures: {fails}", file=sys.stderr)
    return EXIT_MISMATCH if fails else EXIT_OK


# -- stats ------------------------------------------------------------------------


STAT_ROWS = (
    ("x^2+y^2", FormSpec(1, 0, 1, X_GT_Y_GT_0), (4, frozenset({1})), 1,
     1 + sqrt(2), "1+sqrt(2)"),
    ("x^2+y^2", FormSpec(1, 0, 1, X_GT_Y_GT_0), (4, frozenset({1})), 2,
     4.5, "9/2"),
    ("x^2+xy+y^2", FormSpec(1, 1, 1, X_GT_Y_GT_0), (3, frozenset({1})), 1,
     1 + sqrt(3), "1+sqrt(3)"),
    ("x^2+xy+y^2", FormSpec(1, 1, 1, X_GT_Y_GT_0), (3, frozenset({1})), 2,
     52 / 9, "52/9"),
    ("x^2+3xy+y^2", FormSpec(1, 3, 1, X_GT_Y_GT_0), (5, frozenset({1, 4})), 1,
     1 + sqrt(5), "1+sqrt(5)"),
)


def cmd_stats(args) -> int:
    N = args.to
    table = build(max(N + 64, 10**6))
    rows = []
    for label, form, filt, e, target, tname in STAT_ROWS:
        rs = ratio_stats(table, N, form, filt, e)
        rel = abs(rs.ratio_float - target) / target
        rows.append({
            "N": N, "form": label, "exponent": e,
            "numerator_sum": rs.numerator_sum,
            "denominator_sum": rs.denominator_sum,
            "ratio": rs.ratio_float, "target": tname,
            "relative_error": rel,
        })
        flag = "" if rel <= args.tolerance else "  WARNING: outside tolerance"
        print(f"N={N} {label} e={e}: {rs.numerator_sum}/{rs.denominator_sum} "
              f"= {rs.ratio_float:.6f} target {tname} rel_err {rel:.4%}{flag}")
    if args.report:
        _atomic_write(args.report, json.dumps(rows, indent=1))
    return EXIT_OK


# -- sieve export ------------------------------------------------------------------


def cmd_sieve(args) -> int:
    if args.action != "export":
        print("supported action: export", file=sys.stderr)
        return EXIT_USAGE
    table = build(max(args.to, 2))
    try:
        values = table.members(args.kind, args.to)
    except (ValueError, CoverageError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    text = "\n".join(str(v) for v in values) + "\n"
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- list --------------------------------------------------------------------------


def cmd_list(args) -> int:
    prefix = args.prefix or ""
    for rid in sorted(REGISTRY):
        if not rid.startswith(prefix):
            continue
        r = REGISTRY[rid]
        bound = f" verified-to={r.paper_bound}" if r.paper_bound else ""
        print(f"{rid}: {r.summary}")
        print(f"    domain: {r.domain.describe()}; expected: "
              f"{r.expected.describe()}{bound}")
        if r.notes:
            print(f"    note: {r.notes}")
    ids = [rid for rid in sorted(congruence.SUPERCONGRUENCES)
           if rid.startswith(prefix)] if prefix else sorted(congruence.SUPERCONGRUENCES)
    for rid in ids:
        conj = congruence.SUPERCONGRUENCES[rid]
        labels = ", ".join(d.label for d in conj.displays)
        print(f"{rid}: supercongruence case table ({labels})")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeforms",
        description="verify conjectures on primes, practical numbers and "
                    "quadratic forms against their published exception sets")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list registry entries")
    p.add_argument("--prefix", default=_env("prefix"))
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", help="verify conjecture records over a range")
    p.add_argument("--id", action="append", required=True)
    p.add_argument("--from", dest="lo", type=int, default=_env_int("from"))
    p.add_argument("--to", type=int, default=_env_int("to"))
    p.add_argument("--sieve-bound", type=int, default=_env_int("sieve-bound"))
    p.add_argument("--workers", type=int, default=_env_int("workers", 1))
    p.add_argument("--checkpoint", default=_env("checkpoint"))
    p.add_argument("--resume", action="store_true")
    p.add_argument("--report", default=_env("report"))
    p.add_argument("--format", choices=("json", "csv"),
                   default=_env("format", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("congruence", help="sweep supercongruence case tables")
    p.add_argument("--id", action="append")
    p.add_argument("--primes-to", type=int, default=_env_int("primes-to", 2000))
    p.add_argument("--report", default=_env("report"))
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("stats", help="quadratic-form ratio statistics")
    p.add_argument("--to", type=int, default=_env_int("to", 10**6))
    p.add_argument("--tolerance", type=float, default=0.02)
    p.add_argument("--report", default=_env("report"))
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sieve", help="export sieve-derived member lists")
    p.add_argument("action", choices=("export",))
    p.add_argument("--kind", required=True,
                   choices=("primes", "practical", "set-s", "set-t"))
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--out", default=_env("out"))
    p.set_defaults(func=cmd_sieve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if getattr(args, "workers", 1) < 1:
        print("worker count must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except KeyboardInterrupt:
        print("interrupted; checkpoints (if any) were written", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
