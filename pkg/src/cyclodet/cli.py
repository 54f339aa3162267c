"""Command-line front end.

Exit codes: 0 when no record failed, 1 when any record failed, 2 on usage or
I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import theorems as th
from .fieldcore import FieldError, make_field
from .matlin import determinant, rank
from .primes import is_prime, max_q, odd_prime_powers
from .store import StoreError, StoreWriter, completed_keys, dumps_record, export_csv, load_store, report_to_record
from .trinomial import trinomial_coeff, trinomial_row

SELECTORS = ("A", "B", "corollary", "lemmas", "all")
LEMMA_IDENTITIES = ("ThmA_pipeline", "Lemma2_1", "Lemma2_2", "Lemma3_1", "Lemma3_2", "Eq3_2", "Carlitz")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ScanConfig:
    selector: str
    q_min: int
    q_max: int
    out: Path
    jobs: int = 1
    resume: bool = False
    seed: int = 0
    include_edge: bool = False
    timing: bool = True
    trials: int = 100

    def __post_init__(self):
        if self.selector not in SELECTORS:
            raise UsageError(f"unknown identity selector {self.selector!r}")
        if self.q_min > self.q_max:
            raise UsageError("q-min must not exceed q-max")
        if self.jobs < 1:
            raise UsageError("jobs must be >= 1")
        bound = max_q()
        if self.q_max > bound:
            raise UsageError(f"q-max {self.q_max} exceeds the size bound {bound} (set CYCLODET_MAX_Q)")


def identities_for(selector: str, q: int) -> list[str]:
    """Identities evaluated at q, in the fixed order records are written."""
    prime = is_prime(q)
    out = []
    if selector in ("A", "all"):
        out.append("ThmA")
    if selector in ("B", "all"):
        out.append("ThmB")
    if selector in ("corollary", "all") and prime:
        out.append("CorollaryA")
    if selector in ("lemmas", "all"):
        for ident in LEMMA_IDENTITIES:
            if ident == "Carlitz" and not (prime and q <= th.CARLITZ_MAX_P):
                continue
            out.append(ident)
    return out


def plan(cfg: ScanConfig) -> list[tuple[str, int]]:
    return [(ident, q) for q in odd_prime_powers(cfg.q_min, cfg.q_max) for ident in identities_for(cfg.selector, q)]


def run_task(identity: str, q: int, seed: int = 0, include_edge: bool = False, trials: int = 100) -> th.VerificationReport:
    F = make_field(q)
    if identity == "ThmA":
        return th.thm_A_report(F, include_edge=include_edge)
    if identity == "ThmB":
        return th.thm_B_report(F)
    if identity == "CorollaryA":
        return th.corollary_A_report(q, include_edge=include_edge)
    if identity == "ThmA_pipeline":
        return th.thm_A_pipeline_report(F)
    if identity == "Lemma2_1":
        return th.lemma_2_1_check(th.build_circulant_row(F))
    if identity == "Lemma2_2":
        return th.lemma_2_2_check(F)
    if identity == "Lemma3_1":
        return th.lemma_3_1_random_report(F, trials=trials, seed=seed)
    if identity == "Lemma3_2":
        return th.lemma_3_2_check(F)
    if identity == "Eq3_2":
        return th.eq_3_2_check(F)
    if identity == "Carlitz":
        return th.carlitz_check(q)
    raise ValueError(f"unknown identity {identity!r}")


def _job(args: tuple) -> dict:
    identity, q, seed, include_edge, trials, timing = args
    return report_to_record(run_task(identity, q, seed, include_edge, trials), timing=timing)


def exit_code(records) -> int:
    return 1 if any(r["status"] == "fail" for r in records) else 0


def run_verify(cfg: ScanConfig) -> int:
    if cfg.out.exists() and not cfg.resume:
        raise UsageError(f"{cfg.out} already exists; pass --resume or choose another path")
    existing = load_store(cfg.out) if cfg.resume else []
    done = completed_keys(existing)
    todo = [
        (ident, q, cfg.seed, cfg.include_edge, cfg.trials, cfg.timing)
        for ident, q in plan(cfg)
        if (ident, q) not in done
    ]
    new = []
    with StoreWriter(cfg.out) as sink:
        if cfg.jobs == 1:
            results = map(_job, todo)
            for rec in results:
                sink.write(rec)
                new.append(rec)
        else:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                # map() yields in submission order, so the store order matches jobs=1
                for rec in pool.map(_job, todo):
                    sink.write(rec)
                    new.append(rec)
    return exit_code(existing + new)


def resume_scan(cfg: ScanConfig) -> int:
    if not cfg.out.exists():
        raise UsageError(f"{cfg.out} does not exist; nothing to resume")
    return run_verify(ScanConfig(**{**cfg.__dict__, "resume": True}))


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclodet", description="Determinants of cyclotomic matrices over GF(q).")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="scan a q-range and append results to a JSONL store")
    v.add_argument("--theorem", "--identity", dest="selector", choices=SELECTORS, default="all")
    v.add_argument("--q-min", type=int, required=True)
    v.add_argument("--q-max", type=int, required=True)
    v.add_argument("--out", type=Path, required=True)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--resume", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=100, help="random Lemma3_1 instances per field")
    v.add_argument("--include-edge", action="store_true", help="evaluate q=3 for Theorem A and the corollary")
    v.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for byte-reproducible stores")

    d = sub.add_parser("det", help="determinant and rank of S_q")
    d.add_argument("--q", type=int, required=True)

    t = sub.add_parser("trinomial", help="trinomial coefficients of (x + 1 + 1/x)^n")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--mod", type=int, default=None)
    t.add_argument("--k", type=int, default=None)

    s = sub.add_parser("singular-scan", help="fields where S_q is singular by the coefficient criterion")
    s.add_argument("--q-min", type=int, required=True)
    s.add_argument("--q-max", type=int, required=True)
    s.add_argument("--confirm", action="store_true", help="also check the rank of S_q")

    c = sub.add_parser("carlitz", help="characteristic polynomial of the Carlitz matrix")
    c.add_argument("--p", type=int, required=True)

    e = sub.add_parser("export", help="export a JSONL store to CSV")
    e.add_argument("--in", dest="src", type=Path, required=True)
    e.add_argument("--out", type=Path, required=True)
    return ap


def _print_json(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _cmd_det(q: int) -> int:
    if q > max_q():
        raise UsageError(f"q={q} exceeds the size bound {max_q()}")
    F = make_field(q)
    S = th.build_S(F)
    det = determinant(S)
    r = rank(S)
    _print_json({
        "q": F.q, "p": F.p, "deg": F.n, "modulus": list(F.modulus),
        "det": det.encode(), "rank": r, "singular": r < F.q - 1,
    })
    return 0


def _cmd_trinomial(n: int, mod: int | None, k: int | None) -> int:
    if n < 0:
        raise UsageError("n must be non-negative")
    if k is None:
        _print_json({"n": n, "mod": mod, "row": list(trinomial_row(n, mod).coeffs)})
    else:
        _print_json({"n": n, "mod": mod, "k": k, "value": trinomial_coeff(n, k, mod)})
    return 0


def _cmd_singular_scan(q_min: int, q_max: int, confirm: bool) -> int:
    if q_min > q_max:
        raise UsageError("q-min must not exceed q-max")
    if q_max > max_q():
        raise UsageError(f"q-max {q_max} exceeds the size bound {max_q()}")
    records = [report_to_record(r) for r in th.singularity_scan(q_min, q_max, confirm)]
    for rec in records:
        print(dumps_record(rec))
    return exit_code(records)


def _cmd_carlitz(p: int) -> int:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise UsageError(f"p={p} must be an odd prime")
    if p > th.CARLITZ_MAX_P:
        raise UsageError(f"p={p} exceeds the Carlitz bound {th.CARLITZ_MAX_P}")
    rec = report_to_record(th.carlitz_check(p))
    print(dumps_record(rec))
    return exit_code([rec])


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            cfg = ScanConfig(
                selector=args.selector, q_min=args.q_min, q_max=args.q_max, out=args.out,
                jobs=args.jobs, resume=args.resume, seed=args.seed,
                include_edge=args.include_edge, timing=not args.no_timing, trials=args.trials,
            )
            return resume_scan(cfg) if cfg.resume else run_verify(cfg)
        if args.command == "det":
            return _cmd_det(args.q)
        if args.command == "trinomial":
            return _cmd_trinomial(args.n, args.mod, args.k)
        if args.command == "singular-scan":
            return _cmd_singular_scan(args.q_min, args.q_max, args.confirm)
        if args.command == "carlitz":
            return _cmd_carlitz(args.p)
        if args.command == "export":
            print(export_csv(args.src, args.out))
            return 0
    except (UsageError, FieldError, StoreError, ValueError, OSError) as exc:
        print(f"cyclodet: error: {exc}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
