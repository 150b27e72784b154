"""
Command line driver.

    signed-eulerian table   --kind D --n-max 10 [--paper-range]
    signed-eulerian verify  --suite all --n-max 9
    signed-eulerian orbit   1324
    signed-eulerian census  --n 5 --k 2
    signed-eulerian special --n 5 --ell 3
    signed-eulerian counts  --n 8

Exit status: 0 when every checked identity holds, 1 on an identity failure or
internal invariant breach, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Optional

from . import __version__
from .checks import Check
from .numtheory import factorize, gcd, is_prime
from .oracle import (OracleError, class_difference_checks, corollary_3_2_checks,
                     enumerate_counts, oracle_cap, oracle_triangle_checks, theorem_3_1_checks)
from .orbits import (DEFAULT_CENSUS_CAP, OrbitError, census_all, is_canonical, orbit,
                     progression_permutation, sign_class, theorem_5_1_checks)
from .perm import Permutation, ascent_count, inversion_count, parity
from .triangles import (InvariantBreach, Triangle, TriangleBundle, boundary_checks, bundle,
                        divisibility_checks, even_cross_checks, odd_recurrence_checks,
                        parity_counterexample_checks, symmetry_checks)

SUITES = ("all", "symmetry", "odd-recurrence", "even-cross", "oracle",
          "thm3.1", "thm5.1", "cor3.2", "cor4.3", "divisibility")
FORMATS = ("pretty", "csv", "json")

# excluded from output metadata so that output never depends on them
_UNRECORDED = {"func", "threads", "out"}


class UsageError(Exception):
    pass


def _meta(args) -> dict:
    params = {k: v for k, v in sorted(vars(args).items()) if k not in _UNRECORDED}
    return {"version": __version__, "command": args.command, "params": params}


def _json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv(rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _aligned(rows: list[list[str]], sep: str = "  ") -> list[str]:
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    return [sep.join(cell.rjust(widths[i]) for i, cell in enumerate(r)).rstrip() for r in rows]


# -- table ---------------------------------------------------------------------

def format_table(t: Triangle, fmt: str, first_row: int = 1, meta: Optional[dict] = None) -> str:
    ns = range(first_row, t.n_max + 1)
    width = t.n_max
    if fmt == "json":
        rows = [{"n": n, "values": [str(v) for v in t.row(n)]} for n in ns]
        return _json({"meta": meta or {}, "kind": t.kind, "rows": rows})
    if fmt == "csv":
        out = []
        for n in ns:
            out.append(f"# kind={t.kind} n={n}\n")
            out.append(_csv([[str(v) for v in t.row(n)] + [""] * (width - n)]))
        return "".join(out)
    header = [f"{t.kind}_{{n,k}}", "|"] + [str(k) for k in range(width)]
    body = [[f"n = {n}", "|"] + [str(v) for v in t.row(n)] for n in ns]
    lines = _aligned([header] + body, sep=" ")
    rule = "-" * max(len(line) for line in lines)
    return "\n".join([lines[0], rule] + lines[1:]) + "\n"


def parse_table_csv(text: str) -> Triangle:
    """Inverse of the csv table export; rows must run 1..n_max."""
    kind = None
    rows = []
    lines = iter(text.splitlines())
    for line in lines:
        if not line.startswith("#"):
            raise ValueError(f"expected a row comment, got {line!r}")
        fields = dict(part.split("=") for part in line[1:].split())
        kind = fields["kind"]
        n = int(fields["n"])
        cells = next(csv.reader([next(lines)]))
        rows.append(tuple(int(c) for c in cells[:n]))
    return Triangle(kind, tuple(rows))


def parse_table_json(text: str) -> Triangle:
    doc = json.loads(text)
    return Triangle(doc["kind"], tuple(tuple(int(v) for v in r["values"]) for r in doc["rows"]))


def cmd_table(args) -> tuple[str, int]:
    n_max = 10 if args.paper_range else args.n_max
    if n_max < 1:
        raise UsageError("--n-max must be at least 1")
    first_row = 2 if args.paper_range else 1
    t = bundle(n_max)[args.kind]
    return format_table(t, args.format, first_row, _meta(args)), 0


# -- verify --------------------------------------------------------------------

def _parse_fault(spec: str) -> tuple[str, int, int]:
    try:
        kind, n, k = spec.split(":")
        return kind.upper(), int(n), int(k)
    except ValueError:
        raise UsageError(f"--inject-fault expects KIND:N:K, got {spec!r}") from None


def _inject(tb: TriangleBundle, fault: tuple[str, int, int]) -> TriangleBundle:
    kind, n, k = fault
    if kind not in "ABCD" or not 1 <= n <= tb.n_max or not 0 <= k < n:
        raise UsageError(f"fault cell {kind}:{n}:{k} is outside the computed triangles")
    t = tb[kind]
    parts = {x: tb[x] for x in "ABCD"}
    parts[kind] = t.with_cell(n, k, t(n, k) + 1)
    return TriangleBundle(**parts)


def _divisibility_pairs(n_max: int, n: Optional[int], p: Optional[int]) -> list[tuple[int, int]]:
    # an explicit (n, p) pair, else every odd n <= n_max with each of its primes
    if n is None and p is None:
        return [(m, q) for m in range(3, n_max + 1, 2) for q in sorted(factorize(m))]
    if n is None or p is None:
        raise UsageError("--n and --p go together")
    if n % 2 == 0 or n < 3:
        raise UsageError("divisibility needs an odd n >= 3")
    if not is_prime(p) or n % p:
        raise UsageError(f"--p must be a prime dividing {n}")
    return [(n, p)]


def run_suites(suite: str, n_max: int, workers: int = 1,
               fault: Optional[tuple[str, int, int]] = None,
               div_n: Optional[int] = None, div_p: Optional[int] = None) -> list[tuple[str, Check]]:
    """All identity instances of the chosen suite(s), tagged with the suite name."""
    wanted = SUITES[1:] if suite == "all" else (suite,)
    pairs = _divisibility_pairs(n_max, div_n, div_p)
    rows_needed = max([n_max, 10] + [n for n, _ in pairs])
    tb = bundle(rows_needed)
    if fault is not None:
        tb = _inject(tb, fault)
    enum_top = min(n_max, oracle_cap())
    census_top = min(n_max, DEFAULT_CENSUS_CAP)
    out: list[tuple[str, Check]] = []

    def add(name, checks):
        out.extend((name, c) for c in checks)

    for name in wanted:
        if name == "symmetry":
            small = TriangleBundle(*(tb[x].truncate(n_max) for x in "ABCD"))
            add(name, symmetry_checks(small.B, small.C, small.D))
            add(name, boundary_checks(small))
        elif name == "odd-recurrence":
            add(name, odd_recurrence_checks(tb, n_max))
            add(name, parity_counterexample_checks(tb))
        elif name == "even-cross":
            add(name, even_cross_checks(tb, n_max))
        elif name == "oracle":
            for n in range(2, enum_top + 1):
                add(name, oracle_triangle_checks(n, workers=workers, tb=tb))
        elif name == "cor3.2":
            for n in range(3, enum_top + 1, 2):
                add(name, corollary_3_2_checks(n, workers=workers))
        elif name == "cor4.3":
            for n in range(2, enum_top + 1):
                add(name, class_difference_checks(n, workers=workers, tb=tb))
        elif name == "thm3.1":
            for n in range(3, census_top + 1, 2):
                add(name, theorem_3_1_checks(n, workers=workers))
        elif name == "thm5.1":
            for n in range(3, census_top + 1, 2):
                add(name, theorem_5_1_checks(n, workers=workers))
        elif name == "divisibility":
            for n, p in pairs:
                add(name, divisibility_checks(n, p, tb))
    return out


def format_report(results: list[tuple[str, Check]], fmt: str, meta: dict) -> str:
    suites: dict[str, list[int]] = {}
    for name, c in results:
        tally = suites.setdefault(name, [0, 0])
        tally[0] += 1
        tally[1] += not c.ok
    failed = [(name, c) for name, c in results if not c.ok]
    if fmt == "json":
        return _json({
            "meta": meta,
            "suites": [{"suite": s, "checked": t[0], "failed": t[1]} for s, t in suites.items()],
            "checks": [{"suite": s, **c.to_dict()} for s, c in results],
            "violations": [{"suite": s, **c.to_dict()} for s, c in failed],
        })
    if fmt == "csv":
        rows = [["suite", "identity", "n", "k", "lhs", "relation", "rhs", "ok"]]
        rows += [[s, c.identity, c.n, "" if c.k is None else c.k, c.lhs, c.relation, c.rhs,
                  "PASS" if c.ok else "FAIL"] for s, c in results]
        return _csv(rows)
    lines = [f"[{s}] {c.describe()}" for s, c in results]
    lines.append("")
    for s, (checked, bad) in suites.items():
        lines.append(f"{s}: {checked} checked, {bad} failed")
    lines.append("RESULT: " + ("PASS" if not failed else f"FAIL ({len(failed)} violations)"))
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    fault = _parse_fault(args.inject_fault) if args.inject_fault else None
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    results = run_suites(args.suite, args.n_max, args.threads, fault, args.n, args.p)
    status = 0 if all(c.ok for _, c in results) else 1
    return format_report(results, args.format, _meta(args)), status


# -- orbit ---------------------------------------------------------------------

def cmd_orbit(args) -> tuple[str, int]:
    try:
        p = Permutation.parse(args.perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rec = orbit(p)
    n = len(p)
    info = {
        "permutation": str(p),
        "n": n,
        "period": rec.period,
        "k": ascent_count(p),
        "sign_class": sign_class(p).value if n > 1 else None,
        "parity": parity(p).name.lower(),
        "inversions": inversion_count(p),
        "d": gcd(n, rec.period),
    }
    members = [(i, str(m), n > 1 and is_canonical(m)) for i, m in enumerate(rec.members, start=1)]
    if args.format == "json":
        doc = {"meta": _meta(args), "orbit": {**info, "members": [
            {"step": i, "permutation": m, "canonical": c} for i, m, c in members]}}
        return _json(doc), 0
    if args.format == "csv":
        return _csv([["step", "permutation", "canonical"]] + [[i, m, int(c)] for i, m, c in members]), 0
    lines = _aligned([[key, str(value)] for key, value in info.items()])
    lines.append("members (sigma^i, * = canonical):")
    lines += [f"  {i:>4}  {m}{'  *' if c else ''}" for i, m, c in members]
    return "\n".join(lines) + "\n", 0


# -- census --------------------------------------------------------------------

def _census_checks(n: int, k: int, c, tb: TriangleBundle) -> list[Check]:
    w = lambda name, scale=1: sum(d * scale * x for d, x in getattr(c, name).items())
    B, C = tb.B, tb.C
    return [
        Check("sum d alpha_d = B_{n-1,k-1}", n, k, w("alpha"), B(n - 1, k - 1)),
        Check("sum d beta_d = B_{n-1,k}", n, k, w("beta"), B(n - 1, k)),
        Check("sum d{(n-k)alpha_d + (k+1)beta_d} = B_{n,k}", n, k,
              w("alpha", n - k) + w("beta", k + 1), B(n, k)),
        Check("sum d gamma_d = C_{n-1,k-1}", n, k, w("gamma"), C(n - 1, k - 1)),
        Check("sum d delta_d = C_{n-1,k}", n, k, w("delta"), C(n - 1, k)),
        Check("sum d{(n-k)gamma_d + (k+1)delta_d} = C_{n,k}", n, k,
              w("gamma", n - k) + w("delta", k + 1), C(n, k)),
    ]


def cmd_census(args) -> tuple[str, int]:
    n = args.n
    if n % 2 == 0:
        raise UsageError("census requires odd n")
    if not 3 <= n <= DEFAULT_CENSUS_CAP:
        raise UsageError(f"census supports odd n in 3..{DEFAULT_CENSUS_CAP}")
    ks = range(n) if args.k is None else [args.k]
    if args.k is not None and not 0 <= args.k <= n - 1:
        raise UsageError(f"--k must lie in 0..{n - 1}")
    all_k = census_all(n, workers=args.threads)
    tb = bundle(n)
    entries = [(all_k[k], _census_checks(n, k, all_k[k], tb)) for k in ks]
    status = 0 if all(ch.ok for _, checks in entries for ch in checks) else 1
    if args.format == "json":
        doc = {"meta": _meta(args), "census": [
            {**c.to_dict(), "checks": [ch.to_dict() for ch in checks]} for c, checks in entries]}
        return _json(doc), status
    if args.format == "csv":
        rows = [["n", "k", "tally", "d", "count"]]
        for c, _ in entries:
            for name in ("alpha", "beta", "gamma", "delta"):
                rows += [[n, c.k, name, d, x] for d, x in getattr(c, name).items()]
        return _csv(rows), status
    lines = []
    for c, checks in entries:
        lines.append(f"n = {n}, k = {c.k}")
        for name in ("alpha", "beta", "gamma", "delta"):
            mapping = ", ".join(f"{d}:{x}" for d, x in getattr(c, name).items())
            lines.append(f"  {name:<5} {{{mapping}}}")
        lines += ["  " + ch.describe() for ch in checks]
    return "\n".join(lines) + "\n", status


# -- special -------------------------------------------------------------------

def cmd_special(args) -> tuple[str, int]:
    try:
        pp = progression_permutation(args.n, args.ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    inv = inversion_count(pp.perm)
    info = {"n": args.n, "ell": args.ell, "permutation": str(pp.perm),
            "inversions": inv, "epsilon": 1 - (inv & 1)}
    if args.format == "json":
        return _json({"meta": _meta(args), "special": info}), 0
    if args.format == "csv":
        return _csv([list(info), list(info.values())]), 0
    return "\n".join(_aligned([[k, str(v)] for k, v in info.items()])) + "\n", 0


# -- counts --------------------------------------------------------------------

def cmd_counts(args) -> tuple[str, int]:
    try:
        counts = enumerate_counts(args.n, workers=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return _json({"meta": _meta(args), "counts": [c.to_dict() for c in counts]}), 0
    header = ["k", "e_minus_even", "e_minus_odd", "e_plus_even", "e_plus_odd", "A", "B", "C", "D"]
    rows = [[str(getattr(c, h)) for h in header] for c in counts]
    if args.format == "csv":
        return _csv([header] + rows), 0
    return "\n".join(_aligned([header] + rows)) + "\n", 0


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="pretty")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker processes for enumeration and census (output is identical)")

    parser = argparse.ArgumentParser(
        prog="signed-eulerian",
        description="Even, odd and signed Eulerian numbers, sigma orbits and identity checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="print a triangle A, B, C or D")
    p.add_argument("--kind", choices=("A", "B", "C", "D"), required=True)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--paper-range", action="store_true", help="rows n = 2..10 only")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--n", type=int, help="divisibility suite: odd n")
    p.add_argument("--p", type=int, help="divisibility suite: prime dividing n")
    p.add_argument("--inject-fault", metavar="KIND:N:K",
                   help="add one to a triangle cell before checking (self-test)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", parents=[common], help="orbit of a permutation under sigma")
    p.add_argument("perm", help="e.g. 1324 or 1,3,2,4 (commas required for n >= 10)")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("census", parents=[common], help="orbit census for odd n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("special", parents=[common], help="progression permutation and its parity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("counts", parents=[common], help="brute-force class counts of S_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_counts)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        text, status = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (InvariantBreach, OrbitError, OracleError) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
