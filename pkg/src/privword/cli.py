"""Command-line interface for table generation and verification.

Usage examples:

    privword word tm --len 32
    privword word --morphism "0->0010,1->1" --seed 0 --len 8
    privword table A --max 128 --paper-check
    privword table classes --max 64 --format json
    privword verify A --max 256
    privword gaps 3 --format json
    privword structures tm --max 8 --what privileged
    privword structures chacon --what palindromes

Exit codes: 0 success, 1 verification or check failure, 2 usage or
parse error, 3 prefix budget exceeded, 4 unsupported combination.  The
prefix symbol cap honors the PRIVWORD_BYTE_CAP environment variable.
All JSON documents carry a top-level ``"schema": 1`` field.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass, field

from . import recurrences as rec
from .errors import BudgetExceededError, MorphismSpecError, NotProlongableError, PrivwordError
from .factors import FactorIndex, build_index
from .privileged import (
    CLASS_PREFIXES,
    REDUCTION_MAPS,
    apply_reduction,
    classify_tm_privileged,
    defect,
    is_palindrome,
    is_privileged,
    oracle_complexity,
    privileged_set,
)
from .words import BUILTIN_WORDS, InfiniteWordSpec, MorphicWord, default_byte_cap, parse_morphism_spec

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_UNSUPPORTED = 4

_TABLE_KINDS = {
    "A": ("A",),
    "P": ("P",),
    "B": ("B",),
    "all": ("A", "P", "B"),
    "classes": ("A_00", "A_010", "A_0110", "B_00", "B_010", "B_0110"),
}

# oracle prefix filter and recurrence evaluator per verifiable kind
_VERIFY_KINDS = {
    "A": (("A", "A", ""), ("A_00", "A", "00"), ("A_010", "A", "010"), ("A_0110", "A", "0110")),
    "P": (("P", "P", ""),),
    "B": (("B", "B", ""), ("B_00", "B", "00"), ("B_010", "B", "010"), ("B_0110", "B", "0110")),
}

_TM_NAMES = ("tm", "tm-theta")


@dataclass
class VerificationReport:
    """Outcome of an oracle-versus-recurrence sweep."""

    word: str
    kinds: tuple[str, ...]
    n_max: int
    prefix_length: int
    elapsed: float
    mismatches: list[tuple[str, int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _write_output(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_word(args: argparse.Namespace, parser: argparse.ArgumentParser) -> InfiniteWordSpec:
    name = getattr(args, "name", None)
    morphism = getattr(args, "morphism", None)
    if name and morphism:
        parser.error("give either a built-in word name or --morphism, not both")
    if name:
        spec = BUILTIN_WORDS.get(name)
        if spec is None:
            parser.error(f"unknown word {name!r}; built-ins: {', '.join(sorted(BUILTIN_WORDS))}")
        return spec
    if morphism:
        seed = getattr(args, "seed", None)
        if not seed:
            parser.error("--morphism needs --seed LETTER")
        m = parse_morphism_spec(morphism)
        return MorphicWord(m, seed, name=morphism)
    parser.error("give a built-in word name or --morphism")
    raise AssertionError("unreachable")


def cmd_word(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    spec = _resolve_word(args, parser)
    if args.len < 0:
        parser.error("--len must be non-negative")
    if args.len > default_byte_cap():
        print(f"error: --len {args.len} exceeds the symbol cap {default_byte_cap()}", file=sys.stderr)
        return EXIT_BUDGET
    try:
        w = spec.prefix(args.len)
    except (NotProlongableError, MorphismSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if w:
        print(w)
    return EXIT_OK


def cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    kinds = _TABLE_KINDS[args.kind]
    multi = len(kinds) > 1
    rows = []
    for n in range(args.max + 1):
        for kind in kinds:
            rows.append((n, kind, rec.complexity(kind, n)))
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        if multi:
            writer.writerow(["n", "kind", "value", "provenance"])
            writer.writerows([n, kind, v, "recurrence"] for n, kind, v in rows)
        else:
            writer.writerow(["n", "value", "provenance"])
            writer.writerows([n, v, "recurrence"] for n, _, v in rows)
        _write_output(buf.getvalue(), args.output)
    else:
        doc = {
            "schema": 1,
            "kind": args.kind,
            "values": [
                {"n": n, "kind": kind, "value": v, "provenance": "recurrence"}
                for n, kind, v in rows
            ],
        }
        _write_output(json.dumps(doc, indent=2) + "\n", args.output)
    if args.paper_check:
        mismatches = rec.reference_mismatches()
        if mismatches:
            for n, ref, got in mismatches:
                print(f"paper-check MISMATCH at n={n}: reference {ref}, recurrence {got}", file=sys.stderr)
            return EXIT_FAIL
        print(f"paper-check: PASS ({len(rec.A_REFERENCE_EVEN)} even values 2..128 match)", file=sys.stderr)
    return EXIT_OK


def run_verification(word: str, kind: str, n_max: int, seed: int = 0) -> VerificationReport:
    """Compare brute-force counts against the recurrences for n <= n_max.

    The sweep order is shuffled by ``seed``; the report is assembled
    order-independently.
    """
    spec = BUILTIN_WORDS[word]
    started = time.perf_counter()
    idx = build_index(spec, max(1, n_max))
    checks = [c for k in (("A", "P", "B") if kind == "all" else (kind,)) for c in _VERIFY_KINDS[k]]
    ns = list(range(n_max + 1))
    random.Random(seed).shuffle(ns)
    mismatches = []
    for n in ns:
        for label, oracle_kind, prefix in checks:
            got = oracle_complexity(idx, n, oracle_kind, prefix)
            want = rec.complexity(label, n)
            if got != want:
                mismatches.append((label, n, got, want))
    mismatches.sort(key=lambda m: (m[1], m[0]))
    return VerificationReport(
        word=word,
        kinds=tuple(label for label, _, _ in checks),
        n_max=n_max,
        prefix_length=len(idx.word),
        elapsed=time.perf_counter() - started,
        mismatches=mismatches,
    )


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.word not in BUILTIN_WORDS:
        parser.error(f"unknown word {args.word!r}; built-ins: {', '.join(sorted(BUILTIN_WORDS))}")
    if args.word not in _TM_NAMES:
        # no recurrence is defined for this word; report oracle values only
        idx = build_index(BUILTIN_WORDS[args.word], max(1, args.max))
        kind = "A" if args.kind == "all" else args.kind
        for n in range(args.max + 1):
            print(f"{n},{oracle_complexity(idx, n, kind)},oracle")
        print(f"notice: no recurrence defined for word {args.word!r}; oracle values only", file=sys.stderr)
        return EXIT_UNSUPPORTED
    report = run_verification(args.word, args.kind, args.max, seed=args.seed)
    print(
        f"verify word={report.word} kinds={','.join(report.kinds)} n<={report.n_max} "
        f"prefix={report.prefix_length} elapsed={report.elapsed:.2f}s"
    )
    if report.passed:
        print("PASS: 0 mismatches")
        return EXIT_OK
    for label, n, got, want in report.mismatches:
        print(f"FAIL {label}({n}): oracle {got}, recurrence {want}")
    print(f"FAIL: {len(report.mismatches)} mismatches")
    return EXIT_FAIL


def cmd_gaps(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.index < 1:
        parser.error("gap index starts at 1")
    reports = [rec.gap_report(n) for n in range(1, args.index + 1)]
    if args.format == "json":
        print(json.dumps({"schema": 1, "gaps": reports}, indent=2))
    else:
        for r in reports:
            status = "all zero" if r["all_zero"] else "NONZERO INSIDE"
            lw, rw, ow = r["left_witness"], r["right_witness"], r["odd_power_witness"]
            print(
                f"gap {r['index']}: [{r['lo']}, {r['hi']}] {status}; "
                f"A({lw['n']}) = {lw['value']}, A({rw['n']}) = {rw['value']}, "
                f"A({ow['n']}) = {ow['value']}"
            )
    return EXIT_OK if all(r["all_zero"] for r in reports) else EXIT_FAIL


def _structures_privileged(idx: FactorIndex, n_max: int) -> list[dict]:
    items = []
    for n in range(n_max + 1):
        full = privileged_set(idx, n)
        by_class = {
            key: sorted(privileged_set(idx, n, prefix).words)
            for key, prefix in CLASS_PREFIXES.items()
            if key != "all"
        }
        items.append({"n": n, "count": len(full), "words": sorted(full.words), "classes": by_class})
    return items


def _structures_palindromes(idx: FactorIndex, n_max: int) -> list[dict]:
    items = [{"word": "", "length": 0, "privileged": True}]
    for n in range(1, n_max + 1):
        for w in sorted(idx.factors(n)):
            if is_palindrome(w):
                items.append({"word": w, "length": n, "privileged": is_privileged(w)})
    return items


def _structures_classifications(idx: FactorIndex, n_max: int) -> list[dict]:
    items = []
    for n in range(6, n_max + 1):
        for w in sorted(idx.factors(n)):
            if w[0] != "0" or not is_privileged(w):
                continue
            c = classify_tm_privileged(w, idx)
            items.append(
                {
                    "word": c.word,
                    "starts_with": c.starts_with,
                    "length_mod4": c.length_mod4,
                    "begins_with_return": c.begins_with_return,
                    "matching_contexts": list(c.matching_contexts),
                }
            )
    return items


def _structures_bijections(idx: FactorIndex, n_max: int) -> list[dict]:
    # domain lengths chosen so every image fits inside n_max
    items = []
    for name in REDUCTION_MAPS:
        pairs = []
        for image_len in range(2, n_max + 1):
            if name in ("f1", "g1") and image_len % 4 == 0:
                domain = privileged_set(idx, image_len // 4, "00").words
            elif name == "f2" and image_len % 4 == 0:
                domain = privileged_set(idx, image_len - 2, "00").words
            elif name == "f3" and image_len % 4 == 0 and image_len >= 8:
                domain = (
                    privileged_set(idx, image_len // 4 + 1, "101").words
                    | privileged_set(idx, image_len // 4 + 1, "1001").words
                )
            elif name == "f4-010" and image_len % 4 == 0 and image_len >= 8:
                domain = privileged_set(idx, image_len - 2, "101").words
            elif name == "f4-0110" and image_len % 4 == 2 and image_len >= 10:
                domain = privileged_set(idx, image_len - 2, "11").words
            elif name == "theta" and image_len % 4 == 0:
                domain = (
                    privileged_set(idx, image_len // 4, "00").words
                    | privileged_set(idx, image_len // 4, "010").words
                )
            else:
                continue
            pairs.extend({"input": w, "image": apply_reduction(name, w)} for w in sorted(domain))
        items.append({"map": name, "pairs": pairs})
    return items


def cmd_structures(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.name not in BUILTIN_WORDS:
        parser.error(f"unknown word {args.name!r}; built-ins: {', '.join(sorted(BUILTIN_WORDS))}")
    if args.what in ("classifications", "bijections") and args.name not in _TM_NAMES:
        print(f"notice: {args.what} are defined for the Thue-Morse word only", file=sys.stderr)
        return EXIT_UNSUPPORTED
    spec = BUILTIN_WORDS[args.name]
    if args.what == "defect":
        prefix = spec.prefix(args.max)
        report = defect(prefix)
        body: object = {
            "prefix_length": len(prefix),
            "defect": report.defect,
            "lacking_positions": list(report.lacking_positions),
        }
    else:
        certified = args.max + 7 if args.what == "classifications" else max(1, args.max)
        idx = build_index(spec, certified)
        builder = {
            "privileged": _structures_privileged,
            "palindromes": _structures_palindromes,
            "classifications": _structures_classifications,
            "bijections": _structures_bijections,
        }[args.what]
        body = builder(idx, args.max)
    doc = {"schema": 1, "word": args.name, "what": args.what, "max": args.max, "items": body}
    _write_output(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="privword", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_word = sub.add_parser("word", help="print a prefix of a built-in or ad-hoc morphic word")
    p_word.add_argument("name", nargs="?", help=f"built-in word ({', '.join(sorted(BUILTIN_WORDS))})")
    p_word.add_argument("--morphism", help="rule string like '0->01,1->10'")
    p_word.add_argument("--seed", help="seed letter for --morphism")
    p_word.add_argument("--len", type=int, required=True, help="prefix length")

    p_table = sub.add_parser("table", help="print recurrence-evaluated complexity tables")
    p_table.add_argument("kind", choices=sorted(_TABLE_KINDS))
    p_table.add_argument("--max", type=int, default=128, help="largest n (default 128)")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--paper-check", action="store_true",
                         help="also compare A against the published reference values")
    p_table.add_argument("-o", "--output", help="write to a file instead of stdout")

    p_verify = sub.add_parser("verify", help="compare brute-force counts against the recurrences")
    p_verify.add_argument("kind", choices=("A", "P", "B", "all"))
    p_verify.add_argument("--max", type=int, default=256, help="largest n (default 256)")
    p_verify.add_argument("--word", default="tm", help="word to verify (default tm)")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="sweep order shuffle seed; results are order-independent")

    p_gaps = sub.add_parser("gaps", help="show the zero gaps of A with boundary witnesses")
    p_gaps.add_argument("index", type=int, help="largest gap index")
    p_gaps.add_argument("--format", choices=("text", "json"), default="text")

    p_struct = sub.add_parser("structures", help="dump privileged sets and related structures as JSON")
    p_struct.add_argument("name", help="built-in word")
    p_struct.add_argument("--what", required=True,
                          choices=("privileged", "palindromes", "classifications", "bijections", "defect"))
    p_struct.add_argument("--max", type=int, default=64, help="largest length (default 64)")
    p_struct.add_argument("-o", "--output", help="write to a file instead of stdout")

    return parser


_HANDLERS = {
    "word": cmd_word,
    "table": cmd_table,
    "verify": cmd_verify,
    "gaps": cmd_gaps,
    "structures": cmd_structures,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PrivwordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
