"""Command-line front end.

Exit codes: 0 success/agreement, 1 usage error, 2 mismatch, 3 budget or
truncation (honesty flag).
"""

from __future__ import annotations

import argparse
import io
import sys
import warnings

from . import arformula, factorlab, openstur, wordgen
from .errors import DirectiveError, HorizonError, WordError

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3

TABLE1 = [2, 1, 2, 3, 4, 3, 4, 5, 6, 5, 6, 7, 8, 9, 10]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--directive", help="directive 'pre:period', e.g. ':ab'")
    src.add_argument("--cf", help="continued fraction terms d1,d2,... of the slope [0; d1, d2, ...]")
    src.add_argument("--corpus", choices=wordgen.CORPUS_NAMES)
    p.add_argument("--alphabet", help="ordered alphabet overriding first-appearance order")
    p.add_argument("--max-n", type=int, default=15)
    p.add_argument("--length", type=int)
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--budget", type=int, default=factorlab.DEFAULT_BUDGET,
                   help="maximum prefix length for saturation (default 10^7)")
    p.add_argument("--allow-episturmian", action="store_true",
                   help="accept directives whose period misses a letter")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="arclosed", description="Closed/open factor complexity of Arnoux-Rauzy words.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("gen", parents=[common], help="print a prefix of the word")
    sub.add_parser("census", parents=[common], help="brute-force closed/open counts (CSV)")
    sub.add_parser("formula", parents=[common], help="closed/open counts from the formula (CSV)")
    sub.add_parser("compare", parents=[common], help="formula vs census, exit 0 iff they agree")
    r = sub.add_parser("returns", parents=[common], help="complete first returns to a factor")
    r.add_argument("--factor", required=True)
    dc = sub.add_parser("decompose", parents=[common], help="split open binary words into two closed words")
    dc.add_argument("--word")
    dc.add_argument("--sweep", action="store_true", help="all open factors of a Sturmian word")
    dc.add_argument("--max-len", type=int, default=30)
    dc.add_argument("--profile", action="store_true", help="emit word,H,K,|A|,|A'|,S_l,S_r rows")
    pf = sub.add_parser("paperfolding", parents=[common], help="open-factor check for the paperfolding relatives")
    pf.add_argument("--max-pow", type=int, default=6)
    sub.add_parser("table1", parents=[common], help="golden self-test on the Fibonacci word")
    return parser


def _directive(args, required=True) -> wordgen.DirectiveSpec | None:
    if args.directive is not None:
        d = wordgen.parse_directive(args.directive, args.alphabet)
    elif args.cf is not None:
        try:
            terms = [int(x) for x in args.cf.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--cf expects comma-separated integers, got {args.cf!r}") from None
        d = wordgen.sturmian_directive_from_cf(terms)
    elif args.corpus in ("fibonacci", "tribonacci"):
        d = wordgen.FIBONACCI if args.corpus == "fibonacci" else wordgen.TRIBONACCI
    elif args.corpus is not None:
        raise UsageError(f"corpus word {args.corpus!r} has no directive sequence")
    elif required:
        raise UsageError("one of --directive, --cf, --corpus is required")
    else:
        return None
    if not d.ar_valid and not args.allow_episturmian:
        raise UsageError("directive not AR-valid (every letter must occur in the period); "
                         "pass --allow-episturmian to generate anyway")
    return d


def _require_ar(d):
    if not d.ar_valid:
        raise UsageError("directive not AR-valid")


def _check_n(args):
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")


def cmd_gen(args, out) -> int:
    if args.length is None or args.length < 1:
        raise UsageError("gen needs --length >= 1")
    if args.corpus is not None:
        w = wordgen.corpus_word(args.corpus, args.length)
    else:
        d = _directive(args)
        w = wordgen.characteristic_prefix(d, args.length, args.budget)[: args.length]
    out.write(w + "\n")
    return EXIT_OK


def _formula_rows(d, n_max):
    """Rows (n, p, f_closed, f_open) up to what the directive determines."""
    limit = arformula.determined_up_to(d)
    top = n_max if limit is None else min(n_max, limit)
    prof = arformula.closed_complexity_profile(d, top)
    rows = [(n, (d.t - 1) * n + 1, fc, (d.t - 1) * n + 1 - fc) for n, fc in enumerate(prof, 1)]
    return rows, top < n_max


def cmd_formula(args, out) -> int:
    _check_n(args)
    d = _directive(args)
    _require_ar(d)
    rows, cut = _formula_rows(d, args.max_n)
    out.write("n,p,f_closed,f_open\n")
    for r in rows:
        out.write(",".join(map(str, r)) + "\n")
    if cut:
        print(f"warning: the supplied terms determine f^c only for n <= {len(rows)}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _census(args):
    if args.corpus in ("pf_morphism", "paperfolding"):
        name = args.corpus
        return factorlab.word_census(lambda L: wordgen.corpus_word(name, L), args.max_n, args.budget)
    d = _directive(args)
    _require_ar(d)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return factorlab.closed_census(d, args.max_n, args.budget)


def cmd_census(args, out) -> int:
    _check_n(args)
    census = _census(args)
    out.write("n,p,f_closed,f_open,complete\n")
    for n, p, c, o, ok in census.rows():
        out.write(f"{n},{p},{c},{o},{int(ok)}\n")
    if not census.all_complete:
        print("warning: census incomplete within the prefix budget", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_compare(args, out) -> int:
    _check_n(args)
    d = _directive(args)
    _require_ar(d)
    rows, cut = _formula_rows(d, args.max_n)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        census = factorlab.closed_census(d, len(rows), args.budget)
    out.write("n,p,f_closed_formula,f_closed_census,complete\n")
    mismatches = []
    for (n, p, fc, _), (_, _, cc, _, ok) in zip(rows, census.rows()):
        out.write(f"{n},{p},{fc},{cc},{int(ok)}\n")
        if ok and fc != cc:
            mismatches.append((n, fc, cc))
    for n, fc, cc in mismatches:
        print(f"mismatch at n={n}: formula {fc}, census {cc}", file=sys.stderr)
    if mismatches:
        return EXIT_MISMATCH
    checked = sum(census.complete)
    print(f"agreement on {checked} census-complete lengths of {len(rows)}", file=sys.stderr)
    if cut or not census.all_complete:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_returns(args, out) -> int:
    d = _directive(args)
    _require_ar(d)
    try:
        rets, ok = factorlab.guarded_returns(args.factor, d, args.budget)
    except HorizonError as e:
        raise UsageError(str(e)) from None
    for r in rets:
        out.write(r + "\n")
    if not rets:
        print(f"{args.factor!r} has no complete first return in the generated prefix", file=sys.stderr)
    return EXIT_OK if ok else EXIT_BUDGET


def _profile_row(w):
    prof = openstur.prefix_suffix_profile(w)
    sl, sr = openstur.special_counts(w)
    return f"{w},{prof.H},{prof.K},{len(prof.A)},{len(prof.A_prime)},{sl},{sr}"


def cmd_decompose(args, out) -> int:
    if args.word is not None:
        w = args.word
        if not w or len(set(w)) > 2:
            raise UsageError("--word must be a non-empty binary word")
        if args.profile:
            out.write("word,H,K,|A|,|A'|,S_l,S_r\n" + _profile_row(w) + "\n")
            return EXIT_OK
        if factorlab.is_closed(w):
            fr = factorlab.frontier(w)
            out.write(f"{w} is closed (frontier {fr or 'ε'})\n")
            return EXIT_OK
        u, v = openstur.decompose_open(w)
        out.write(f"{w},{u},{v}\n")
        return EXIT_OK
    if not args.sweep:
        raise UsageError("decompose needs --word or --sweep")
    d = _directive(args)
    if d.t != 2:
        raise UsageError("decompose sweeps need a binary (Sturmian) directive")
    host, ok = factorlab.saturated_prefix(d, args.max_len, args.budget)
    out.write("word,H,K,|A|,|A'|,S_l,S_r\n" if args.profile else "word,u,v\n")
    bad = 0
    for n in range(1, min(args.max_len, len(host)) + 1):
        for w in sorted(wordgen.factors(host, n)):
            if factorlab.is_closed(w):
                continue
            if args.profile:
                out.write(_profile_row(w) + "\n")
                continue
            u, v = openstur.decompose_open(w)
            if not (factorlab.is_closed(u) and factorlab.is_closed(v)):
                bad += 1
            out.write(f"{w},{u},{v}\n")
    if bad:
        return EXIT_MISMATCH
    if not ok:
        print(f"warning: generated prefix (length {len(host)}) does not contain every factor "
              f"of length {args.max_len}; supply more terms or a larger budget", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def paperfolding_report(max_pow: int, budget: int):
    """Lines of the report plus the exit status."""
    if max_pow < 1:
        raise UsageError("--max-pow must be >= 1")
    lines, status = [], EXIT_OK

    def pf(L):
        return wordgen.corpus_word("pf_morphism", L)

    def paper(L):
        return wordgen.corpus_word("paperfolding", L)

    rows = factorlab.open_at_lengths(pf, [2**i for i in range(1, max_pow + 1)], budget)
    all_open = []
    for n, nf, nc, ok in rows:
        if not ok:
            lines.append(f"length {n}: not stabilized within budget {budget} "
                         f"({nf} factors seen, {nc} closed)")
            status = max(status, EXIT_BUDGET)
        elif nc:
            lines.append(f"length {n}: {nc} of {nf} factors closed")
            status = EXIT_MISMATCH
        else:
            all_open.append(n)
    if all_open:
        lines.insert(0, f"lengths {','.join(map(str, all_open))}: all factors open")
    census = factorlab.word_census(paper, 2**max_pow, budget)
    zero = [n for n, _, c, _, ok in census.rows() if ok and c == 0]
    lines.append("paperfolding word, lengths with no closed factor: "
                 + (",".join(map(str, zero)) if zero else "none"))
    if not census.all_complete:
        first = census.complete.index(False) + 1
        lines.append(f"paperfolding census not stabilized from length {first}")
        status = max(status, EXIT_BUDGET) if status != EXIT_MISMATCH else status
    return lines, status


def cmd_paperfolding(args, out) -> int:
    lines, status = paperfolding_report(args.max_pow, args.budget)
    out.write("\n".join(lines) + "\n")
    return status


def cmd_table1(args, out) -> int:
    formula = arformula.closed_complexity_profile(wordgen.FIBONACCI, len(TABLE1))
    census = factorlab.closed_census(wordgen.FIBONACCI, len(TABLE1)).f_closed
    out.write("n," + ",".join(str(n) for n in range(1, len(TABLE1) + 1)) + "\n")
    out.write("expected," + ",".join(map(str, TABLE1)) + "\n")
    out.write("formula," + ",".join(map(str, formula)) + "\n")
    out.write("census," + ",".join(map(str, census)) + "\n")
    return EXIT_OK if formula == census == TABLE1 else EXIT_MISMATCH


COMMANDS = {
    "gen": cmd_gen,
    "census": cmd_census,
    "formula": cmd_formula,
    "compare": cmd_compare,
    "returns": cmd_returns,
    "decompose": cmd_decompose,
    "paperfolding": cmd_paperfolding,
    "table1": cmd_table1,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        status = COMMANDS[args.command](args, buf)
    except (UsageError, DirectiveError, WordError, HorizonError) as e:
        sys.stdout.write(buf.getvalue())
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
