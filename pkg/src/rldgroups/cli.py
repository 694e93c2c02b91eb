"""Command-line front end: ``rldg <command> [options]``.

Options fall back to ``RLDG_*`` environment variables and then to built-in
defaults.  Exit status is 0 on success, 2 for usage errors, 3 when a size cap
or the work budget is hit and 4 when a structural law fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import errors as E
from .automaton import build_table, state_label, to_dot
from .jn import delta, first_violation, is_member, psi
from .orbits import DEFAULT_BUDGET, cycle_structure, describe_orbits, verify_theorem3
from .order import ORDER_CAP, verify_conjecture
from .perm import format_cycle_type
from .rld import Alphabet, rld_levels
from .tree import from_hex, to_hex

FORMATS = ("text", "json", "csv", "dot")
SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer")


def _int_list(text):
    if text is None or text.strip() == "":
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}")


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="first letter (env RLDG_P, default 1)")
    common.add_argument("--q", type=int, help="second letter (env RLDG_Q, default 2)")
    common.add_argument("--n", type=int, help="depth (env RLDG_N, default 3)")
    common.add_argument("--format", choices=FORMATS, help="output format (env RLDG_FORMAT, default text)")
    common.add_argument("--budget", type=int, help="work budget in elementary steps (env RLDG_BUDGET)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")

    ap = argparse.ArgumentParser(prog="rldg", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decode", parents=[common], help="iterated run-length decoding, level by level")
    d.add_argument("--starts", required=True, help="start letters, one per level, e.g. 2,3,2")
    d.add_argument("--lengths", default="", help="run lengths, e.g. 1,2")

    sub.add_parser("automaton", parents=[common], help="transition table of A_n")

    o = sub.add_parser("orbits", parents=[common], help="cycle structure for one word, or a sweep")
    o.add_argument("--word", help="input word, e.g. 1,2,2")
    o.add_argument("--max-word-len", type=int, help="sweep every word up to this length")

    r = sub.add_parser("order", parents=[common], help="log2|K_n| against the J_n formula")
    r.add_argument("--n-max", type=int, required=True)
    r.add_argument("--containment-max", type=int, default=6,
                   help="also sift all of J_n through K_n for n up to this (<= 6)")
    r.add_argument("--workers", type=int, default=1)

    m = sub.add_parser("member", parents=[common], help="membership in J_n with psi and Delta")
    m.add_argument("portrait", help="portrait as '<n>:<hex>'")
    return ap


class Config:
    def __init__(self, args):
        self.p = args.p if args.p is not None else _env_int("RLDG_P", 1)
        self.q = args.q if args.q is not None else _env_int("RLDG_Q", 2)
        self.n_given = args.n is not None or bool(os.environ.get("RLDG_N"))
        self.n = args.n if args.n is not None else _env_int("RLDG_N", 3)
        fmt = args.format or os.environ.get("RLDG_FORMAT") or "text"
        if fmt not in FORMATS:
            raise UsageError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
        self.format = fmt
        self.budget = args.budget if args.budget is not None else _env_int("RLDG_BUDGET", DEFAULT_BUDGET)
        self.seed = args.seed
        try:
            self.alphabet = Alphabet(self.p, self.q)
        except E.InvalidAlphabet as exc:
            raise UsageError(str(exc))


def _summary(cfg, out, **fields):
    # Last line of every sweep.  Structured formats keep stdout parseable, so
    # the line goes to stderr there.
    line = "SUMMARY " + json.dumps(fields, sort_keys=True) + "\n"
    (out if cfg.format == "text" else sys.stderr).write(line)


def _need(cfg, *allowed):
    if cfg.format not in allowed:
        raise UsageError(f"format {cfg.format!r} is not available here; use one of {', '.join(allowed)}")


def cmd_decode(cfg, args, out):
    _need(cfg, "text", "json", "csv")
    a = cfg.alphabet
    starts = _int_list(args.starts)
    lengths = _int_list(args.lengths)
    if not starts:
        raise UsageError("--starts needs at least one letter")
    if cfg.n_given and len(starts) != cfg.n:
        raise UsageError(f"--starts has {len(starts)} letters but n={cfg.n}")
    for x in starts:
        if x not in a.letters:
            raise UsageError(f"start letter {x} is not in {a}")
    if any(x < 1 for x in lengths):
        raise UsageError("run lengths must be positive")
    levels = rld_levels(a, starts, lengths)
    if cfg.format == "json":
        out.write(json.dumps({"version": SCHEMA_VERSION, "p": a.p, "q": a.q, "starts": starts,
                              "lengths": lengths, "levels": [list(lv) for lv in levels]}) + "\n")
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["level", "start", "digits"])
        for i, lv in enumerate(levels, 1):
            w.writerow([i, starts[i - 1], " ".join(map(str, lv))])
    else:
        width = max(len(str(d)) for d in a.letters + tuple(lengths or [1]))
        out.write(f"input    {' '.join(str(x).rjust(width) for x in lengths)}\n")
        for i, lv in enumerate(levels, 1):
            out.write(f"RLD_{i:<4} {' '.join(str(x).rjust(width) for x in lv)}\n")
    return 0


def cmd_automaton(cfg, args, out):
    t = build_table(cfg.alphabet, cfg.n)
    if cfg.format == "dot":
        out.write(to_dot(t))
        return 0
    rows = [(state_label(x), s, state_label(y)) for x, s, y in t.rows()]
    if cfg.format == "json":
        out.write(json.dumps({"version": SCHEMA_VERSION, "p": cfg.p, "q": cfg.q, "n": cfg.n,
                              "transitions": [{"state": x, "symbol": s, "next": y} for x, s, y in rows]}) + "\n")
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["state", "symbol", "next"])
        w.writerows(rows)
    else:
        for x, s, y in rows:
            out.write(f"{x} --{s}--> {y}\n")
    return 0


def _word(cfg, text):
    word = _int_list(text)
    if not word:
        raise UsageError("--word must be a nonempty comma-separated list of letters")
    for s in word:
        if s not in cfg.alphabet.letters:
            raise UsageError(f"letter {s} is not in {cfg.alphabet}")
    return word


def cmd_orbits(cfg, args, out):
    if args.max_word_len is not None:
        return _orbit_sweep(cfg, args, out)
    _need(cfg, "text", "json", "csv")
    if args.word is None:
        raise UsageError("orbits needs --word or --max-word-len")
    rep = cycle_structure(cfg.alphabet, cfg.n, _word(cfg, args.word))
    asserted = cfg.n % 2 == 1 and cfg.n >= 3
    d = rep.to_dict()
    d["criterion_applies"] = asserted
    d["agree"] = rep.agrees if asserted else None
    if cfg.format == "json":
        out.write(json.dumps({"version": SCHEMA_VERSION, "p": cfg.p, "q": cfg.q, **d}) + "\n")
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["word", "length", "sum_parity", "max_count", "predicate", "agree"])
        w.writerow(["".join(map(str, rep.word)), len(rep.word), sum(rep.word) % 2, rep.max_count,
                    int(rep.predicate), "" if not asserted else int(rep.agrees)])
    else:
        out.write(f"word        {','.join(map(str, rep.word))}\n")
        out.write(f"cycle type  {format_cycle_type(rep.cycle_type)}\n")
        out.write(f"max length  {rep.max_len}  (count {rep.max_count})\n")
        out.write(f"predicate   {rep.predicate}  (odd length and odd sum)\n")
        if asserted:
            out.write(f"agree       {rep.agrees}\n")
        else:
            out.write("agree       n/a (criterion only covers odd n >= 3; descriptive output)\n")
    if not (rep.powers_of_two and rep.within_bound):
        raise E.InvariantViolation(f"cycle type {rep.cycle_type} breaks the power-of-two or length bound")
    if asserted and not rep.agrees:
        raise E.InvariantViolation(f"word {rep.word}: max_count={rep.max_count} but predicate={rep.predicate}")
    return 0


def _orbit_sweep(cfg, args, out):
    _need(cfg, "text", "json", "csv")
    a, n, L = cfg.alphabet, cfg.n, args.max_word_len
    if L < 1:
        raise UsageError("--max-word-len must be >= 1")
    asserted = n % 2 == 1 and n >= 3
    rep = verify_theorem3(a, n, L, cfg.budget, keep_rows=True) if asserted else describe_orbits(a, n, L, cfg.budget)
    if cfg.format == "json":
        out.write(json.dumps({"version": SCHEMA_VERSION, "criterion_applies": asserted, **rep.to_dict()}) + "\n")
    elif cfg.format == "csv":
        out.write(rep.to_csv())
    else:
        out.write(f"{rep.words} words of length <= {L} over {a}, n={n}\n")
        out.write(f"power-of-two failures  {len(rep.power_of_two_failures)}\n")
        out.write(f"length-bound failures  {len(rep.bound_failures)}\n")
        if asserted:
            out.write(f"counterexamples        {len(rep.counterexamples)}\n")
            for c in rep.counterexamples:
                out.write(f"  {c}\n")
        else:
            hist = {}
            for r in rep.rows:
                key = (r.predicate, r.max_count)
                hist[key] = hist.get(key, 0) + 1
            out.write("descriptive only (even n): (predicate, max_count) -> words\n")
            for (pred, mc), k in sorted(hist.items()):
                out.write(f"  ({pred}, {mc}) -> {k}\n")
    _summary(cfg, out, command="orbits", p=a.p, q=a.q, n=n, max_word_len=L, words=rep.words,
             criterion_applies=asserted, counterexamples=len(rep.counterexamples),
             law_failures=len(rep.power_of_two_failures) + len(rep.bound_failures), ok=rep.ok)
    if not rep.ok:
        raise E.InvariantViolation("orbit sweep found violations")
    return 0


def _order_work(n_max):
    # chain construction touches roughly (points x base length) entries per level
    return sum((1 << n) * (1 << n) for n in range(1, n_max + 1))


def cmd_order(cfg, args, out):
    _need(cfg, "text", "json", "csv")
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if args.n_max > ORDER_CAP:
        raise E.CapExceeded(f"--n-max {args.n_max} exceeds cap {ORDER_CAP}")
    if _order_work(args.n_max) > cfg.budget:
        raise E.BudgetExceeded(f"order up to n={args.n_max} needs ~{_order_work(args.n_max)} steps, "
                               f"budget is {cfg.budget}")
    rep = verify_conjecture(cfg.alphabet, args.n_max, args.containment_max, args.workers)
    if cfg.format == "json":
        out.write(rep.to_json() + "\n")
    elif cfg.format == "csv":
        out.write(rep.to_csv())
    else:
        out.write(f"{'n':>3} {'log2|K_n|':>10} {'g(n)':>6} {'equal':>6} {'J_n in K_n':>11}\n")
        for r in rep.records:
            cont = "-" if not r.containment_checked else ("yes" if r.containment_ok else "NO")
            out.write(f"{r.n:>3} {r.k_exponent:>10} {r.j_formula_exponent:>6} {str(r.equal):>6} {cont:>11}\n")
        out.write(f"verdict: {'orders agree for every n' if rep.all_equal else 'orders DIFFER'}\n")
    _summary(cfg, out, command="order", p=cfg.p, q=cfg.q, n_max=args.n_max, exponents=rep.exponents,
             all_equal=rep.all_equal, all_exact=rep.all_exact)
    if not rep.all_exact:
        raise E.InvariantViolation("a stabilizer-chain orbit size is not a power of two")
    return 0


def cmd_member(cfg, args, out):
    _need(cfg, "text", "json")
    try:
        g = from_hex(args.portrait)
    except ValueError as exc:
        raise UsageError(str(exc))
    if cfg.n_given and g.n != cfg.n:
        raise UsageError(f"portrait has n={g.n} but --n is {cfg.n}")
    a = cfg.alphabet
    res = {"version": SCHEMA_VERSION, "p": a.p, "q": a.q, "n": g.n, "portrait": to_hex(g)}
    if is_member(a, g):
        ps, dl = psi(a, g), delta(a, g)
        res.update(member=True, psi={"value": ps.value, "modulus": 1 << ps.k},
                   delta={"f": dl.f, "x": dl.x, "modulus": 1 << dl.k})
    else:
        res.update(member=False, violation=first_violation(a, g))
    if cfg.format == "json":
        out.write(json.dumps(res) + "\n")
    elif res["member"]:
        out.write(f"member  yes (J_{g.n}^{{{a.p},{a.q}}})\n")
        out.write(f"psi     {ps}\n")
        out.write(f"Delta   {dl}\n")
    else:
        where = res["violation"] or "root"
        out.write(f"member  no\nfirst violated constraint at node '{where}' (L/R path from the root)\n")
    return 0


COMMANDS = {
    "decode": cmd_decode,
    "automaton": cmd_automaton,
    "orbits": cmd_orbits,
    "order": cmd_order,
    "member": cmd_member,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = Config(args)
        return COMMANDS[args.command](cfg, args, out)
    except UsageError as exc:
        print(f"rldg: error: {exc}", file=sys.stderr)
        return 2
    except E.CapExceeded as exc:
        print(f"rldg: limit: {exc}", file=sys.stderr)
        return 3
    except E.InvariantViolation as exc:
        print(f"rldg: INVARIANT VIOLATION: {exc}", file=sys.stderr)
        return 4
    except (E.EmptySequence, E.InvalidDigit, E.InvalidAlphabet, E.EvenN) as exc:
        print(f"rldg: error: {exc}", file=sys.stderr)
        return 2


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
