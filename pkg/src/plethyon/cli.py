"""Command-line front end: ``plethyon <subcommand> ...``.

Partitions are entered weakly decreasing, e.g. ``--lambda 5,2,1``; the empty
partition is ``--lambda ""``.  (The underlying combinatorics is usually
written with increasing parts; the tool converts internally.)

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Dict, List, Optional, Sequence

from . import characters, lr, plethysm, quotient_a, quotient_b, verify
from .characters import GroupLabel
from .lr import Expansion
from .partitions import format_partition, length, parse_partition, size

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# argument helpers

def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"unparseable partition {text!r}: {exc}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"ell must satisfy ell >= 1, got {value}")
    return value


def _require_rank(args, minimum: int, route: str) -> int:
    if args.rank is None:
        raise UsageError(f"--rank is required for {route}")
    if args.rank < minimum:
        raise UsageError(f"rank {args.rank} is too small for {route} (need rank >= {minimum})")
    return args.rank


def _envelope(inputs: Dict, result, rank: Optional[int] = None) -> Dict:
    out = {"input": inputs, "result": result}
    out["meta"] = {"stable_range_rank": rank} if rank is not None else {}
    return out


def _expansion_text(exp: Expansion) -> List[str]:
    if not exp:
        return ["  0"]
    return [f"  {v:+d} {format_partition(k)}" for k, v in exp.sorted_items()]


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, text lines, exit code)

def _cmd_quotient_a(args):
    rank = args.rank if args.rank is not None else length(args.mu)
    if rank < length(args.mu):
        raise UsageError(f"rank {rank} is smaller than the length of mu ({length(args.mu)})")
    q = quotient_a.ell_quotient_a(args.mu, args.ell, rank)
    result = {"sign": q.sign, "quotient": [format_partition(p) for p in q.quotient]}
    text = [f"sign: {q.sign:+d}" if q.sign else "sign: 0",
            "quotient: " + " ".join(result["quotient"]) if q.sign else "quotient: (undefined)"]
    inputs = {"mu": format_partition(args.mu), "ell": args.ell, "rank": rank}
    return _envelope(inputs, result), text, EXIT_OK


def _w_table_text(rows, w) -> List[str]:
    xs = [str(x) for x, _ in rows]
    ys = [str(y) for _, y in rows]
    zs = [str(w(x)) for x, _ in rows]
    width = max(len(s) for s in xs + ys + zs)
    return ["  x         : " + " ".join(s.rjust(width) for s in xs),
            "  eta(w0(x)): " + " ".join(s.rjust(width) for s in ys),
            "  w0(x)     : " + " ".join(s.rjust(width) for s in zs)]


def _cmd_quotient_b(args):
    rank = args.rank
    if rank < length(args.mu):
        raise UsageError(f"rank {rank} is smaller than the length of mu ({length(args.mu)})")
    inputs = {"mu": format_partition(args.mu), "ell": args.ell, "rank": rank}
    if args.ell == 1:
        result = {"sign": 1, "identity": True, "levi": f"SO_{2 * rank + 1}",
                  "weight": format_partition(args.mu)}
        text = ["ell = 1: p_1 is the identity plethysm", "sign: +1",
                f"weight: {result['weight']}"]
        return _envelope(inputs, result), text, EXIT_OK
    d = quotient_b.sign_levi_weight(args.mu, args.ell, rank)
    if d.sign == 0:
        return _envelope(inputs, {"sign": 0}), ["sign: 0"], EXIT_OK
    table = quotient_b.w_tilde_table(d.w0)
    result = {
        "sign": d.sign,
        "levi": d.levi_name(),
        "gl_blocks": list(d.gl_blocks),
        "so_block": d.so_block,
        "alpha": list(d.alphas),
        "s": list(d.s_values),
        "weights": [format_partition(v) for v in d.raw_weights],
        "gl_weights": [str(w) for w in d.gl_weights],
        "so_weight": format_partition(d.raw_so_weight) if d.raw_so_weight is not None else None,
        "stable": all(s == a + 1 for s, a in zip(d.s_values, d.alphas)),
        "w_tilde": [[x for x, _ in table], [y for _, y in table]],
        "w0": [[x for x, _ in table], [d.w0(x) for x, _ in table]],
    }
    text = [f"sign: {d.sign:+d}", f"levi: {result['levi']}",
            "alpha: " + " ".join(map(str, d.alphas)),
            "s: " + " ".join(map(str, d.s_values))]
    for k, w in enumerate(result["weights"], start=1):
        text.append(f"weight[{k}]: {w}")
    if result["so_weight"] is not None:
        text.append(f"so weight: {result['so_weight']}")
    text.append("w0:")
    text.extend(_w_table_text(table, d.w0))
    return _envelope(inputs, result), text, EXIT_OK


def _verify_plethysm(args, exp: Expansion) -> List[str]:
    """Compare the universal answer with the rank-``n`` oracle; return mismatch labels."""
    la, ell, n = args.lam, args.ell, args.rank
    groups = {"gl": ["gl"], "so": ["so_odd", "so_even"], "sp": ["sp"]}[args.family]
    bad = []
    for group in groups:
        want = characters.psi_oracle(GroupLabel(group, n), la, ell)
        if dict(exp.restricted(n)) != dict(want):
            bad.append(f"oracle {group} rank {n}")
    if args.family == "so" and ell > 1:
        for mu in plethysm.candidate_partitions(la, ell):
            if length(mu) <= n and exp.get(mu, 0) != plethysm.a_so_via_levi(la, mu, ell, n):
                bad.append(f"levi route at {format_partition(mu)}")
    if args.family == "sp":
        for mu in plethysm.candidate_partitions(la, ell):
            if exp.get(mu, 0) != plethysm.a_sp_dual(la, mu, ell):
                bad.append(f"duality at {format_partition(mu)}")
    return bad


def _cmd_plethysm(args):
    la = args.lam
    inputs = {"family": args.family, "lambda": format_partition(la), "ell": args.ell}
    if args.power:
        degrees = [int(t) for t in args.power.split(",") if t.strip()]
        exp = plethysm.plethysm_power_monomial(la, args.family, degrees)
        inputs = {"family": args.family, "lambda": format_partition(la), "power": degrees}
        n_min = sum(degrees) * size(la)
    else:
        exp = plethysm.psi(la, args.ell, args.family)
        n_min = args.ell * size(la)
    if args.rank is not None:
        inputs["rank"] = args.rank
    text = [f"p o s^{args.family}_{format_partition(la)} ="] + _expansion_text(exp)
    code = EXIT_OK
    payload = _envelope(inputs, exp.to_json(), n_min)
    if args.verify:
        if args.power:
            raise UsageError("--verify applies to a single power sum (use --ell)")
        _require_rank(args, max(n_min, 1), "--verify")
        bad = _verify_plethysm(args, exp)
        payload["verification"] = {"passed": not bad, "mismatches": bad}
        text.append("verification: " + ("pass" if not bad else "FAIL " + "; ".join(bad)))
        code = EXIT_MISMATCH if bad else EXIT_OK
    return payload, text, code


def _cmd_split_square(args):
    la = args.lam
    res = plethysm.split_square(la, args.family)
    inputs = {"family": args.family, "lambda": format_partition(la)}
    result = {"symmetric": res.plus.to_json(), "antisymmetric": res.minus.to_json()}
    text = ["S^2:"] + _expansion_text(res.plus) + ["Lambda^2:"] + _expansion_text(res.minus)
    payload = _envelope(inputs, result, 2 * size(la))
    code = EXIT_OK
    if args.verify:
        closed = plethysm.split_square_closed_form(la, args.family)
        ok = dict(closed.plus) == dict(res.plus) and dict(closed.minus) == dict(res.minus)
        payload["verification"] = {"passed": ok}
        text.append("verification: " + ("pass" if ok else "FAIL"))
        code = EXIT_OK if ok else EXIT_MISMATCH
    return payload, text, code


def _cmd_convert_basis(args):
    if args.expansion is not None:
        try:
            raw = json.loads(args.expansion)
            source = {parse_partition(k): int(v) for k, v in raw.items()}
        except (ValueError, AttributeError) as exc:
            raise UsageError(f"--expansion must be a JSON object of partition: integer ({exc})")
    elif args.lam is not None:
        source = {args.lam: 1}
    else:
        raise UsageError("one of --lambda or --expansion is required")
    exp = plethysm.convert(source, args.source, args.target)
    inputs = {"from": args.source, "to": args.target,
              "expansion": Expansion(source).to_json()}
    text = [f"{args.source} -> {args.target}:"] + _expansion_text(exp)
    return _envelope(inputs, exp.to_json()), text, EXIT_OK


def _cmd_branch(args):
    la, mu, ell = args.lam, args.mu, args.ell
    n_min = max(ell * size(la), length(mu))
    n = _require_rank(args, n_min, "the Levi route")
    inputs = {"lambda": format_partition(la), "mu": format_partition(mu), "ell": ell, "rank": n}
    value = plethysm.a_so_via_levi(la, mu, ell, n)
    result: Dict = {"coefficient": value}
    if ell > 1:
        d = quotient_b.sign_levi_weight(mu, ell, n)
        result.update({"sign": d.sign, "levi": d.levi_name() if d.sign else None,
                       "gl_weights": [str(w) for w in d.gl_weights],
                       "so_weight": format_partition(d.so_weight) if d.so_weight is not None else None})
    text = [f"a_so({format_partition(la)}, {format_partition(mu)}; {ell}) at rank {n}: {value}"]
    if "levi" in result and result["levi"]:
        text.append(f"levi: {result['levi']}")
    payload = _envelope(inputs, result, ell * size(la))
    code = EXIT_OK
    if args.verify:
        ok = value == plethysm.a_so(la, mu, ell)
        payload["verification"] = {"passed": ok}
        text.append("verification: " + ("pass" if ok else "FAIL"))
        code = EXIT_OK if ok else EXIT_MISMATCH
    return payload, text, code


def _cmd_oracle(args):
    n = _require_rank(args, max(length(args.lam), 1), "the oracle")
    g = GroupLabel(args.family, n)
    inputs = {"action": args.action, "family": args.family, "rank": n,
              "lambda": format_partition(args.lam)}
    if args.action == "compute":
        chi = characters.weyl_character(g, args.lam)
        result = {"dimension": chi.at_ones(), "character": chi.to_json()}
        text = [f"{g} character of {format_partition(args.lam)}: {len(chi)} terms, "
                f"dimension {result['dimension']}"]
        return _envelope(inputs, result), text, EXIT_OK
    inputs["ell"] = args.ell
    exp = characters.psi_oracle(g, args.lam, args.ell)
    if args.action == "expand":
        text = [f"p_{args.ell} o chi_{format_partition(args.lam)} on {g}:"] + _expansion_text(exp)
        return _envelope(inputs, exp.to_json()), text, EXIT_OK
    family = {"gl": "gl", "so_odd": "so", "so_even": "so", "sp": "sp"}[args.family]
    mine = plethysm.psi(args.lam, args.ell, family).restricted(n)
    ok = dict(mine) == dict(exp)
    result = {"passed": ok, "oracle": exp.to_json(), "library": mine.to_json()}
    text = [f"oracle vs library on {g}: " + ("pass" if ok else "FAIL")]
    return _envelope(inputs, result, args.ell * size(args.lam)), text, EXIT_OK if ok else EXIT_MISMATCH


def _cmd_verify(args):
    names = args.suite or list(verify.SUITES)
    unknown = [s for s in names if s not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {list(verify.SUITES)}")
    budget = verify.Budget(max_size=args.max_size, timeout=args.timeout)
    reports = verify.run_all(budget, jobs=args.jobs, names=names)
    passed = all(r.passed for r in reports)
    inputs = {"max_size": args.max_size, "timeout": args.timeout, "suites": names}
    result = {"passed": passed, "suites": [r.as_dict() for r in reports]}
    text = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        extra = " (timed out)" if r.timed_out else ""
        text.append(f"{status} {r.name}: {r.checked} checks{extra}")
        text.extend(f"    mismatch: {f}" for f in r.failures[:5])
    return _envelope(inputs, result), text, EXIT_OK if passed else EXIT_MISMATCH


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plethyon", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("quotient-a", _cmd_quotient_a, "sign and l-quotient of a partition")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--rank", type=int)

    p = add("quotient-b", _cmd_quotient_b, "type-B sign, Levi subgroup and weight")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--rank", type=int, required=True)

    p = add("plethysm", _cmd_plethysm, "stable expansion of p_l o s_la")
    p.add_argument("--family", choices=plethysm.GROUPS, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--ell", type=_positive, default=1)
    p.add_argument("--power", help="comma-separated power-sum degrees (product p_b1 p_b2 ...)")
    p.add_argument("--rank", type=int)
    p.add_argument("--verify", action="store_true")

    p = add("split-square", _cmd_split_square, "symmetric and antisymmetric square")
    p.add_argument("--family", choices=plethysm.GROUPS, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--verify", action="store_true")

    p = add("convert-basis", _cmd_convert_basis, "change between gl, so and sp universal bases")
    p.add_argument("--from", dest="source", choices=plethysm.GROUPS, required=True)
    p.add_argument("--to", dest="target", choices=plethysm.GROUPS, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition)
    p.add_argument("--expansion", help='JSON object such as {"(2)": 1, "()": -1}')

    p = add("branch", _cmd_branch, "coefficient of s^so_mu through the Levi branching route")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--verify", action="store_true")

    p = add("oracle", _cmd_oracle, "Weyl-character oracle at a fixed rank")
    p.add_argument("action", choices=("compute", "expand", "verify"))
    p.add_argument("--family", choices=characters.FAMILIES, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--ell", type=_positive, default=1)

    p = add("verify", _cmd_verify, "run the self-verification suites")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--timeout", type=float, default=120.0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--suite", action="append", help="restrict to a suite (repeatable)")
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    cache_dir = os.environ.get("PLETHYON_CACHE_DIR")
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if cache_dir:
            lr.load_disk_cache(cache_dir)
        payload, text, code = args.func(args)
    except UsageError as exc:
        print(f"plethyon: error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"plethyon: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or 0
    finally:
        if cache_dir:
            lr.flush_disk_cache(cache_dir)
    if args.format == "json":
        print(json.dumps(payload, indent=2), file=stdout)
    else:
        print("\n".join(text), file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
