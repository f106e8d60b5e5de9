"""Command-line front end.

Commands parse small "key = value" files (UTF-8, "#" comments), call
the library, and emit deterministic key-value reports: identical inputs
produce byte-identical output.  Exit codes: 0 for a positive outcome,
1 negative, 2 input error, 3 undecided.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .equiv import (
    CERTIFIED_EQUIVALENT,
    DEFAULT_BOUND,
    EQUIVALENT_UP_TO_BOUND,
    arith_equiv,
)
from .errors import ArithmeqError, ParseError
from .exact.intpoly import IntPoly
from .gassmann import (
    PermGroup,
    format_permutation,
    gassmann_equal,
    gassmann_implies_types,
    parse_generators,
)
from .intutil import format_factored
from .nf import NumberField, decompose, make_field, places_over
from .sarith import (
    COMMENSURABLE,
    CONCENTRATED,
    CSP_ASSERTED,
    CSP_AUTO,
    CSP_UNKNOWN,
    NOT_COMMENSURABLE,
    GroupSpec,
    Triple,
    decide_commensurability,
    l2_profile,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_UNKNOWN = 3


# -- file parsing ---------------------------------------------------------------


def _read_kv(path: str, allowed: set[str], required: set[str]) -> dict[str, str]:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    out: dict[str, str] = {}
    for lineno, line in enumerate(raw.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in allowed:
            raise ParseError(f"{path}:{lineno}: unknown key {key!r}")
        if key in out:
            raise ParseError(f"{path}:{lineno}: duplicate key {key!r}")
        out[key] = value
    missing = required - out.keys()
    if missing:
        raise ParseError(f"{path}: missing required key(s) {sorted(missing)}")
    return out


def _parse_poly(text: str) -> IntPoly:
    try:
        coeffs = [int(tok.strip()) for tok in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad coefficient list {text!r}") from exc
    return IntPoly(coeffs)


def load_field_file(path: str) -> NumberField:
    kv = _read_kv(path, allowed={"poly"}, required={"poly"})
    return make_field(_parse_poly(kv["poly"]))


_TRIPLE_KEYS = {"poly", "group", "real_forms", "S", "csp", "local_rank"}


def load_triple_file(path: str) -> Triple:
    kv = _read_kv(path, allowed=_TRIPLE_KEYS, required={"poly", "group"})
    field = make_field(_parse_poly(kv["poly"]))

    group_tokens = kv["group"].split()
    if not group_tokens:
        raise ParseError(f"{path}: empty group")
    family = group_tokens[0]
    if family == "SL":
        if len(group_tokens) != 2 or not group_tokens[1].isdigit():
            raise ParseError(f"{path}: group must be 'SL n'")
        if "real_forms" in kv:
            raise ParseError(f"{path}: real_forms only applies to Spin groups")
        spec_args = {"family": "SL", "n": int(group_tokens[1])}
    elif family == "Spin":
        if len(group_tokens) != 3 or not all(t.isdigit() for t in group_tokens[1:]):
            raise ParseError(f"{path}: group must be 'Spin p q'")
        p, q = int(group_tokens[1]), int(group_tokens[2])
        forms = _parse_real_forms(kv.get("real_forms", ""), path)
        if not forms:
            # default: the same signature at every real place
            forms = tuple((p, q) for _ in range(field.signature[0]))
        spec_args = {"family": "Spin", "n": p + q, "signatures": forms}
    else:
        raise ParseError(f"{path}: unknown group family {family!r}")

    overrides = {}
    for tok in kv.get("local_rank", "").split():
        parts = tok.split(":")
        if len(parts) != 3:
            raise ParseError(f"{path}: local_rank entry must be p:ordinal:r, got {tok!r}")
        try:
            pp, oo, rr = (int(x) for x in parts)
        except ValueError as exc:
            raise ParseError(f"{path}: bad local_rank entry {tok!r}") from exc
        overrides[(pp, oo)] = rr
    if overrides:
        spec_args["local_rank_overrides"] = overrides
    group = GroupSpec(**spec_args)

    finite_s = set()
    for tok in kv.get("S", "").split():
        parts = tok.split(":")
        if len(parts) != 2:
            raise ParseError(f"{path}: S entry must be p:ordinal, got {tok!r}")
        try:
            pp, oo = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"{path}: bad S entry {tok!r}") from exc
        finite_s.add((pp, oo))

    csp_map = {"auto": CSP_AUTO, "assert": CSP_ASSERTED, "unknown": CSP_UNKNOWN}
    csp_text = kv.get("csp", "auto").lower()
    if csp_text not in csp_map:
        raise ParseError(f"{path}: csp must be auto|assert|unknown")
    return Triple(field, group, frozenset(finite_s), csp_map[csp_text])


def _parse_real_forms(text: str, path: str) -> tuple[tuple[int, int], ...]:
    forms = []
    for tok in text.split():
        tok = tok.strip()
        if not (tok.startswith("(") and tok.endswith(")")):
            raise ParseError(f"{path}: real_forms entries look like (p,q), got {tok!r}")
        try:
            a, b = (int(x) for x in tok[1:-1].split(","))
        except ValueError as exc:
            raise ParseError(f"{path}: bad real_forms entry {tok!r}") from exc
        forms.append((a, b))
    return tuple(forms)


# -- commands ---------------------------------------------------------------------


def _emit(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_field(args: argparse.Namespace) -> int:
    k = load_field_file(args.path)
    lines = [
        f"degree = {k.degree}",
        f"disc = {k.field_disc}",
        f"disc.factored = {format_factored(k.field_disc)}",
        f"signature = ({k.signature[0]},{k.signature[1]})",
        f"index_primes = {' '.join(str(p) for p in sorted(k.index_primes)) or 'none'}",
    ]
    _emit(lines, args.out)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    k = load_field_file(args.path)
    places = places_over(k, args.p)
    lines = [
        f"place {args.p}:{pl.ordinal} e={pl.e} f={pl.f}" for pl in places
    ]
    _emit(lines, args.out)
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    k = load_field_file(args.path_k)
    l = load_field_file(args.path_l)
    report = arith_equiv(k, l, args.bound)
    lines = [f"verdict = {report.verdict}", f"method = {report.method}"]
    if report.method == "sweep":
        lines.append(f"bound = {report.bound}")
        lines.append(f"primes_compared = {report.compared}")
    if report.witness is not None:
        lines.append(f"witness = {report.witness}")
    if report.norm_factor_degrees:
        lines.append(
            "norm_factor_degrees = "
            + " ".join(str(d) for d in report.norm_factor_degrees)
        )
    if report.battery is not None:
        b = report.battery
        lines.append(f"battery.degree_equal = {str(b.degree_equal).lower()}")
        lines.append(f"battery.disc_equal = {str(b.disc_equal).lower()}")
        lines.append(f"battery.signature_equal = {str(b.signature_equal).lower()}")
    _emit(lines, args.out)
    if report.verdict in (CERTIFIED_EQUIVALENT, EQUIVALENT_UP_TO_BOUND):
        return EXIT_OK
    return EXIT_NEGATIVE


def cmd_check(args: argparse.Namespace) -> int:
    a = load_triple_file(args.path_a)
    b = load_triple_file(args.path_b)
    verdict = decide_commensurability(a, b, args.bound)
    lines = [f"outcome = {verdict.outcome}"]
    for cond in verdict.conditions:
        lines.append(f"cond.{cond.name} = {cond.status}")
    for cond in verdict.conditions:
        if cond.status != "pass" and cond.evidence:
            lines.append(f"evidence.{cond.name} = {cond.evidence}")
    if verdict.csp_caveat:
        lines.append(f"csp_caveat = {verdict.csp_caveat}")
    _emit(lines, args.out)
    if verdict.outcome == COMMENSURABLE:
        return EXIT_OK
    if verdict.outcome == NOT_COMMENSURABLE:
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def cmd_l2(args: argparse.Namespace) -> int:
    t = load_triple_file(args.path)
    profile = l2_profile(t)
    lines = [f"l2 = {'concentrated' if profile.kind == CONCENTRATED else 'all_zero'}"]
    if profile.degree is not None:
        lines.append(f"degree = {profile.degree}")
    sign = {1: "+1", 0: "0", -1: "-1"}[profile.euler_sign]
    lines.append(f"euler_sign = {sign}")
    _emit(lines, args.out)
    return EXIT_OK


def cmd_gassmann(args: argparse.Namespace) -> int:
    kv = _read_kv(
        args.path,
        allowed={"degree", "group", "U", "V"},
        required={"degree", "group", "U", "V"},
    )
    try:
        degree = int(kv["degree"])
    except ValueError as exc:
        raise ParseError(f"bad degree {kv['degree']!r}") from exc
    group = PermGroup(degree, parse_generators(kv["group"], degree))
    u_gens = parse_generators(kv["U"], degree)
    v_gens = parse_generators(kv["V"], degree)
    equal, witness = gassmann_equal(group, u_gens, v_gens)
    lines = [f"group_order = {len(group)}", f"gassmann = {str(equal).lower()}"]
    if equal:
        types = gassmann_implies_types(group, u_gens, v_gens)
        lines.append(f"cycle_types_agree = {str(types).lower()}")
    else:
        lines.append(f"witness = {format_permutation(witness)}")
    _emit(lines, args.out)
    return EXIT_OK if equal else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithmeq",
        description=(
            "Exact invariants of number fields, arithmetical equivalence "
            "tests, and profinite commensurability checks for S-arithmetic "
            "triples."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="degree, discriminant, signature, index primes")
    p_field.add_argument("path", help="field file")

    p_dec = sub.add_parser("decompose", help="places over a rational prime")
    p_dec.add_argument("path", help="field file")
    p_dec.add_argument("p", type=int, help="rational prime")

    p_eq = sub.add_parser("equiv", help="arithmetical equivalence of two fields")
    p_eq.add_argument("path_k", help="first field file")
    p_eq.add_argument("path_l", help="second field file")

    p_chk = sub.add_parser("check", help="profinite commensurability of two triples")
    p_chk.add_argument("path_a", help="first triple file")
    p_chk.add_argument("path_b", help="second triple file")

    p_l2 = sub.add_parser("l2", help="l2-Betti concentration degree and Euler sign")
    p_l2.add_argument("path", help="triple file")

    p_gm = sub.add_parser("gassmann", help="compare two coset permutation characters")
    p_gm.add_argument("path", help="permutation group file")

    for p in (p_eq, p_chk):
        p.add_argument(
            "--bound",
            type=int,
            default=DEFAULT_BOUND,
            help=f"prime sweep bound (default {DEFAULT_BOUND})",
        )
    for p in (p_field, p_dec, p_eq, p_chk, p_l2, p_gm):
        p.add_argument("--out", default=None, help="write the report to a file")

    p_field.set_defaults(func=cmd_field)
    p_dec.set_defaults(func=cmd_decompose)
    p_eq.set_defaults(func=cmd_equiv)
    p_chk.set_defaults(func=cmd_check)
    p_l2.set_defaults(func=cmd_l2)
    p_gm.set_defaults(func=cmd_gassmann)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ArithmeqError, ValueError) as exc:
        sys.stdout.write(f"ERROR: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR


def entry() -> None:  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    entry()
