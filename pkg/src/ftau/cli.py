"""Command-line front end.  Exit codes: 0 success, 1 user error, 2 step limit exhausted."""

from __future__ import annotations

import argparse
import json
import sys

from . import golden
from .characters import Character, class_of, eval_character, parse_rational
from .normal_form import (
    DEFAULT_STEP_LIMIT,
    NormalFormError,
    StepLimitExceeded,
    normalize,
    to_normal_form_data,
)
from .plhomeo import PLHomeo, eval_at, generator_x, generator_y, sample_points, to_tsv
from .sigma import INFINITY, kernel_coabelian_type, kernel_witness, sigma_membership
from .subgroups import UNKNOWN, hnn_reduce, hnn_rewrite, in_Ftau_m, in_K
from .words import abelianize, coset_of, eval_word, format_word, lambda_of, parse_word, rho_of

SCHEMA_VERSION = 1


class UserError(Exception):
    pass


class StepLimitVerdict(Exception):
    """A computation that ran out of rewrite steps but still has an output to show."""

    def __init__(self, text: str, record: dict):
        super().__init__(text)
        self.text = text
        self.record = record


def _word(args, text: str):
    w = parse_word(text)
    top = w.max_index()
    if top is not None and top > args.max_index:
        raise UserError(f"index {top} exceeds --max-index {args.max_index}")
    return w


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UserError(str(exc)) from exc


def _pieces_text(f: PLHomeo) -> str:
    lines = []
    for l, r, v, vr, e in f.intervals():
        lines.append(f"[{golden.fmt(l)}, {golden.fmt(r)}] slope t^{e} from {golden.fmt(v)}")
    return "\n".join(lines)


def _pieces_tsv(f: PLHomeo) -> str:
    lines = ["left\tright\tvalue_left\tslope_exponent"]
    for l, r, v, vr, e in f.intervals():
        lines.append(f"{golden.fmt(l)}\t{golden.fmt(r)}\t{golden.fmt(v)}\t{e}")
    return "\n".join(lines)


def _homeo_output(f: PLHomeo):
    return _pieces_text(f), {**f.to_record(), "_tsv": _pieces_tsv(f)}


def cmd_eval(args):
    w = _word(args, args.word)
    f = eval_word(w)
    if args.at is not None:
        x = golden.parse(args.at)
        try:
            y = eval_at(f, x)
        except ValueError as exc:
            raise UserError(str(exc)) from exc
        return golden.fmt(y), {"word": format_word(w), "x": [x.a, x.b], "fx": [y.a, y.b]}
    text, rec = _homeo_output(f)
    return text, {"word": format_word(w), **rec}


def cmd_compose(args):
    f = eval_word(_word(args, args.first))
    g = eval_word(_word(args, args.second))
    return _homeo_output(f * g)


def cmd_gen(args):
    if args.index < 0 or args.index > args.max_index:
        raise UserError(f"generator index must lie in [0, {args.max_index}]")
    f = generator_x(args.index) if args.family == "x" else generator_y(args.index)
    return _homeo_output(f)


def cmd_normalize(args):
    w = _word(args, args.word)
    nf = normalize(w, args.step_limit)
    return format_word(nf), {"word": format_word(w), "normal_form": format_word(nf)}


def cmd_nf_check(args):
    w = _word(args, args.word)
    try:
        data = to_normal_form_data(w)
    except NormalFormError as exc:
        return f"false ({exc})", {"word": format_word(w), "normal": False, "error": str(exc), "position": exc.pos}
    return "true", {"word": format_word(w), "normal": True, "data": data.to_record()}


def cmd_char(args):
    chi = Character(_rational(args.a), _rational(args.b))
    w = _word(args, args.word)
    val = eval_character(chi, w)
    return str(val), {"character": [str(chi.a), str(chi.b)], "word": format_word(w), "value": str(val)}


def cmd_abel(args):
    w = _word(args, args.word)
    ab = abelianize(w)
    return (
        f"({ab.u}, {ab.v}, {ab.z})",
        {"word": format_word(w), "u": ab.u, "v": ab.v, "z": ab.z, "lambda": lambda_of(w), "rho": rho_of(w)},
    )


def _class_arg(args):
    a, b = _rational(args.a), _rational(args.b)
    if a == 0 and b == 0:
        raise UserError("the zero character has no class")
    return class_of((a, b))


def _io(flag: bool) -> str:
    return "in" if flag else "out"


def cmd_sigma(args):
    c = _class_arg(args)
    s1 = sigma_membership(c, 1)
    sinf = sigma_membership(c, INFINITY)
    rec = {
        "class": [c.a, c.b],
        "sigma1": s1,
        "sigma_infty": sinf,
        "kernel_type": kernel_coabelian_type(c).value,
    }
    text = f"Sigma1: {_io(s1)}; Sigma_infty: {_io(sinf)}"
    if args.n is not None:
        if args.n < 1:
            raise UserError("n must be positive")
        sn = sigma_membership(c, args.n)
        rec["n"] = args.n
        rec["sigma_n"] = sn
        text += f"; Sigma{args.n}: {_io(sn)}"
    return text, rec


def cmd_kernel_type(args):
    c = _class_arg(args)
    kt = kernel_coabelian_type(c)
    return kt.value, {"class": [c.a, c.b], "kernel_type": kt.value}


def cmd_witness(args):
    a, b = _rational(args.a), _rational(args.b)
    if a == 0 or b == 0:
        raise UserError("kernel witnesses need both coefficients nonzero")
    t0 = kernel_witness((a, b))
    rec = {"character": [str(a), str(b)], "witness": format_word(t0), "lambda": lambda_of(t0), "rho": rho_of(t0)}
    return format_word(t0), rec


def cmd_coset(args):
    w = _word(args, args.word)
    c = coset_of(w)
    return c, {"word": format_word(w), "coset": c}


def cmd_hnn(args):
    w = _word(args, args.word)
    try:
        h = hnn_rewrite(w)
    except ValueError as exc:
        raise UserError(str(exc)) from exc
    if args.reduce:
        h = hnn_reduce(h, args.step_limit)
    rec = h.to_record()
    return f"a={h.a} core={format_word(h.core) or '1'} b={h.b}", rec


def cmd_member(args):
    w = _word(args, args.word)
    if args.m is None:
        res = in_K(w)
        return str(res).lower(), {"word": format_word(w), "subgroup": "K", "member": res}
    res = in_Ftau_m(w, args.m, args.step_limit)
    rec = {"word": format_word(w), "subgroup": f"F[{args.m}]", "member": res}
    if res == UNKNOWN:
        raise StepLimitVerdict(UNKNOWN, rec)
    return str(res).lower(), rec


def cmd_plot_data(args):
    f = eval_word(_word(args, args.word))
    points = [
        [golden.fmt(x), golden.fmt(y), golden.approx(x, 30), golden.approx(y, 30)]
        for x, y in sample_points(f, args.subdivisions)
    ]
    return None, {"points": points, "_tsv": to_tsv(f, args.subdivisions).rstrip("\n")}


COMMANDS = {
    "eval": cmd_eval,
    "compose": cmd_compose,
    "normalize": cmd_normalize,
    "nf-check": cmd_nf_check,
    "char": cmd_char,
    "abel": cmd_abel,
    "sigma": cmd_sigma,
    "kernel-type": cmd_kernel_type,
    "witness": cmd_witness,
    "coset": cmd_coset,
    "hnn": cmd_hnn,
    "member": cmd_member,
    "gen": cmd_gen,
    "plot-data": cmd_plot_data,
}


def build_parser() -> argparse.ArgumentParser:
    def add_common(p, default):
        d = (lambda v: v) if default else (lambda v: argparse.SUPPRESS)
        p.add_argument("--step-limit", type=int, default=d(DEFAULT_STEP_LIMIT), help="maximum rewrite steps")
        p.add_argument("--format", choices=("text", "json", "tsv"), default=d("text"))
        p.add_argument("--max-index", type=int, default=d(64), help="largest generator index accepted")

    parser = argparse.ArgumentParser(prog="ftau", description="Exact computations in the golden mean Thompson group.")
    add_common(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    add_common(common, False)
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("word", help='word such as "x0 y1 x2^-2"')
        return p

    def char_cmd(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("a", help="coefficient of lambda (p or p/q)")
        p.add_argument("b", help="coefficient of rho (p or p/q)")
        return p

    word_cmd("eval", "PL map of a word, or its value at a point").add_argument("--at", help="point such as 1-1t")
    p = sub.add_parser("compose", parents=[common], help="PL map of FIRST followed by SECOND")
    p.add_argument("first")
    p.add_argument("second")
    word_cmd("normalize", "normal form of a word")
    word_cmd("nf-check", "is the word a normal form?")
    p = char_cmd("char", "value of a*lambda + b*rho on a word")
    p.add_argument("word")
    word_cmd("abel", "image in the abelianization (u, v, z)")
    char_cmd("sigma", "Sigma membership of [a*lambda + b*rho]").add_argument("--n", type=int)
    char_cmd("kernel-type", "finiteness type of the kernel")
    char_cmd("witness", "kernel element t0 with minimal |lambda(t0)|")
    word_cmd("coset", "coset of K containing the word")
    word_cmd("hnn", "HNN shape x0^a core x0^-b").add_argument("--reduce", action="store_true")
    word_cmd("member", "membership in K, or in F[m] with --m").add_argument("--m", type=int)
    p = sub.add_parser("gen", parents=[common], help="PL map of a generator")
    p.add_argument("family", choices=("x", "y"))
    p.add_argument("index", type=int)
    word_cmd("plot-data", "TSV of sample points (x, f(x))").add_argument("--subdivisions", type=int, default=4)
    return parser


def _render(args, text, record) -> str:
    cmd = args.command
    tsv = record.pop("_tsv", None)
    if args.format == "json":
        return json.dumps({"schema": f"ftau.{cmd}/{SCHEMA_VERSION}", **record}, sort_keys=True)
    if args.format == "tsv" or text is None:
        if tsv is not None:
            return tsv
        return "\t".join(f"{k}={v}" for k, v in sorted(record.items()))
    return text


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if args.step_limit <= 0:
        print("error: --step-limit must be positive", file=err)
        return 1
    try:
        text, record = COMMANDS[args.command](args)
    except StepLimitVerdict as exc:
        print(_render(args, exc.text, exc.record), file=out)
        print("error: step limit exhausted", file=err)
        return 2
    except StepLimitExceeded as exc:
        print(f"error: {exc}; partial rewrite: {format_word(exc.partial)}", file=err)
        return 2
    except (UserError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    print(_render(args, text, record), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
