"""Command-line front end.

Every verb maps to one library call.  Exit status: 0 on success, 1 on a
domain error (message on stderr), 2 on a usage error.  ``--json`` switches
to structured output; rationals are written as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import classification, fibonacci, forms, integral, monoid
from .quaternion import AlgebraParams, parse_quaternion, quaternion_to_json
from .scalars import format_rational, parse_rational

PROG = "qfarith"


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def search_limit_cap() -> int | None:
    """Global cap on brute-force ranges, from ``QF_SEARCH_LIMIT`` (unset: none)."""
    raw = os.environ.get("QF_SEARCH_LIMIT", "").strip()
    if not raw:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"QF_SEARCH_LIMIT must be an integer, got {raw!r}") from None
    if cap < 0:
        raise UsageError("QF_SEARCH_LIMIT must be nonnegative")
    return cap


def _enforce_cap(what: str, value: int) -> None:
    cap = search_limit_cap()
    if cap is not None and value > cap:
        raise DomainError(f"{what} {value} exceeds QF_SEARCH_LIMIT={cap}")


# --- argument types -------------------------------------------------------------


def _arg(conv: Callable, label: str):
    def parse(text: str):
        try:
            return conv(text)
        except (ValueError, TypeError) as exc:
            raise argparse.ArgumentTypeError(f"invalid {label} {text!r}: {exc}") from None

    parse.__name__ = label
    return parse


_form = _arg(forms.FormTuple.parse, "form")
_sigma = _arg(fibonacci.SigmaPermutation.parse, "permutation")
_subring = _arg(integral.SubringElement.parse, "subring element")


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return v


# --- handlers: each returns (human_text, json_obj) -------------------------------


def cmd_classify(args):
    if args.field == "q":
        res = classification.reduced_discriminant(args.b, args.c)
        primes = ", ".join(map(str, res.ramified_primes)) or "none"
        text = (
            f"H_Q(-{args.b},-{args.c}): {res.verdict.value}\n"
            f"reduced discriminant: {res.reduced_discriminant}\n"
            f"ramified primes: {primes}"
        )
        return text, res.to_json()
    _enforce_cap("search bound", args.bound)
    res = classification.classify_over_gaussian(args.b, args.c, args.bound)
    data = res.to_json()
    lines = [f"H_Q(i)(-{args.b},-{args.c}): {res.status.value}"]
    if res.witness is not None:
        lines.append("witness (x, y, z): (" + ", ".join(data["witness"]) + ")")
    else:
        lines.append(f"no conic point with height <= {args.bound} (not a proof of division)")
    primes = ", ".join(map(str, res.ramified_rational_primes)) or "none"
    lines.append(f"rational primes with local obstruction: {primes}")
    return "\n".join(lines), data


def cmd_represent(args):
    n_text = args.n
    if "/" in n_text:
        try:
            m = parse_rational(n_text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        f = args.form
        if f.a != 1 or f.d != f.b * f.c:
            raise DomainError("rational targets need a norm form 1,b,c,bc")
        rep = forms.represent_rational(m, f.b, f.c)
        coords = [format_rational(x) for x in rep]
        data = {"n": format_rational(m), "form": list(f), "representation": coords}
        return f"{format_rational(m)} = f({', '.join(coords)})", data
    try:
        n = int(n_text)
    except ValueError:
        raise UsageError(f"not an integer: {n_text!r}") from None
    if n < 0:
        raise DomainError("n must be nonnegative")
    _enforce_cap("n", n)
    rep = forms.represent(n, args.form)
    data = {"n": n, "form": list(args.form), "representation": None if rep is None else list(rep)}
    if rep is None:
        return f"{n} is not represented by ({args.form})", data
    return f"{n} = f({', '.join(map(str, rep))})", data


def cmd_universal(args):
    _enforce_cap("limit", args.limit)
    res = forms.verify_universal(args.form, args.limit)
    text = "true" if res.universal else f"false (least non-represented: {res.counterexample})"
    return text, res.to_json()


def _lattice_arg(text: str, params: AlgebraParams) -> integral.LatticePoint:
    try:
        return integral.LatticePoint(parse_quaternion(text, params))
    except ValueError as exc:
        raise UsageError(f"invalid integer quaternion {text!r}: {exc}") from None


def cmd_qdiv(args):
    params = AlgebraParams(args.b, args.c)
    x = _lattice_arg(args.x, params)
    y = _lattice_arg(args.y, params)
    if args.scaled:
        gamma, theta = integral.divide_with_scaled_remainder(x, y)
        identity = "n(y)*x = gamma*y + n(y)*theta"
    else:
        gamma, theta = integral.right_divide(x, y)
        identity = "x = gamma*y + theta"
    data = {
        "algebra": params.to_json(),
        "mode": "scaled" if args.scaled else "right",
        "identity": identity,
        "x": quaternion_to_json(x.q)["coords"],
        "y": quaternion_to_json(y.q)["coords"],
        "gamma": quaternion_to_json(gamma.q)["coords"],
        "theta": quaternion_to_json(theta.q)["coords"],
        "norm_y": y.norm(),
        "norm_theta": theta.norm(),
    }
    text = (
        f"gamma = {gamma}\ntheta = {theta}\n"
        f"n(theta) = {theta.norm()} < n(y) = {y.norm()}\n{identity}"
    )
    return text, data


def cmd_residues(args):
    rs = integral.residue_system(args.phi)
    reps = ", ".join(f"{m} -> {r}" for m, r in enumerate(rs.representatives))
    return f"Z[v]/({args.phi}) ~ Z_{rs.size}: {reps}", rs.to_json()


def cmd_tores(args):
    q = args.q
    rs = integral.residue_system(args.phi)
    m = rs.to_residue(q)
    data = {"q": str(q), "modulus": str(args.phi), "residue": m,
            "representative": str(rs.int_map(m))}
    return str(m), data


def cmd_fib(args):
    value = fibonacci.lucas(args.n) if args.lucas else fibonacci.fib(args.n)
    return str(value), {"n": args.n, "sequence": "lucas" if args.lucas else "fibonacci",
                        "value": value}


def cmd_pisano(args):
    p = fibonacci.pisano_period(args.m)
    return str(p), {"m": args.m, "period": p}


def cmd_fibquat(args):
    fq = fibonacci.fib_hurwitz(args.n, args.sigma)
    data = {"n": args.n, "sigma": list(args.sigma.offsets), "value": quaternion_to_json(fq.value)}
    text = str(fq.value)
    if args.norm:
        nrm = fq.norm()
        data["norm"] = format_rational(nrm)
        data["fib_2n_plus_3"] = fibonacci.fib(2 * args.n + 3)
        text += f"\nnorm = {format_rational(nrm)}"
    return text, data


def cmd_fibprod(args):
    sp = fibonacci.special_product(args.n, args.l)
    data = {
        "n": sp.n,
        "l": sp.l,
        "k": sp.k,
        "product": quaternion_to_json(sp.product),
        "trace": sp.trace,
        "vector_part": quaternion_to_json(sp.vector_part),
        "stated_form": quaternion_to_json(sp.stated_form),
        "stated_form_holds": sp.holds,
    }
    text = (
        f"product = {sp.product}\ntrace = {sp.trace}\n"
        f"product - trace/2 = {sp.vector_part}\n"
        f"stated closed form = {sp.stated_form} ({'agrees' if sp.holds else 'DIFFERS'})"
    )
    return text, data


def cmd_monoid_fib(args):
    top = (1 << args.k) - 1
    for name in ("a", "b"):
        v = getattr(args, name)
        if not 0 <= v <= top:
            raise DomainError(f"--{name} {v} outside [0, {top}] for k={args.k}")
    a = monoid.MonoidElement(args.k, args.a)
    b = monoid.MonoidElement(args.k, args.b)
    tr = monoid.fib_sequence(a, b, monoid.Variant(args.variant))
    text = (
        "terms: " + ", ".join(str(x) for x in tr.terms) + ", ...\n"
        f"t = {tr.t}\nlimit = {tr.limit}"
    )
    return text, tr.to_json()


def cmd_identity_check(args):
    ok = fibonacci.check_identity(args.name, *args.args)
    ident = fibonacci.IDENTITIES[args.name]
    return ("true" if ok else "false"), {
        "identity": args.name,
        "statement": ident.text,
        "args": list(args.args),
        "holds": ok,
    }


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured JSON output")

    parser = argparse.ArgumentParser(prog=PROG, parents=[common],
                                     description="Exact quaternion and quadratic-form arithmetic.")
    parser.set_defaults(json=False)
    sub = parser.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "split/division and reduced discriminant of H(-b,-c)")
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--field", choices=("q", "qi"), default="q")
    p.add_argument("--bound", type=_nonneg_int, default=8,
                   help="witness search height over Q(i) (default 8)")

    p = add("represent", cmd_represent, "represent N (or p/q) by a diagonal quaternary form")
    p.add_argument("n", metavar="N")
    p.add_argument("--form", type=_form, required=True)

    p = add("universal", cmd_universal, "check that a form represents 1..limit")
    p.add_argument("--form", type=_form, required=True)
    p.add_argument("--limit", type=_nonneg_int, default=10_000)

    p = add("qdiv", cmd_qdiv, "integer quaternion division with remainder")
    p.add_argument("x", metavar="X")
    p.add_argument("y", metavar="Y")
    p.add_argument("--scaled", action="store_true",
                   help="n(y) x = gamma y + n(y) theta form (any algebra of the list)")
    p.add_argument("-b", type=int, default=1)
    p.add_argument("-c", type=int, default=1)

    p = add("residues", cmd_residues, "residue representatives of Z[v] modulo phi")
    p.add_argument("--phi", type=_subring, required=True)

    p = add("tores", cmd_tores, "integer residue of q modulo phi")
    p.add_argument("q", metavar="Q", type=_subring)
    p.add_argument("--phi", type=_subring, required=True)

    p = add("fib", cmd_fib, "Fibonacci (or Lucas) number")
    p.add_argument("n", metavar="N", type=_nonneg_int)
    p.add_argument("--lucas", action="store_true")

    p = add("pisano", cmd_pisano, "Pisano period modulo M")
    p.add_argument("m", metavar="M", type=int)

    p = add("fibquat", cmd_fibquat, "sigma-permutated Fibonacci-Hurwitz quaternion")
    p.add_argument("n", metavar="N", type=int)
    p.add_argument("--sigma", type=_sigma, default=fibonacci.NORM_LAW_SIGMAS[0])
    p.add_argument("--norm", action="store_true")

    p = add("fibprod", cmd_fibprod, "special product of Fibonacci-Hurwitz quaternions")
    p.add_argument("n", metavar="N", type=int)
    p.add_argument("l", metavar="L", type=int)

    p = add("monoid-fib", cmd_monoid_fib, "Fibonacci sequence in the finite monoid")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--variant", choices=[v.value for v in monoid.Variant], default="add")

    p = add("identity-check", cmd_identity_check, "evaluate a Fibonacci identity exactly")
    p.add_argument("name", choices=sorted(fibonacci.IDENTITIES))
    p.add_argument("args", metavar="ARG", type=int, nargs="*")

    return parser


# options whose values may legitimately start with '-' (e.g. --phi -1+2v)
_VALUE_OPTIONS = frozenset(
    {"-b", "-c", "--a", "--b", "--k", "--phi", "--form", "--sigma", "--limit", "--bound"}
)


def _glue_option_values(argv: Sequence[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--":
            out.extend(argv[i:])
            break
        if tok in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_option_values(list(argv)))
    except SystemExit as exc:  # argparse usage errors and --help
        return int(exc.code or 0)
    try:
        text, data = args.func(args)
    except UsageError as exc:
        print(f"{PROG}: usage error: {exc}", file=stderr)
        return 2
    except (DomainError, ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"{PROG}: error: {exc}", file=stderr)
        return 1
    if args.json:
        print(json.dumps(data, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
