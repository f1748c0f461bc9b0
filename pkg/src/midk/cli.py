"""Command-line front end.

Exit status: 0 when the property holds or output was produced, 1 when the
property fails (a witness is printed), 2 on usage, input or bound errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from midk import suite
from midk.errors import MidkError, NotNDEP
from midk.exchange import (
    check_ndep,
    check_polymatroidal,
    check_weakly_polymatroidal,
    ndep_pair_certificate,
    ndep_violations,
    search_weakly_polymatroidal_order,
    variable_order,
)
from midk.hypergraph import (
    WeightedHypergraph,
    is_totally_balanced,
    kcover_ideal,
    minimal_kcovers,
    three_edge_order,
)
from midk.linquot import is_admissible_order, ndep_admissible_order, search_linear_quotients
from midk.monomial import (
    MonomialIdeal,
    colon_monomial,
    component,
    intersect,
    multiply,
    parse_monomial,
    power,
    render,
    veronese,
)
from midk.resolution import CHECK_PRIME, DEFAULT_PRIME, characteristic_check, is_componentwise_linear

OK, FAILS, ERROR = 0, 1, 2


class UsageError(MidkError):
    pass


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_ideal(path: str) -> MonomialIdeal:
    """Ideal file: {"n": int, "generators": [[exponents], ...]}; "x1^2*x3" strings are accepted too."""
    data = _read_json(path)
    if isinstance(data, dict) and isinstance(data.get("generators"), list) and isinstance(data.get("n"), int):
        n = data["n"]
        gens = [parse_monomial(g, n) if isinstance(g, str) else g for g in data["generators"]]
        data = {"n": n, "generators": gens}
    try:
        return MonomialIdeal.from_json(data)
    except MidkError as exc:
        raise UsageError(f"{path}: {exc}") from None


def load_hypergraph(path: str) -> WeightedHypergraph:
    try:
        return WeightedHypergraph.from_json(_read_json(path))
    except MidkError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


class Out:
    """Collects human lines or a JSON payload and writes one or the other."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []

    def say(self, line: str) -> None:
        self.lines.append(line)

    def emit(self, payload) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2))
        else:
            print("\n".join(self.lines))


def _ideal_lines(I: MonomialIdeal) -> list[str]:
    return [f"{len(I)} generators in {I.n} variables"] + [render(g) for g in I.gens]


# -- gens ---------------------------------------------------------------------


def cmd_gens(args, out: Out) -> int:
    op = args.op
    if op == "veronese":
        if args.vars is None or args.power is None or args.n is None:
            raise UsageError("gens veronese needs --vars, --power and --n")
        I = veronese(_ints(args.vars, "--vars"), args.power, args.n)
    else:
        if not args.inputs:
            raise UsageError(f"gens {op} needs an ideal file")
        A = load_ideal(args.inputs[0])
        if op in ("intersect", "multiply"):
            if len(args.inputs) != 2:
                raise UsageError(f"gens {op} needs two ideal files")
            B = load_ideal(args.inputs[1])
            I = intersect(A, B) if op == "intersect" else multiply(A, B)
        elif op == "power":
            if args.power is None:
                raise UsageError("gens power needs --power")
            I = power(A, args.power)
        elif op == "component":
            if args.degree is None:
                raise UsageError("gens component needs --degree")
            I = component(A, args.degree)
        else:  # colon
            if args.monomial is None:
                raise UsageError("gens colon needs --monomial")
            I = colon_monomial(A, parse_monomial(args.monomial, A.n))
    for line in _ideal_lines(I):
        out.say(line)
    out.emit(I.to_json())
    return OK


# -- check --------------------------------------------------------------------


def _certificate(cert, out: Out, extra: dict | None = None) -> int:
    out.say(cert.describe())
    payload = cert.to_json()
    if extra:
        payload.update(extra)
    out.emit(payload)
    return OK if cert.holds else FAILS


def check_ndep_cmd(I: MonomialIdeal, args, out: Out) -> int:
    if args.pair:
        u, v, i = args.pair
        if not i.isdigit():
            raise UsageError(f"--pair pivot must be a variable index, got {i!r}")
        cert = ndep_pair_certificate(I, parse_monomial(u, I.n), parse_monomial(v, I.n), int(i))
        return _certificate(cert, out)
    if args.all:
        found = list(ndep_violations(I))
        for cert in found:
            out.say(cert.describe())
        if not found:
            out.say("holds")
        out.emit({"verdict": "violated" if found else "holds", "violations": [c.to_json() for c in found]})
        return FAILS if found else OK
    return _certificate(check_ndep(I), out)


def cmd_check(args, out: Out) -> int:
    prop = args.property
    if prop == "totally-balanced":
        H = load_hypergraph(args.input)
        report = is_totally_balanced(H, args.min_length)
        if report.balanced:
            out.say("totally balanced")
        else:
            verts, edges = report.cycle
            out.say(f"special cycle through vertices {list(verts)} using edges {list(edges)}")
        out.emit(report.to_json())
        return OK if report.balanced else FAILS

    I = load_ideal(args.input)
    if prop == "ndep":
        return check_ndep_cmd(I, args, out)
    if prop == "polymatroidal":
        return _certificate(check_polymatroidal(I), out)
    if prop == "weakly":
        order = variable_order(args.order, I.n) if args.order else None
        cert = check_weakly_polymatroidal(I, order)
        shown = order or tuple(range(1, I.n + 1))
        out.say("order " + " > ".join(f"x{i}" for i in shown))
        return _certificate(cert, out, {"order": list(shown)})
    if prop == "weakly-search":
        result = search_weakly_polymatroidal_order(I, args.limit)
        if result.order:
            out.say("order " + " > ".join(f"x{i}" for i in result.order))
        else:
            out.say(f"no weakly polymatroidal order among {result.tried} tried")
        out.emit(result.to_json())
        return OK if result.order else FAILS
    if prop == "admissible":
        if not args.sequence:
            raise UsageError("check admissible needs --sequence 'g1;g2;...'")
        order = [parse_monomial(t, I.n) for t in args.sequence.split(";")]
        cert = is_admissible_order(I, order)
        out.say(cert.describe())
        out.emit(cert.to_json())
        return OK if cert.holds else FAILS
    if prop == "linear-quotients":
        order = search_linear_quotients(I, args.limit)
        if order is None:
            out.say("no admissible order exists")
        else:
            out.say("admissible order: " + ", ".join(render(g) for g in order))
        out.emit({"linear_quotients": order is not None, "order": None if order is None else [list(g) for g in order]})
        return OK if order is not None else FAILS
    # componentwise-linear
    report = is_componentwise_linear(I, args.prime)
    for d, ok in report.degrees.items():
        out.say(f"degree {d}: {'linear' if ok else 'not linear'}")
    out.say("componentwise linear" if report.linear else "not componentwise linear")
    out.emit(report.to_json())
    return OK if report.linear else FAILS


# -- cover, order, betti ------------------------------------------------------


def cmd_cover(args, out: Out) -> int:
    H = load_hypergraph(args.input)
    if args.kind == "ideal":
        I = kcover_ideal(H, args.k)
        for line in _ideal_lines(I):
            out.say(line)
        out.emit(I.to_json())
    else:
        covers = sorted(minimal_kcovers(H, args.k))
        out.say(f"{len(covers)} minimal {args.k}-covers")
        for c in covers:
            out.say(" ".join(map(str, c)))
        out.emit({"n": H.n, "k": args.k, "covers": [list(c) for c in covers]})
    return OK


def cmd_order(args, out: Out) -> int:
    if args.kind == "ndep":
        if not args.input:
            raise UsageError("order ndep needs an ideal file")
        I = load_ideal(args.input)
        try:
            order = ndep_admissible_order(I)
        except NotNDEP as exc:
            out.say(str(exc))
            out.emit({"verdict": "violated", "witness": list(exc.witness), "variable": exc.variable})
            return FAILS
        out.say(", ".join(render(g) for g in order))
        out.emit({"order": [list(g) for g in order]})
        return OK
    if args.input:
        H = load_hypergraph(args.input)
        edges, n = [J for J, _ in H.edges], H.n
    elif args.edges:
        edges, n = [_ints(part, "--edges") for part in args.edges.split(";")], args.n
    else:
        raise UsageError("order three-edge needs a hypergraph file or --edges '1,2;2,3;3,4'")
    if len(edges) != 3:
        raise UsageError(f"order three-edge needs exactly three edges, got {len(edges)}")
    order = three_edge_order(*edges, n=n)
    out.say(" > ".join(f"x{i}" for i in order))
    out.emit({"order": list(order)})
    return OK


def cmd_betti(args, out: Out) -> int:
    I = load_ideal(args.input)
    primes = [args.prime] + ([args.check_prime] if args.check_prime else [])
    agree, tables = characteristic_check(I, primes)
    out.say(tables[0].render())
    payload = tables[0].to_json()
    payload["prime"] = args.prime
    if args.check_prime:
        out.say(f"agrees over {args.check_prime}: {agree}")
        payload["check_prime"] = args.check_prime
        payload["agree"] = agree
    out.emit(payload)
    return OK if agree else FAILS


def cmd_paper_suite(args, out: Out) -> int:
    report = suite.paper_suite()
    if args.theorems:
        report.rows.extend(s.row() for s in suite.theorem_sweeps(args.seed, args.theorems))
    if args.dump:
        target = Path(args.dump)
        target.mkdir(parents=True, exist_ok=True)
        for name, make in suite.FIXTURE_IDEALS.items():
            (target / f"{name}.json").write_text(json.dumps(make().to_json()) + "\n")
    out.say(report.render())
    out.emit(report.to_json())
    return OK if report.passed else FAILS


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="midk", description=__doc__.splitlines()[0])
    parser.add_argument("--json", dest="json_global", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gens", parents=[common], help="generate an ideal")
    g.add_argument("op", choices=["intersect", "multiply", "power", "veronese", "component", "colon"])
    g.add_argument("inputs", nargs="*", help="ideal JSON files")
    g.add_argument("--vars", help="comma-separated 1-based variables (veronese)")
    g.add_argument("--power", type=int)
    g.add_argument("--n", type=int, help="ambient variable count (veronese)")
    g.add_argument("--degree", type=int)
    g.add_argument("--monomial", help="e.g. x1*x2^2 (colon)")
    g.set_defaults(func=cmd_gens)

    c = sub.add_parser("check", parents=[common], help="decide a property")
    c.add_argument(
        "property",
        choices=[
            "ndep",
            "polymatroidal",
            "weakly",
            "weakly-search",
            "admissible",
            "linear-quotients",
            "componentwise-linear",
            "totally-balanced",
        ],
    )
    c.add_argument("input", help="ideal JSON file (hypergraph JSON for totally-balanced)")
    c.add_argument("--order", help="descending variable order, e.g. 2,1,3")
    c.add_argument("--sequence", help="generator order for admissible, e.g. 'x1^2;x1*x2'")
    c.add_argument("--pair", nargs=3, metavar=("U", "V", "I"), help="certify one triple (ndep)")
    c.add_argument("--all", action="store_true", help="list every violation (ndep)")
    c.add_argument("--limit", type=int, help="search bound override")
    c.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    c.add_argument("--min-length", type=int, default=4, help="shortest special cycle that counts")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("cover", parents=[common], help="ideal of k-covers of a weighted hypergraph")
    v.add_argument("kind", choices=["ideal", "minimal"])
    v.add_argument("input", help="hypergraph JSON file")
    v.add_argument("-k", type=int, default=1)
    v.set_defaults(func=cmd_cover)

    o = sub.add_parser("order", parents=[common], help="construct an order")
    o.add_argument("kind", choices=["ndep", "three-edge"])
    o.add_argument("input", nargs="?", help="ideal file (ndep) or hypergraph file (three-edge)")
    o.add_argument("--edges", help="three edges, e.g. '1,2;2,3,4;4,5'")
    o.add_argument("--n", type=int)
    o.set_defaults(func=cmd_order)

    b = sub.add_parser("betti", parents=[common], help="graded Betti table")
    b.add_argument("input")
    b.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    b.add_argument("--check-prime", type=int, nargs="?", const=CHECK_PRIME, default=None)
    b.set_defaults(func=cmd_betti)

    p = sub.add_parser("paper-suite", parents=[common], help="regression fixtures")
    p.add_argument("--theorems", type=int, default=0, metavar="N", help="also run randomized sweeps of N instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dump", metavar="DIR", help="write the fixture ideals as JSON files")
    p.set_defaults(func=cmd_paper_suite)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    out = Out(args.json or args.json_global)
    try:
        return args.func(args, out)
    except MidkError as exc:
        print(f"midk: error: {exc}", file=sys.stderr)
        return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
