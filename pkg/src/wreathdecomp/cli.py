"""Command-line front end.

Exit codes: 0 pass, 1 certification failure, 2 open or out-of-scope input,
3 invalid input cover, 4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path

from . import goldens, verify
from .assemble import AssemblyError, InvalidCoverError, WreathDecomposition, assemble_g_wr_h
from .perm import PermutationError, format_cycles
from .twined import OpenCaseError, OutOfScopeError, TwinedError, TwinedFactorization, construct_base, pad
from .wreath import (
    Digraph,
    DigraphError,
    HamCycleCover,
    circulant,
    dicycle,
    empty,
    make_test_h,
    rotation_cover,
    wreath_product,
)

EXIT_OK, EXIT_CERT, EXIT_SCOPE, EXIT_COVER, EXIT_IO = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ------------------------------------------------------------------ inputs


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_IO, f"{path} is not valid JSON: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def parse_cover_spec(spec: str) -> HamCycleCover:
    """Builtin digraph-with-cover specs, or a JSON file {digraph, cover}.

    ``circulant:m:s1,s2`` (steps coprime to m), ``cycle:m``, ``empty:m``,
    ``test:m:c`` (see :func:`make_test_h`).
    """
    parts = spec.split(":")
    try:
        if parts[0] == "circulant" and len(parts) == 3:
            return rotation_cover(int(parts[1]), _ints(parts[2]))
        if parts[0] == "cycle" and len(parts) == 2:
            n = int(parts[1])
            return HamCycleCover(dicycle(n), (tuple(range(n)),))
        if parts[0] == "empty" and len(parts) == 2:
            return HamCycleCover(empty(int(parts[1])), ())
        if parts[0] == "test" and len(parts) == 3:
            return make_test_h(int(parts[1]), int(parts[2]))[1]
    except (ValueError, DigraphError) as exc:
        raise CliError(EXIT_IO, f"bad spec {spec!r}: {exc}") from None
    data = _read_json(spec)
    try:
        return HamCycleCover.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(EXIT_IO, f"{spec} is not a {{digraph, cover}} file: {exc}") from None


def parse_graph_spec(spec: str) -> Digraph:
    """A digraph spec: ``wreath:<G spec>/<H spec>``, any cover spec, or a JSON
    file holding a digraph or a {digraph, cover} object."""
    if spec.startswith("wreath:"):
        g_spec, _, h_spec = spec[len("wreath:"):].partition("/")
        return wreath_product(parse_graph_spec(g_spec), parse_graph_spec(h_spec))
    head = spec.split(":")[0]
    if head == "circulant":
        parts = spec.split(":")
        try:
            return circulant(int(parts[1]), _ints(parts[2]))
        except (IndexError, ValueError) as exc:
            raise CliError(EXIT_IO, f"bad spec {spec!r}: {exc}") from None
    if head in ("cycle", "empty", "test"):
        return parse_cover_spec(spec).digraph
    data = _read_json(spec)
    try:
        return Digraph.from_json(data["digraph"] if "digraph" in data else data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(EXIT_IO, f"{spec} is not a digraph file: {exc}") from None


_EDGE_RE = re.compile(r"^\s*(\d+)\s+(\d+)\s*->\s*(\d+)\s+(\d+)\s*$")
_DOT_RE = re.compile(r'^\s*"(\d+)_(\d+)"\s*->\s*"(\d+)_(\d+)"')


def parse_cycles_text(text: str) -> list[list[tuple[tuple[int, int], tuple[int, int]]]]:
    """Read the edge-list or DOT form back into cycles of (i, j) arcs."""
    cycles: list[list] = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("# cycle") or stripped.startswith("// cycle"):
            cycles.append([])
            continue
        match = _EDGE_RE.match(line) or _DOT_RE.match(line)
        if match:
            if not cycles:
                raise CliError(EXIT_IO, "arc listed before any cycle header")
            i, j, i2, j2 = map(int, match.groups())
            cycles[-1].append(((i, j), (i2, j2)))
        elif stripped and not stripped.startswith(("digraph", "}")):
            raise CliError(EXIT_IO, f"unrecognised line: {line!r}")
    return cycles


def _load_decomposition(path: str, digraph: Digraph, m: int | None) -> list[list[tuple[int, int]]]:
    """Cycles as encoded integer arcs, from JSON or text output."""
    text = Path(path).read_text() if Path(path).exists() else None
    if text is None:
        raise CliError(EXIT_IO, f"cannot read {path}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, dict) and "cycles" in data:
        try:
            return WreathDecomposition.from_json(data, digraph).encoded_cycles()
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(EXIT_IO, f"{path} is not a decomposition file: {exc}") from None
    if isinstance(data, dict) and "cover" in data:
        return [list(a) for a in HamCycleCover.from_json(data).arc_sets()]
    if data is not None:
        raise CliError(EXIT_IO, f"{path} holds no cycles")
    if m is None:
        raise CliError(EXIT_IO, "text decompositions need --m to encode vertices")
    return [[(a[0] * m + a[1], b[0] * m + b[1]) for a, b in cyc] for cyc in parse_cycles_text(text)]


# ---------------------------------------------------------------- commands


def _twined_text(tf: TwinedFactorization) -> str:
    lines = [f"n={tf.n} m={tf.m} c={tf.c}"]
    for label, tuples in (("D_T", tf.d_t), ("D_H", tf.d_h)):
        for f in tuples:
            lines.append(f"{label} " + "  ".join(format_cycles(p) or "id" for p in f.perms))
    return "\n".join(lines) + "\n"


def cmd_twined(args) -> int:
    if args.n < 2 or args.n % 2:
        raise CliError(EXIT_SCOPE, f"n must be even (got n={args.n})")
    tf = pad(construct_base(args.m, args.c), args.n)
    text = json.dumps(tf.to_json()) + "\n" if args.format == "json" else _twined_text(tf)
    _write(args.out, text)
    source = tf.to_json()
    if args.out and args.format == "json":
        source = _read_json(args.out)
    cert = verify.is_c_twined(source)
    if not cert.passed:
        print(f"certification failed: {cert.witness}", file=sys.stderr)
        return EXIT_CERT
    print(f"{len(tf.tuples)} tuples: {len(tf.d_t)} truncated hamiltonian, {len(tf.d_h)} hamiltonian; certified",
          file=sys.stderr)
    return EXIT_OK


def _g_cover(args) -> HamCycleCover:
    if args.g:
        return parse_cover_spec(args.g)
    if args.n is None:
        raise CliError(EXIT_IO, "construct needs --n or --g")
    if args.n < 2 or args.n % 2:
        raise CliError(EXIT_SCOPE, f"n must be even (got n={args.n})")
    return HamCycleCover(dicycle(args.n), (tuple(range(args.n)),))


def _render(dec: WreathDecomposition, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(dec.to_json()) + "\n"
    return dec.to_dot() if fmt == "dot" else dec.to_edges()


def cmd_construct(args) -> int:
    g_cover = _g_cover(args)
    h_cover = parse_cover_spec(args.h)
    dec = assemble_g_wr_h(g_cover, h_cover.digraph, h_cover)
    _write(args.out, _render(dec, args.format))
    if args.graph_out:
        _write(args.graph_out, json.dumps(dec.digraph.to_json()) + "\n")

    # re-read what was written and certify it against the ambient digraph
    if args.out:
        cycles = _load_decomposition(args.out, dec.digraph, dec.m)
    else:
        cycles = dec.encoded_cycles()
    if args.graph_out:
        digraph = Digraph.from_json(_read_json(args.graph_out))
    else:
        digraph = dec.digraph
    cert = verify.is_ham_decomposition(digraph, cycles)
    if not cert.passed:
        print(f"certification failed: {cert.witness}", file=sys.stderr)
        return EXIT_CERT
    arcs = len(digraph.arcs)
    print(f"{len(cycles)} cycles of length {dec.n * dec.m}, {arcs} arcs; certified", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.twined:
        cert = verify.is_c_twined(_read_json(args.twined))
    elif args.graph:
        digraph = parse_graph_spec(args.graph)
        if args.dec:
            cycles = _load_decomposition(args.dec, digraph, args.m)
        else:
            cycles = _load_decomposition(args.graph, digraph, args.m)
        cert = verify.is_ham_decomposition(digraph, cycles)
    else:
        raise CliError(EXIT_IO, "verify needs --graph or --twined")
    print(json.dumps(cert.to_json()))
    return EXIT_OK if cert.passed else EXIT_CERT


def _budget(text: str) -> int | None:
    if text == "full":
        return None
    try:
        return int(text)
    except ValueError:
        raise CliError(EXIT_IO, f"budget must be an integer or 'full', got {text!r}") from None


def cmd_search(args) -> int:
    budget = _budget(args.budget)
    if args.graph:
        digraph = parse_graph_spec(args.graph)
        result = verify.search_ham_decomposition(digraph, budget)
        if result.status == verify.FOUND and not verify.is_ham_decomposition(digraph, result.cover).passed:
            return EXIT_CERT
    elif args.m is not None and args.c is not None:
        result = verify.search_twined(args.m, args.c, budget)
        if result.status == verify.FOUND and not verify.is_c_twined(result.factorization).passed:
            return EXIT_CERT
    else:
        raise CliError(EXIT_IO, "search needs --graph, or --m and --c")
    if args.out:
        _write(args.out, json.dumps(result.to_json()) + "\n")
    summary = {"status": result.status, "nodes": result.nodes, "note": result.note}
    print(json.dumps(summary))
    return EXIT_OK


def cmd_selftest(args) -> int:
    checks = goldens.check_all(args.scope)
    failed = [c for c in checks if not c.passed]
    for c in checks:
        if args.verbose or not c.passed:
            print(f"{'PASS' if c.passed else 'FAIL'} {c.name} {c.detail}".rstrip())
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_OK if not failed else EXIT_CERT


def cmd_graph(args) -> int:
    head = args.spec.split(":")[0]
    if head in ("circulant", "cycle", "empty", "test"):
        try:
            payload = parse_cover_spec(args.spec).to_json()
        except CliError:
            # circulants with non-unit steps have no rotation cover
            payload = parse_graph_spec(args.spec).to_json()
    elif head == "wreath":
        payload = parse_graph_spec(args.spec).to_json()
    else:
        raise CliError(EXIT_IO, f"not a builtin spec: {args.spec!r}")
    _write(args.out, json.dumps(payload) + "\n")
    return EXIT_OK


# ------------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wreathdecomp", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log recipe completion steps")
    # -v is also accepted after the subcommand; SUPPRESS keeps the top-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("twined", parents=[common], help="build a c-twined 2-factorization of C_n wr K̄_m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_twined)

    p = sub.add_parser("construct", parents=[common], help="hamiltonian decomposition of C_n wr H or G wr H")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="G is the directed n-cycle")
    group.add_argument("--g", help="G as a {digraph, cover} file or builtin spec")
    p.add_argument("--h", required=True, help="circulant:m:s1,s2 | cycle:m | empty:m | test:m:c | FILE")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "dot", "edges"), default="json")
    p.add_argument("--graph-out", help="also write the ambient digraph as JSON")
    p.add_argument("--seed", type=int, default=None, help="reserved; constructions are deterministic")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="certify a decomposition or a twined factorization")
    p.add_argument("--graph", help="digraph file or spec")
    p.add_argument("--dec", help="decomposition file (json, edges or dot)")
    p.add_argument("--m", type=int, help="|V(H)|, needed for text decompositions")
    p.add_argument("--twined", help="twined factorization JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="bounded exhaustive searches")
    p.add_argument("--graph", help="digraph file or spec, e.g. wreath:cycle:2/cycle:3")
    p.add_argument("--m", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--budget", default="5000000", help="node limit or 'full'")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=None, help="reserved; search order is fixed")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("selftest", parents=[common], help="check the built-in golden listings")
    p.add_argument("--scope", choices=("appendix", "goldens", "all"), default="all")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("graph", parents=[common], help="write a builtin digraph (with cover when it has one)")
    p.add_argument("spec")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = None
    if args.verbose:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        pkg_log = logging.getLogger("wreathdecomp")
        pkg_log.addHandler(handler)
        pkg_log.setLevel(logging.INFO)
    try:
        return _dispatch(args)
    finally:
        if handler:
            logging.getLogger("wreathdecomp").removeHandler(handler)


def _dispatch(args) -> int:
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (OpenCaseError, OutOfScopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    except InvalidCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COVER
    except AssemblyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CERT
    except TwinedError as exc:
        message = str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_CERT if "completion failed" in message or "internal" in message else EXIT_SCOPE
    except (DigraphError, PermutationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
