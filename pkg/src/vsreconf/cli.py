"""Command-line front-end.

Subcommands: solve, oracle, separators, convert, reduce, recognize,
decompose, export-dot.  Answers are printed as a first line of ``YES``,
``NO``, or ``UNKNOWN(resource)``; exit codes are 0 (answered), 1 (usage
error), 2 (input format error), 3 (resource cap hit).

Instance files are keyword lines::

    graph <path>            # or inline: graph <n> <u-v> <u-v> ...
    s <id>
    t <id>
    rule TS|TJ|TAR
    k <int>                 # TAR only
    source <ids...>
    target <ids...>

ISR instance files replace ``s``/``t`` with ``parta``/``partb``.
Graph files use the shared text format: an ``n m`` header line followed
by one ``a b`` line per edge (``#`` comments allowed).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bipartite import IsrInstance, is_peanut_like, isr_to_vsr, vsr_to_isr
from .cliquepair import (
    CutVertexCliques,
    MatchedCliques,
    NotInScope,
    SpecialC5,
    characterize,
    solve_tar_tj_3p1d,
    solve_ts_3p1d,
)
from .errors import (
    InputError,
    InvalidInstanceError,
    NotApplicableError,
    ResourceLimitError,
    VsreconfError,
)
from .graph import Graph
from .instance import ReconfigInstance, ReconfigSequence, Rule
from .minsep import enumerate_minimal_separators, tame_solve
from .oracle import export_reconfig_graph, solve_bfs, verify_sequence
from .separators import State
from .seriesparallel import recognize_and_decompose, sp_solve_tj
from .tar_tj import (
    normalize_tar_sequence,
    tar_to_tj_instance,
    tar_to_tj_sequence,
    tj_to_tar_instance,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"usage error: {message}", file=sys.stderr)
        raise SystemExit(1)


# ---------------------------------------------------------------------------
# file formats


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _parse_ids(tokens: list[str], what: str) -> frozenset[int]:
    try:
        return frozenset(int(x) for x in tokens)
    except ValueError as exc:
        raise InputError(f"bad id in {what}: {tokens!r}") from exc


def _parse_graph_value(tokens: list[str], base: Path) -> Graph:
    if len(tokens) == 1 and not tokens[0].isdigit():
        return Graph.from_text(_read(str(base / tokens[0])))
    try:
        n = int(tokens[0])
        edges = []
        for tok in tokens[1:]:
            a, _, b = tok.partition("-")
            edges.append((int(a), int(b)))
    except ValueError as exc:
        raise InputError(f"bad inline graph: {' '.join(tokens)!r}") from exc
    return Graph(n, edges)


def _parse_keyword_file(path: str) -> dict[str, list[str]]:
    fields: dict[str, list[str]] = {}
    for raw in _read(path).splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, *rest = line.split()
        if key in fields:
            raise InputError(f"duplicate field {key!r} in {path}")
        fields[key.lower()] = rest
    return fields


def _require(fields: dict[str, list[str]], key: str, path: str) -> list[str]:
    if key not in fields:
        raise InputError(f"missing field {key!r} in {path}")
    return fields[key]


def load_instance(path: str) -> ReconfigInstance:
    fields = _parse_keyword_file(path)
    base = Path(path).parent
    g = _parse_graph_value(_require(fields, "graph", path), base)
    rule = Rule.parse(" ".join(_require(fields, "rule", path)))
    k = None
    if "k" in fields:
        try:
            k = int(fields["k"][0])
        except (IndexError, ValueError) as exc:
            raise InputError("bad k value") from exc
    try:
        s = int(_require(fields, "s", path)[0])
        t = int(_require(fields, "t", path)[0])
    except (IndexError, ValueError) as exc:
        raise InputError("bad terminal id") from exc
    return ReconfigInstance(
        g,
        s,
        t,
        rule,
        _parse_ids(_require(fields, "source", path), "source"),
        _parse_ids(_require(fields, "target", path), "target"),
        k,
    )


def load_isr_instance(path: str) -> IsrInstance:
    fields = _parse_keyword_file(path)
    base = Path(path).parent
    g = _parse_graph_value(_require(fields, "graph", path), base)
    rule = Rule.parse(" ".join(_require(fields, "rule", path)))
    return IsrInstance(
        g,
        _parse_ids(_require(fields, "parta", path), "parta"),
        _parse_ids(_require(fields, "partb", path), "partb"),
        rule,
        _parse_ids(_require(fields, "source", path), "source"),
        _parse_ids(_require(fields, "target", path), "target"),
    )


def _inline_graph(g: Graph) -> str:
    return " ".join([str(g.n)] + [f"{a}-{b}" for a, b in sorted(g.edges)])


def format_instance(inst: ReconfigInstance) -> str:
    lines = [
        f"graph {_inline_graph(inst.graph)}",
        f"s {inst.s}",
        f"t {inst.t}",
        f"rule {inst.rule.value}",
    ]
    if inst.k is not None:
        lines.append(f"k {inst.k}")
    lines.append("source " + " ".join(map(str, sorted(inst.source))))
    lines.append("target " + " ".join(map(str, sorted(inst.target))))
    return "\n".join(lines) + "\n"


def format_isr_instance(inst: IsrInstance) -> str:
    lines = [
        f"graph {_inline_graph(inst.graph)}",
        "parta " + " ".join(map(str, sorted(inst.part_a))),
        "partb " + " ".join(map(str, sorted(inst.part_b))),
        f"rule {inst.rule.value}",
        "source " + " ".join(map(str, sorted(inst.source))),
        "target " + " ".join(map(str, sorted(inst.target))),
    ]
    return "\n".join(lines) + "\n"


def _print_sequence(seq: ReconfigSequence) -> None:
    for st in seq:
        print(" ".join(map(str, sorted(st))))


def _load_sequence(path: str) -> ReconfigSequence:
    seq: ReconfigSequence = []
    for raw in _read(path).splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        seq.append(_parse_ids(line.split(), "sequence state"))
    if not seq:
        raise InputError(f"no states in {path}")
    return seq


# ---------------------------------------------------------------------------
# solve dispatch


def _solve_with_engine(
    inst: ReconfigInstance, engine: str
) -> tuple[bool, ReconfigSequence | None]:
    """YES/NO plus an optional certificate, under the chosen engine."""
    if engine == "oracle":
        res = solve_bfs(inst)
        return res.reachable, res.sequence
    if engine == "class":
        r = (
            solve_ts_3p1d(inst)
            if inst.rule is Rule.TS
            else solve_tar_tj_3p1d(inst)
        )
        return r.reachable, r.sequence
    if engine == "sp":
        return True, sp_solve_tj(inst)
    if engine == "tame":
        r = tame_solve(inst)
        seq = r.sequence
        if r.reachable and inst.rule is Rule.TJ and seq is not None:
            # the tame certificate is a TAR(k+1) walk; fold it back
            g, s, t = inst.graph, inst.s, inst.t
            k = len(inst.source)
            if len(seq) > 1:
                seq = tar_to_tj_sequence(
                    g, s, t, normalize_tar_sequence(g, s, t, seq, k), k
                )
        return r.reachable, seq
    assert engine == "auto"
    if not isinstance(characterize(inst.graph), NotInScope):
        return _solve_with_engine(inst, "class")
    if inst.rule is Rule.TJ:
        try:
            return _solve_with_engine(inst, "sp")
        except NotApplicableError:
            pass
    if inst.rule is Rule.TS:
        return _solve_with_engine(inst, "oracle")
    return _solve_with_engine(inst, "tame")


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    yes, seq = _solve_with_engine(inst, args.engine)
    if yes:
        print("YES")
        if args.sequence and seq is not None:
            check = verify_sequence(inst, seq)
            if not check:
                raise VsreconfError(f"internal: bad certificate: {check.reason}")
            _print_sequence(seq)
    else:
        print("NO")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    if args.verify:
        seq = _load_sequence(args.verify)
        check = verify_sequence(inst, seq)
        print("VALID" if check else f"INVALID: {check.reason}")
        return 0
    res = solve_bfs(inst, state_cap=args.state_cap)
    if res.reachable:
        print("YES")
        if args.sequence and res.sequence is not None:
            _print_sequence(res.sequence)
    else:
        print("NO")
    return 0


def _cmd_separators(args: argparse.Namespace) -> int:
    g = Graph.from_text(_read(args.graph))
    family = enumerate_minimal_separators(g, args.s, args.t)
    for sep in family.sorted_members():
        print(" ".join(map(str, sorted(sep))))
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    if args.to == "tar":
        if inst.rule is not Rule.TJ:
            raise InputError("convert --to tar expects a TJ instance")
        out = tj_to_tar_instance(inst)
    else:
        if inst.rule is not Rule.TAR:
            raise InputError("convert --to tj expects a TAR instance")
        out = tar_to_tj_instance(inst).tj_instance
    print(format_instance(out), end="")
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    if args.direction == "isr-to-vsr":
        isr = load_isr_instance(args.instance)
        print(format_instance(isr_to_vsr(isr)), end="")
        return 0
    inst = load_instance(args.instance)
    witness = is_peanut_like(inst.graph)
    if witness is None:
        raise InputError("graph is not peanut-like; no ISR reduction exists")
    isr = vsr_to_isr(inst.graph, witness, inst.rule, inst.source, inst.target)
    print(format_isr_instance(isr), end="")
    return 0


def _cmd_recognize(args: argparse.Namespace) -> int:
    g = Graph.from_text(_read(args.graph))
    if args.family == "peanut":
        w = is_peanut_like(g)
        if w is None:
            print("not-peanut")
        else:
            print(f"peanut u={w.u} v={w.v}")
            print("side-a " + " ".join(map(str, sorted(w.side_a))))
            print("side-b " + " ".join(map(str, sorted(w.side_b))))
        return 0
    ch = characterize(g)
    if isinstance(ch, CutVertexCliques):
        print(f"cut-vertex-cliques w={ch.w}")
        print("q1 " + " ".join(map(str, sorted(ch.q1))))
        print("q2 " + " ".join(map(str, sorted(ch.q2))))
    elif isinstance(ch, MatchedCliques):
        print("matched-cliques")
        print("q1 " + " ".join(map(str, sorted(ch.q1))))
        print("q2 " + " ".join(map(str, sorted(ch.q2))))
        print(
            "matching " + " ".join(f"{a}-{b}" for a, b in sorted(ch.matching))
        )
    elif isinstance(ch, SpecialC5):
        print("five-cycle " + " ".join(map(str, ch.order)))
    else:
        print(f"not-in-scope: {ch.reason}")
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    g = Graph.from_text(_read(args.graph))
    try:
        decomp = recognize_and_decompose(g)
    except NotApplicableError as exc:
        print(f"not-series-parallel: {exc}")
        return 0
    for tree in decomp.trees:
        print(tree.to_term())
    for pair in sorted(decomp.k2_blocks, key=sorted):
        a, b = sorted(pair)
        print(f"{a}-{b}")
    return 0


def _cmd_export_dot(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    rg = export_reconfig_graph(inst, state_cap=args.state_cap)
    text = rg.to_dot()
    if args.output:
        Path(args.output).write_text(text)
    else:
        print(text, end="")
    return 0


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vsreconf", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp_solve = sub.add_parser("solve", help="answer an instance (auto-dispatch)")
    sp_solve.add_argument("instance")
    sp_solve.add_argument("--sequence", action="store_true")
    sp_solve.add_argument(
        "--engine",
        choices=["auto", "oracle", "tame", "class", "sp"],
        default="auto",
    )
    sp_solve.set_defaults(func=_cmd_solve)

    sp_oracle = sub.add_parser("oracle", help="exhaustive search / verification")
    sp_oracle.add_argument("instance")
    sp_oracle.add_argument("--sequence", action="store_true")
    sp_oracle.add_argument("--verify", metavar="SEQFILE")
    sp_oracle.add_argument("--state-cap", type=int, default=5_000_000)
    sp_oracle.set_defaults(func=_cmd_oracle)

    sp_seps = sub.add_parser("separators", help="enumerate minimal separators")
    sp_seps.add_argument("graph")
    sp_seps.add_argument("s", type=int)
    sp_seps.add_argument("t", type=int)
    sp_seps.set_defaults(func=_cmd_separators)

    sp_conv = sub.add_parser("convert", help="rewrite TJ<->TAR instances")
    sp_conv.add_argument("instance")
    sp_conv.add_argument("--to", choices=["tar", "tj"], required=True)
    sp_conv.set_defaults(func=_cmd_convert)

    sp_red = sub.add_parser("reduce", help="translate ISR<->VSR instances")
    sp_red.add_argument("direction", choices=["isr-to-vsr", "vsr-to-isr"])
    sp_red.add_argument("instance")
    sp_red.set_defaults(func=_cmd_reduce)

    sp_rec = sub.add_parser("recognize", help="graph-class recognition")
    sp_rec.add_argument("graph")
    sp_rec.add_argument(
        "--family", choices=["3p1-diamond", "peanut"], default="3p1-diamond"
    )
    sp_rec.set_defaults(func=_cmd_recognize)

    sp_dec = sub.add_parser("decompose", help="series-parallel construction terms")
    sp_dec.add_argument("graph")
    sp_dec.set_defaults(func=_cmd_decompose)

    sp_dot = sub.add_parser("export-dot", help="reconfiguration graph as DOT")
    sp_dot.add_argument("instance")
    sp_dot.add_argument("-o", "--output")
    sp_dot.add_argument("--state-cap", type=int, default=100_000)
    sp_dot.set_defaults(func=_cmd_export_dot)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print("UNKNOWN(resource)")
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except (InputError, InvalidInstanceError, NotApplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
