"""Command-line driver.

Exit status: 0 success (including an audit that proves impossibility),
1 rejected input or precondition, 2 a violated invariant, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from . import oracle
from .decomposition import (
    PartKind,
    block_decomposition,
    check_td_axioms,
    is_virtual,
    torso,
    tutte_decomposition,
)
from .duality import BudgetExceeded, build_dual, verify_duality_exhaustive
from .embedding import facial_invariance_check, planar_embed
from .formats import generators_to_dot, graph_to_json, load_document
from .generator import (
    express_cycle,
    generate_full,
    graded_check,
    verify_generating_set,
)
from .graphcore import (
    Cycle,
    GraphError,
    InvariantViolation,
    components,
    cycle_space_dimension,
    is_circuit,
    is_k_connected,
    separator,
)
from .nestedness import nested_cuts_imply_nested_cycles

EXIT_OK, EXIT_REJECTED, EXIT_INVARIANT, EXIT_USAGE = 0, 1, 2, 64
COMMANDS = ("embed", "faces", "dual", "decompose", "generate", "express", "verify", "audit")
CHECKS = ("duality", "nested", "transfer", "td", "facial", "graded", "circuits", "canonical")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _plain(token):
    return token if isinstance(token, (int, str)) else str(token)


def _ids(edge_set) -> list:
    return [_plain(i) for i in edge_set]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nestedcycles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--input", "-i", required=True, help="graph file (text or JSON); '-' for stdin")
        s.add_argument("--json", action="store_true", help="JSON output (same as --format json)")
        s.add_argument("--format", choices=("json", "text", "dot"), default=None)
        s.add_argument("--seed", type=int, default=0, help="seed for canonicity probes")
        s.add_argument("--budget", type=int, default=16, help="edge budget for exhaustive checks")
        s.add_argument("--strict", action="store_true", help="refuse inputs that need adhesion edges")
        if name == "express":
            s.add_argument("--cycle", required=True, help="comma-separated edge ids of a circuit")
        if name == "verify":
            s.add_argument("--check", choices=CHECKS + ("all",), default="all")
    return p


def _read(path: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return load_document(text)


# commands


def cmd_embed(g, args) -> tuple[dict, int]:
    rot = planar_embed(g)
    return {
        "rotation": {str(v): [[_plain(e), end] for e, end in ds] for v, ds in rot.order.items()},
        "faces": len(rot.faces),
        "genus0": rot.is_planar(),
    }, EXIT_OK


def cmd_faces(g, args):
    rot = planar_embed(g)
    faces = [
        {
            "darts": [[_plain(e), end] for e, end in f.darts],
            "walk": [_plain(v) for v in f.vertex_walk(g)],
            "boundary": _ids(f.boundary),
            "length": len(f),
        }
        for f in rot.faces
    ]
    return {"faces": faces}, EXIT_OK


def cmd_dual(g, args):
    dp = build_dual(g, planar_embed(g))
    return {"dual": graph_to_json(dp.dual, "dual"), "edge_map": {str(k): v for k, v in dp.edge_map.items()}}, EXIT_OK


def _td_json(b, td) -> list:
    nodes = []
    for t in td.nodes:
        tor = torso(b, td, t)
        nodes.append({
            "node": t,
            "kind": td.kinds[t].value,
            "bag": [_plain(v) for v in sorted(td.bags[t], key=str)],
            "torso_edges": [[_plain(e.id), _plain(e.u), _plain(e.v), is_virtual(e.id)] for e in tor.edges],
        })
    tree = [[e.id, e.u, e.v, sorted(map(_plain, td.adhesions[e.id]), key=str)] for e in td.tree.edges]
    return [nodes, tree]


def cmd_decompose(g, args):
    bd = block_decomposition(g)
    blocks = []
    for k, b in enumerate(bd.blocks):
        entry = {"block": k, "edges": _ids(b.edge_set(e.id for e in b.edges))}
        if b.m > 1:
            td = tutte_decomposition(b)
            entry["nodes"], entry["tree"] = _td_json(b, td)
            violation = check_td_axioms(b, td)
            entry["axioms"] = "Ok" if violation is None else str(violation)
        blocks.append(entry)
    return {"blocks": blocks, "cut_vertices": sorted(map(_plain, bd.cut_vertices), key=str)}, EXIT_OK


def _automorphisms(g):
    """Full group, or None when the search outgrows its budget."""
    try:
        return oracle.automorphism_group(g, max_vertices=None)
    except BudgetExceeded:
        return None


def generation_json(g_prime, gs, aut) -> dict:
    report = verify_generating_set(gs, aut)
    return {
        "host": graph_to_json(g_prime),
        "extension_edges": [[_plain(i), _plain(g_prime.edge[i].u), _plain(g_prime.edge[i].v)] for i in gs.added],
        "generators": [
            {
                "edges": _ids(c.edges),
                "vertices": [_plain(v) for v in c.vertex_order],
                "length": len(c),
                "block": p.block,
                "part": p.node,
                "kind": p.kind.value,
            }
            for c, p in zip(gs.cycles, gs.provenance)
        ],
        "rank": report.rank,
        "dimension": report.dimension,
        "nested": report.nested,
        "aut_invariant": report.aut_invariant,
    }


def cmd_generate(g, args):
    g_prime, gs = generate_full(g, strict=args.strict)
    aut = _automorphisms(g_prime)
    if args.format == "dot":
        return generators_to_dot(g_prime, gs.cycles, added=gs.added), EXIT_OK
    out = generation_json(g_prime, gs, aut)
    ok = out["nested"] and out["rank"] == out["dimension"] and out["aut_invariant"] is not False
    return out, EXIT_OK if ok else EXIT_INVARIANT


def cmd_express(g, args):
    g_prime, gs = generate_full(g, strict=args.strict)
    wanted = {str(t) for t in args.cycle.split(",") if t}
    ids = [e.id for e in g_prime.edges if str(e.id) in wanted]
    if len(ids) != len(wanted):
        raise GraphError(f"unknown edge ids in {args.cycle!r}")
    target = g_prime.edge_set(ids)
    if not is_circuit(g_prime, target):
        raise GraphError(f"{args.cycle!r} is not a circuit")
    chosen = express_cycle(gs, Cycle.from_edges(g_prime, target))
    if chosen is None:
        return {"cycle": _ids(target), "in_span": False}, EXIT_INVARIANT
    index = {c.edges.ids: k for k, c in enumerate(gs.cycles)}
    return {
        "cycle": _ids(target),
        "in_span": True,
        "generators": [index[c.edges.ids] for c in chosen],
        "generator_edges": [_ids(c.edges) for c in chosen],
    }, EXIT_OK


def _check_duality(g, args):
    if len(components(g)) != 1:
        return {"skipped": "disconnected"}, True
    rep = verify_duality_exhaustive(build_dual(g, planar_embed(g)), budget=args.budget)
    return {
        "circuits": rep.circuits,
        "tight_cuts": rep.tight_cuts,
        "violations": [_ids(v) for v in rep.violations],
    }, rep.ok


def _check_nested(g, args):
    g_prime, gs = generate_full(g, strict=args.strict)
    rep = verify_generating_set(gs)
    witness = None
    if rep.nested_violation:
        i, j = rep.nested_violation
        witness = [_ids(gs.cycles[i].edges), _ids(gs.cycles[j].edges)]
    return {"nested": rep.nested, "crossing": witness, "rank": rep.rank, "dimension": rep.dimension}, rep.ok


def _check_transfer(g, args):
    if len(components(g)) != 1:
        return {"skipped": "disconnected"}, True
    rot = planar_embed(g)
    dp = build_dual(g, rot)
    cycles = [Cycle.from_edges(g, c) for c in oracle.enumerate_circuits(g)]
    failures = []
    pairs = 0
    for a, b in combinations(cycles, 2):
        pairs += 1
        if not nested_cuts_imply_nested_cycles(dp, rot, a, b):
            failures.append([_ids(a.edges), _ids(b.edges)])
    return {"pairs": pairs, "failures": failures}, not failures


def _check_td(g, args):
    results, ok = [], True
    for k, b in enumerate(block_decomposition(g).blocks):
        if b.m < 2:
            continue
        td = tutte_decomposition(b)
        violation = check_td_axioms(b, td)
        bad = [t for t in td.nodes if not _torso_matches(torso(b, td, t), td.kinds[t])]
        ok = ok and violation is None and not bad
        results.append({"block": k, "axioms": "Ok" if violation is None else str(violation), "misclassified": bad})
    return {"blocks": results}, ok


def _torso_matches(t, kind) -> bool:
    if kind is PartKind.THREE_CONNECTED:
        return t.is_simple and t.n >= 4 and is_k_connected(t, 3)
    if kind is PartKind.CYCLE:
        return len(components(t)) == 1 and all(t.degree(v) == 2 for v in t.vertices)
    if kind is PartKind.BOND:
        return t.n == 2 and t.m >= 3
    return t.n == 2 and t.m == 1


def _check_facial(g, args):
    if separator(g, 3) is not None or not g.is_simple:
        return {"skipped": "not 3-connected"}, True
    aut = oracle.automorphism_group(g, max_vertices=None)
    rot = planar_embed(g)
    facial = facial_invariance_check(g, rot, aut)
    return {"automorphisms": len(aut), "facial": facial}, facial


def _check_graded(g, args):
    g_prime, gs = generate_full(g)
    findings = {}
    for n in (3, 4, 5):
        c = graded_check(g_prime, gs, n)
        findings[str(n)] = "Holds" if c is None else {"counterexample": _ids(c)}
    return {"graded": findings}, True  # findings, not failures


def _check_circuits(g, args):
    circuits = oracle.enumerate_circuits(g)
    out = {"circuits": len(circuits), "rank": oracle.gf2_rank(circuits), "dimension": cycle_space_dimension(g)}
    ok = out["rank"] == out["dimension"]
    if g.m <= min(args.budget, 12):
        brute = oracle.circuits_by_subsets(g, max_edges=12)
        out["subset_cross_check"] = {c.ids for c in brute} == {c.ids for c in circuits}
        ok = ok and out["subset_cross_check"]
    return out, ok


def _check_canonical(g, args):
    failure = oracle.canonicity_probe(g, generate_full, trials=20, seed=args.seed)
    if failure is None:
        return {"trials": 20, "seed": args.seed}, True
    vmap, emap = failure
    return {"seed": args.seed, "relabelling": {"vertices": vmap, "edges": emap}}, False


_CHECKERS = {
    "duality": _check_duality,
    "nested": _check_nested,
    "transfer": _check_transfer,
    "td": _check_td,
    "facial": _check_facial,
    "graded": _check_graded,
    "circuits": _check_circuits,
    "canonical": _check_canonical,
}


def cmd_verify(g, args):
    names = CHECKS if args.check == "all" else (args.check,)
    out, ok = {}, True
    for name in names:
        try:
            result, passed = _CHECKERS[name](g, args)
        except BudgetExceeded as exc:
            result, passed = {"skipped": str(exc)}, True
        result["pass"] = passed
        out[name] = result
        ok = ok and passed
    return {"checks": out, "pass": ok}, EXIT_OK if ok else EXIT_INVARIANT


def cmd_audit(g, args):
    rep = oracle.counterexample_audit(g)
    out = {
        "status": rep.status,
        "rotation_systems": rep.rotation_systems,
        "planar_rotation_systems": rep.planar_rotation_systems,
        "orbits": [[_ids(c) for c in orb] for orb in rep.orbits],
    }
    if rep.possible:
        out["family"] = [_ids(c) for c in rep.family]
        out["report"] = "a canonical nested generating family exists"
    else:
        out["report"] = "no canonical nested generating family exists; crossing witness per embedding"
        out["witnesses"] = [
            {"rotation": r, "orbit_union": u, "crossing": [_ids(a), _ids(b)]} for r, u, (a, b) in rep.witnesses
        ]
    return out, EXIT_OK


_COMMANDS = {
    "embed": cmd_embed,
    "faces": cmd_faces,
    "dual": cmd_dual,
    "decompose": cmd_decompose,
    "generate": cmd_generate,
    "express": cmd_express,
    "verify": cmd_verify,
    "audit": cmd_audit,
}


def run_command(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    if args.json:
        args.format = "json"
    try:
        doc = _read(args.input)
        out, status = _COMMANDS[args.command](doc.graph, args)
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=stderr)
        return EXIT_INVARIANT
    except (GraphError, BudgetExceeded, OSError) as exc:
        print(f"rejected: {exc}", file=stderr)
        return EXIT_REJECTED
    if isinstance(out, str):
        stdout.write(out)
    elif args.format == "text":
        stdout.write(_text_report(args.command, out))
    else:
        stdout.write(json.dumps(out, indent=2, default=str) + "\n")
    return status


def _text_report(command: str, out: dict) -> str:
    lines = [f"{command}:"]
    for key, value in out.items():
        lines.append(f"  {key}: {json.dumps(value, default=str)}")
    return "\n".join(lines) + "\n"


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
