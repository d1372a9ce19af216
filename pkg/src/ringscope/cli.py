"""Command-line front end.

Subcommands: ring show, classify, profile, domains, filters, modules,
verify.  Ring and module inputs are single-object JSON documents (see
docs/format.md); ring arguments may also name a bundled corpus ring.
Exit codes: 0 success, 1 check failure or refutation, 2 invalid input,
3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .classify import classify_report, verify_suite
from .errors import BoundExceededError, InputError, RingScopeError
from .lattice import to_dot
from .modules import (
    Submodule,
    cyclic_module,
    direct_sum,
    enumerate_modules,
    quotient_module,
    regular_module,
    submodules,
)
from .profile import inj_fingerprint, profile, proj_fingerprint
from .ring import FiniteRing, ring_from_spec
from .torsion import all_linear_filters, ideal_context


# -- file formats --------------------------------------------------------------

_SPEC_KEYS = {
    "zmod": ("n",),
    "table": ("orders", "mul", "one"),
    "path_algebra": ("p", "vertices", "arrows"),
    "matrix": ("base", "size"),
    "product": ("factors",),
    "quotient": ("base", "ideal_gens"),
    "opposite": ("base",),
}


def _construct_to_spec(obj, where: str):
    if not isinstance(obj, dict) or "type" not in obj:
        raise InputError(f"{where}: construct must be an object with a 'type'")
    kind = obj["type"]
    if kind not in _SPEC_KEYS:
        raise InputError(f"{where}: unknown constructor {kind!r}")
    spec = {"kind": kind}
    for key in _SPEC_KEYS[kind]:
        if key not in obj:
            raise InputError(f"{where}: constructor {kind!r} needs field {key!r}")
        spec[key] = obj[key]
    if kind == "matrix" or kind == "quotient" or kind == "opposite":
        spec["base"] = _construct_to_spec(obj["base"], where + ".base")
    if kind == "product":
        spec["factors"] = [_construct_to_spec(f, f"{where}.factors[{t}]")
                           for t, f in enumerate(obj["factors"])]
    return spec


def parse_ring_file(text: str):
    """Ring spec (constructor tree) from a JSON ring document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"ring file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "construct" not in doc:
        raise InputError("ring file needs a top-level 'construct' object")
    spec = _construct_to_spec(doc["construct"], "construct")
    if "label" in doc:
        spec["label"] = str(doc["label"])
    return spec


def render_ring_spec(spec) -> str:
    """Inverse of parse_ring_file, producing the document text."""

    def back(s):
        obj = {"type": s["kind"]}
        for key in _SPEC_KEYS[s["kind"]]:
            obj[key] = s[key]
        if s["kind"] in ("matrix", "quotient", "opposite"):
            obj["base"] = back(s["base"])
        if s["kind"] == "product":
            obj["factors"] = [back(f) for f in s["factors"]]
        return obj

    doc = {"construct": back(spec)}
    if "label" in spec:
        doc["label"] = spec["label"]
    return json.dumps(doc, sort_keys=True)


def parse_module_file(text: str, ring: FiniteRing):
    """Build a right module over the given ring from a JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"module file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "type" not in doc:
        raise InputError("module file needs a top-level 'type'")
    kind = doc["type"]
    if kind == "regular":
        return regular_module(ring)
    if kind == "cyclic":
        gens = doc.get("ideal_gens", [])
        reg = regular_module(ring)
        ideal = Submodule(reg, [ring.reduce_el(g) for g in gens])
        if not ideal.is_action_stable():
            raise InputError("cyclic module: generators do not span a right ideal")
        return cyclic_module(ring, ideal)[0]
    if kind == "quotient_of_free":
        rank = int(doc.get("rank", 1))
        if rank < 1:
            raise InputError("quotient_of_free: rank must be >= 1")
        free = direct_sum([regular_module(ring)] * rank, label=f"R^{rank}")
        rels = [free.reduce_el(r) for r in doc.get("relations", [])]
        sub = Submodule(free, rels)
        closed = sub
        while True:
            extra = [free.act_gen(row, j) for row in closed.gens.rows
                     for j in range(ring.rank)
                     if not closed.contains(free.act_gen(row, j))]
            if not extra:
                break
            closed = Submodule(free, list(closed.gens.rows) + extra)
        return quotient_module(free, closed)[0]
    if kind == "direct_sum":
        parts = [parse_module_file(json.dumps(p), ring)
                 for p in doc.get("summands", [])]
        if not parts:
            raise InputError("direct_sum: needs at least one summand")
        return direct_sum(parts)
    raise InputError(f"unknown module type {kind!r}")


def corpus_names():
    root = resources.files("ringscope") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".ring"))


def load_corpus_text(name: str) -> str:
    path = resources.files("ringscope") / "corpus" / f"{name}.ring"
    if not path.is_file():
        raise InputError(
            f"no ring file and no corpus ring named {name!r}; "
            f"bundled: {', '.join(corpus_names())}")
    return path.read_text()


def load_ring(arg: str) -> FiniteRing:
    import os

    if os.path.exists(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        text = load_corpus_text(arg)
    return ring_from_spec(parse_ring_file(text))


# -- subcommand implementations -------------------------------------------------


def _cmd_ring_show(args, out) -> int:
    ring = load_ring(args.ring)
    print(f"label: {ring.label}", file=out)
    print(f"order: {ring.order()}", file=out)
    print(f"generator orders: {list(ring.orders)}", file=out)
    print(f"one: {list(ring.one)}", file=out)
    for i in range(ring.rank):
        row = [list(ring.mul[i][j]) for j in range(ring.rank)]
        print(f"g{i} * : {row}", file=out)
    return 0


def _cmd_classify(args, out) -> int:
    ring = load_ring(args.ring)
    report = classify_report(ring)
    if args.json:
        print(json.dumps(report, sort_keys=True), file=out)
        return 0
    for key in ("label", "order", "semisimple", "local", "chain_ring",
                "uniform", "qf", "super_qf", "i_middle_class",
                "p_middle_class", "profile_nodes", "radical_order"):
        print(f"{key}: {report[key]}", file=out)
    if report["super_qf_certificate"] is not None:
        print(f"super_qf_certificate: {report['super_qf_certificate']}",
              file=out)
    return 0


def _profile_json(rep) -> dict:
    nodes = []
    for t in range(rep.size):
        witness = rep.witnesses[t]
        nodes.append({
            "ideal": [list(r) for r in rep.ideals[t].gens.rows],
            "filter_size": len(rep.filters[t]),
            "witness": None if witness is None else witness.label,
        })
    pairs = [[a, b] for a in range(rep.size) for b in range(rep.size)
             if a != b and rep.lattice.le(a, b)]
    flags = {k: (v if not isinstance(v, list) else list(map(int, v)))
             for k, v in rep.flags.items()}
    return {"kind": rep.kind, "nodes": nodes, "order_pairs": pairs,
            "flags": flags}


def _cmd_profile(args, out) -> int:
    ring = load_ring(args.ring)
    rep = profile(ring, args.kind)
    if args.json:
        print(json.dumps(_profile_json(rep), sort_keys=True), file=out)
    else:
        print(f"{args.kind}-profile of {ring.label}: {rep.size} node(s)",
              file=out)
        shape = "chain" if rep.flags["is_chain"] else "lattice"
        print(f"shape: {shape}, length {rep.flags['length']}, "
              f"middle class: {rep.flags['has_middle_class']}", file=out)
        for t in range(rep.size):
            w = rep.witnesses[t]
            wtxt = "none found" if w is None else f"order {w.order()}"
            print(f"node {t}: ideal of order {rep.ideals[t].size()}, "
                  f"filter with {len(rep.filters[t])} ideals, "
                  f"witness {wtxt}", file=out)
    if args.dot:
        labels = [f"I{t} (|I|={rep.ideals[t].size()})" for t in range(rep.size)]
        with open(args.dot, "w") as fh:
            fh.write(to_dot(rep.lattice, labels) + "\n")
    return 0


def _cmd_domains(args, out) -> int:
    ring = load_ring(args.ring)
    with open(args.module) as fh:
        mod = parse_module_file(fh.read(), ring)
    fp = inj_fingerprint(mod) if args.kind == "i" else proj_fingerprint(mod)
    reps = fp.modules()
    print(f"{args.kind}-domain of the module (order {mod.order()}) "
          f"restricted to cyclics: {len(fp)} classes", file=out)
    for c in reps:
        print(f"  cyclic of order {c.order()}, type {list(c.orders)}",
              file=out)
    return 0


def _cmd_filters(args, out) -> int:
    ring = load_ring(args.ring)
    filters = all_linear_filters(ring, above_all_maximal=args.above_maximal)
    ctx = ideal_context(ring)
    scope = "above all maximal right ideals" if args.above_maximal else "all"
    print(f"linear filters ({scope}): {len(filters)} "
          f"over {len(ctx.ideals)} right ideals", file=out)
    for f in filters:
        gen = f.smallest_member()
        print(f"  filter with {len(f)} ideals, smallest member of order "
              f"{gen.size()}", file=out)
    return 0


def _cmd_modules(args, out) -> int:
    ring = load_ring(args.ring)
    mods = enumerate_modules(ring, args.max_rank, args.max_order)
    print(f"{len(mods)} isomorphism classes (rank <= {args.max_rank}, "
          f"order <= {args.max_order})", file=out)
    for m in mods:
        print(f"  order {m.order()}, additive type {list(m.orders)}", file=out)
    return 0


def _cmd_verify(args, out) -> int:
    ring = load_ring(args.ring)
    rep = verify_suite(ring, max_free_rank=args.max_rank,
                       max_order=args.max_module_order)
    for line in rep.lines():
        print(line, file=out)
    if rep.ok():
        print("all checks passed", file=out)
        return 0
    print(f"{len(rep.failed)} check(s) failed", file=out)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringscope",
        description="Exact injectivity/projectivity profiles of finite rings")
    sub = parser.add_subparsers(dest="command", required=True)

    ring_cmd = sub.add_parser("ring", help="ring file utilities")
    ring_sub = ring_cmd.add_subparsers(dest="ring_command", required=True)
    show = ring_sub.add_parser("show", help="print the structure constants")
    show.add_argument("ring", help="ring file or corpus name")

    cls = sub.add_parser("classify", help="ring-level predicates")
    cls.add_argument("ring", help="ring file or corpus name")
    cls.add_argument("--json", action="store_true")

    prof = sub.add_parser("profile", help="injectivity/projectivity profile")
    prof.add_argument("ring", nargs="?", help="ring file or corpus name")
    prof.add_argument("--ring", dest="ring_flag", help=argparse.SUPPRESS)
    prof.add_argument("--kind", choices=("i", "p"), required=True)
    prof.add_argument("--dot", help="write the Hasse diagram to this file")
    prof.add_argument("--json", action="store_true")

    dom = sub.add_parser("domains", help="cyclic fingerprint of a module")
    dom.add_argument("--ring", required=True)
    dom.add_argument("--module", required=True)
    dom.add_argument("--kind", choices=("i", "p"), required=True)

    filt = sub.add_parser("filters", help="enumerate linear filters")
    filt.add_argument("ring", help="ring file or corpus name")
    filt.add_argument("--above-maximal", action="store_true")

    mods = sub.add_parser("modules", help="enumerate module iso-classes")
    mods.add_argument("ring", help="ring file or corpus name")
    mods.add_argument("--max-rank", type=int, default=2)
    mods.add_argument("--max-order", type=int, default=64)

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("ring", help="ring file or corpus name")
    ver.add_argument("--max-rank", type=int, default=1)
    ver.add_argument("--max-module-order", type=int, default=64)

    return parser


def run_command(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "profile":
        if args.ring is None:
            args.ring = args.ring_flag
        if args.ring is None:
            raise InputError("profile: a ring file or corpus name is required")
    try:
        if args.command == "ring":
            return _cmd_ring_show(args, out)
        if args.command == "classify":
            return _cmd_classify(args, out)
        if args.command == "profile":
            return _cmd_profile(args, out)
        if args.command == "domains":
            return _cmd_domains(args, out)
        if args.command == "filters":
            return _cmd_filters(args, out)
        if args.command == "modules":
            return _cmd_modules(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def main() -> None:
    try:
        code = run_command(sys.argv[1:])
    except RingScopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    sys.exit(code)
