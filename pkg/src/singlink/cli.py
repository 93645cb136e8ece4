"""singlink command line: pairs, diagram, color, group, invariant, tables.

Diagram arguments accept a path or `@name` for a builtin; pair arguments
accept a path to a pair JSON file or `builtin:name`.  Exit codes: 0 ok,
1 domain error (message on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import diagram as dg
from . import invariant as iv
from .coloring import count_colorings, enumerate_colorings
from .errors import SinglinkError
from .pairs import (IsoClass, SingularPair, builtin_pair,
                    check_singular_pair, classify_isomorphism,
                    enumerate_left_right_invertible, enumerate_taus,
                    tau_phi_iso_count)
from .pairtable import (Biquandle, PairTable, Quandle, dihedral_switch,
                        flip_switch, i2_switch, make_bialexander,
                        make_quandle_switch)
from .presentation import (AbelianizedGroup, FiniteGroup, abelianize,
                           build_ab_presentation, build_unc_presentation,
                           generator_name)


@dataclass
class Config:
    """Runtime knobs shared by the subcommands."""

    max_n: int = 4                 # general enumeration bound
    max_n_tau_phi: int = 12        # bialexander tau_phi family bound
    threads: int = 1
    fmt: str = "text"              # "text" | "json"
    seed: int = 0
    slow: bool = False

    def __post_init__(self):
        if self.max_n < 1 or self.max_n_tau_phi < 1 or self.threads < 1:
            raise SinglinkError("bounds and thread count must be positive")
        if self.fmt not in ("text", "json"):
            raise SinglinkError(f"unknown output format {self.fmt!r}")

    @classmethod
    def from_args(cls, args) -> "Config":
        threads = os.environ.get("SINGLINK_THREADS", "1")
        try:
            threads = int(threads)
        except ValueError:
            raise SinglinkError(f"SINGLINK_THREADS={threads!r} is not an integer")
        return cls(max_n=args.max_n, threads=threads,
                   fmt="json" if args.json else "text",
                   slow=getattr(args, "slow", False))


def _load_switch(spec: str) -> Biquandle:
    if spec.startswith("flip"):
        n = int(spec.split(":", 1)[1]) if ":" in spec else 2
        return flip_switch(n)
    if spec == "i2":
        return i2_switch()
    if spec.startswith("d") and spec[1:].isdigit():
        return dihedral_switch(int(spec[1:]))
    if spec.startswith("bialexander:"):
        m, s, t = (int(v) for v in spec.split(":", 1)[1].split(","))
        return make_bialexander(m, s, t)
    with open(spec) as fh:
        data = json.load(fh)
    if "op" in data:
        return make_quandle_switch(Quandle.from_dict(data))
    return Biquandle.from_table(PairTable.from_dict(data))


def _load_pair(spec: str) -> SingularPair:
    if spec.startswith("builtin:"):
        return builtin_pair(spec.split(":", 1)[1])
    with open(spec) as fh:
        data = json.load(fh)
    S = Biquandle.from_table(PairTable.from_dict(data["biquandle"]))
    tau = PairTable.from_dict(data["tau"])
    return SingularPair(S, tau)


def _load_diagram(spec: str) -> dg.SingularDiagram:
    if spec.startswith("@"):
        return dg.builtin_diagram(spec[1:])
    with open(spec) as fh:
        text = fh.read()
    if spec.endswith(".json"):
        return dg.SingularDiagram.from_dict(json.loads(text))
    return dg.parse_diagram(text)


def _pair_dict(p: SingularPair):
    return {"biquandle": json.loads(p.biquandle.table.to_json()),
            "tau": json.loads(p.tau.to_json())}


def _emit(cfg: Config, text_lines, json_obj):
    if cfg.fmt == "json":
        print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- subcommands -------------------------------------------------------------

def _cmd_pairs(args) -> int:
    cfg = Config.from_args(args)
    if args.pairs_cmd == "enumerate":
        S = _load_switch(args.switch)
        if args.n is not None and S.n != args.n:
            if args.switch.startswith("flip"):
                S = flip_switch(args.n)
            else:
                raise SinglinkError(
                    f"--n {args.n} disagrees with switch on {S.n} elements")
        taus = enumerate_taus(S, max_n=max(cfg.max_n, args.n or 0))
        lines = [f"pairs: {len(taus)}"]
        obj = {"count": len(taus),
               "taus": [json.loads(t.to_json()) for t in taus]}
        if args.iso:
            classes = classify_isomorphism([SingularPair(S, t) for t in taus])
            lines.append(f"isoclasses: {len(classes)}")
            obj["isoclasses"] = len(classes)
            obj["canonical"] = [_pair_dict(c.canonical) for c in classes]
        _emit(cfg, lines, obj)
        return 0
    if args.pairs_cmd == "check":
        p = _load_pair(args.pair)
        res = check_singular_pair(p.biquandle, p.tau)
        lines = ["singular pair" if res.ok else "NOT a singular pair"]
        for v in res.violations:
            lines.append(f"  violated {v.axiom} at {v.witness}")
        _emit(cfg, lines, {"ok": res.ok,
                           "violations": [[v.axiom, list(v.witness)]
                                          for v in res.violations]})
        return 0 if res.ok else 1
    raise SinglinkError(f"unknown pairs subcommand {args.pairs_cmd!r}")


def _cmd_diagram(args) -> int:
    cfg = Config.from_args(args)
    d = _load_diagram(args.diagram)
    if args.diagram_cmd == "show":
        counts = d.counts()
        lines = [d.render().rstrip("\n"),
                 f"# components: {len(d.components)}  crossings: "
                 f"+{counts['+']} -{counts['-']} s{counts['s']}"]
        _emit(cfg, lines, d.to_dict())
        return 0
    if args.diagram_cmd == "move":
        sites = dg.find_move_sites(d, args.move)
        if args.site is None:
            lines = [f"{i}: crossings={s.crossings} {dict(s.params)}"
                     for i, s in enumerate(sites)]
            lines.insert(0, f"{len(sites)} sites for {args.move}")
            _emit(cfg, lines, {"move": args.move,
                               "sites": [{"crossings": list(s.crossings),
                                          "params": dict(s.params)}
                                         for s in sites]})
            return 0
        if not (0 <= args.site < len(sites)):
            raise SinglinkError(
                f"site {args.site} out of range ({len(sites)} sites)")
        d2 = dg.apply_move(d, sites[args.site])
        _emit(cfg, [d2.render().rstrip("\n")], d2.to_dict())
        return 0
    raise SinglinkError(f"unknown diagram subcommand {args.diagram_cmd!r}")


def _cmd_color(args) -> int:
    cfg = Config.from_args(args)
    d = _load_diagram(args.diagram)
    p = _load_pair(args.pair)
    cols = enumerate_colorings(d, p)
    if args.count_only:
        _emit(cfg, [str(len(cols))], {"count": len(cols)})
        return 0
    edges = d.edges
    lines = [f"colorings: {len(cols)}"]
    for col in cols:
        lines.append("  " + " ".join(f"{e}={col[e]}" for e in edges))
    _emit(cfg, lines, {"count": len(cols),
                       "colorings": [{e: col[e] for e in edges} for col in cols]})
    return 0


def _render_group(g: AbelianizedGroup, coord_map: bool, n: int):
    factors = ["Z"] * g.rank + [f"Z/{d}" for d in g.torsion]
    desc = " x ".join(factors) if factors else "1"
    lines = [f"rank {g.rank}, invariant factors {list(g.torsion)}  ({desc})"]
    obj = g.to_dict()
    if coord_map:
        for i in range(2 * n * n):
            lines.append(f"  {generator_name(n, i)} -> "
                         f"{g.render_element(g.generator(i))}")
    return lines, obj


def _cmd_group(args) -> int:
    cfg = Config.from_args(args)
    p = _load_pair(args.pair)
    if args.kind == "both":
        gn = abelianize(build_unc_presentation(p))
        ga = abelianize(build_ab_presentation(p))
        same = (gn.rank, gn.torsion) == (ga.rank, ga.torsion)
        lines = []
        for tag, g in (("U_nc abelianized", gn), ("Ab", ga)):
            sub, _ = _render_group(g, args.coord_map, p.n)
            lines.append(f"{tag}: {sub[0]}")
        lines.append(f"same invariant factors: {same}")
        _emit(cfg, lines, {"nc": gn.to_dict(), "ab": ga.to_dict(),
                           "same_invariant_factors": same})
        return 0
    pres = build_unc_presentation(p) if args.kind == "nc" else build_ab_presentation(p)
    g = abelianize(pres)
    lines, obj = _render_group(g, args.coord_map, p.n)
    _emit(cfg, lines, obj)
    return 0


def _load_cocycle(spec: str, target_spec, p: SingularPair, kind: str):
    if spec == "universal":
        name = None
        for cand in ("flip-i2", "flip-s2", "flip-flip"):
            try:
                if builtin_pair(cand).key() == p.key():
                    name = cand
                    break
            except Exception:
                pass
        if name == "flip-i2" and kind == iv.AB:
            name = "flip-s2"
        if name is not None:
            return iv.builtin_cocycle(name, kind)
        return (iv.universal_nc_cocycle(p) if kind == iv.NC
                else iv.universal_ab_cocycle(p))
    with open(spec) as fh:
        data = json.load(fh)
    if data.get("kind", kind) != kind:
        raise SinglinkError(f"cocycle file is of kind {data.get('kind')!r}")
    if target_spec is not None:
        with open(target_spec) as fh:
            target = FiniteGroup.from_dict(json.load(fh))
        f = tuple(tuple(int(v) for v in row) for row in data["f"])
        h = tuple(tuple(int(v) for v in row) for row in data["h"])
    elif "target" in data:
        target = AbelianizedGroup.from_dict(data["target"])
        mk = lambda e: (tuple(e[0]), tuple(e[1]))
        f = tuple(tuple(mk(v) for v in row) for row in data["f"])
        h = tuple(tuple(mk(v) for v in row) for row in data["h"])
    else:
        raise SinglinkError("cocycle file needs --target or an embedded target")
    return iv.CocyclePair(target, f, h, kind)


def _cmd_invariant(args) -> int:
    cfg = Config.from_args(args)
    d = _load_diagram(args.diagram)
    p = _load_pair(args.pair)
    kind = iv.NC if args.invariant_cmd == "nc" else iv.AB
    c = _load_cocycle(args.cocycle, args.target, p, kind)
    if kind == iv.NC:
        val = iv.nc_invariant(d, p, c)
        lines = []
        shown_items = []
        for tup, cnt in val.sorted_items():
            if isinstance(c.target, AbelianizedGroup):
                shown = tuple(c.target.render_element(e) for e in tup)
            else:
                shown = tuple(map(str, tup))
            lines.append(f"{cnt} x {{{', '.join(shown)}}}")
            shown_items.append({"count": cnt, "value": list(shown)})
        _emit(cfg, lines, {"multiset": shown_items})
        return 0
    val = iv.state_sum(d, p, c)
    if isinstance(c.target, AbelianizedGroup):
        text = iv.render_laurent(c.target, val)
    else:
        text = str(sorted(val.terms.items()))
    _emit(cfg, [text], {"state_sum": text})
    return 0


def _cmd_tables(args) -> int:
    cfg = Config.from_args(args)
    if args.which == "flip-counts":
        rows = []
        for n in (2, 3, 4):
            taus = enumerate_taus(flip_switch(n), max_n=4)
            classes = classify_isomorphism(
                [SingularPair(flip_switch(n), t) for t in taus])
            rows.append((n, len(taus), len(classes)))
        lines = ["n  pairs  isoclasses"]
        for n, a, b in rows:
            lines.append(f"{n}  {a:5d}  {b:10d}")
        _emit(cfg, lines, {"rows": rows})
        return 0
    if args.which == "lr-invertible":
        ns = [args.n] if args.n else [2, 3, 4]
        rows = []
        for n in ns:
            c = enumerate_left_right_invertible(n)
            rows.append((n, c.total, c.iso, c.bijective, c.bijective_iso))
        if args.n:
            n, *vals = rows[0]
            _emit(cfg, [" ".join(str(v) for v in vals)],
                  {"n": n, "counts": vals})
        else:
            lines = ["n  total  isoclasses  bijective  bijective-isoclasses"]
            for n, *vals in rows:
                lines.append(f"{n}  {vals[0]}  {vals[1]}  {vals[2]}  {vals[3]}")
            _emit(cfg, lines, {"rows": rows})
        return 0
    if args.which == "tau-phi":
        top = 12 if cfg.slow else 9
        rows = [(n, tau_phi_iso_count(n)) for n in range(3, top + 1)]
        lines = ["n  I_n"] + [f"{n}  {c}" for n, c in rows]
        _emit(cfg, lines, {"rows": rows})
        return 0
    raise SinglinkError(f"unknown table {args.which!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine output")
    common.add_argument("--max-n", type=int, default=4,
                        help="bound for exhaustive enumerations")
    common.add_argument("--slow", action="store_true",
                        help="enable the n >= 10 tau_phi rows")

    ap = argparse.ArgumentParser(prog="singlink")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p_pairs = sub.add_parser("pairs")
    pp = p_pairs.add_subparsers(dest="pairs_cmd", required=True)
    pe = pp.add_parser("enumerate", parents=[common])
    pe.add_argument("--switch", required=True)
    pe.add_argument("--n", type=int)
    pe.add_argument("--iso", action="store_true")
    pc = pp.add_parser("check", parents=[common])
    pc.add_argument("pair")

    p_diag = sub.add_parser("diagram")
    dd = p_diag.add_subparsers(dest="diagram_cmd", required=True)
    ds = dd.add_parser("show", parents=[common])
    ds.add_argument("diagram")
    dm = dd.add_parser("move", parents=[common])
    dm.add_argument("diagram")
    dm.add_argument("--move", required=True, choices=dg.MOVES)
    dm.add_argument("--site", type=int)

    p_color = sub.add_parser("color", parents=[common])
    p_color.add_argument("diagram")
    p_color.add_argument("--pair", required=True)
    p_color.add_argument("--count-only", action="store_true")

    p_group = sub.add_parser("group", parents=[common])
    p_group.add_argument("--pair", required=True)
    p_group.add_argument("--kind", required=True, choices=("nc", "ab", "both"))
    p_group.add_argument("--coord-map", action="store_true")

    p_inv = sub.add_parser("invariant", parents=[common])
    p_inv.add_argument("invariant_cmd", choices=("nc", "statesum"))
    p_inv.add_argument("diagram")
    p_inv.add_argument("--pair", required=True)
    p_inv.add_argument("--cocycle", default="universal")
    p_inv.add_argument("--target")

    p_tab = sub.add_parser("tables", parents=[common])
    p_tab.add_argument("--which", required=True,
                       choices=("flip-counts", "lr-invertible", "tau-phi"))
    p_tab.add_argument("--n", type=int)
    return ap


_DISPATCH = {"pairs": _cmd_pairs, "diagram": _cmd_diagram, "color": _cmd_color,
             "group": _cmd_group, "invariant": _cmd_invariant,
             "tables": _cmd_tables}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _DISPATCH[args.cmd](args)
    except SinglinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
