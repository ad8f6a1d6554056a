from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .catalog import build_catalog
from .connectivity import enumerate_separations, fans, is_k_connected, maximal_segments, vertical_3_partitions
from .elements import format_set
from .errors import MatroidError, UnknownLemma
from .families import build_ktilde_graph, family_member
from .formats import load_path, serialize_entry
from .isomorphism import is_isomorphic
from .matroid import Matroid, circuits, cycle_matroid, hyperplanes
from .report import FORMATS, render
from .suites import SUITE_ORDER
from .sweep import CHECKS, sweep
from .utils import load_yaml, setup_logging, sweep_settings, write_text


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_text(out, text)
        logging.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def cmd_family(cfg: Dict[str, Any], *, n: int, dual: bool, out: Optional[str]) -> int:
    if dual:
        text = serialize_entry(f"P*({n})", family_member(n))
    else:
        text = serialize_entry(f"K~3,{n}", cycle_matroid(build_ktilde_graph(n)))
    _emit(text, out)
    return 0


def cmd_catalog(cfg: Dict[str, Any], *, max_vertices: Optional[int], out: Optional[str]) -> int:
    if max_vertices is not None:
        cfg = {**cfg, "catalog": {**(cfg.get("catalog", {}) or {}), "max_vertices": max_vertices}}
    entries = build_catalog(cfg)
    blocks = [f"# catalog entries {len(entries)}\n"]
    blocks.extend(f"# provenance: {e.provenance}\n" + serialize_entry(e.name, e.matroid) for e in entries)
    _emit("\n".join(blocks), out)
    return 0


def cmd_check(
    cfg: Dict[str, Any],
    *,
    check: str,
    target: Optional[str],
    use_catalog: bool,
    which: str,
    seed: Optional[int],
    fmt: Optional[str],
    max_elements: Optional[int],
    jobs: Optional[int],
    out: Optional[str],
) -> int:
    if which != "all" and which not in SUITE_ORDER:
        raise UnknownLemma(f"unknown lemma suite {which!r}")
    settings = sweep_settings(cfg, seed=seed, max_elements=max_elements, n_jobs=jobs)
    fmt = fmt or str((cfg.get("report", {}) or {}).get("format", "text"))
    if use_catalog:
        subjects: List[Tuple[str, Matroid]] = [(e.name, e.matroid) for e in build_catalog(cfg)]
    else:
        subjects = load_path(target)
    reports = sweep(subjects, check, which=which, settings=settings)
    _emit(render(reports, fmt), out)
    failed = [r for r in reports if not r.passed]
    if failed:
        logging.error("%d of %d reports failed", len(failed), len(reports))
        return 1
    return 0


def inspect_lines(
    M: Matroid,
    *,
    summary: bool = False,
    show_circuits: bool = False,
    show_hyperplanes: bool = False,
    separations: Optional[int] = None,
    segments: bool = False,
    cosegments: bool = False,
    show_fans: bool = False,
    vertical: bool = False,
) -> List[str]:
    lines: List[str] = []
    if summary:
        connected = "3" if is_k_connected(M, 3) else "2" if is_k_connected(M, 2) else "1"
        lines.extend(
            [f"elements {M.size}", f"rank {M.full_rank}", f"backend {M.kind}", f"connectivity {connected}"]
        )
    if show_circuits:
        lines.extend(format_set(c) for c in sorted(circuits(M)))
    if show_hyperplanes:
        lines.extend(format_set(h) for h in hyperplanes(M))
    if separations is not None:
        for rec in enumerate_separations(M, separations):
            lines.append(f"{format_set(rec.side)} lambda {rec.order} {'exact' if rec.exact else 'inexact'}")
    if segments:
        lines.extend(format_set(s) for s in maximal_segments(M))
    if cosegments:
        lines.extend(format_set(s) for s in maximal_segments(M, dualize=True))
    if show_fans:
        lines.extend(" ".join(str(e) for e in f) for f in fans(M))
    if vertical:
        lines.extend(p.describe() for p in vertical_3_partitions(M))
    return lines


def cmd_inspect(cfg: Dict[str, Any], *, path: str, selectors: Dict[str, Any]) -> int:
    blocks = load_path(path)
    if not any(v not in (None, False) for v in selectors.values()):
        selectors = {**selectors, "summary": True}
    lines: List[str] = []
    for name, M in blocks:
        if len(blocks) > 1:
            lines.append(f"# name: {name}")
        lines.extend(inspect_lines(M, **selectors))
    _emit("".join(line + "\n" for line in lines), None)
    return 0


def cmd_iso(cfg: Dict[str, Any], *, path1: str, path2: str) -> int:
    name1, M1 = load_path(path1)[0]
    name2, M2 = load_path(path2)[0]
    seed = int((cfg.get("verifier", {}) or {}).get("seed", 0) or 0)
    mapping = is_isomorphic(M1, M2, seed=seed)
    if mapping is None:
        logging.info("%s and %s are not isomorphic", name1, name2)
        return 1
    _emit("".join(f"{e} -> {f}\n" for e, f in sorted(mapping.items())), None)
    return 0


def _pop_option(argv: List[str], flag: str) -> Tuple[Optional[str], bool]:
    """Remove `flag VALUE` or `flag=VALUE` from argv wherever it appears."""
    if flag in argv:
        i = argv.index(flag)
        if i + 1 >= len(argv):
            return None, False
        value = argv[i + 1]
        del argv[i : i + 2]
        return value, True
    for a in list(argv):
        if a.startswith(flag + "="):
            argv.remove(a)
            return a.split("=", 1)[1], True
    return None, True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triconn", description="3-connectivity hyperplane verifier")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_fam = sub.add_parser("family", help="Write the K~3,n graph or its bond matroid")
    p_fam.add_argument("--n", type=int, required=True)
    p_fam.add_argument("--dual", action="store_true", help="Write M*(K~3,n) instead of the graph")
    p_fam.add_argument("--out", default=None)

    p_cat = sub.add_parser("catalog", help="Write the catalog stream")
    p_cat.add_argument("--max-vertices", type=int, default=None)
    p_cat.add_argument("--out", default=None)

    p_chk = sub.add_parser("check", help="Verify theorem or lemma statements")
    p_chk.add_argument("check", choices=CHECKS)
    p_chk.add_argument("target", nargs="?", default=None, help="MATROID/GRAPH file or catalog stream")
    p_chk.add_argument("--catalog", action="store_true", help="Check every catalog entry")
    p_chk.add_argument("--which", default="all", help="Lemma suite id, or all")
    p_chk.add_argument("--seed", type=int, default=None)
    p_chk.add_argument("--format", dest="fmt", choices=FORMATS, default=None)
    p_chk.add_argument("--max-elements", type=int, default=None)
    p_chk.add_argument("--jobs", type=int, default=None)
    p_chk.add_argument("--out", default=None)

    p_ins = sub.add_parser("inspect", help="List structure of a matroid file")
    p_ins.add_argument("path")
    p_ins.add_argument("--summary", action="store_true")
    p_ins.add_argument("--circuits", action="store_true")
    p_ins.add_argument("--hyperplanes", action="store_true")
    p_ins.add_argument("--separations", type=int, default=None, metavar="K")
    p_ins.add_argument("--segments", action="store_true")
    p_ins.add_argument("--cosegments", action="store_true")
    p_ins.add_argument("--fans", action="store_true")
    p_ins.add_argument("--vertical", action="store_true")

    p_iso = sub.add_parser("iso", help="Find an isomorphism between two matroids")
    p_iso.add_argument("path1")
    p_iso.add_argument("path2")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # --config and --log-level may appear anywhere on the command line.
    config_path, ok = _pop_option(argv, "--config")
    log_level, ok2 = _pop_option(argv, "--log-level")
    if not (ok and ok2):
        sys.stderr.write("--config and --log-level require a value\n")
        return 2

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.cmd == "check" and bool(args.target) == bool(args.catalog):
        sys.stderr.write("check needs exactly one of TARGET or --catalog\n")
        return 2

    root_dir = Path(__file__).resolve().parents[1]
    cfg = load_yaml(root_dir / (config_path or "config.yaml"))
    setup_logging(log_level or str((cfg.get("logging", {}) or {}).get("level", "INFO")))

    try:
        if args.cmd == "family":
            return cmd_family(cfg, n=args.n, dual=args.dual, out=args.out)
        if args.cmd == "catalog":
            return cmd_catalog(cfg, max_vertices=args.max_vertices, out=args.out)
        if args.cmd == "check":
            return cmd_check(
                cfg,
                check=args.check,
                target=args.target,
                use_catalog=args.catalog,
                which=args.which,
                seed=args.seed,
                fmt=args.fmt,
                max_elements=args.max_elements,
                jobs=args.jobs,
                out=args.out,
            )
        if args.cmd == "inspect":
            selectors = {
                "summary": args.summary,
                "show_circuits": args.circuits,
                "show_hyperplanes": args.hyperplanes,
                "separations": args.separations,
                "segments": args.segments,
                "cosegments": args.cosegments,
                "show_fans": args.fans,
                "vertical": args.vertical,
            }
            return cmd_inspect(cfg, path=args.path, selectors=selectors)
        if args.cmd == "iso":
            return cmd_iso(cfg, path1=args.path1, path2=args.path2)
    except (MatroidError, ValueError, OSError) as exc:
        logging.error("%s", exc)
        return 2
    parser.error(f"unknown command {args.cmd}")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
