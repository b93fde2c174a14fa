"""Command-line interface.

One subcommand per computation (normal forms, straightening, ladders,
dimensions, Gorenstein classification, determinantal-ring transfers)
plus `check`, which runs named verification suites and prints one
PASS/FAIL line per case.  Every subcommand takes --json for a
machine-readable report.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import detring, minors, ncpoly, poset, schubert
from .coeffield import ONE, q_power
from .errors import QAlgebraError
from .minors import (
    IndexPair,
    MinorRelation,
    format_index_pair,
    format_index_set,
    index_pair,
    index_set,
    parse_index_pair,
    parse_index_set,
)
from .ncpoly import NcPoly, nc_mul
from .poset import MinorPoset

MANIFEST_VERSION = "1"


# ----------------------------------------------------------------------
# argument parsing helpers


def parse_shape(text: str) -> tuple[int, int]:
    try:
        a, b = text.lower().split("x")
        return (int(a), int(b))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a shape like 2x4, got {text!r}")


def parse_set_arg(text: str) -> tuple[int, ...]:
    """Index set given as 1,3 or [1,3]."""
    text = text.strip()
    if text.startswith("["):
        return parse_index_set(text)
    return index_set(int(x) for x in text.split(","))


def parse_pair_arg(text: str) -> IndexPair:
    return parse_index_pair(text.strip())


_BRACKET_RE = re.compile(r"\[[^\]]*\]")


def _bracket_groups(text: str) -> list[str]:
    """Factors of a chain written [a]*[b] or adjacently [a][b]."""
    groups = _BRACKET_RE.findall(text)
    if not groups or _BRACKET_RE.sub("", text).strip("* \t") != "":
        raise ValueError(f"cannot parse chain {text!r}")
    return groups


def parse_chain(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(parse_index_set(part) for part in _bracket_groups(text))


def parse_pair_chain(text: str) -> tuple[IndexPair, ...]:
    return tuple(parse_index_pair(part) for part in _bracket_groups(text))


def parse_product(
    text: str, m: Optional[int] = None
) -> tuple[IndexPair, Optional[IndexPair]]:
    def one(part: str) -> IndexPair:
        if "|" not in part and m is not None:
            # bare column set = maximal minor, as in the minor command
            return index_pair(range(1, m + 1), parse_index_set(part))
        return parse_index_pair(part)

    parts = text.split("*")
    if len(parts) == 1:
        return (one(parts[0]), None)
    if len(parts) == 2:
        return (one(parts[0]), one(parts[1]))
    raise argparse.ArgumentTypeError(f"expected one or two minors, got {text!r}")


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


# ----------------------------------------------------------------------
# plain subcommands


def cmd_minor(args) -> int:
    shape = args.shape
    text = args.minor.strip()
    if "|" in text:
        pair = parse_index_pair(text)
        p = minors.quantum_minor(pair, shape)
        name = format_index_pair(pair)
    else:
        cols = parse_index_set(text)
        p = minors.maximal_minor(cols, shape)
        name = format_index_set(cols)
    _emit(args, str(p), {"minor": name, "shape": list(shape), "normal_form": str(p), "terms": len(p.terms)})
    return 0


def cmd_straighten(args) -> int:
    factors = parse_chain(args.chain)
    gamma = parse_set_arg(args.gamma) if args.gamma else None
    e = schubert.straighten_project(factors, args.m, args.n, gamma)
    payload = {
        "m": args.m,
        "n": args.n,
        "gamma": None if gamma is None else format_index_set(gamma),
        "input": args.chain,
        "result": str(e),
        "terms": [
            {"coeff": str(c), "monomial": [format_index_set(x) for x in f]}
            for f, c in e.sorted_terms()
        ],
    }
    _emit(args, str(e), payload)
    return 0


def cmd_relations(args) -> int:
    products = [parse_product(t, args.shape[0]) for t in args.products]
    rels = minors.find_relations(products, args.shape)
    payload = {
        "shape": list(args.shape),
        "count": len(rels),
        "relations": [json.loads(r.to_json()) for r in rels],
    }
    text = "\n".join(str(r) for r in rels) if rels else "no relations"
    _emit(args, text, payload)
    return 0


def cmd_muir(args) -> int:
    if args.relation_file == "-":
        raw = sys.stdin.read()
    else:
        with open(args.relation_file, "r", encoding="utf-8") as fh:
            raw = fh.read()
    payload = json.loads(raw)
    if isinstance(payload, dict) and "relations" in payload and "terms" not in payload:
        # output of `relations --json`; usable when it holds one relation
        found = payload["relations"]
        if len(found) != 1:
            raise ValueError(
                f"relation file holds {len(found)} relations; "
                "pass a document with exactly one"
            )
        raw = json.dumps(found[0])
    elif not (isinstance(payload, dict) and "terms" in payload):
        raise ValueError("relation file is not a relation document")
    rel = MinorRelation.from_json(raw)
    extended = minors.muir_extend(rel, args.p, args.q, args.n)
    _emit(args, str(extended), json.loads(extended.to_json()))
    return 0


def cmd_ladder(args) -> int:
    gamma = parse_set_arg(args.gamma)
    lads = poset.ladder(gamma, args.m, args.n)
    characterized = poset.ladder_label_characterization(gamma, args.m, args.n)
    lines = [f"({i},{j}) -> {format_index_set(lab)}" for (i, j), lab in lads]
    lines.append(f"{len(lads)} positions; one-swap characterization: {str(characterized).lower()}")
    payload = {
        "gamma": format_index_set(gamma),
        "m": args.m,
        "n": args.n,
        "positions": [
            {"position": [i, j], "label": format_index_set(lab)} for (i, j), lab in lads
        ],
        "count": len(lads),
        "one_swap_characterization": characterized,
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_gkdim(args) -> int:
    if args.gamma is not None:
        gamma = parse_set_arg(args.gamma)
        p = MinorPoset.grassmannian(args.m, args.n)
        rank, dim = poset.rank_and_gkdim(p, gamma)
        label = format_index_set(gamma)
    else:
        delta = parse_pair_arg(args.delta)
        p = MinorPoset.matrix(*args.shape)
        rank, dim = poset.rank_and_gkdim(p, delta)
        label = format_index_pair(delta)
    payload = {"kind": p.kind, "label": label, "chain_rank": rank, "dimension": dim}
    _emit(args, f"{label}: dimension {dim} (longest residual chain {rank})", payload)
    return 0


def cmd_gorenstein(args) -> int:
    gamma = parse_set_arg(args.gamma)
    ans, decomp = poset.gorenstein(gamma, args.n)
    payload = {
        "gamma": format_index_set(gamma),
        "n": args.n,
        "gorenstein": ans,
        "blocks": [list(b) for b in decomp.blocks],
        "gaps": [list(g) for g in decomp.gaps],
    }
    _emit(args, str(ans).lower(), payload)
    return 0


def cmd_hilbert(args) -> int:
    gamma = parse_set_arg(args.gamma) if args.gamma else None
    report = schubert.hilbert_report(
        args.m,
        args.n,
        gamma,
        max_deg=args.max_deg,
        rank_cap=args.rank_cap,
        q0s=tuple(args.q0),
    )
    dims = report["dims"]
    status = "ok" if report["ok"] else "FAILED: " + "; ".join(report["failures"])
    _emit(args, f"dimensions by degree: {dims} ({status})", report)
    return 0 if report["ok"] else 1


def cmd_express(args) -> int:
    x = parse_set_arg(args.x)
    gamma = parse_set_arg(args.gamma)
    expr = schubert.express_in_ladder(x, gamma, args.m, args.n)
    payload = {
        "x": format_index_set(x),
        "gamma": format_index_set(gamma),
        "m": args.m,
        "n": args.n,
        "gamma_power": expr.gamma_power,
        "certified": expr.certified,
        "terms": [
            {"coeff": str(c), "word": [[i, j] for i, j in w]}
            for w, c in expr.sorted_terms()
        ],
        "text": str(expr),
    }
    _emit(args, str(expr), payload)
    return 0


def cmd_detring_straighten(args) -> int:
    factors = parse_pair_chain(args.chain)
    m, n = args.shape
    delta = parse_pair_arg(args.delta) if args.delta else None
    e = detring.straighten_det_project(factors, m, n, delta)
    payload = {
        "shape": list(args.shape),
        "delta": None if delta is None else format_index_pair(delta),
        "input": args.chain,
        "result": str(e),
        "terms": [
            {"coeff": str(c), "monomial": [format_index_pair(x) for x in f]}
            for f, c in e.sorted_terms()
        ],
    }
    _emit(args, str(e), payload)
    return 0


def cmd_detring_laplace(args) -> int:
    m, n = args.shape
    rel = detring.laplace_last_row(args.t, args.rows, args.cols, m, n)
    _emit(args, str(rel), json.loads(rel.to_json()))
    return 0


def cmd_detring_dehom(args) -> int:
    delta = parse_pair_arg(args.delta)
    m, n = args.shape
    report = detring.dehom_correspondence_check(delta, m, n, max_deg=args.max_deg)
    status = "ok" if report["ok"] else "FAILED: " + "; ".join(report["failures"])
    text = (
        f"{report['delta']} -> {report['gamma']}: {report['pairs_checked']} pairs, {status}"
    )
    _emit(args, text, report)
    return 0 if report["ok"] else 1


# ----------------------------------------------------------------------
# verification suites


@dataclass(frozen=True)
class RunConfig:
    m: int = 2
    n: int = 4
    max_deg: int = 2
    seed: int = 20240
    trials: int = 25
    q0s: tuple[Fraction, ...] = (Fraction(2), Fraction(1, 3))
    gamma: Optional[tuple[int, ...]] = None  # restrict per-quotient suites


def _row(suite: str, case: str, ok: bool, witness: str = "") -> dict:
    return {
        "suite": suite,
        "case": case,
        "status": "PASS" if ok else "FAIL",
        "witness": witness,
    }


def _grassmannian_labels(cfg: RunConfig):
    elems = MinorPoset.grassmannian(cfg.m, cfg.n).elements()
    if cfg.gamma is not None:
        elems = [g for g in elems if g == cfg.gamma]
    return elems


def suite_confluence(cfg: RunConfig) -> list[dict]:
    shapes = sorted({(2, 2), (2, 3), (cfg.m, cfg.n)})
    rows = []
    for shape in shapes:
        r = ncpoly.confluence_check(shape)
        rows.append(
            _row(
                "confluence",
                f"{shape[0]}x{shape[1]}",
                r["ok"],
                f"{r['triples']} overlap triples",
            )
        )
    return rows


def suite_identity(cfg: RunConfig) -> list[dict]:
    # pinned 2x4 ambient: the derived commutation identity and the
    # alternating three-term relation among complementary minors
    rows = []
    shape = (2, 4)
    mm = {c: minors.maximal_minor(c, shape) for c in itertools.combinations(range(1, 5), 2)}
    qdiff = q_power(1) - q_power(-1)
    lhs = nc_mul(mm[(1, 3)], mm[(2, 4)]) - nc_mul(mm[(2, 4)], mm[(1, 3)])
    rhs = nc_mul(mm[(1, 4)], mm[(2, 3)]).scale(qdiff)
    rows.append(
        _row(
            "identity",
            "commutation-2x4",
            lhs == rhs,
            "[1,3][2,4] - [2,4][1,3] = (q - q^-1)[1,4][2,3]",
        )
    )
    products = [
        (index_pair([1, 2], [1, 2]), index_pair([1, 2], [3, 4])),
        (index_pair([1, 2], [1, 3]), index_pair([1, 2], [2, 4])),
        (index_pair([1, 2], [1, 4]), index_pair([1, 2], [2, 3])),
    ]
    rels = minors.find_relations(products, shape)
    ok = len(rels) == 1 and rels[0].verified
    if ok:
        coeffs = [c for c, _, _ in rels[0].terms]
        lead = coeffs[0].unit_inverse()
        ok = [c * lead for c in coeffs] == [ONE, -q_power(1), q_power(2)]
    rows.append(
        _row(
            "identity",
            "three-term-2x4",
            ok,
            str(rels[0]) if rels else "no relation found",
        )
    )
    return rows


def suite_ladder(cfg: RunConfig) -> list[dict]:
    rows = []
    for gamma in _grassmannian_labels(cfg):
        r = schubert.ladder_relations_check(gamma, cfg.m, cfg.n)
        ok = r["ok"] and poset.ladder_label_characterization(gamma, cfg.m, cfg.n)
        rows.append(
            _row(
                "ladder",
                format_index_set(gamma),
                ok,
                f"{r['positions']} positions, counts {r['counts']}",
            )
        )
    return rows


def suite_muir(cfg: RunConfig) -> list[dict]:
    base = MinorRelation(
        (2, 2),
        (
            (ONE, index_pair([1], [1]), index_pair([2], [2])),
            (-ONE, index_pair([2], [2]), index_pair([1], [1])),
            (-(q_power(1) - q_power(-1)), index_pair([1], [2]), index_pair([2], [1])),
        ),
    ).verify()
    rows = []
    for n in (3, 4):
        try:
            ext = minors.muir_extend(base, [1, 2], [1, 2], n)
            rows.append(_row("muir", f"extend-to-{n}x{n}", ext.verified, str(ext)))
        except QAlgebraError as exc:
            rows.append(_row("muir", f"extend-to-{n}x{n}", False, str(exc)))
    return rows


def suite_pieri(cfg: RunConfig) -> list[dict]:
    p = MinorPoset.grassmannian(cfg.m, cfg.n)
    rows = []
    for gamma in _grassmannian_labels(cfg):
        if len(p.residual(gamma)) <= 1:
            continue
        r = schubert.pieri_check(gamma, cfg.m, cfg.n, cfg.max_deg)
        witness = ", ".join(
            f"deg {d['degree']}: dim {d['dimension']}" for d in r["degrees"]
        )
        rows.append(_row("pieri", format_index_set(gamma), r["ok"], witness))
    return rows


def suite_asl(cfg: RunConfig) -> list[dict]:
    rows = []
    r = schubert.asl_check(cfg.m, cfg.n)
    rows.append(_row("asl", "ambient", r["ok"], f"{r['pairs_checked']} pairs"))
    for gamma in _grassmannian_labels(cfg):
        r = schubert.asl_check(cfg.m, cfg.n, gamma)
        rows.append(
            _row("asl", format_index_set(gamma), r["ok"], f"{r['pairs_checked']} pairs")
        )
    return rows


def suite_dehom(cfg: RunConfig) -> list[dict]:
    mm, nn = cfg.m, cfg.n - cfg.m
    if nn < 1:
        return [_row("dehom", "skipped", False, "needs n > m")]
    rows = []
    deltas = MinorPoset.matrix(mm, nn).elements()
    if cfg.gamma is not None:
        deltas = [d for d in deltas if poset.delta_map(d, mm, nn) == cfg.gamma]
    for delta in deltas:
        r = detring.dehom_correspondence_check(delta, mm, nn, max_deg=cfg.max_deg)
        rows.append(
            _row(
                "dehom",
                f"{r['delta']}->{r['gamma']}",
                r["ok"],
                f"{r['pairs_checked']} pairs",
            )
        )
    return rows


def suite_hilbert(cfg: RunConfig) -> list[dict]:
    rank_cap = min(2, cfg.max_deg)
    rows = []
    r = schubert.hilbert_report(
        cfg.m, cfg.n, None, max_deg=cfg.max_deg, rank_cap=rank_cap, q0s=cfg.q0s
    )
    rows.append(_row("hilbert", "ambient", r["ok"], f"dims {r['dims']}"))
    for gamma in _grassmannian_labels(cfg):
        r = schubert.hilbert_report(
            cfg.m, cfg.n, gamma, max_deg=cfg.max_deg, rank_cap=rank_cap, q0s=cfg.q0s
        )
        rows.append(_row("hilbert", format_index_set(gamma), r["ok"], f"dims {r['dims']}"))
    return rows


def suite_laplace(cfg: RunConfig) -> list[dict]:
    cases = [
        (2, (1, 2), (1, 2), (2, 2)),
        (2, (1, 3), (2, 4), (3, 4)),
        (3, (1, 2, 3), (1, 2, 3), (3, 3)),
    ]
    rows = []
    for t, rset, cset, shape in cases:
        case = f"{format_index_pair(index_pair(rset, cset))}-in-{shape[0]}x{shape[1]}"
        try:
            rel = detring.laplace_last_row(t, rset, cset, *shape)
            rows.append(_row("laplace", case, rel.verified, str(rel)))
        except QAlgebraError as exc:
            rows.append(_row("laplace", case, False, str(exc)))
    return rows


def suite_roundtrip(cfg: RunConfig) -> list[dict]:
    rng = random.Random(cfg.seed)
    shape = (cfg.m, cfg.n)
    gens = ncpoly.generators(shape)
    cols = list(itertools.combinations(range(1, cfg.n + 1), cfg.m))
    poly_bad = straighten_bad = 0
    for _ in range(cfg.trials):
        p = NcPoly(shape)
        for _ in range(rng.randint(1, 3)):
            word = tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
            term = NcPoly.from_word(word, shape).scale(q_power(rng.randint(-3, 3)))
            p = p + term
        if NcPoly.from_json(p.to_json()) != p:
            poly_bad += 1
        a, b = rng.choice(cols), rng.choice(cols)
        e = schubert.straighten((a, b), cfg.m, cfg.n)
        if e.expand() != schubert.monomial_normal_form((a, b), cfg.m, cfg.n):
            straighten_bad += 1
    rows = [
        _row(
            "roundtrip",
            "ncpoly-json",
            poly_bad == 0,
            f"{cfg.trials} trials, seed {cfg.seed}",
        ),
        _row(
            "roundtrip",
            "straighten-certify",
            straighten_bad == 0,
            f"{cfg.trials} trials, seed {cfg.seed}",
        ),
    ]
    plucker = minors.find_relations(
        [
            (index_pair([1, 2], [1, 2]), index_pair([1, 2], [3, 4])),
            (index_pair([1, 2], [1, 3]), index_pair([1, 2], [2, 4])),
            (index_pair([1, 2], [1, 4]), index_pair([1, 2], [2, 3])),
        ],
        (2, 4),
    )[0]
    ok = MinorRelation.from_json(plucker.to_json()) == plucker
    rows.append(_row("roundtrip", "relation-json", ok, "three-term relation"))
    return rows


def suite_gorenstein_hvector(cfg: RunConfig) -> list[dict]:
    p = MinorPoset.grassmannian(cfg.m, cfg.n)
    rows = []
    for gamma in _grassmannian_labels(cfg):
        ans, _ = poset.gorenstein(gamma, cfg.n)
        oracle = poset.gorenstein_hvector_oracle(p, gamma)
        h = poset.h_vector(p, gamma)
        rows.append(
            _row(
                "gorenstein-hvector",
                format_index_set(gamma),
                ans == oracle,
                f"classifier {str(ans).lower()}, h-vector {list(h)}",
            )
        )
    return rows


def suite_gkdim(cfg: RunConfig) -> list[dict]:
    rows = []
    gp = MinorPoset.grassmannian(cfg.m, cfg.n)
    for gamma in _grassmannian_labels(cfg):
        try:
            _, dim = poset.rank_and_gkdim(gp, gamma)
            rows.append(_row("gkdim", format_index_set(gamma), True, f"dimension {dim}"))
        except QAlgebraError as exc:
            rows.append(_row("gkdim", format_index_set(gamma), False, str(exc)))
    if cfg.n > cfg.m:
        mp = MinorPoset.matrix(cfg.m, cfg.n - cfg.m)
        for delta in mp.elements():
            try:
                _, dim = poset.rank_and_gkdim(mp, delta)
                rows.append(
                    _row("gkdim", format_index_pair(delta), True, f"dimension {dim}")
                )
            except QAlgebraError as exc:
                rows.append(_row("gkdim", format_index_pair(delta), False, str(exc)))
    return rows


SUITE_MANIFEST: dict[str, Callable[[RunConfig], list[dict]]] = {
    "confluence": suite_confluence,
    "identity": suite_identity,
    "ladder": suite_ladder,
    "muir": suite_muir,
    "pieri": suite_pieri,
    "asl": suite_asl,
    "dehom": suite_dehom,
    "hilbert": suite_hilbert,
    "laplace": suite_laplace,
    "roundtrip": suite_roundtrip,
    "gorenstein-hvector": suite_gorenstein_hvector,
    "gkdim": suite_gkdim,
}


def cmd_check(args) -> int:
    cfg = RunConfig(
        m=args.shape[0],
        n=args.shape[1],
        max_deg=args.max_deg,
        seed=args.seed,
        trials=args.trials,
        q0s=tuple(args.q0),
        gamma=parse_set_arg(args.gamma) if args.gamma else None,
    )
    names = list(SUITE_MANIFEST) if args.suite == "all" else [args.suite]
    rows = []
    for name in names:
        rows.extend(SUITE_MANIFEST[name](cfg))
    failures = sum(1 for r in rows if r["status"] != "PASS")
    if args.json:
        payload = {
            "version": MANIFEST_VERSION,
            "shape": f"{cfg.m}x{cfg.n}",
            "max_deg": cfg.max_deg,
            "suites": names,
            "rows": rows,
            "cases": len(rows),
            "failures": failures,
            "ok": failures == 0,
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for r in rows:
            print(f"{r['status']:<5} {r['suite']:<20} {r['case']:<24} {r['witness']}")
        print(
            f"{len(names)} suites, {len(rows)} cases, {failures} failures"
        )
    return 0 if failures == 0 else 1


# ----------------------------------------------------------------------
# parser wiring


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qschubert",
        description="exact computations in quantum matrix, grassmannian, "
        "Schubert, and determinantal algebras",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("minor", help="normal form of a quantum minor")
    p.add_argument("--shape", type=parse_shape, required=True)
    p.add_argument("minor", help="like [1,2|1,3], or [1,3] for a maximal minor")
    add_json(p)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("straighten", help="standard-monomial expansion of a product of maximal minors")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--shape", type=parse_shape, help="alternative to --m/--n, like 2x4")
    p.add_argument("--gamma", help="project to the Schubert quotient at gamma")
    p.add_argument("chain", help="like [2,4]*[1,3] (or adjacent, [2,4][1,3])")
    add_json(p)
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("relations", help="linear dependencies among minor products")
    p.add_argument("--shape", type=parse_shape, required=True)
    p.add_argument("products", nargs="+", help="each like [1,2|1,2]*[1,2|3,4] or [1,2|1,2]")
    add_json(p)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("muir", help="extend a relation by complementary indices")
    p.add_argument("--relation-file", required=True, help="relation JSON path, - for stdin")
    p.add_argument("--p", type=parse_set_arg, required=True, help="row window, like 1,2")
    p.add_argument("--q", type=parse_set_arg, required=True, help="column window")
    p.add_argument("--n", type=int, required=True, help="ambient square size")
    add_json(p)
    p.set_defaults(func=cmd_muir)

    p = sub.add_parser("ladder", help="ladder positions and labels of gamma")
    p.add_argument("--gamma", required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--shape", type=parse_shape, help="alternative to --m/--n, like 3x7")
    add_json(p)
    p.set_defaults(func=cmd_ladder)

    p = sub.add_parser("gkdim", help="dimension of a Schubert or matrix quotient")
    p.add_argument("--gamma")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--grass", type=int, nargs=2, metavar=("M", "N"),
                   help="alternative to --m/--n for --gamma")
    p.add_argument("--delta", help="matrix-side label like [1|1]")
    p.add_argument("--shape", type=parse_shape, help="matrix shape for --delta")
    add_json(p)
    p.set_defaults(func=cmd_gkdim)

    p = sub.add_parser("gorenstein", help="Gorenstein classification of the Schubert quotient")
    p.add_argument("--gamma", required=True)
    p.add_argument("--n", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_gorenstein)

    p = sub.add_parser("hilbert", help="dimension counts by degree, two ways")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--shape", type=parse_shape, help="alternative to --m/--n, like 2x4")
    p.add_argument("--gamma")
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--rank-cap", type=int, default=2)
    p.add_argument("--q0", type=Fraction, action="append", default=None)
    add_json(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("express", help="write a residual label through ladder minors")
    p.add_argument("--x", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_express)

    p = sub.add_parser("detring", help="generalized determinantal-ring computations")
    dsub = p.add_subparsers(dest="detring_command", required=True)

    d = dsub.add_parser("straighten", help="standard expansion of a product of minors")
    d.add_argument("--shape", type=parse_shape, required=True)
    d.add_argument("--delta", help="project to the quotient at delta, like [1|1]")
    d.add_argument("chain", help="like [2|2]*[1|1]")
    add_json(d)
    d.set_defaults(func=cmd_detring_straighten)

    d = dsub.add_parser("laplace", help="development of a minor along its last row")
    d.add_argument("--t", type=int, required=True)
    d.add_argument("--rows", type=parse_set_arg, required=True)
    d.add_argument("--cols", type=parse_set_arg, required=True)
    d.add_argument("--shape", type=parse_shape, required=True)
    add_json(d)
    d.set_defaults(func=cmd_detring_laplace)

    d = dsub.add_parser("dehom-check", help="verify the dehomogenization transfer")
    d.add_argument("--delta", required=True)
    d.add_argument("--shape", type=parse_shape, required=True, help="matrix shape m x n")
    d.add_argument("--max-deg", type=int, default=2)
    add_json(d)
    d.set_defaults(func=cmd_detring_dehom)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("suite", choices=["all"] + list(SUITE_MANIFEST))
    p.add_argument("--shape", type=parse_shape, default=(2, 4))
    p.add_argument("--max-deg", type=int, default=2)
    p.add_argument("--gamma", help="restrict per-quotient suites to one gamma")
    p.add_argument("--seed", type=int, default=20240)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--q0", type=Fraction, action="append", default=None)
    add_json(p)
    p.set_defaults(func=cmd_check)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "q0", None) is None and hasattr(args, "q0"):
        args.q0 = [Fraction(2), Fraction(1, 3)]
    if args.command in ("straighten", "ladder", "hilbert"):
        if args.shape is not None:
            args.m, args.n = args.shape
        if args.m is None or args.n is None:
            ap.error(f"{args.command} needs --shape or both --m and --n")
    if args.command == "gkdim":
        if args.grass is not None:
            args.m, args.n = args.grass
        has_g = args.gamma is not None
        has_d = args.delta is not None
        if has_g == has_d:
            ap.error("gkdim needs exactly one of --gamma (with --m/--n) or --delta (with --shape)")
        if has_g and (args.m is None or args.n is None):
            ap.error("--gamma requires --m and --n (or --grass M N)")
        if has_d and args.shape is None:
            ap.error("--delta requires --shape")
    try:
        return args.func(args)
    except QAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
