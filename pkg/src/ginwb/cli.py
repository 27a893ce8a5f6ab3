"""Command-line entry point: ``ginwb {gin,reconstruct,hilbert,lefschetz,criterion}``.

Every command prints either a human-readable report or (``--format json``) a
single JSON document. Errors are reported as ``{"error": code, "message": ...}``
on stderr with a nonzero exit status.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .algebra import Polynomial
from .criterion import evaluate_criterion
from .errors import GinwbError
from .gin import DEFAULT_COEFF_BOUND, DEFAULT_SEED, DEFAULT_TRIALS, compute_gin, default_bound, hilbert_of
from .groebner import buchberger_truncated
from .hilbert import ci_hilbert, ci_hilbert_truncated, series_oracle
from .lefschetz import GradedQuotient, check_lefschetz
from .monomial_ideal import MonomialIdeal
from .parse import parse_polynomial, parse_polynomials
from .reconstruct import reconstruct, roman

EXIT_CODES = {
    "parse_error": 2,
    "not_regular_sequence": 3,
    "disagreement_across_trials": 4,
    "infeasible_state": 5,
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    text: str | None
    n: int | None
    d: int | None
    seed: int
    trials: int
    coeff_bound: int
    degree_bound: int | None
    fmt: str
    extra: dict


def _default_seed() -> int:
    raw = os.environ.get("GINWB_SEED")
    if raw is None or raw.strip() == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise GinwbError(f"GINWB_SEED must be an integer, got {raw!r}") from None


def _vectors(J: MonomialIdeal) -> list[list[int]]:
    return [list(g) for g in J.generators()]


def _read_input(cfg: RunConfig) -> list[Polynomial]:
    if cfg.text is None:
        raise GinwbError("give an ideal with --inline or an input file")
    return parse_polynomials(cfg.text, n=cfg.n, homogeneous=True)


def _equal_degree(gens: Sequence[Polynomial]) -> int | None:
    degs = {g.degree for g in gens}
    return degs.pop() if len(degs) == 1 else None


# commands --------------------------------------------------------------


def cmd_gin(cfg: RunConfig) -> tuple[dict, str]:
    gens = _read_input(cfg)
    res = compute_gin(
        gens,
        trials=cfg.trials,
        seed=cfg.seed,
        coeff_bound=cfg.coeff_bound,
        bound=cfg.degree_bound,
        kind=cfg.extra.get("kind", "general"),
        complete_intersection=cfg.extra.get("complete_intersection", False),
    )
    n = gens[0].n
    d = _equal_degree(gens)
    data = {
        "n": n,
        "d": d,
        "generators": _vectors(res.ideal),
        "hilbert": list(res.hilbert.values),
        "agreed": res.agreed,
        "seeds": list(res.seeds),
        "borel": res.borel,
        "bound": res.bound,
    }
    if d is not None:
        data["degree_d_revlex"] = res.degree_piece_is_revlex(d)
    lines = [
        f"Gin (revlex) of {len(gens)} forms in {n} variables, truncated at degree {res.bound}",
        f"generators ({len(res.ideal)}):",
    ]
    lines += [f"  {g}" for g in res.ideal.generators()]
    lines.append(f"hilbert: {', '.join(map(str, res.hilbert.values))}")
    lines.append(f"strongly stable: {'yes' if res.borel else 'no'}")
    lines.append(f"trials agreed: {'yes' if res.agreed else 'no'} (seeds {', '.join(map(str, res.seeds))})")
    if d is not None:
        lines.append(f"degree-{d} piece is a revlex segment: {'yes' if data['degree_d_revlex'] else 'no'}")
    return data, "\n".join(lines)


def cmd_reconstruct(cfg: RunConfig) -> tuple[dict, str]:
    n, d = cfg.n, cfg.d
    if n is None or d is None:
        raise GinwbError("reconstruct needs -n and -d")
    initial = None
    if cfg.text is not None:
        initial = []
        for f in parse_polynomials(cfg.text, n=n, homogeneous=True):
            if len(f.terms) != 1:
                raise GinwbError(f"initial piece must list monomials, got {f}")
            initial.append(tuple(f.terms[0][0]))
    found = reconstruct(n, d, initial)
    cands = []
    lines = [f"{len(found)} candidate(s) for (n, d) = ({n}, {d})"]
    for i, J in enumerate(found, start=1):
        label = roman(i)
        cands.append({"label": label, "generators": _vectors(J)})
        lines.append(f"({label}) {len(J)} generators:")
        lines += [f"  {g}" for g in J.generators()]
    data = {"n": n, "d": d, "hilbert": [ci_hilbert(n, d, k) for k in range(n * (d - 1) + 1)], "candidates": cands}
    return data, "\n".join(lines)


def cmd_hilbert(cfg: RunConfig) -> tuple[dict, str]:
    if cfg.text is not None:
        gens = _read_input(cfg)
        bound = cfg.degree_bound if cfg.degree_bound is not None else default_bound(gens)
        table = hilbert_of(gens, bound)
        data = {"n": gens[0].n, "d": _equal_degree(gens), "hilbert": list(table.values)}
        return data, "hilbert: " + ", ".join(map(str, table.values))
    n, d = cfg.n, cfg.d
    if n is None or d is None:
        raise GinwbError("hilbert needs -n and -d (or an ideal)")
    if n < 1 or d < 2:
        raise GinwbError("need n >= 1 and d >= 2")
    oracle = list(series_oracle(n, d))
    formula = [ci_hilbert(n, d, k) for k in range(len(oracle))]
    two_term = [ci_hilbert_truncated(n, d, k) for k in range(len(oracle))]
    data = {
        "n": n,
        "d": d,
        "hilbert": formula,
        "oracle": oracle,
        "two_term_middle": two_term,
        "match": formula == oracle,
    }
    lines = [f"Hilbert function of a complete intersection of {n} forms of degree {d}", "  k  formula  oracle  two-term middle"]
    for k, (a, b, c) in enumerate(zip(formula, oracle, two_term)):
        mark = "" if c == b else "  *"
        lines.append(f"{k:3d} {a:8d} {b:7d} {c:9d}{mark}")
    lines.append(f"formula matches oracle: {'yes' if data['match'] else 'no'}")
    if two_term != oracle:
        lines.append("* the two-term form misses higher inclusion-exclusion terms here")
    return data, "\n".join(lines)


def _quotient(cfg: RunConfig, gens: list[Polynomial]):
    if cfg.extra.get("gin"):
        res = compute_gin(gens, trials=cfg.trials, seed=cfg.seed, coeff_bound=cfg.coeff_bound, bound=cfg.degree_bound)
        return GradedQuotient(res.ideal), res.ideal
    if all(len(f.terms) == 1 for f in gens):
        J = MonomialIdeal([tuple(f.terms[0][0]) for f in gens], gens[0].n)
        return GradedQuotient(J), J
    bound = cfg.degree_bound if cfg.degree_bound is not None else default_bound(gens)
    return GradedQuotient(buchberger_truncated(gens, bound)), None


def cmd_lefschetz(cfg: RunConfig) -> tuple[dict, str]:
    gens = _read_input(cfg)
    A, J = _quotient(cfg, gens)
    element = None
    if cfg.extra.get("element"):
        element = parse_polynomial(cfg.extra["element"], n=A.n)
    v = check_lefschetz(A, cfg.extra.get("kind", "SLP"), element=element, seed=cfg.seed)
    data = {
        "n": A.n,
        "kind": v.kind,
        "holds": v.holds,
        "status": v.status,
        "element": str(v.element),
        "witness": None if v.witness is None else {"b": v.witness[0], "t": v.witness[1]},
        "hilbert": A.dims(),
    }
    if J is not None:
        data["generators"] = _vectors(J)
    text = f"{v.kind} with {v.element}: {v.status}"
    if v.witness is not None:
        b, t = v.witness
        text += f" (multiplication by ({v.element})^{b} from degree {t} has deficient rank)"
    text += "\nhilbert: " + ", ".join(map(str, A.dims()))
    return data, text


def cmd_criterion(cfg: RunConfig) -> tuple[dict, str]:
    gens = _read_input(cfg)
    rep = evaluate_criterion(gens, trials=cfg.trials, seed=cfg.seed, coeff_bound=cfg.coeff_bound, kind=cfg.extra.get("kind", "general"))
    special = rep.specialization
    data = {
        "n": rep.n,
        "d": rep.d,
        "seeds": list(rep.seeds),
        "deltas": [str(x) for x in rep.deltas],
        "delta": str(rep.delta),
        "nonzero": rep.nonzero,
        "verdict": rep.verdict,
        "specialization": {
            "ok": special.ok,
            "first_column": [str(x) for x in special.first_column],
            "evaluations": [str(x) for x in special.evaluations],
            "ratios": {str(k): v for k, v in special.ratios.items()},
        },
    }
    lines = [f"determinant samples at seeds {', '.join(map(str, rep.seeds))}:"]
    lines += [f"  seed {s}: {x}" for s, x in zip(rep.seeds, rep.deltas)]
    lines.append(f"verdict: {rep.verdict}")
    lines.append(f"first column equals evaluations: {'yes' if special.ok else 'no'}")
    lines.append("column ratios: " + ", ".join(f"r_{k} = {v}" for k, v in special.ratios.items()))
    return data, "\n".join(lines)


COMMANDS = {
    "gin": cmd_gin,
    "reconstruct": cmd_reconstruct,
    "hilbert": cmd_hilbert,
    "lefschetz": cmd_lefschetz,
    "criterion": cmd_criterion,
}


# argument handling -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="file with one polynomial per line")
    common.add_argument("--inline", help='ideal as "f1; f2; ..."')
    common.add_argument("-n", type=int, help="number of variables")
    common.add_argument("-d", type=int, help="degree of the forms")
    common.add_argument("--seed", type=int, default=None, help=f"base seed (default $GINWB_SEED or {DEFAULT_SEED})")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND)
    common.add_argument("--degree-bound", type=int, default=None, help="Groebner truncation degree (default n(d-1)+1)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="ginwb", description="Generic initial ideals of complete intersections.")
    p.add_argument("--version", action="version", version=f"ginwb {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gin", parents=[common], help="generic initial ideal")
    g.add_argument("--kind", choices=("general", "upper-triangular"), default="general")
    g.add_argument("--complete-intersection", action="store_true", help="require the complete-intersection Hilbert function")

    sub.add_parser("reconstruct", parents=[common], help="candidate Gins from Hilbert function and Lefschetz constraints")
    sub.add_parser("hilbert", parents=[common], help="Hilbert function tables")

    lf = sub.add_parser("lefschetz", parents=[common], help="weak/strong Lefschetz verdict")
    lf.add_argument("--kind", choices=("WLP", "SLP"), default="SLP")
    lf.add_argument("--element", help="linear form to test (default x_n for monomial ideals)")
    lf.add_argument("--gin", action="store_true", help="test S/Gin(I) instead of S/I")

    c = sub.add_parser("criterion", parents=[common], help="determinant test for the degree-d piece")
    c.add_argument("--kind", choices=("general", "upper-triangular"), default="general")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    text = args.inline
    if text is not None and args.input is not None:
        raise GinwbError("give either --inline or an input file, not both")
    if text is None and args.input is not None:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GinwbError(f"cannot read {args.input}: {exc.strerror}") from None
    if args.trials < 1:
        raise GinwbError("--trials must be at least 1")
    if args.coeff_bound < 2:
        raise GinwbError("--coeff-bound must be at least 2")
    extra = {k: getattr(args, k) for k in ("kind", "element", "gin", "complete_intersection") if hasattr(args, k)}
    return RunConfig(
        command=args.command,
        text=text,
        n=args.n,
        d=args.d,
        seed=args.seed if args.seed is not None else _default_seed(),
        trials=args.trials,
        coeff_bound=args.coeff_bound,
        degree_bound=args.degree_bound,
        fmt=args.format,
        extra=extra,
    )


def run(cfg: RunConfig) -> tuple[dict, str]:
    return COMMANDS[cfg.command](cfg)


def _error(exc: Exception, fmt: str) -> int:
    code = getattr(exc, "code", "invalid_input")
    doc = {"error": code, "message": str(exc)}
    if fmt == "json":
        print(json.dumps(doc), file=sys.stderr)
    else:
        print(f"error [{code}]: {exc}", file=sys.stderr)
    return EXIT_CODES.get(code, 1)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        data, text = run(cfg)
    except (GinwbError, ValueError) as exc:
        return _error(exc, args.format)
    if cfg.fmt == "json":
        print(json.dumps(data))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
