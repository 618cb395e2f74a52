"""Command-line surface.

Matrix files are plain text: a header line "m n" followed by m rows of n
nonnegative integers.  The COLUMNS of the matrix are the configuration
vectors; this mirrors the usual computer-algebra convention and is the
main thing to keep in mind when preparing inputs.

Exit codes: 0 = command ran and decided, 2 = bad input, 3 = internal
invariant violation (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import certify, cisolver, diophantine, exactlin, toric
from .errors import InternalInvariantError, ValidationError


def read_matrix_file(path: str) -> toric.Configuration:
    """Parse a matrix file into a configuration (columns as vectors)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            tokens = fh.read().split()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    if len(tokens) < 2:
        raise ValidationError(f"{path}: missing 'm n' header")
    try:
        m, n = int(tokens[0]), int(tokens[1])
        values = [int(t) for t in tokens[2:]]
    except ValueError as exc:
        raise ValidationError(f"{path}: non-integer entry: {exc}") from exc
    if m < 1 or n < 1:
        raise ValidationError(f"{path}: header dimensions must be positive")
    if len(values) != m * n:
        raise ValidationError(f"{path}: expected {m * n} entries, found {len(values)}")
    rows = [values[r * n : (r + 1) * n] for r in range(m)]
    columns = [[rows[r][c] for r in range(m)] for c in range(n)]
    for c, col in enumerate(columns, start=1):
        if not any(col):
            raise ValidationError(f"{path}: column {c} is zero")
        if any(x < 0 for x in col):
            raise ValidationError(f"{path}: column {c} has a negative entry")
    return toric.Configuration.from_columns(columns)


def parse_vector(text: str, m: int) -> tuple[int, ...]:
    try:
        vec = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise ValidationError(f"bad vector argument: {exc}") from exc
    if len(vec) != m:
        raise ValidationError(f"vector has {len(vec)} entries, expected {m}")
    return vec


def read_generators_file(path: str, n: int) -> list[toric.Binomial]:
    """One binomial per line: two exponent vectors separated by '|'."""
    gens = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split("|")
        if len(parts) != 2:
            raise ValidationError(f"{path}:{lineno}: expected 'alpha | beta'")
        try:
            alpha = tuple(int(t) for t in parts[0].split())
            beta = tuple(int(t) for t in parts[1].split())
        except ValueError as exc:
            raise ValidationError(f"{path}:{lineno}: non-integer exponent: {exc}") from exc
        if len(alpha) != n or len(beta) != n:
            raise ValidationError(f"{path}:{lineno}: exponent vectors must have length {n}")
        gens.append(toric.Binomial(alpha, beta))
    return gens


def format_monomial(exponents: Sequence[int], labels: Sequence[int]) -> str:
    parts = []
    for e, label in zip(exponents, labels):
        if e == 1:
            parts.append(f"x({label})")
        elif e > 1:
            parts.append(f"x({label})^{e}")
    return "*".join(parts) if parts else "1"


def format_binomial(b: toric.Binomial, labels: Sequence[int]) -> str:
    return f"{format_monomial(b.alpha, labels)} - {format_monomial(b.beta, labels)}"


def _event_dict(ev) -> dict:
    if isinstance(ev, cisolver.Match):
        return {"kind": "match", "i": ev.i, "j": ev.j, "m_i": ev.m_i, "m_j": ev.m_j,
                "merged_label": ev.merged_label}
    if isinstance(ev, cisolver.MergeFail):
        return {"kind": "merge_fail", "i": ev.i, "j": ev.j, "m_i": ev.m_i, "m_j": ev.m_j}
    if isinstance(ev, cisolver.RepeatElim):
        return {"kind": "repeat_elim", "label": ev.label, "multiplier": ev.multiplier}
    if isinstance(ev, cisolver.Residual):
        return {"kind": "residual", "labels": list(ev.labels)}
    if isinstance(ev, toric.Dropped):
        return {"kind": "drop_non_qspan", "label": ev.label}
    if isinstance(ev, toric.Scaled):
        return {"kind": "scale", "label": ev.label, "factor": ev.factor}
    if isinstance(ev, toric.Eliminated):
        return {"kind": "eliminate", "label": ev.label, "factor": ev.factor,
                "certificate": [list(pair) for pair in ev.certificate]}
    raise InternalInvariantError(f"unknown event type {type(ev)!r}")


def cmd_is_ci(args) -> int:
    config = read_matrix_file(args.file)
    sconfig = toric.SimplicialConfig.detect(config)
    if args.projective_fast_path == "on" and sconfig.projective:
        result = cisolver.ci_projective(sconfig)
    else:
        result = cisolver.ci_simplicial(sconfig)
    if args.json:
        payload = {
            "is_ci": result.is_ci,
            "generators": [
                {"alpha": list(g.alpha), "beta": list(g.beta)} for g in result.generators
            ],
            "events": [_event_dict(ev) for ev in result.events],
            "reason": result.reason,
        }
        print(json.dumps(payload))
        return 0
    if result.is_ci:
        print("true")
        for g in result.generators:
            print(format_binomial(g, config.labels))
    else:
        print("false")
        print(f"reason: {result.reason}")
    return 0


def cmd_belongs(args) -> int:
    config = read_matrix_file(args.file)
    target = parse_vector(args.vector, config.m)
    if any(x < 0 for x in target):
        raise ValidationError("target vector must be nonnegative")
    cert = diophantine.semigroup_member(target, config.vectors)
    if cert is None:
        print("0")
    else:
        print(",".join(str(x) for x in cert))
    return 0


def cmd_card_group(args) -> int:
    config = read_matrix_file(args.file)
    order = exactlin.card_group(exactlin.IntMatrix.from_columns(config.vectors))
    print(order if order is not None else -1)
    return 0


def cmd_reduce(args) -> int:
    config = read_matrix_file(args.file)
    result = toric.reduce(config)
    if args.json:
        payload = {
            "a_red": [list(v) for v in result.a_red],
            "a_red_labels": list(result.a_red_labels),
            "generators": [
                {"alpha": list(g.alpha), "beta": list(g.beta)} for g in result.generators
            ],
            "trace": [_event_dict(ev) for ev in result.trace],
        }
        print(json.dumps(payload))
        return 0
    if result.is_empty:
        print("empty")
    else:
        for label, vec in zip(result.a_red_labels, result.a_red):
            print(f"x({label}): " + " ".join(str(x) for x in vec))
    for g in result.generators:
        print(format_binomial(g, config.labels))
    return 0


def cmd_verify(args) -> int:
    config = read_matrix_file(args.matrix)
    gens = read_generators_file(args.generators, config.n)
    result = certify.verify_ci(config, gens)
    if result.valid:
        print("valid")
    else:
        print(f"invalid: {result.reason}")
    return 0


def cmd_gen_family(args) -> int:
    if args.kind == "curve":
        steps = [int(t) for t in args.steps.split(",")] if args.steps else []
        sconfig = cisolver.gen_family_curve(args.degree, steps)
        expected = cisolver.curve_family_expected(args.degree, steps)
    else:
        i, j = (int(t) for t in args.pair.split(","))
        sconfig = cisolver.gen_family_surface(args.dim, i, j)
        expected = True
    if args.expect:
        print("true" if expected else "false")
        return 0
    config = sconfig.config
    print(f"{config.m} {config.n}")
    for r in range(config.m):
        print(" ".join(str(v[r]) for v in config.vectors))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricci",
        description="Exact complete-intersection tests for simplicial toric ideals. "
        "Matrix files: header 'm n', then m rows; columns are the vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("is-ci", help="decide whether the ideal is a complete intersection")
    p.add_argument("file")
    p.add_argument("--projective-fast-path", choices=["on", "off"], default="on")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_is_ci)

    p = sub.add_parser("belongs", help="semigroup membership with certificate")
    p.add_argument("file")
    p.add_argument("vector", help="target vector, comma or space separated")
    p.set_defaults(func=cmd_belongs)

    p = sub.add_parser("card-group", help="order of Z^m modulo the column span (-1 if infinite)")
    p.add_argument("file")
    p.set_defaults(func=cmd_card_group)

    p = sub.add_parser("reduce", help="run the reduction sweep and report the fixed point")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="certify a claimed generating set")
    p.add_argument("matrix")
    p.add_argument("generators", help="one 'alpha | beta' exponent pair per line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen-family", help="emit a test-family matrix file")
    p.add_argument("kind", choices=["curve", "surface"])
    p.add_argument("--degree", type=int, default=3, help="curve family: total degree d")
    p.add_argument("--steps", default="", help="curve family: comma-separated inner exponents")
    p.add_argument("--dim", type=int, default=2, help="surface family: number of axes")
    p.add_argument("--pair", default="1,2", help="surface family: axes of the mixed column")
    p.add_argument("--expect", action="store_true",
                   help="print the known ground truth instead of the matrix")
    p.set_defaults(func=cmd_gen_family)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
