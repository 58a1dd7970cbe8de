"""Command-line front end: ``vistab {decompose,stabilize,dimpoly,enumerate,verify}``.

Exit status is 0 when every cross-check of the invoked command passed, 1 when
one failed, and 2 for invalid arguments or requests beyond the horizon.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, replace

from . import oracles
from .grothendieck import VirtualRep, h_invariants, times_trivial, vr_dim
from .irreps import IrrepLabel, dim, dim_at, enumerate_irreps, norm, pad
from .partitions import partitions_of
from .qfunc import gl_order
from .vimodules import (
    StabilizationError,
    VIModuleSpec,
    check_dim_polynomial,
    check_persistence,
    dim_polynomial_irrep,
    free_module_dim_symbolic,
    free_module_level,
    generator_family,
    injection_count_formula,
    injection_count_poly,
    module_level,
    stable_multiplicities,
)

HORIZON_ENV = "VISTAB_HORIZON"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Horizon:
    max_level: int = 6  # enumeration of irreducibles
    max_generator: int = 3
    max_q: int = 5
    max_module_level: int = 16

    @classmethod
    def from_env(cls, environ=os.environ) -> "Horizon":
        """Override defaults with e.g. ``VISTAB_HORIZON="level=8,generator=4,q=7"``."""
        h = cls()
        raw = environ.get(HORIZON_ENV, "").strip()
        if not raw:
            return h
        names = {
            "level": "max_level",
            "generator": "max_generator",
            "q": "max_q",
            "module_level": "max_module_level",
        }
        updates = {}
        for item in raw.split(","):
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in names or not value.strip().isdigit():
                raise UsageError(f"bad {HORIZON_ENV} entry {item!r}")
            updates[names[key]] = int(value)
        return replace(h, **updates)


PASS, FAIL = "PASS", "FAIL"


def verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def render_table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, c in enumerate(row):
            widths[i] = max(widths[i], len(c))
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _check_q(q: int, horizon: Horizon):
    if q < 2:
        raise UsageError("q must be at least 2")
    if q > horizon.max_q:
        raise UsageError(f"q={q} exceeds the horizon q <= {horizon.max_q}")


def _check_gens(spec: VIModuleSpec, horizon: Horizon):
    if spec.max_degree > horizon.max_generator:
        raise UsageError(
            f"generator degree {spec.max_degree} exceeds the horizon {horizon.max_generator}"
        )


# each command returns (payload for JSON, text rendering, ok)


def cmd_decompose(args, horizon):
    m, n, q = args.gen, args.level, args.q
    _check_q(q, horizon)
    if m < 0 or n < 0:
        raise UsageError("--gen and --level must be non-negative")
    _check_gens(VIModuleSpec((m,)), horizon)
    if n > horizon.max_module_level:
        raise UsageError(f"level {n} exceeds the horizon {horizon.max_module_level}")

    v = free_module_level(m, n, q)
    dims = [dim_at(lab, q) for lab, _ in v]
    total = vr_dim(v, q)
    expected = injection_count_formula(m, n, q)
    ok = total == expected
    payload = {
        "q": q,
        "generator": m,
        "level": n,
        "zero_module": v.is_zero(),
        "decomposition": v.to_json(),
        "term_dims": [str(d) for d in dims],
        "total_dim": str(total),
        "injection_count": str(expected),
        "verdict": verdict(ok),
    }
    lines = [f"M({m})_{n} over F_{q}"]
    if v.is_zero():
        lines.append(f"zero module: M({m})_{n} = 0 since level {n} < generator degree {m}")
    else:
        rows = [
            [str(lab), mult, d, mult * d] for (lab, mult), d in zip(v, dims)
        ]
        lines.append(render_table(["label", "mult", "dim", "mult*dim"], rows))
    lines.append(f"total dimension: {total}")
    lines.append(f"injections F_{q}^{m} -> F_{q}^{n}: {expected}")
    lines.append(verdict(ok))
    return payload, "\n".join(lines), ok


def cmd_stabilize(args, horizon):
    spec, q = args.gens, args.q
    _check_q(q, horizon)
    _check_gens(spec, horizon)
    report = stable_multiplicities(spec, q)
    bad_levels = check_persistence(report, spec) if not spec.is_zero() else []
    ok = not bad_levels and report.weight <= spec.max_degree
    payload = report.to_json()
    payload["verdict"] = verdict(ok)
    rows = [[str(lab), norm(lab), c] for lab, c in report.stable_multiplicities.items()]
    lines = [
        f"generators: {list(spec.generators)}  q: {q}",
        f"onset: {report.onset}",
        f"weight: {report.weight}",
        render_table(["stable label", "norm", "mult"], rows),
        f"dim polynomial: P(T) = {report.dim_polynomial.format('T')}",
    ]
    if bad_levels:
        lines.append(f"multiplicities moved at levels {bad_levels}")
    lines.append(verdict(ok))
    return payload, "\n".join(lines), ok


def _dim_table(poly, onset, q, direct):
    table, ok = [], True
    for n in range(onset, onset + 6):
        p_val = poly(q**n)
        d = direct(n)
        good = p_val == d
        ok &= good
        table.append((n, p_val, d, good))
    return table, ok


def cmd_dimpoly(args, horizon):
    q = args.q
    _check_q(q, horizon)
    if (args.gens is None) == (args.label is None):
        raise UsageError("give exactly one of --gens or --label")
    if args.label is not None:
        try:
            lam = IrrepLabel.parse(args.label)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        poly, onset = dim_polynomial_irrep(lam, q)
        table, ok = _dim_table(poly, onset, q, lambda n: dim_at(pad(lam, n), q))
        ok &= poly.degree <= norm(lam)
        payload = {"q": q, "label": lam.to_json()}
        head = f"stable label: {lam}  q: {q}"
    else:
        spec = args.gens
        _check_gens(spec, horizon)
        report = stable_multiplicities(spec, q)
        poly, onset = report.dim_polynomial, report.dim_polynomial_onset
        table, ok = _dim_table(poly, onset, q, lambda n: vr_dim(module_level(spec, n, q), q))
        ok &= poly.degree <= report.weight
        payload = {"q": q, "generators": list(spec.generators)}
        head = f"generators: {list(spec.generators)}  q: {q}"
    payload.update(
        {
            "onset": onset,
            "dim_poly_T": poly.to_json(),
            "table": [
                {"n": n, "P(q^n)": str(p), "direct": str(d), "match": good}
                for n, p, d, good in table
            ],
            "verdict": verdict(ok),
        }
    )
    rows = [[n, q**n, p, d, "yes" if good else "NO"] for n, p, d, good in table]
    lines = [
        head,
        f"P(T) = {poly.format('T')}",
        f"onset N = {onset}",
        render_table(["n", "q^n", "P(q^n)", "direct dim", "match"], rows),
        verdict(ok),
    ]
    return payload, "\n".join(lines), ok


def cmd_enumerate(args, horizon):
    n, q = args.level, args.q
    _check_q(q, horizon)
    if n < 0:
        raise UsageError("--level must be non-negative")
    if n > horizon.max_level:
        raise UsageError(f"level {n} exceeds the enumeration horizon {horizon.max_level}")
    labels = enumerate_irreps(n, q)
    dims = [dim_at(lab, q) for lab in labels]
    squares = sum(d * d for d in dims)
    order = int(gl_order(n)(q))
    ok = squares == order
    payload = {
        "q": q,
        "level": n,
        "irreps": [
            {"label": lab.to_json(), "dim": str(d), "dim_q": dim(lab).to_int_list()}
            for lab, d in zip(labels, dims)
        ],
        "count": len(labels),
        "sum_of_squares": str(squares),
        "group_order": str(order),
        "verdict": verdict(ok),
    }
    rows = [[str(lab), dim(lab).format("q"), d] for lab, d in zip(labels, dims)]
    lines = [
        f"irreducible representations of GL_{n}(F_{q}): {len(labels)}",
        render_table(["label", "dim(q)", f"dim at q={q}"], rows),
        f"sum of squared dimensions: {squares}",
        f"|GL_{n}(F_{q})|: {order}",
        verdict(ok),
    ]
    return payload, "\n".join(lines), ok


def _frobenius_shadow(max_norm: int, max_r: int, qs) -> bool:
    for q in qs:
        for a in range(max_norm + 1):
            for nu in enumerate_irreps(a, q):
                for r in range(max_r + 1):
                    induced = times_trivial(VirtualRep.irreducible(nu), r)
                    for mu in enumerate_irreps(a + r, q):
                        back = h_invariants(VirtualRep.irreducible(mu), a)
                        if induced[mu] != back[nu]:
                            return False
    return True


def verification_checks(deep: bool = False):
    """Named oracle checks at the shipped (or doubled) horizons."""
    pieri_size = 10 if deep else 6
    pieri_r = 4
    level = 6 if deep else 4
    free_n = 8 if deep else 6
    gens = 4 if deep else 3

    def pieri():
        return all(
            oracles.pieri_oracle_check(lam, r)
            for s in range(pieri_size + 1)
            for lam in partitions_of(s)
            for r in range(min(pieri_r, oracles.PIERI_HORIZON - s) + 1)
        )

    def group_orders():
        return all(oracles.group_order_check(n, q) for n in range(1, level + 1) for q in (2, 3, 4, 5))

    def injections():
        triples = [(m, n, p) for p in (2, 3) for m in range(3) for n in range(5)] + [(3, 4, 2)]
        return all(
            oracles.count_injections_bruteforce(m, n, p) == injection_count_formula(m, n, p)
            for m, n, p in triples
        )

    def free_dims():
        for m in range(4):
            for n in range(m, free_n + 1):
                if free_module_dim_symbolic(m, n) != injection_count_poly(m, n):
                    return False
                for q in (2, 3):
                    if vr_dim(free_module_level(m, n, q), q) != injection_count_formula(m, n, q):
                        return False
        return True

    def stability():
        for q in (2, 3):
            for spec in generator_family(gens, 3):
                try:
                    report = stable_multiplicities(spec, q)
                except StabilizationError:
                    return False
                if check_persistence(report, spec) or report.weight > spec.max_degree:
                    return False
                if check_dim_polynomial(report, spec):
                    return False
                if report.dim_polynomial.degree > report.weight:
                    return False
        return True

    def frobenius():
        return _frobenius_shadow(3, 3, (2, 3))

    return [
        ("pieri rule vs tableau oracle", pieri),
        ("sum of squares = group order", group_orders),
        ("injection counts vs matrices", injections),
        ("free module dimensions", free_dims),
        ("stability and dim polynomials", stability),
        ("induction/invariants reciprocity", frobenius),
    ]


def cmd_verify(args, horizon):
    results = []
    for name, check in verification_checks(args.deep):
        t0 = time.perf_counter()
        ok = bool(check())
        results.append((name, ok, time.perf_counter() - t0))
    all_ok = all(ok for _, ok, _ in results)
    payload = {
        "deep": args.deep,
        "checks": [{"name": name, "verdict": verdict(ok)} for name, ok, _ in results],
        "verdict": verdict(all_ok),
    }
    rows = [[name, verdict(ok), f"{dt:.2f}s"] for name, ok, dt in results]
    text = render_table(["check", "result", "time"], rows) + "\n" + verdict(all_ok)
    return payload, text, all_ok


def _gens(text: str) -> VIModuleSpec:
    try:
        return VIModuleSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad generator list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vistab",
        description="Representation stability calculus for free VI-modules over F_q.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write the result to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="decompose M(m)_n")
    p.add_argument("--gen", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("stabilize", parents=[common], help="stable multiplicities of a free sum")
    p.add_argument("--gens", type=_gens, required=True)
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("dimpoly", parents=[common], help="dimension polynomial P(T)")
    p.add_argument("--gens", type=_gens)
    p.add_argument("--label", help='stable label, e.g. "{iota:[1]}"')
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_dimpoly)

    p = sub.add_parser("enumerate", parents=[common], help="irreducibles of GL_n(F_q)")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run the oracle suite")
    p.add_argument("--deep", action="store_true", help="raise the horizons (slow)")
    p.set_defaults(func=cmd_verify)
    return parser


def render_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        horizon = Horizon.from_env()
        payload, text, ok = args.func(args, horizon)
    except UsageError as exc:
        print(f"vistab: error: {exc}", file=sys.stderr)
        return 2
    except StabilizationError as exc:
        print(f"vistab: check failed: {exc}", file=sys.stderr)
        return 1
    out = render_json(payload) if args.format == "json" else text + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if not ok:
        print(f"vistab: {args.command}: a cross-check failed", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
