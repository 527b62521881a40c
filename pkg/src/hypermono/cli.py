"""Command-line surface.

Subcommands: factor, monodromy, table, verify, series, nonresonant.
Exact results render as fractions (JSON carries them as "p/q" strings);
numeric results render as floats.  Exit codes: 0 success, 1 verification
failure, 2 invalid input.
"""

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import cyclo, levelt, nonresonant, numeric, unipotent
from .cases import TABLE_CASES
from .zetaring import FieldMatrix, _gen_key


def parse_fraction_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad fraction list {text!r}: {exc}")


def parse_point(text: str) -> complex:
    try:
        return complex(float(Fraction(text)))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad evaluation point {text!r}: {exc}")


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _matrix_text(m: FieldMatrix) -> str:
    cells = [[str(x) for x in row] for row in m.rows]
    widths = [max(len(cells[i][j]) for i in range(m.n)) for j in range(m.n)]
    lines = []
    for row in cells:
        lines.append("[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]")
    return "\n".join(lines)


def _complex_matrix_text(m: np.ndarray) -> str:
    lines = []
    for row in m:
        lines.append(
            "[ " + "  ".join(f"{x.real:+.10f}{x.imag:+.10f}j" for x in row) + " ]"
        )
    return "\n".join(lines)


def _complex_matrix_json(m: np.ndarray):
    return [[[float(x.real), float(x.imag)] for x in row] for row in m]


def _triple_json(triple: unipotent.MonodromyTriple) -> dict:
    mats = triple.matrices()
    gens = sorted({g for m in mats.values() for g in m.support()}, key=_gen_key)
    return {
        "n": triple.problem.n,
        "basis": triple.basis,
        "generators": gens,
        "matrices": {k: m.to_json() for k, m in mats.items()},
    }


def cmd_factor(args) -> int:
    try:
        q = cyclo.quotient_form(args.alphas)
    except (cyclo.NotCyclotomicProduct, cyclo.IntegerExponent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    C = cyclo.compute_C(q)
    d = cyclo.compute_d(q)
    if args.format == "json":
        payload = {
            "alphas": [str(a) for a in cyclo.normalize_alphas(args.alphas)],
            "n": q.n,
            "a": list(q.a),
            "b": list(q.b),
            "polynomial": cyclo.expand_polynomial(q).render("X"),
            "C": str(C),
            "d": str(d),
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [
            f"a = {list(q.a)}",
            f"b = {list(q.b)}",
            f"n = {q.n}",
            f"polynomial = {cyclo.expand_polynomial(q).render('X')}",
            f"C = {C}",
            f"d = {d}",
        ]
        _emit(args, "\n".join(lines))
    return 0


def cmd_monodromy(args) -> int:
    try:
        triple = unipotent.monodromy_triple(args.alphas, args.basis)
    except (cyclo.NotCyclotomicProduct, cyclo.IntegerExponent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _emit(args, json.dumps(_triple_json(triple), indent=2))
    else:
        blocks = [f"basis: {triple.basis}"]
        for name, m in triple.matrices().items():
            blocks.append(f"{name}:\n{_matrix_text(m)}")
        _emit(args, "\n\n".join(blocks))
    return 0


def _table_rows(n: int):
    rows = []
    for alphas in TABLE_CASES[n]:
        q = cyclo.quotient_form(alphas)
        d = cyclo.compute_d(q)
        row = {
            "case": "(" + ",".join(str(a) for a in alphas) + ")",
            "polynomial": _quotient_string(q),
        }
        if n == 2:
            row["d"] = d
        elif n == 3:
            c2p = cyclo.c_pm(q, +1, 2)
            row.update(C=cyclo.compute_C(q), b24=c2p, d_half=d / 2, bd=(c2p / 24) * d)
        else:
            c2p = cyclo.c_pm(q, +1, 2)
            c3p = cyclo.c_pm(q, +1, 3)
            row.update(
                C=cyclo.compute_C(q),
                d=d,
                b24=-d * c2p,
                zeta3_coeff=d * c3p,
            )
        rows.append(row)
    return rows


def _quotient_string(q: cyclo.QuotientForm) -> str:
    def side(ks):
        from collections import Counter

        parts = []
        for k, e in sorted(Counter(ks).items(), reverse=True):
            base = f"(X^{k}-1)" if k > 1 else "(X-1)"
            parts.append(base + (f"^{e}" if e > 1 else ""))
        return "".join(parts) or "1"

    return side(q.a) + "/" + side(q.b)


_TABLE_FOOTNOTES = {
    4: [
        "note: case (1/5,2/5,3/5,4/5) is sometimes tabulated with C = 3025; "
        "the defining product gives C = 3125.",
        "note: case (1/4,1/4,3/4,3/4) is sometimes tabulated with C = 496; "
        "the defining product gives C = 4096.",
    ]
}


def cmd_table(args) -> int:
    n = args.n
    rows = _table_rows(n)
    if n == 3:
        for row in rows:
            if row["bd"] != -1:
                print(f"error: bd = {row['bd']} differs from -1", file=sys.stderr)
                return 1
    if args.format == "json":
        out = []
        for row in rows:
            item = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in row.items()}
            out.append(item)
        payload = {"n": n, "rows": out}
        if n in _TABLE_FOOTNOTES:
            payload["notes"] = _TABLE_FOOTNOTES[n]
        _emit(args, json.dumps(payload, indent=2))
        return 0
    if n == 2:
        header = ["case", "polynomial", "d"]
        keys = header
    elif n == 3:
        header = ["case", "polynomial", "C", "24b", "d/2"]
        keys = ["case", "polynomial", "C", "b24", "d_half"]
    else:
        header = ["case", "polynomial", "C", "d", "24b", "(2pi i)^3 a/zeta(3)"]
        keys = ["case", "polynomial", "C", "d", "b24", "zeta3_coeff"]
    cells = [header] + [[str(row[k]) for k in keys] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "-" * len(lines[0]))
    if n == 3:
        lines.append("bd = -1 in all cases")
    for note in _TABLE_FOOTNOTES.get(n, []):
        lines.append(note)
    _emit(args, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    try:
        report = numeric.verify_T(
            args.alphas, args.z, tol=args.tol, terms=args.terms
        )
    except (cyclo.NotCyclotomicProduct, cyclo.IntegerExponent, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = {
            "n": report.n,
            "z": [report.z.real, report.z.imag],
            "tol": report.tol,
            "residual_normalized": report.residual_normalized,
            "residual_raw": report.residual_raw,
            "passed": report.passed,
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [
            f"n = {report.n}, z = {report.z}",
            f"residual (normalized ladder) = {report.residual_normalized:.3e}",
            f"residual (raw ladder)        = {report.residual_raw:.3e}",
            f"tolerance = {report.tol:.1e}",
            "PASS" if report.passed else "FAIL",
        ]
        _emit(args, "\n".join(lines))
    return 0 if report.passed else 1


def cmd_series(args) -> int:
    try:
        q = cyclo.quotient_form(args.alphas)
    except (cyclo.NotCyclotomicProduct, cyclo.IntegerExponent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    coeffs = cyclo.f0_coeffs(q, args.terms)
    if args.format == "json":
        _emit(args, json.dumps({"terms": args.terms, "coefficients": [str(c) for c in coeffs]}, indent=2))
    else:
        _emit(args, "\n".join(str(c) for c in coeffs))
    return 0


def cmd_nonresonant(args) -> int:
    try:
        problem = nonresonant.NonresonantProblem.make(args.alphas, args.betas)
    except (levelt.ResonantInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    m0 = nonresonant.m0_diag(problem.betas)
    m1 = nonresonant.m1_sine(problem)
    minf = nonresonant.m_infinity_formula(problem)
    relation = float(
        np.max(np.abs(m0 @ m1 @ minf - np.eye(problem.n)))
    )
    eig = np.linalg.eigvals(minf)
    expected = np.array(
        [np.exp(2j * np.pi * float(a)) for a in problem.alphas]
    )
    eig_err = _multiset_match(eig, expected)
    ok = bool(relation < 1e-10 and eig_err < 1e-9)
    if args.format == "json":
        payload = {
            "n": problem.n,
            "matrices": {
                "M0": _complex_matrix_json(m0),
                "M1": _complex_matrix_json(m1),
                "Minf": _complex_matrix_json(minf),
            },
            "relation_residual": relation,
            "eigenvalue_residual": eig_err,
            "passed": ok,
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [
            f"M0:\n{_complex_matrix_text(m0)}",
            f"M1:\n{_complex_matrix_text(m1)}",
            f"Minf:\n{_complex_matrix_text(minf)}",
            f"relation residual |M0 M1 Minf - I| = {relation:.3e}",
            f"eigenvalue residual = {eig_err:.3e}",
            "PASS" if ok else "FAIL",
        ]
        _emit(args, "\n\n".join(lines))
    return 0 if ok else 1


def _multiset_match(got, expected) -> float:
    got = list(got)
    err = 0.0
    for e in expected:
        best = min(range(len(got)), key=lambda i: abs(got[i] - e))
        err = max(err, float(abs(got[best] - e)))
        got.pop(best)
    return err


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hypermono",
        description="Monodromy of generalized hypergeometric equations: "
        "exact cyclotomic pipeline plus a contour-integral oracle",
    )
    ap.add_argument("--version", action="version", version="hypermono 0.1.0")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("factor", help="quotient form, C and d for cyclotomic exponents")
    p.add_argument("--alphas", type=parse_fraction_list, required=True)
    common(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("monodromy", help="exact monodromy triple")
    p.add_argument("--alphas", type=parse_fraction_list, required=True)
    p.add_argument("--basis", choices=unipotent.BASES, default="normalized-frobenius")
    common(p)
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("table", help="survey table for degree 2, 3 or 4")
    p.add_argument("--n", type=int, choices=(2, 3, 4), required=True)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="contour-vs-series residual check")
    p.add_argument("--alphas", type=parse_fraction_list, required=True)
    p.add_argument("--z", type=parse_point, default=complex(-0.5))
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--terms", type=int, default=4000)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="integer series coefficients of the rescaled analytic solution")
    p.add_argument("--alphas", type=parse_fraction_list, required=True)
    p.add_argument("--terms", type=int, default=20)
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("nonresonant", help="complex monodromy matrices, distinct exponents")
    p.add_argument("--alphas", type=parse_fraction_list, required=True)
    p.add_argument("--betas", type=parse_fraction_list, required=True)
    common(p)
    p.set_defaults(func=cmd_nonresonant)

    return ap


def _merge_value_flags(argv: list[str]) -> list[str]:
    # let "--z -1/2" parse: argparse reads a leading dash as a new flag
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--z",) and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_value_flags(list(argv)))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
