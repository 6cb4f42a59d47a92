"""Command-line interface.

Exit codes are part of the contract:

* 0 — success (including a "not diagonalizable" verdict from ``check``,
  which is a successful analysis);
* 2 — unusable input: bad flags, unreadable files, schema violations,
  malformed scalars;
* 3 — the spectrum cannot be computed exactly; re-run with --spectrum;
* 4 — ``diagonalize`` on a matrix that is not diagonalizable (the
  ``jordan`` command handles those);
* 5 — a supplied spectrum or target eigenvalue fails exact validation;
* 6 — an internal cross-check failed (a bug in this package, not in
  your input);
* 1 — any other analysis failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .charmatrix import (
    column_space_intersection,
    cross_eigenvector_3x3,
    is_diagonalizable,
    left_product_eigenvectors,
    product_eigenvectors,
)
from .errors import (
    ExactEigError,
    InternalInconsistency,
    InvalidSpectrum,
    IrrationalSpectrum,
    NotDiagonalizable,
    ParseError,
    SchemaError,
    SpectrumTooLarge,
    TargetNotInSpectrum,
)
from .factorizations import (
    diagonalize,
    matrix_power,
    ode_general_solution,
)
from .io_json import (
    matrix_to_json,
    parse_matrix_json,
    parse_spectrum_json,
    vector_to_json,
)
from .jordan import jordan_form
from .matrices import (
    Matrix,
    OpCounter,
    is_independent,
    matvec,
    normalize_eigenvector,
    subtract_scalar_diag,
)
from .scalars import format_rational, format_scalar, parse_scalar
from .spectra import (
    Spectrum,
    charpoly,
    find_spectrum,
    format_polynomial,
    verify_spectrum,
)
from .verification import (
    GeneratorConfig,
    SplitMix64,
    oracle_eigenvectors,
    random_spectral_matrix,
)

__all__ = ["main"]


def main(argv=None):
    """Entry point; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (SchemaError, ParseError) as exc:
        return _fail(2, str(exc))
    except IrrationalSpectrum as exc:
        return _fail(3, f"{exc} (supply --spectrum with the exact "
                        "eigenvalues)")
    except NotDiagonalizable as exc:
        return _fail(4, f"{exc} (the jordan command handles defective "
                        "matrices)")
    except (InvalidSpectrum, SpectrumTooLarge) as exc:
        return _fail(5, str(exc))
    except InternalInconsistency as exc:
        return _fail(6, f"internal consistency check failed: {exc}")
    except ExactEigError as exc:
        return _fail(1, str(exc))
    except OSError as exc:
        return _fail(2, str(exc))


def _fail(code, message):
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit_json(payload, **kwargs):
    print(json.dumps(payload, separators=(",", ":"), **kwargs))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="exacteig",
        description="Exact eigenvector extraction over the Gaussian "
                    "rationals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, matrix=True, optional_matrix=False):
        p = sub.add_parser(name, help=help_text)
        if matrix:
            if optional_matrix:
                p.add_argument("matrix", nargs="?", default=None,
                               help="path to a matrix JSON file")
            else:
                p.add_argument("matrix", help="path to a matrix JSON file")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        return p

    p = add("eigenvectors", "eigenvector bases via shifted-matrix products")
    p.add_argument("--spectrum", help="path to a spectrum JSON file")
    p.add_argument("--target", help="one eigenvalue to extract (scalar "
                                    "string); default: all")
    p.add_argument("--method",
                   choices=("kappa", "cross", "oracle", "intersect"),
                   default="kappa",
                   help="extraction method (default: product-based)")
    p.add_argument("--left", action="store_true",
                   help="left (row) eigenvectors instead of right")
    p.set_defaults(handler=_cmd_eigenvectors)

    p = add("left", "left (row) eigenvector bases")
    p.add_argument("--spectrum", help="path to a spectrum JSON file")
    p.add_argument("--target", help="one eigenvalue to extract")
    p.set_defaults(handler=_cmd_left)

    p = add("diagonalize", "exact eigendecomposition A = P D P^-1")
    p.add_argument("--spectrum", help="path to a spectrum JSON file")
    p.set_defaults(handler=_cmd_diagonalize)

    p = add("jordan", "exact Jordan decomposition A = P J P^-1")
    p.add_argument("--spectrum", help="path to a spectrum JSON file")
    p.set_defaults(handler=_cmd_jordan)

    p = add("charpoly", "characteristic polynomial (and exact roots)")
    p.add_argument("--no-roots", action="store_true",
                   help="skip root finding")
    p.set_defaults(handler=_cmd_charpoly)

    p = add("check", "diagonalizability verdict with witness")
    p.add_argument("--spectrum", help="path to a spectrum JSON file")
    p.set_defaults(handler=_cmd_check)

    p = add("power", "exact matrix power")
    p.add_argument("--n", type=int, required=True,
                   help="nonnegative integer exponent")
    p.add_argument("--spectrum", help="path to a spectrum JSON file")
    p.set_defaults(handler=_cmd_power)

    p = add("ode", "general solution of x' = Ax")
    p.add_argument("--spectrum", help="path to a spectrum JSON file")
    p.add_argument("--no-realify", action="store_true",
                   help="keep complex-eigenvalue solutions complex")
    p.set_defaults(handler=_cmd_ode)

    p = add("bench", "operation-count comparison of extraction methods",
            optional_matrix=True)
    p.add_argument("--spectrum", help="path to a spectrum JSON file")
    p.add_argument("--dim", type=int,
                   help="dimension of a generated input (no matrix file)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the generated input")
    p.set_defaults(handler=_cmd_bench)

    return parser


def _read_text(path):
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_matrix(args):
    return parse_matrix_json(_read_text(args.matrix))


def _load_spectrum(a, args):
    """Spectrum from --spectrum (validated against the matrix) or
    computed exactly from the characteristic polynomial."""
    if getattr(args, "spectrum", None):
        return verify_spectrum(a, parse_spectrum_json(_read_text(args.spectrum)))
    return find_spectrum(charpoly(a))


def _print_matrix(m, indent=""):
    for i in range(m.rows):
        body = ", ".join(format_scalar(m.entry(i, j)) for j in range(m.cols))
        print(f"{indent}[{body}]")


def _cmd_eigenvectors(args):
    return _run_eigenvectors(args, left=args.left, method=args.method)


def _cmd_left(args):
    return _run_eigenvectors(args, left=True, method="kappa")


def _run_eigenvectors(args, left, method):
    a = _load_matrix(args)
    if method == "cross" and (a.rows, a.cols) != (3, 3):
        return _fail(2, "--method cross only applies to 3x3 matrices")
    if left and method not in ("kappa", "oracle"):
        return _fail(2, f"--method {method} does not support --left")
    s = _load_spectrum(a, args)
    if args.target is not None:
        lam = parse_scalar(args.target)
        if lam not in s:
            raise TargetNotInSpectrum(
                f"--target {args.target} is not in the spectrum")
        targets = [lam]
    else:
        targets = list(s.values())
    results = []
    for lam in targets:
        results.append((lam, _extract(a, s, lam, method, left)))
    if args.json:
        if args.target is not None:
            payload = [vector_to_json(v) for v in results[0][1]]
        else:
            payload = {"eigenvalues": [
                {"value": format_scalar(lam),
                 "multiplicity": s.multiplicity(lam),
                 "vectors": [vector_to_json(v) for v in vectors]}
                for lam, vectors in results]}
        _emit_json(payload)
        return 0
    for lam, vectors in results:
        kind = "left eigenvectors" if left else "eigenvectors"
        print(f"eigenvalue {format_scalar(lam)} "
              f"(multiplicity {s.multiplicity(lam)}), {kind}:")
        if not vectors:
            print("  (none)")
        for v in vectors:
            print(f"  {v!r}")
    return 0


def _extract(a, s, lam, method, left):
    if method == "kappa":
        if left:
            return left_product_eigenvectors(a, s, lam)
        return product_eigenvectors(a, s, lam)
    if method == "oracle":
        if left:
            return [v.transposed()
                    for v in oracle_eigenvectors(a.transpose(), lam)]
        return oracle_eigenvectors(a, lam)
    if method == "cross":
        return [cross_eigenvector_3x3(a, lam)]
    return _intersect_method(a, s, lam)


def _intersect_method(a, s, lam):
    """Iterated column-space intersection of the other shifted matrices.

    Equals the eigenspace whenever the matrix is diagonalizable; the
    final residual filter drops any excess directions a defective input
    would leave behind."""
    others = [v for v in s.values() if v != lam]
    if not others:
        return oracle_eigenvectors(a, lam)
    current = subtract_scalar_diag(a, others[0])
    for value in others[1:]:
        vectors = column_space_intersection(
            current, subtract_scalar_diag(a, value))
        if not vectors:
            return []
        current = Matrix.from_columns([v.entries for v in vectors])
    kept = []
    for j in range(current.cols):
        v = current.column(j)
        if v.is_zero():
            continue
        if matvec(a, v) != v.scaled(lam):
            continue
        if is_independent(kept, v):
            kept.append(normalize_eigenvector(v))
    return kept


def _cmd_diagonalize(args):
    a = _load_matrix(args)
    s = _load_spectrum(a, args)
    result = diagonalize(a, s)
    if args.json:
        _emit_json({
            "P": matrix_to_json(result.p),
            "D": matrix_to_json(result.d),
            "P_inv": matrix_to_json(result.p_inv),
        })
        return 0
    print("P =")
    _print_matrix(result.p, "  ")
    print("D =")
    _print_matrix(result.d, "  ")
    print("P^-1 =")
    _print_matrix(result.p_inv, "  ")
    return 0


def _cmd_jordan(args):
    a = _load_matrix(args)
    s = _load_spectrum(a, args)
    result = jordan_form(a, s)
    if args.json:
        _emit_json({
            "P": matrix_to_json(result.p),
            "J": matrix_to_json(result.j),
            "P_inv": matrix_to_json(result.p_inv),
        })
        return 0
    print("P =")
    _print_matrix(result.p, "  ")
    print("J =")
    _print_matrix(result.j, "  ")
    print("P^-1 =")
    _print_matrix(result.p_inv, "  ")
    return 0


def _cmd_charpoly(args):
    a = _load_matrix(args)
    p = charpoly(a)
    roots = None
    if not args.no_roots:
        roots = find_spectrum(p)
    if args.json:
        payload = {
            "charpoly": format_polynomial(p),
            "coefficients": [format_scalar(c) for c in p.coeffs],
            "roots": None if roots is None else [
                {"value": format_scalar(v), "multiplicity": m}
                for v, m in roots.pairs],
        }
        _emit_json(payload)
        return 0
    print(format_polynomial(p))
    if roots is not None:
        body = ", ".join(f"{format_scalar(v)} (multiplicity {m})"
                         for v, m in roots.pairs)
        print(f"roots: {body}")
    return 0


def _cmd_check(args):
    a = _load_matrix(args)
    s = _load_spectrum(a, args)
    ok, witness = is_diagonalizable(a, s)
    if args.json:
        _emit_json({
            "diagonalizable": ok,
            "witness": None if witness is None else matrix_to_json(witness),
        })
        return 0
    if ok:
        print("diagonalizable: yes")
    else:
        print("diagonalizable: no")
        print("nonzero shifted-matrix product (witness):")
        _print_matrix(witness, "  ")
    return 0


def _cmd_power(args):
    a = _load_matrix(args)
    if args.n < 0:
        return _fail(2, "--n must be nonnegative")
    s = None
    if args.spectrum:
        s = verify_spectrum(a, parse_spectrum_json(_read_text(args.spectrum)))
    result = matrix_power(a, args.n, s)
    if args.json:
        _emit_json(matrix_to_json(result))
        return 0
    _print_matrix(result)
    return 0


def _cmd_ode(args):
    a = _load_matrix(args)
    s = None
    if args.spectrum:
        s = verify_spectrum(a, parse_spectrum_json(_read_text(args.spectrum)))
    realify = False if args.no_realify else None
    terms = ode_general_solution(a, s, realify)
    if args.json:
        _emit_json({"terms": [_term_to_json(t) for t in terms]})
        return 0
    rendered = [render_ode_term(t) for t in terms]
    print("x(t) = " + " + ".join(rendered))
    return 0


def _term_to_json(term):
    payload = {
        "label": term.coefficient_label,
        "exponent": format_scalar(term.exponent),
        "polynomial": [
            {"vector": vector_to_json(vec), "power": power,
             "divisor": divisor}
            for vec, power, divisor in term.vector_polynomial],
        "trig": None,
    }
    if term.trig_part is not None:
        payload["trig"] = {
            "kind": term.trig_part.kind,
            "beta": format_rational(term.trig_part.beta),
            "partner_vectors": [vector_to_json(v)
                                for v in term.trig_part.partner_vectors],
        }
    return payload


def _render_vector(v):
    return "[" + ",".join(format_scalar(e) for e in v.entries) + "]^T"


def _render_exp(lam):
    if not lam:
        return ""
    text = format_scalar(lam)
    if any(c in text[1:] for c in "+-"):
        text = f"({text})"
    return f"exp({text}t)"


def _render_tpow(power, divisor):
    if power == 0:
        return ""
    base = "t" if power == 1 else f"t^{power}"
    return base if divisor == 1 else f"{base}/{divisor}"


def _render_trig(kind, beta):
    rate = "" if beta == 1 else format_rational(beta)
    return f"{kind}({rate}t)"


def render_ode_term(term):
    """Deterministic text form of one solution term, e.g.
    ``c1*[-1,1]^T*exp(2t)`` or
    ``c2*([1,0]^T*t + [0,1]^T)*exp(2t)``."""
    if term.trig_part is None:
        pieces = []
        for vec, power, divisor in term.vector_polynomial:
            tpow = _render_tpow(power, divisor)
            body = _render_vector(vec)
            pieces.append(f"{body}*{tpow}" if tpow else body)
        joined = pieces[0] if len(pieces) == 1 else "(" + " + ".join(pieces) + ")"
        parts = [term.coefficient_label, joined]
    else:
        trig = term.trig_part
        cos_text = _render_trig("cos", trig.beta)
        sin_text = _render_trig("sin", trig.beta)
        pieces = []
        for (vec, power, divisor), partner in zip(
                term.vector_polynomial, trig.partner_vectors):
            lead = _render_vector(vec)
            mate = _render_vector(partner)
            if trig.kind == "cos":
                combo = f"({lead}*{cos_text} - {mate}*{sin_text})"
            else:
                combo = f"({mate}*{cos_text} + {lead}*{sin_text})"
            tpow = _render_tpow(power, divisor)
            pieces.append(f"{combo}*{tpow}" if tpow else combo)
        joined = pieces[0] if len(pieces) == 1 else "(" + " + ".join(pieces) + ")"
        parts = [term.coefficient_label, joined]
    exp_text = _render_exp(term.exponent)
    if exp_text:
        parts.append(exp_text)
    return "*".join(parts)


def _cmd_bench(args):
    if args.matrix is not None:
        a = _load_matrix(args)
        s = _load_spectrum(a, args)
    else:
        if args.dim is None:
            return _fail(2, "bench needs a matrix file or --dim")
        if args.dim < 2:
            return _fail(2, "--dim must be at least 2")
        a, s = _generated_bench_input(args.dim, args.seed)
    report = build_bench_report(a, s)
    if args.json:
        _emit_json(report, indent=2)
        return 0
    print(f"input: {report['input']['dim']}x{report['input']['dim']} matrix, "
          "spectrum "
          + ", ".join(f"{e['value']} (x{e['multiplicity']})"
                      for e in report["input"]["spectrum"]))
    for name, stats in report["methods"].items():
        print(f"method {name}: {stats['scalar_mults']} mults, "
              f"{stats['scalar_adds']} adds, {stats['scalar_divs']} divs, "
              f"wall {stats['wall_time_ns']} ns")
    print("per eigenvalue:")
    for entry in report["per_eigenvalue"]:
        for name in ("kappa", "oracle"):
            stats = entry[name]
            print(f"  {entry['value']} via {name}: "
                  f"{stats['scalar_mults']} mults, "
                  f"{stats['scalar_adds']} adds, "
                  f"{stats['scalar_divs']} divs")
    return 0


def _generated_bench_input(dim, seed):
    """Deterministic benchmark input: distinct small integer eigenvalues
    with a random multiplicity split, realized through the seeded
    generator."""
    rng = SplitMix64(seed)
    distinct = rng.randint(2, min(3, dim))
    values = []
    while len(values) < distinct:
        v = rng.randint(-4, 4)
        if v not in values:
            values.append(v)
    mults = [1] * distinct
    for _ in range(dim - distinct):
        mults[rng.randint(0, distinct - 1)] += 1
    spectrum = Spectrum(list(zip(values, mults)))
    config = GeneratorConfig(dim=dim, spectrum=spectrum,
                             seed=rng.next_u64(), entry_bound=2)
    a, _ = random_spectral_matrix(config)
    return a, spectrum


def build_bench_report(a, s):
    """Per-method scalar-operation counts and wall times for computing
    every eigenspace of ``a``. Reports measurements only; interpreting
    them is left to the reader."""
    totals = {"kappa": OpCounter(), "oracle": OpCounter()}
    walls = {"kappa": 0, "oracle": 0}
    per_eigenvalue = []
    for value, _ in s.pairs:
        counter_k = OpCounter()
        started = time.perf_counter_ns()
        product_eigenvectors(a, s, value, counter_k)
        walls["kappa"] += time.perf_counter_ns() - started
        counter_o = OpCounter()
        started = time.perf_counter_ns()
        oracle_eigenvectors(a, value, counter_o)
        walls["oracle"] += time.perf_counter_ns() - started
        totals["kappa"].tally(counter_k.scalar_mults, counter_k.scalar_adds,
                              counter_k.scalar_divs)
        totals["oracle"].tally(counter_o.scalar_mults, counter_o.scalar_adds,
                               counter_o.scalar_divs)
        per_eigenvalue.append({
            "value": format_scalar(value),
            "kappa": counter_k.as_dict(),
            "oracle": counter_o.as_dict(),
        })
    return {
        "input": {
            "dim": a.rows,
            "spectrum": [{"value": format_scalar(v), "multiplicity": m}
                         for v, m in s.pairs],
        },
        "methods": {
            name: {**totals[name].as_dict(), "wall_time_ns": walls[name]}
            for name in ("kappa", "oracle")
        },
        "per_eigenvalue": per_eigenvalue,
    }


if __name__ == "__main__":
    sys.exit(main())
