"""Command-line interface.

Deterministic, machine-readable output: JSON by default (sorted keys), CSV
for coefficient tables via --csv.  Coefficients and dimensions are emitted as
decimal strings because they routinely exceed what JSON numbers can carry.

Set CTRING_CACHE_DIR to persist the Kostka memo cache between runs.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from .matrixball import rsk, zigzag_witness
from .partitions import (
    kostka_cache_restore,
    kostka_cache_snapshot,
    partitions,
    weak_compositions_upto,
)
from .psi import (
    graded_decomposition,
    kronecker_dominance,
    kronecker_product,
    pair_group,
)
from .quotient import (
    QuotientModel,
    derived_matrix_set,
    hilbert_series_linear,
    hilbert_series_zigzag,
    lefschetz_report,
    verify_associated_graded,
)
from .series import hilbert_kostka, log_concavity_violations, q_ehrhart, uniform_family
from .symfunc import TensorSymFunc
from .tables import (
    matrix_from_json,
    matrix_from_text,
    matrix_to_json,
    zigzag_number,
)

CACHE_ENV = "CTRING_CACHE_DIR"
CACHE_FILE = "kostka-cache-v1.json"

USAGE_ERROR = 2
CHECK_FAILED = 1


def composition(text: str) -> tuple:
    """Parse a comma-separated composition; a token INT^COUNT repeats a part."""
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            if "^" in token:
                base, count = token.split("^")
                value, times = int(base), int(count)
            else:
                value, times = int(token), 1
            if value < 0 or times < 0:
                raise ValueError
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"malformed composition {text!r}: token {token!r}"
            ) from None
        parts.extend([value] * times)
    if not parts:
        raise argparse.ArgumentTypeError(f"malformed composition {text!r}: empty")
    return tuple(parts)


def _read_matrix(spec_text: str):
    if spec_text == "-":
        raw = sys.stdin.read()
    elif os.path.exists(spec_text):
        raw = Path(spec_text).read_text()
    else:
        raw = spec_text.replace(";", "\n")
    raw = raw.strip()
    if raw.startswith("{"):
        return matrix_from_json(raw)
    return matrix_from_text(raw)


def _big(values):
    """Decimal-string encoding for coefficient lists: 60-digit numbers do not
    survive as native JSON numbers."""
    return [str(v) for v in values]


def _emit(payload, args) -> None:
    if getattr(args, "csv", False) and "coeffs" in payload:
        print("degree,coefficient")
        for d, c in enumerate(payload["coeffs"]):
            print(f"{d},{c}")
        return
    if getattr(args, "csv", False) and "series" in payload:
        print("m,degree,coefficient")
        for entry in payload["series"]:
            for d, c in enumerate(entry["coeffs"]):
                print(f"{entry['m']},{d},{c}")
        return
    print(json.dumps(payload, sort_keys=True))


def _tableau_rows(tableau):
    return [list(row) for row in tableau]


def cmd_hilbert(args):
    if args.method in ("kostka", "all"):
        coeffs = hilbert_kostka(args.alpha, args.beta)
    if args.method in ("linalg", "all"):
        linalg = hilbert_series_linear(args.alpha, args.beta)
        if args.method == "linalg":
            coeffs = linalg
        elif linalg != coeffs:
            return {"error": "hilbert methods disagree"}, CHECK_FAILED
    if args.method in ("zigzag", "all"):
        zz = hilbert_series_zigzag(args.alpha, args.beta)
        if args.method == "zigzag":
            coeffs = zz
        elif zz != coeffs:
            return {"error": "hilbert methods disagree"}, CHECK_FAILED
    return {"alpha": list(args.alpha), "beta": list(args.beta), "coeffs": _big(coeffs)}, 0


def cmd_rsk(args):
    matrix = _read_matrix(args.matrix)
    pair = rsk(matrix)
    return {
        "P": _tableau_rows(pair.P),
        "Q": _tableau_rows(pair.Q),
        "shape": [len(row) for row in pair.P],
        "zigzag": zigzag_number(matrix),
    }, 0


def cmd_zigzag(args):
    matrix = _read_matrix(args.matrix)
    payload = {"zigzag": zigzag_number(matrix)}
    if any(v for row in matrix for v in row):
        payload["witness"] = [list(c) for c in zigzag_witness(matrix)]
    return payload, 0


def cmd_standard_basis(args):
    model = QuotientModel(args.alpha, args.beta)
    matrices = sorted(model.standard_exponent_matrices())
    return {
        "alpha": list(args.alpha),
        "beta": list(args.beta),
        "dimension": str(model.size),
        "hilbert": _big(model.hilbert),
        "standard_monomials": [matrix_to_json(m) for m in matrices],
    }, 0


def cmd_verify(args):
    report = dict(verify_associated_graded(args.alpha, args.beta))
    model = QuotientModel(args.alpha, args.beta)
    report["standard_equals_matrix_ball"] = (
        model.standard_exponent_matrices()
        == derived_matrix_set(args.alpha, args.beta)
    )
    ok = (
        report["lifts_vanish"]
        and report["dimension_match"]
        and report["standard_equals_matrix_ball"]
    )
    return report, 0 if ok else CHECK_FAILED


def cmd_frobenius(args):
    decomposition = graded_decomposition(args.mu, args.nu)
    out = []
    for d, tensor in decomposition.items():
        terms = [
            {"factors": [list(part) for part in key], "mult": int(c)}
            for key, c in sorted(tensor.coeffs.items())
        ]
        out.append(
            {"degree": d, "dimension": str(tensor.dimension()), "terms": terms}
        )
    return {"mu": list(args.mu), "nu": list(args.nu), "decomposition": out}, 0


def cmd_lefschetz(args):
    model = QuotientModel(args.alpha, args.beta)
    report = lefschetz_report(model)
    return {
        "alpha": list(args.alpha),
        "beta": list(args.beta),
        "min_zigzag": model.min_zigzag,
        "maps": report,
        "violations": [r["k"] for r in report if not r["injective"]],
    }, 0


def cmd_conjectures(args):
    violations = {"log_concavity": [], "lefschetz": [], "dominance": []}
    for n in range(1, args.max_n + 1):
        for mu in partitions(n):
            for nu in partitions(n):
                coeffs = hilbert_kostka(mu, nu)
                for k in log_concavity_violations(coeffs):
                    violations["log_concavity"].append(
                        {"mu": list(mu), "nu": list(nu), "k": k}
                    )
    for n in range(1, args.lefschetz_n + 1):
        for mu in partitions(n):
            for nu in partitions(n):
                model = QuotientModel(mu, nu)
                for entry in lefschetz_report(model):
                    if not entry["injective"]:
                        violations["lefschetz"].append(
                            {"mu": list(mu), "nu": list(nu), "k": entry["k"]}
                        )
    for n in range(1, args.dominance_n + 1):
        for mu in partitions(n):
            for nu in partitions(n):
                decomposition = graded_decomposition(mu, nu)
                group = pair_group(mu, nu)
                top = max(decomposition, default=0)
                degrees = tuple(group.sizes)
                empty = TensorSymFunc(degrees, "s")
                for k in range(1, top):
                    outer = decomposition.get(k - 1, empty)
                    inner = decomposition.get(k, empty)
                    upper = decomposition.get(k + 1, empty)
                    bad = kronecker_dominance(
                        inner, kronecker_product(outer, upper, group), group
                    )
                    if bad:
                        violations["dominance"].append(
                            {"mu": list(mu), "nu": list(nu), "k": k}
                        )
    total = sum(len(v) for v in violations.values())
    return {"violations": violations, "total_violations": total}, 0


def cmd_ehrhart(args):
    series = q_ehrhart(args.alpha, args.beta, args.upto, interior=args.interior)
    return {
        "alpha": list(args.alpha),
        "beta": list(args.beta),
        "interior": args.interior,
        "series": [{"m": m, "coeffs": _big(coeffs)} for m, coeffs in enumerate(series)],
    }, 0


def cmd_figure1(args):
    alpha = uniform_family(args.family)
    coeffs = hilbert_kostka(alpha, alpha, max_degree=args.upto)
    return {
        "family": f"{args.family}^{60 // args.family}",
        "coeffs": _big(coeffs),
    }, 0


def cmd_sweep(args):
    from .quotient import derived_matrix_set

    failures = []
    conjecture_violations = []
    pairs = 0
    for n in range(args.max_n + 1):
        comps = weak_compositions_upto(n, args.max_len)
        for alpha in comps:
            for beta in comps:
                pairs += 1
                model = QuotientModel(alpha, beta)
                record = {"alpha": list(alpha), "beta": list(beta)}
                if model.standard_exponent_matrices() != derived_matrix_set(
                    alpha, beta
                ):
                    failures.append({**record, "check": "standard-basis"})
                kost = hilbert_kostka(alpha, beta)
                zz = hilbert_series_zigzag(alpha, beta)
                if not (list(model.hilbert) == kost == zz):
                    failures.append({**record, "check": "hilbert-agreement"})
                report = verify_associated_graded(alpha, beta)
                if not (report["lifts_vanish"] and report["dimension_match"]):
                    failures.append({**record, "check": "graded-vanishing-ideal"})
                for k in log_concavity_violations(kost):
                    conjecture_violations.append(
                        {**record, "conjecture": "log-concavity", "k": k}
                    )
                for entry in lefschetz_report(model):
                    if not entry["injective"]:
                        conjecture_violations.append(
                            {**record, "conjecture": "lefschetz", "k": entry["k"]}
                        )
    payload = {
        "pairs": pairs,
        "failures": failures,
        "conjecture_violations": conjecture_violations,
    }
    return payload, 0 if not failures else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctring",
        description="Exact invariants of contingency-table quotient rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name)
        for flag, kwargs in flags.items():
            p.add_argument(f"--{flag}", **kwargs)
        p.add_argument("--csv", action="store_true", help="CSV coefficient output")
        p.set_defaults(fn=fn)
        return p

    add(
        "hilbert",
        cmd_hilbert,
        alpha={"type": composition, "required": True},
        beta={"type": composition, "required": True},
        method={"choices": ["kostka", "linalg", "zigzag", "all"], "default": "kostka"},
    )
    add("rsk", cmd_rsk, matrix={"required": True})
    add("zigzag", cmd_zigzag, matrix={"required": True})
    add(
        "standard-basis",
        cmd_standard_basis,
        alpha={"type": composition, "required": True},
        beta={"type": composition, "required": True},
    )
    add(
        "verify",
        cmd_verify,
        alpha={"type": composition, "required": True},
        beta={"type": composition, "required": True},
    )
    add(
        "frobenius",
        cmd_frobenius,
        mu={"type": composition, "required": True},
        nu={"type": composition, "required": True},
    )
    add(
        "lefschetz",
        cmd_lefschetz,
        alpha={"type": composition, "required": True},
        beta={"type": composition, "required": True},
    )
    add(
        "conjectures",
        cmd_conjectures,
        **{
            "max-n": {"type": int, "default": 8, "dest": "max_n"},
            "lefschetz-n": {"type": int, "default": 4, "dest": "lefschetz_n"},
            "dominance-n": {"type": int, "default": 4, "dest": "dominance_n"},
        },
    )
    add(
        "ehrhart",
        cmd_ehrhart,
        alpha={"type": composition, "required": True},
        beta={"type": composition, "required": True},
        upto={"type": int, "default": 3},
        interior={"action": "store_true"},
    )
    add(
        "figure1",
        cmd_figure1,
        family={"type": int, "required": True, "choices": [1, 2, 3, 4]},
        upto={"type": int, "default": 3},
    )
    add(
        "sweep",
        cmd_sweep,
        **{
            "max-n": {"type": int, "default": 4, "dest": "max_n"},
            "max-len": {"type": int, "default": 2, "dest": "max_len"},
        },
    )
    return parser


def _cache_path():
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / CACHE_FILE


def _load_cache():
    path = _cache_path()
    if path is None or not path.exists():
        return
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return
    if data.get("version") != 1:
        return
    kostka_cache_restore(
        (tuple(shape), tuple(content), int(value))
        for shape, content, value in data.get("kostka", [])
    )


def _save_cache():
    path = _cache_path()
    if path is None:
        return
    entries = [
        [list(shape), list(content), str(value)]
        for shape, content, value in kostka_cache_snapshot()
    ]
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"version": 1, "kostka": entries}))
    except OSError:
        pass


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _load_cache()
    try:
        payload, status = args.fn(args)
    except (ValueError, RuntimeError) as err:
        print(json.dumps({"error": str(err)}), file=sys.stderr)
        return USAGE_ERROR
    _emit(payload, args)
    _save_cache()
    return status


if __name__ == "__main__":
    sys.exit(main())
