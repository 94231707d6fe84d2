"""Command-line surface: factorize, verify, predict, demo.

Exit codes: 0 success, 1 demo fixture failure, 2 parse/validation
failure, 3 verification failure, 4 construction cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable

from . import fixtures
from .factorization import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    EXACT_SIZE_THRESHOLD,
    MatrixFactorization,
    VerificationError,
    verify_exact,
    verify_randomized,
)
from .matrix import MatrixError
from .poly import ParseError, PolyError, Polynomial, parse_polynomial
from .refined import (
    CapExceededError,
    SummandReducedPoly,
    ValidationFailure,
    predict_sizes,
    run_improved,
    run_refined,
    run_standard,
    validate_summand_reduced,
)
from .standard import standard_factorize_polynomial
from .tensor import STANDARD_VARIANTS, YOSHINO_VARIANTS, mult_tensor, reduced_tensor

EXIT_OK = 0
EXIT_DEMO_FAILURE = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_CAP = 4


@dataclass(frozen=True)
class RunConfig:
    method: str = "refined"
    yoshino_variant: str = "standard"
    standard_variant: str = "standard"
    verify_mode: str = "auto"
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    output_format: str = "text"
    strict_validate: bool = False
    max_standard_monomials: int = 13


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _parse_problem(text: str) -> SummandReducedPoly | Polynomial:
    """A JSON object with terms/products is a structured document;
    anything else is polynomial text."""
    stripped = text.strip()
    if stripped.startswith("{"):
        doc = json.loads(stripped)
        return SummandReducedPoly.from_strings(
            list(doc.get("terms", [])), list(doc.get("products", []))
        )
    return parse_polynomial(stripped)


def _verification_metadata(cfg: RunConfig, size: int) -> dict:
    mode = cfg.verify_mode
    if mode == "auto":
        mode = "exact" if size <= EXACT_SIZE_THRESHOLD else "randomized"
    meta = {"mode": mode}
    if mode == "randomized":
        meta["trials"] = cfg.trials
        meta["seed"] = cfg.seed
    return meta


def _render_factorization(
    mf: MatrixFactorization, cfg: RunConfig, predicted: dict | None
) -> str:
    if cfg.output_format == "structured":
        doc = mf.to_dict()
        doc["method"] = cfg.method
        doc["predicted_sizes"] = predicted
        doc["verification"] = _verification_metadata(cfg, mf.size)
        return json.dumps(doc, indent=2)
    lines = [
        f"f = {mf.f}",
        f"method = {cfg.method}",
        f"size = {mf.size}",
    ]
    if predicted:
        lines.append("predicted sizes:")
        for key, value in predicted.items():
            lines.append(f"  {key} = {value}")
    lines.append("phi =")
    lines.append(mf.phi.render())
    lines.append("psi =")
    lines.append(mf.psi.render())
    return "\n".join(lines)


def cmd_factorize(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        problem = _parse_problem(_read_input(args.input))
    except (PolyError, json.JSONDecodeError, OSError) as exc:
        print(f"error: cannot parse input: {exc}", file=sys.stderr)
        return EXIT_PARSE

    predicted = None
    try:
        if isinstance(problem, Polynomial):
            if cfg.method != "standard":
                print(
                    "error: the refined and improved pipelines need a structured "
                    "summand-reduced document, not plain polynomial text",
                    file=sys.stderr,
                )
                return EXIT_PARSE
            mf = standard_factorize_polynomial(
                problem, cfg.standard_variant, verify=cfg.verify_mode
            )
        else:
            predicted = predict_sizes(problem).to_dict()
            if cfg.method == "refined":
                mf = run_refined(
                    problem,
                    cfg.yoshino_variant,
                    verify=cfg.verify_mode,
                    strict=cfg.strict_validate,
                )
            elif cfg.method == "improved":
                mf = run_improved(
                    problem,
                    cfg.yoshino_variant,
                    verify=cfg.verify_mode,
                    strict=cfg.strict_validate,
                )
            else:
                mf = run_standard(
                    problem,
                    cfg.standard_variant,
                    max_monomials=cfg.max_standard_monomials,
                    verify=cfg.verify_mode,
                    strict=cfg.strict_validate,
                )
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValidationFailure as exc:
        print(f"error: input is not summand-reduced:\n{exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationError as exc:
        print(f"error: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except PolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    _write_output(args.output, _render_factorization(mf, cfg, predicted))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        doc = json.loads(_read_input(args.input))
        mf = MatrixFactorization.from_dict(doc)
    except (PolyError, MatrixError, json.JSONDecodeError, KeyError, OSError) as exc:
        print(f"error: cannot parse factorization file: {exc}", file=sys.stderr)
        return EXIT_PARSE

    mode = cfg.verify_mode
    if mode == "auto":
        mode = "exact" if mf.size <= EXACT_SIZE_THRESHOLD else "randomized"
    if mode == "exact":
        ok, diag = verify_exact(mf)
    else:
        ok = verify_randomized(mf, trials=cfg.trials, seed=cfg.seed)
        diag = "ok" if ok else f"randomized check failed ({cfg.trials} trials, seed {cfg.seed})"
    if cfg.output_format == "structured":
        _write_output(
            args.output,
            json.dumps(
                {"f": str(mf.f), "size": mf.size, "pass": ok, "mode": mode, "diagnostics": diag},
                indent=2,
            ),
        )
    else:
        _write_output(args.output, f"{'pass' if ok else 'FAIL'}: {diag}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_predict(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        problem = _parse_problem(_read_input(args.input))
        if isinstance(problem, Polynomial):
            print("error: predict needs a structured summand-reduced document", file=sys.stderr)
            return EXIT_PARSE
        if cfg.strict_validate:
            report = validate_summand_reduced(problem)
            if not report.ok:
                print(f"error: input is not summand-reduced:\n{report}", file=sys.stderr)
                return EXIT_PARSE
        sizes = predict_sizes(problem)
    except (PolyError, json.JSONDecodeError, OSError) as exc:
        print(f"error: cannot parse input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if cfg.output_format == "structured":
        _write_output(args.output, json.dumps(sizes.to_dict(), indent=2))
    else:
        _write_output(
            args.output,
            "\n".join(f"{key} = {value}" for key, value in sizes.to_dict().items()),
        )
    return EXIT_OK


def _demo_cases() -> list[tuple[str, Callable[[], None]]]:
    part1 = SummandReducedPoly.from_strings(
        ["zy"], [["xy^2 + x^2z + yz^2", "xy + z^2"]]
    )
    part2 = SummandReducedPoly.from_strings(
        ["x^5y^2"], [["xy^2 + x^2z + yz^2", "x^2z + y^2 + y^2z"]]
    )
    two_product = SummandReducedPoly.from_strings(
        ["zy"],
        [["xy^2 + x^2z + yz^2", "xy + z^2"], ["yz + xy^2 + x^2", "x^3z^2 + yx + y^2"]],
    )

    def check(cond: bool, message: str) -> None:
        if not cond:
            raise AssertionError(message)

    def intro_pair() -> None:
        check(verify_exact(fixtures.simple_quadratic())[0], "x^2+4 pair fails")

    def standard_sizes() -> None:
        h = standard_factorize_polynomial(parse_polynomial("xy + z^2"))
        g = standard_factorize_polynomial(parse_polynomial("xy^2 + x^2z + yz^2"))
        check(h.size == 2 and g.size == 4, "standard-method sizes differ from 2 and 4")

    def reduced_sizes() -> None:
        mp = reduced_tensor(fixtures.pair_m(), fixtures.pair_p())
        pn = reduced_tensor(fixtures.pair_p(), fixtures.pair_n())
        tmp = mult_tensor(fixtures.pair_m(), fixtures.pair_p())
        check(
            mp.size == 8 and pn.size == 16 and tmp.size == 16,
            "tensor product sizes differ from 8/16/16",
        )

    def part1_pipelines() -> None:
        sizes = (
            run_refined(part1).size,
            run_improved(part1).size,
            run_standard(part1).size,
        )
        check(sizes == (16, 32, 64), f"part-I pipeline sizes {sizes} != (16, 32, 64)")

    def part1_fixture() -> None:
        check(verify_exact(fixtures.part1_pair())[0], "16x16 fixture fails")

    def part2_pipeline() -> None:
        mf = run_refined(part2)
        sizes = predict_sizes(part2)
        check(mf.size == 32, f"part-II refined size {mf.size} != 32")
        check(
            sizes.standard_size == 512 and sizes.ratio_refined_vs_standard == 16,
            "part-II predictions differ from 512 and ratio 16",
        )

    def part2_fixture() -> None:
        check(verify_exact(fixtures.part2_pair())[0], "32x32 fixture fails")

    def two_product_prediction() -> None:
        sizes = predict_sizes(two_product)
        check(
            (sizes.standard_size, sizes.improved_size, sizes.refined_size)
            == (2**15, 2**11, 2**9)
            and sizes.ratio_refined_vs_improved == 4,
            "two-product predictions differ from 2^15/2^11/2^9 ratio 4",
        )

    def non_examples() -> None:
        a = validate_summand_reduced(SummandReducedPoly.from_strings(["x^7", "-y^5"], []))
        b = validate_summand_reduced(
            SummandReducedPoly.from_strings(
                ["zx"], [["x - y", "x^4 + x^3y + x^2y^2 + xy^3 + y^4"]]
            )
        )
        check(1 in a.failed_conditions(), "x^m - y^n should fail condition 1")
        check(3 in b.failed_conditions(), "telescoping product should fail condition 3")

    return [
        ("intro x^2+4 pair", intro_pair),
        ("standard method sizes (h=2, g=4)", standard_sizes),
        ("tensor product sizes (8, 16, 16)", reduced_sizes),
        ("part-I pipelines (16, 32, 64)", part1_pipelines),
        ("part-I 16x16 fixture verifies", part1_fixture),
        ("part-II refined (32) and predictions", part2_pipeline),
        ("part-II 32x32 fixture verifies", part2_fixture),
        ("two-product size predictions", two_product_prediction),
        ("non-example validation", non_examples),
    ]


def cmd_demo(args: argparse.Namespace, cfg: RunConfig) -> int:
    cases = _demo_cases()
    failures = 0
    lines = []
    for name, case in cases:
        try:
            case()
            lines.append(f"pass  {name}")
        except (AssertionError, VerificationError, PolyError, MatrixError) as exc:
            failures += 1
            lines.append(f"FAIL  {name}: {exc}")
    lines.append(f"{len(cases) - failures}/{len(cases)} demo cases passed")
    _write_output(args.output, "\n".join(lines))
    return EXIT_OK if failures == 0 else EXIT_DEMO_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymf",
        description="Exact matrix factorizations of multivariate polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("factorize", "factor a polynomial or summand-reduced document"),
        ("verify", "check a serialized factorization"),
        ("predict", "print the size report for a summand-reduced document"),
        ("demo", "run the built-in example corpus"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--input", default=None, help="input file ('-' or omitted: stdin)")
        sp.add_argument("--output", default=None, help="output file (default: stdout)")
        sp.add_argument("--method", choices=("standard", "improved", "refined"), default="refined")
        sp.add_argument("--yoshino-variant", choices=YOSHINO_VARIANTS, default="standard")
        sp.add_argument("--standard-variant", choices=STANDARD_VARIANTS, default="standard")
        sp.add_argument("--verify", choices=("exact", "randomized", "auto"), default="auto")
        sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--format", choices=("text", "structured"), default="text")
        sp.add_argument("--strict-validate", action="store_true")
        sp.add_argument("--max-standard-monomials", type=int, default=13)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        method=args.method,
        yoshino_variant=args.yoshino_variant,
        standard_variant=args.standard_variant,
        verify_mode=args.verify,
        trials=args.trials,
        seed=args.seed,
        output_format=args.format,
        strict_validate=args.strict_validate,
        max_standard_monomials=args.max_standard_monomials,
    )
    handler = {
        "factorize": cmd_factorize,
        "verify": cmd_verify,
        "predict": cmd_predict,
        "demo": cmd_demo,
    }[args.command]
    return handler(args, cfg)


if __name__ == "__main__":
    raise SystemExit(main())
