"""Command-line front end.

Every subcommand writes machine-readable output to stdout (or ``--out``) and
diagnostics to stderr. Exit status: 0 on success, 1 when a verification
fails (the JSON failure record is still printed), 2 on usage, domain or
resource errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence, TextIO

from . import condensation, core, multivariate, symtensor, walks
from . import serialization as ser
from .errors import ConsistencyError, DomainError, KrawtchoukError, ResourceError
from .exact import ExactMatrix, RationalMatrix
from .report import CheckReport


def _gen_urn(N: int, args) -> RationalMatrix:
    return walks.urn_step_matrix(N)


def _gen_hadamard(N: int, args) -> ExactMatrix:
    return core.sylvester_hadamard(N, method=args.method or "kron")


KINDS: dict[str, Callable] = {
    "k": lambda N, a: core.krawtchouk_matrix(N),
    "s": lambda N, a: core.symmetric_krawtchouk(N),
    "h": _gen_hadamard,
    "b": lambda N, a: core.binomial_diag(N),
    "a": lambda N, a: core.kac_matrix(N),
    "lambda": lambda N, a: core.lambda_matrix(N),
    "abar": lambda N, a: walks.abar_matrix(N),
    "hbar": lambda N, a: symtensor.symmetric_representation(core.H1, N),
    "xf": lambda N, a: symtensor.xf_bar(N),
    "xg": lambda N, a: symtensor.xg_bar(N),
    "urn": _gen_urn,
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_exact(path: str | None) -> ExactMatrix | None:
    if path is None:
        return None
    m = ser.parse_matrix(_read(path))
    if not isinstance(m, ExactMatrix):
        raise DomainError(f"{path}: expected an integer matrix")
    return m


def _load_table(path: str | None) -> RationalMatrix | None:
    if path is None:
        return None
    m = ser.parse_matrix(_read(path))
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def _load_dist(path: str | None, default: multivariate.SiteDistribution) -> multivariate.SiteDistribution:
    return default if path is None else ser.site_distribution_from_json(_read(path))


_LAURICELLA_DEFAULT = multivariate.SiteDistribution((0, 1), (Fraction(1, 2), Fraction(1, 2)))


def _verify(check: str, N: int, args) -> CheckReport:
    inp = args.input
    if check == "square":
        return core.square_check(N, _load_exact(inp))
    if check == "condense":
        return condensation.condense_check(N, _load_exact(inp), method=args.method or "matrix", jobs=args.jobs)
    if check == "recursion-s":
        return condensation.recursion_s_check(N, _load_exact(inp))
    if check == "recursion-k":
        return condensation.recursion_k_check(N, _load_exact(inp))
    if check == "hbar":
        return symtensor.hbar_equals_k_transpose(N, _load_exact(inp))
    if check == "spectral":
        return walks.spectral_check(N, _load_exact(inp))
    if check == "so21":
        return walks.so21_check(N, _load_exact(inp))
    if check == "martingale":
        return walks.martingale_check(N, _load_exact(inp))
    if check == "ortho-binomial":
        return walks.binomial_orthogonality_check(N, _load_exact(inp))
    if check == "hypergeo":
        return walks.hypergeo_check(N, _load_exact(inp))
    if check == "ortho-multinomial":
        dist = _load_dist(args.dist, multivariate.SiteDistribution.binary_symmetric())
        return multivariate.multinomial_orthogonality_check(N, dist, _load_table(inp))
    if check == "lauricella":
        dist = _load_dist(args.dist, _LAURICELLA_DEFAULT)
        return multivariate.lauricella_check(N, dist, _load_table(inp))
    raise DomainError(f"unknown check {check!r}")


CHECKS = (
    "square", "condense", "recursion-s", "recursion-k", "hbar", "spectral", "so21",
    "martingale", "ortho-binomial", "ortho-multinomial", "lauricella", "hypergeo",
)

VERIFY_HELP = """\
input matrix (--input) substitutes the object under test:
  square, hbar, spectral, martingale, ortho-binomial, hypergeo, recursion-k
                     the Krawtchouk matrix K^(N)
  condense, recursion-s
                     the symmetric Krawtchouk matrix S^(N)
  so21               the Kac matrix A^(N)
  ortho-multinomial, lauricella
                     table of K_alpha(n): rows alpha=0..N, columns the
                     compositions of N in reverse lexicographic order
"""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="krawtchouk", description="Exact Krawtchouk / Hadamard matrix toolkit.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, formats=("json", "csv", "pretty")):
        sp.add_argument("--order", "-N", type=int, required=True, help="order N")
        sp.add_argument("--format", "-f", choices=formats, default=formats[0])
        sp.add_argument("--out", "-o", help="write to this file instead of stdout")

    g = sub.add_parser("gen", help="generate a matrix family")
    g.add_argument("--kind", "-k", required=True, choices=sorted(KINDS))
    g.add_argument("--method", choices=("kron", "sign"), help="Hadamard construction (kind h)")
    common(g)

    c = sub.add_parser("condense", help="condense H^(N) by binary weight")
    c.add_argument("--method", choices=("matrix", "sign"), default="matrix")
    c.add_argument("--jobs", type=int, default=1)
    common(c)

    v = sub.add_parser("verify", help="run an identity check", epilog=VERIFY_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    v.add_argument("--check", "-c", required=True, choices=CHECKS + ("all",))
    v.add_argument("--order", "-N", type=int, required=True)
    v.add_argument("--input", "-i", help="matrix JSON/CSV file replacing the generated fixture ('-' for stdin)")
    v.add_argument("--dist", help="site distribution JSON (multinomial checks)")
    v.add_argument("--method", choices=("matrix", "sign"), help="condensation path (check condense)")
    v.add_argument("--jobs", type=int, default=1, help="worker threads for parallel reductions")
    v.add_argument("--out", "-o")

    u = sub.add_parser("urn", help="simulate the Ehrenfest urn, or evolve its law exactly")
    u.add_argument("--order", "-N", type=int, required=True)
    u.add_argument("--steps", type=int, required=True)
    u.add_argument("--seed", type=int, default=0)
    u.add_argument("--start", type=int, default=0, help="initial number of gold balls")
    u.add_argument("--exact", action="store_true", help="print the exact distribution after --steps steps")
    u.add_argument("--out", "-o")

    t = sub.add_parser("transform", help="Krawtchouk transform of a vector")
    src = t.add_mutually_exclusive_group(required=True)
    src.add_argument("--vector", help="comma-separated entries, e.g. 3,-1,7")
    src.add_argument("--input", "-i", help="JSON array of {num, den}")
    t.add_argument("--inverse", action="store_true")
    common(t, formats=("json", "csv"))

    o = sub.add_parser("ortho", help="Gram matrix of the Krawtchouk polynomials")
    o.add_argument("--dist", help="site distribution JSON; default is the binomial case")
    common(o)
    return p


def run(args: argparse.Namespace, stdout: TextIO) -> int:
    cmd = args.subcommand
    if cmd == "gen":
        stdout.write(ser.format_matrix(KINDS[args.kind](args.order, args), args.format))
        return 0
    if cmd == "condense":
        m = condensation.condense_hadamard(args.order, method=args.method, jobs=args.jobs)
        stdout.write(ser.format_matrix(m, args.format))
        return 0
    if cmd == "verify":
        checks = CHECKS if args.check == "all" else (args.check,)
        status = 0
        for name in checks:
            report = _verify(name, args.order, args)
            stdout.write(report.to_json() + "\n")
            if not report.passed:
                status = 1
                break
        return status
    if cmd == "urn":
        if args.exact:
            d = walks.evolve_distribution(walks.FiniteDistribution.delta(args.order, args.start), args.steps)
            stdout.write(ser.distribution_to_json(d) + "\n")
        else:
            stdout.write(ser.trajectory_to_csv(walks.simulate_urn(args.order, args.steps, args.seed, args.start)))
        return 0
    if cmd == "transform":
        if args.vector is not None:
            try:
                x = [Fraction(s) for s in args.vector.split(",")]
            except ValueError:
                raise DomainError(f"invalid vector {args.vector!r}") from None
        else:
            x = ser.rational_vector_from_json(_read(args.input))
        y = core.krawtchouk_transform(x, args.order, "inverse" if args.inverse else "forward")
        if args.format == "csv":
            stdout.write(",".join(ser.format_rational(v) for v in y) + "\n")
        else:
            stdout.write(ser.rational_vector_to_json(y) + "\n")
        return 0
    if cmd == "ortho":
        if args.dist is None:
            m = walks.binomial_gram(args.order)
        else:
            m = multivariate.multinomial_gram(args.order, ser.site_distribution_from_json(_read(args.dist)))
        stdout.write(ser.format_matrix(m, args.format))
        return 0
    raise DomainError(f"unknown subcommand {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = open(args.out, "w", encoding="utf-8") if getattr(args, "out", None) else sys.stdout
    try:
        return run(args, out)
    except (DomainError, ResourceError) as exc:
        print(f"krawtchouk: error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(json.dumps({"passed": False, "error": str(exc)}), file=out)
        return 1
    except (KrawtchoukError, OSError) as exc:
        print(f"krawtchouk: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
