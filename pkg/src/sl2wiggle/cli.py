"""Command-line surface: polys, verify, certify, witness, oracle.

JSON output (--json) is deterministic for a fixed invocation including the
seed.  Exit codes: 0 success or Certified, 1 Inconclusive or a failed
check, 2 TrivialWord, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .certify import (
    Certificate,
    CertStatus,
    DCParams,
    build_witness,
    certify,
    check_certificate,
)
from .errors import ParseError, PrecisionExhaustedError
from .exact.mat2 import mat2_q
from .wiggle import assoc_polys, eval_direct, eval_normal_form, gamma_of, trace_poly, verify_identities
from .words import Word, parse_word

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_TRIVIAL = 2
EXIT_INPUT = 3


@dataclass
class RunConfig:
    command: str
    word_text: Optional[str] = None
    dc_params: Optional[DCParams] = None
    lam0: Optional[Fraction] = None
    mu0: Optional[Fraction] = None
    seed: int = 0
    precision_digits: int = 64
    max_attempts: int = 5
    json_output: bool = False
    grid: Optional[str] = None
    g_entries: Optional[tuple[Fraction, Fraction, Fraction, Fraction]] = None
    count: int = 20


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _parse_dc(text: str) -> DCParams:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("expected four comma-separated integers")
    return DCParams(*[int(p.strip()) for p in parts])


def _parse_grid(text: str) -> list[DCParams]:
    ranges = []
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("expected four colon ranges, e.g. 1:2,1:2,1:3,1:3")
    for part in parts:
        lo, _, hi = part.partition(":")
        lo, hi = int(lo), int(hi or lo)
        ranges.append(range(lo, hi + 1))
    out = []
    for k in ranges[0]:
        for l in ranges[1]:
            for m in ranges[2]:
                for n in ranges[3]:
                    out.append(DCParams(k, l, m, n))
    return out


def _resolve_word(config: RunConfig) -> Word:
    if config.word_text is not None:
        return parse_word(config.word_text)
    return config.dc_params.word()


def _status_exit(status: CertStatus) -> int:
    if status in (CertStatus.CERTIFIED, CertStatus.SWAPPED_CERTIFIED):
        return EXIT_OK
    if status is CertStatus.TRIVIAL_WORD:
        return EXIT_TRIVIAL
    return EXIT_INCONCLUSIVE


def _cmd_polys(config: RunConfig) -> int:
    ap = assoc_polys(_resolve_word(config))
    gamma = gamma_of(ap)
    trace = trace_poly(ap)
    if config.json_output:
        _emit(
            {
                "alpha": ap.alpha.to_json(),
                "beta": ap.beta.to_json(),
                "gamma": gamma.to_json(),
                "trace": trace.to_json(),
            }
        )
    else:
        print(f"alpha = {ap.alpha.pretty()}")
        print(f"beta  = {ap.beta.pretty()}")
        print(f"gamma = {gamma.pretty()}")
        print(f"trace = {trace.pretty()}")
    return EXIT_OK


def _cmd_verify(config: RunConfig) -> int:
    report = verify_identities(assoc_polys(_resolve_word(config)))
    if config.json_output:
        _emit(
            {
                "det_identity_ok": report.det_identity_ok,
                "sigma_symmetry_ok": report.sigma_symmetry_ok,
                "bezout_ok": report.bezout_ok,
                "ok": report.ok,
            }
        )
    else:
        for name in report.failures:
            print(f"FAILED: {name}")
        print("all identities hold" if report.ok else "identity check failed")
    return EXIT_OK if report.ok else EXIT_INCONCLUSIVE


def _run_certify(config: RunConfig, params: DCParams, seed: int) -> Certificate:
    initial = None
    if config.lam0 is not None and config.mu0 is not None:
        initial = (config.lam0, config.mu0)
    cert = certify(
        params, seed=seed, max_attempts=config.max_attempts, initial=initial
    )
    outcome = check_certificate(cert)
    if not outcome.valid:
        raise AssertionError(
            f"emitted certificate failed independent checking: {outcome.reason}"
        )
    return cert


def _cmd_certify(config: RunConfig) -> int:
    if config.grid:
        certs = []
        for idx, params in enumerate(_parse_grid(config.grid)):
            seed = config.seed * 1_000_003 + idx
            certs.append(_run_certify(config, params, seed))
        if config.json_output:
            _emit([c.to_json() for c in certs])
        else:
            for c in certs:
                print(f"{c.params.as_list()}: {c.status.value} (attempts={c.attempts})")
        if any(c.status is CertStatus.INCONCLUSIVE for c in certs):
            return EXIT_INCONCLUSIVE
        return EXIT_OK
    cert = _run_certify(config, config.dc_params, config.seed)
    if config.json_output:
        _emit(cert.to_json())
    else:
        print(f"status: {cert.status.value} (attempts={cert.attempts})")
        if cert.certified:
            print(f"lambda = {cert.lam0}, mu = {cert.mu0}")
            print(f"h(t) = {cert.hpoly.pretty()}")
    return _status_exit(cert.status)


def _cmd_witness(config: RunConfig) -> int:
    cert = _run_certify(config, config.dc_params, config.seed)
    if not cert.certified:
        if config.json_output:
            _emit(cert.to_json())
        else:
            print(f"status: {cert.status.value}")
        return _status_exit(cert.status)
    witness = build_witness(cert, precision_digits=config.precision_digits)
    if config.json_output:
        payload = cert.to_json()
        payload["witness"] = witness.to_json()
        _emit(payload)
    else:
        print(f"status: {cert.status.value}")
        if witness.exact:
            print(f"exact witness at t0 = {witness.t0}")
            print(f"g = {witness.g.rows()}")
            print(f"u = {witness.u.rows()}")
        else:
            print(f"numeric witness near t0 = {witness.t0_approx[0]}")
            print(f"residual bound {witness.residual}")
    return EXIT_OK


def _cmd_oracle(config: RunConfig) -> int:
    word = _resolve_word(config)
    rng = random.Random(config.seed)
    cases = []
    if config.lam0 is not None and config.mu0 is not None and config.g_entries:
        cases.append((config.lam0, config.mu0, mat2_q(*config.g_entries)))
    else:
        for _ in range(config.count):
            lam0 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            mu0 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            g = mat2_q(1, rng.randint(-5, 5), 0, 1) * mat2_q(
                1, 0, rng.randint(-5, 5), 1
            )
            cases.append((lam0, mu0, g))
    ap = assoc_polys(word)
    mismatches = 0
    for lam0, mu0, g in cases:
        nf = eval_normal_form(ap, lam0, mu0, g)
        direct = eval_direct(word, lam0, mu0, g)
        if nf.matrix != direct:
            mismatches += 1
    if config.json_output:
        _emit({"cases": len(cases), "mismatches": mismatches})
    else:
        print(f"{len(cases)} cases, {mismatches} mismatches")
    return EXIT_OK if mismatches == 0 else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2wiggle",
        description="Exact wiggle normal forms and unipotent certificates on SL2",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_word in (
        ("polys", True),
        ("verify", True),
        ("certify", False),
        ("witness", False),
        ("oracle", True),
    ):
        p = sub.add_parser(name)
        if needs_word:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--word", help="word text, e.g. '[x,y]' or 'x^2 y^-1'")
            src.add_argument("--dc", help="double commutator exponents k,l,m,n")
        else:
            p.add_argument("--dc", required=name == "witness", help="k,l,m,n")
            p.add_argument("--grid", help="ranges kmin:kmax,lmin:lmax,mmin:mmax,nmin:nmax")
        p.add_argument("--lambda", dest="lam0", help="rational p/q")
        p.add_argument("--mu", dest="mu0", help="rational p/q")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--precision", type=int, default=64)
        p.add_argument("--max-attempts", type=int, default=5)
        p.add_argument("--json", action="store_true")
        if name == "oracle":
            p.add_argument("--g", help="entries a,b,c,d of a det-1 matrix")
            p.add_argument("--count", type=int, default=20)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    config.word_text = getattr(args, "word", None)
    if getattr(args, "dc", None):
        config.dc_params = _parse_dc(args.dc)
    if args.command == "certify" and config.dc_params is None and not args.grid:
        raise ValueError("certify needs --dc or --grid")
    config.grid = getattr(args, "grid", None)
    if args.lam0 is not None:
        config.lam0 = Fraction(args.lam0)
    if args.mu0 is not None:
        config.mu0 = Fraction(args.mu0)
    if (config.lam0 is None) != (config.mu0 is None):
        raise ValueError("--lambda and --mu must be given together")
    if config.lam0 == 0 or config.mu0 == 0:
        raise ValueError("--lambda and --mu must be nonzero")
    config.seed = args.seed
    config.precision_digits = args.precision
    config.max_attempts = args.max_attempts
    config.json_output = args.json
    if getattr(args, "g", None):
        entries = [Fraction(v.strip()) for v in args.g.split(",")]
        if len(entries) != 4:
            raise ValueError("--g needs four entries a,b,c,d")
        config.g_entries = tuple(entries)
    config.count = getattr(args, "count", 20)
    return config


_COMMANDS = {
    "polys": _cmd_polys,
    "verify": _cmd_verify,
    "certify": _cmd_certify,
    "witness": _cmd_witness,
    "oracle": _cmd_oracle,
}


def run(config: RunConfig) -> int:
    return _COMMANDS[config.command](config)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        return run(config)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PrecisionExhaustedError as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    raise SystemExit(main())
