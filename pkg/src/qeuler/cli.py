"""Command-line front end.

Commands: numbers, poly, sums, zeta, partial-zeta, lfunction, characters,
verify.  Output is JSON by default (top-level object with "query",
"results" and "precision" keys; rationals as "num/den" strings, reals as
decimal strings) or CSV.  Identical invocations produce byte-identical
output; the only nondeterministic field anywhere is elapsed_ms inside
verification report files.

Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import classical
from .characters import characters_mod, l_function
from .errors import DomainError, NonConvergence, NotExactPower
from .exactnum import (DEFAULT_PRECISION, RealP, format_rational,
                       parse_rational)
from .qnumbers import (QBase, QPower, alt_q_power_sum, alt_q_power_sum_closed,
                       q_euler_number, q_euler_poly, q_euler_star_number,
                       q_euler_star_poly, weighted_alt_q_power_sum,
                       weighted_alt_q_power_sum_closed)
from .qzeta import ZetaQuery, partial_zeta, zeta
from .verify import MAX_M, MAX_N, SUITES, VerificationReport

FORMAT_OPTION = click.option("--format", "fmt",
                             type=click.Choice(["json", "csv"]),
                             default="json", show_default=True,
                             help="Output format.")
PREC_OPTION = click.option("--prec", type=int, default=DEFAULT_PRECISION,
                           show_default=True,
                           help="Certified decimal precision P.")


def _emit(query: dict, results: list[dict], precision: int | None,
          fmt: str, headers: list[str]) -> None:
    if fmt == "json":
        doc = {"query": query, "results": results, "precision": precision}
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(",".join(headers))
        for row in results:
            click.echo(",".join(str(row[h]) if row[h] is not None else ""
                                for h in headers))


def _parse_q(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
def cli() -> None:
    """Exact q-Euler numbers and polynomials, their alternating power-sum
    identities, and q-zeta / q-L-function values."""


@cli.command("numbers")
@click.option("--max-n", "max_n", type=int, required=True,
              help="Emit indices 0..max_n.")
@click.option("--q", "q_text", default=None,
              help="Base q as 'p/q' or a finite decimal (q variants only).")
@click.option("--variant",
              type=click.Choice(["plain", "star", "classical-euler",
                                 "classical-bernoulli"]),
              default="plain", show_default=True)
@FORMAT_OPTION
def cmd_numbers(max_n: int, q_text: str | None, variant: str, fmt: str) -> int:
    """Table of q-Euler, star q-Euler, Euler, or Bernoulli numbers."""
    if max_n < 0:
        raise click.UsageError("--max-n must be nonnegative")
    query: dict = {"command": "numbers", "variant": variant, "max_n": max_n}
    if variant in ("plain", "star"):
        if q_text is None:
            raise click.UsageError(f"variant {variant} requires --q")
        base = QBase(_parse_q(q_text))
        query["q"] = format_rational(base.q)
        fn = q_euler_number if variant == "plain" else q_euler_star_number
        values = [fn(n, base) for n in range(max_n + 1)]
    elif variant == "classical-euler":
        values = classical.euler_numbers(max_n)
    else:
        values = classical.bernoulli_numbers(max_n)
    results = [{"n": n, "value": format_rational(v)}
               for n, v in enumerate(values)]
    _emit(query, results, None, fmt, ["n", "value"])
    return 0


@cli.command("poly")
@click.option("--n", type=int, required=True)
@click.option("--x", "x_text", required=True,
              help="Argument x as 'p/q' or a finite decimal.")
@click.option("--q", "q_text", default=None)
@click.option("--variant", type=click.Choice(["plain", "star", "classical"]),
              default="plain", show_default=True)
@FORMAT_OPTION
def cmd_poly(n: int, x_text: str, q_text: str | None, variant: str,
             fmt: str) -> int:
    """Evaluate a q-Euler (or classical Euler) polynomial exactly.

    For the q variants, q^x must be rational (integer x always works);
    otherwise the command fails rather than approximate."""
    if n < 0:
        raise click.UsageError("--n must be nonnegative")
    x = _parse_q(x_text)
    query: dict = {"command": "poly", "variant": variant, "n": n,
                   "x": format_rational(x)}
    if variant == "classical":
        value = classical.euler_poly(n, x)
    else:
        if q_text is None:
            raise click.UsageError(f"variant {variant} requires --q")
        base = QBase(_parse_q(q_text))
        query["q"] = format_rational(base.q)
        qp = QPower.from_exponent(base, x)
        value = q_euler_poly(n, qp) if variant == "plain" \
            else q_euler_star_poly(n, qp)
    results = [{"n": n, "x": format_rational(x),
                "value": format_rational(value)}]
    _emit(query, results, None, fmt, ["n", "x", "value"])
    return 0


@cli.command("sums")
@click.option("--variant",
              type=click.Choice(["power", "alt-power", "q-alt",
                                 "q-alt-weighted"]),
              default="q-alt", show_default=True)
@click.option("--m", type=int, required=True, help="Power exponent.")
@click.option("--n", type=int, required=True,
              help="Summation length (sum runs over l = 0..n-1).")
@click.option("--q", "q_text", default=None)
@FORMAT_OPTION
def cmd_sums(variant: str, m: int, n: int, q_text: str | None,
             fmt: str) -> int:
    """Power sums: direct summation next to the closed form (always equal)."""
    query: dict = {"command": "sums", "variant": variant, "m": m, "n": n}
    if variant == "power":
        direct, closed = classical.power_sum(m, n), \
            classical.power_sum_closed(m, n)
    elif variant == "alt-power":
        direct, closed = classical.alt_power_sum(m, n), \
            classical.alt_power_sum_closed(m, n)
    else:
        if q_text is None:
            raise click.UsageError(f"variant {variant} requires --q")
        base = QBase(_parse_q(q_text))
        query["q"] = format_rational(base.q)
        if variant == "q-alt":
            direct = alt_q_power_sum(m, n, base)
            closed = alt_q_power_sum_closed(m, n, base)
        else:
            direct = weighted_alt_q_power_sum(m, n, base)
            closed = weighted_alt_q_power_sum_closed(m, n, base)
    results = [{"m": m, "n": n, "direct": format_rational(direct),
                "closed": format_rational(closed),
                "equal": direct == closed}]
    _emit(query, results, None, fmt, ["m", "n", "direct", "closed", "equal"])
    return 0


@cli.command("zeta")
@click.option("--s", "s_text", required=True)
@click.option("--x", "x_text", required=True)
@click.option("--q", "q_text", required=True)
@PREC_OPTION
@FORMAT_OPTION
def cmd_zeta(s_text: str, x_text: str, q_text: str, prec: int,
             fmt: str) -> int:
    """Euler q-zeta value at real s, x > 0, 0 < q < 1."""
    s = _parse_q(s_text)
    x = _parse_q(x_text)
    q = _parse_q(q_text)
    value = zeta(ZetaQuery(RealP.from_rational(s, prec),
                           RealP.from_rational(x, prec),
                           QBase(q, zeta_domain=True), prec))
    query = {"command": "zeta", "s": format_rational(s),
             "x": format_rational(x), "q": format_rational(q), "prec": prec}
    results = [{"s": format_rational(s), "x": format_rational(x),
                "q": format_rational(q), "value": value.digits(),
                "precision": prec}]
    _emit(query, results, prec, fmt, ["s", "x", "q", "value", "precision"])
    return 0


@cli.command("partial-zeta")
@click.option("--s", "s_text", required=True)
@click.option("--a", type=int, required=True, help="Residue class, 0 < a < F.")
@click.option("--f", "period", type=int, required=True,
              help="Period F (odd).")
@click.option("--q", "q_text", required=True)
@PREC_OPTION
@FORMAT_OPTION
def cmd_partial_zeta(s_text: str, a: int, period: int, q_text: str,
                     prec: int, fmt: str) -> int:
    """Partial q-zeta H_q(s, a; F) over one residue class mod F."""
    s = _parse_q(s_text)
    q = _parse_q(q_text)
    value = partial_zeta(RealP.from_rational(s, prec), a, period,
                         QBase(q, zeta_domain=True), prec)
    query = {"command": "partial-zeta", "s": format_rational(s), "a": a,
             "f": period, "q": format_rational(q), "prec": prec}
    results = [{"s": format_rational(s), "a": a, "f": period,
                "q": format_rational(q), "value": value.digits(),
                "precision": prec}]
    _emit(query, results, prec, fmt,
          ["s", "a", "f", "q", "value", "precision"])
    return 0


@cli.command("lfunction")
@click.option("--s", "s_text", required=True)
@click.option("--modulus", type=int, required=True)
@click.option("--char-index", "char_index", type=int, required=True,
              help="Index into the canonical character ordering.")
@click.option("--q", "q_text", required=True)
@PREC_OPTION
@FORMAT_OPTION
def cmd_lfunction(s_text: str, modulus: int, char_index: int, q_text: str,
                  prec: int, fmt: str) -> int:
    """q-L-function value for a Dirichlet character of odd modulus."""
    group = characters_mod(modulus)
    if not 0 <= char_index < len(group):
        raise click.UsageError(
            f"--char-index must lie in 0..{len(group) - 1} for modulus "
            f"{modulus}")
    s = _parse_q(s_text)
    q = _parse_q(q_text)
    value = l_function(RealP.from_rational(s, prec), group[char_index],
                       QBase(q, zeta_domain=True), prec)
    query = {"command": "lfunction", "s": format_rational(s),
             "modulus": modulus, "char_index": char_index,
             "q": format_rational(q), "prec": prec}
    results = [{"s": format_rational(s), "modulus": modulus,
                "char_index": char_index, "q": format_rational(q),
                "value": value.digits(), "precision": prec}]
    _emit(query, results, prec, fmt,
          ["s", "modulus", "char_index", "q", "value", "precision"])
    return 0


@cli.command("characters")
@click.option("--modulus", type=int, required=True)
@FORMAT_OPTION
def cmd_characters(modulus: int, fmt: str) -> int:
    """List the character group mod an odd modulus (exponent tables)."""
    group = characters_mod(modulus)
    query = {"command": "characters", "modulus": modulus}
    results = []
    for index, chi in enumerate(group):
        if fmt == "json":
            exponents: object = [e for e in chi.exponents]
        else:
            exponents = "|".join("-" if e is None else str(e)
                                 for e in chi.exponents)
        results.append({"modulus": modulus, "index": index,
                        "order": chi.order, "exponents": exponents})
    _emit(query, results, None, fmt,
          ["modulus", "index", "order", "exponents"])
    return 0


@cli.command("verify")
@click.option("--suite", type=click.Choice(sorted(SUITES) + ["all"]),
              required=True)
@click.option("--report", "report_path", type=click.Path(dir_okay=False),
              default=None, help="Write the JSON report(s) to this path.")
@click.option("--max-m", "max_m", type=int, default=None,
              help=f"Override the m/exponent bound (max {MAX_M}).")
@click.option("--max-n", "max_n", type=int, default=None,
              help=f"Override the n/length bound (max {MAX_N}).")
@click.option("--f", "f_only", type=int, default=None,
              help="Restrict the distribution suite to one odd f.")
@PREC_OPTION
def cmd_verify(suite: str, report_path: str | None, max_m: int | None,
               max_n: int | None, f_only: int | None, prec: int) -> int:
    """Run an identity-verification suite; exit 2 on any failure.

    Suites: thm2 (polynomial forms), thm3 (alternating q-power sums),
    thm4 (distribution relation), weighted (q^l-weighted sums), classical
    (power sums), zeta (dual-route), partial-zeta, lfunction, all."""
    if max_m is not None and not 1 <= max_m <= MAX_M:
        raise click.UsageError(f"--max-m must lie in 1..{MAX_M}")
    if max_n is not None and not 1 <= max_n <= MAX_N:
        raise click.UsageError(f"--max-n must lie in 1..{MAX_N}")
    if f_only is not None and (f_only < 1 or f_only % 2 == 0):
        raise click.UsageError("--f must be an odd positive integer")
    if prec < 15:
        raise click.UsageError("--prec must be at least 15")

    reports = _run_suites(suite, max_m, max_n, f_only, prec)
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        click.echo(f"suite {report.suite}: {status} "
                   f"cases={report.cases_run} "
                   f"max_deviation={report.max_deviation}")
    if report_path is not None:
        with open(report_path, "w", encoding="utf-8") as handle:
            json.dump([r.to_dict() for r in reports], handle, indent=2)
            handle.write("\n")
    return 0 if all(r.passed for r in reports) else 2


def _run_suites(suite: str, max_m: int | None, max_n: int | None,
                f_only: int | None, prec: int) -> list[VerificationReport]:
    names = sorted(SUITES) if suite == "all" else [suite]
    reports = []
    for name in names:
        kwargs: dict = {}
        if name in ("thm3", "weighted"):
            if max_m is not None:
                kwargs["max_m"] = max_m
            if max_n is not None:
                kwargs["max_n"] = max_n
        elif name == "thm2" and max_n is not None:
            kwargs["max_n"] = max_n
        elif name == "thm4":
            if max_m is not None:
                kwargs["max_m"] = max_m
            if f_only is not None:
                kwargs["fs"] = (f_only,)
        elif name == "classical":
            if max_m is not None:
                kwargs["max_m"] = max_m
            if max_n is not None:
                kwargs["max_k"] = max_n
        elif name in ("zeta", "partial-zeta", "lfunction"):
            kwargs["precision"] = prec
        reports.append(SUITES[name](**kwargs))
    return reports


def main(argv: list[str] | None = None) -> int:
    """Programmatic entry point returning the process exit code."""
    try:
        result = cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except (DomainError, NotExactPower, NonConvergence) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return int(result) if result is not None else 0


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
