"""The graypath command line: loaders, constructions, checkers, reports.

Exit codes: 0 all checks pass, 1 check failures (with counterexamples),
2 input errors.  JSON reports are deterministic: identical inputs and
configuration give byte-identical output.
"""

from __future__ import annotations

import json
import os

import click

from .kernel import ValidationError, check_gray_axioms
from . import presentation
from .fixtures import UnknownFixture, fixture, fixture_names

SCHEMA = 1


def _load_input(arg):
    """A fixture name or a *.graycat.json / *.gc path."""
    try:
        return fixture(arg)
    except UnknownFixture:
        pass
    if not os.path.exists(arg):
        raise click.ClickException(f"no such fixture or file: {arg}")
    return presentation.load(arg)


def _emit(ctx, command, inputs, config, reports, extra=None):
    fmt = ctx.obj.get("report", "human")
    ok = all(r.ok for r in reports)
    if fmt == "json":
        doc = {
            "schema": SCHEMA,
            "command": command,
            "inputs": list(inputs),
            "config": dict(sorted(config.items())),
            "reports": [r.as_dict() for r in reports],
            "ok": ok,
        }
        if extra:
            doc.update(extra)
        click.echo(json.dumps(doc, indent=1, sort_keys=True))
    else:
        for r in reports:
            line = f"{r.status.upper():4s} {r.law} ({r.tuples_checked} tuples)"
            if r.counterexample is not None:
                line += f"  counterexample: {r.counterexample!r}"
            click.echo(line)
        if extra:
            for k, v in sorted(extra.items()):
                click.echo(f"{k}: {v}")
        click.echo("all checks passed" if ok else "CHECK FAILURES")
    ctx.exit(0 if ok else 1)


@click.group()
@click.option("--report", type=click.Choice(["human", "json"]), default="human",
              help="Report format; json output is byte-reproducible.")
@click.option("--max-len", type=int, default=3,
              help="List-length bound for symbolic Q1 checks.")
@click.option("--cap", type=int, default=100000,
              help="Enumeration cap for hom-space construction.")
@click.option("--seed", type=int, default=0,
              help="Seed for fault-injection trials.")
@click.pass_context
def main(ctx, report, max_len, cap, seed):
    """Machine-check the path-space and mapping-space constructions."""
    if max_len <= 0 or cap <= 0:
        raise click.UsageError("caps must be positive")
    ctx.obj = {"report": report, "max_len": max_len, "cap": cap, "seed": seed}


@main.command()
@click.argument("path")
@click.pass_context
def validate(ctx, path):
    """Load a document and report structural violations."""
    try:
        C = presentation.load(path)
    except FileNotFoundError:
        click.echo(f"error: no such file: {path}", err=True)
        ctx.exit(2)
    except (presentation.ParseError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    from .kernel import CheckReport
    _emit(ctx, "validate", [path], {}, [CheckReport("structure", "pass",
                                                    sum(len(C.cells[d]) for d in range(4)))])


@main.group()
def check():
    """Law checkers."""


@check.command("gray")
@click.argument("target")
@click.pass_context
def check_gray(ctx, target):
    """Run the Gray-axiom suite on a fixture or document."""
    try:
        C = _load_input(target)
    except (presentation.ParseError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    reports = check_gray_axioms(C)
    _emit(ctx, "check gray", [target], {}, reports)


@check.command("m")
@click.argument("target")
@click.pass_context
def check_m(ctx, target):
    """Verify the path composition is a pseudo map over a fixture."""
    from .pathcomp import verify_m_pseudo, verify_internal_category
    try:
        C = _load_input(target)
    except (presentation.ParseError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    reports = verify_m_pseudo(C) + verify_internal_category(C)
    _emit(ctx, "check m", [target], {}, reports)


@check.command("comonad")
@click.argument("target")
@click.pass_context
def check_comonad(ctx, target):
    """Counit/comultiplication laws on symbolic cells."""
    from .resolution import comonad_law_check
    try:
        C = _load_input(target)
    except (presentation.ParseError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    reports = comonad_law_check(C, max_len=ctx.obj["max_len"])
    _emit(ctx, "check comonad", [target], {"max_len": ctx.obj["max_len"]}, reports)


@main.command()
@click.argument("target")
@click.option("--out", type=click.Path(), default=None,
              help="Write the path space as a graycat document.")
@click.pass_context
def pathspace(ctx, target, out):
    """Build the path space of a fixture or document."""
    from .pathspace import build_pathspace
    try:
        C = _load_input(target)
    except (presentation.ParseError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    P = build_pathspace(C)
    reports = check_gray_axioms(P)
    extra = {"cells": [len(P.cells[d]) for d in range(4)]}
    if out:
        presentation.save(P, out)
        extra["out"] = out
    _emit(ctx, "pathspace", [target], {}, reports, extra)


@main.command()
@click.argument("target")
@click.pass_context
def tower(ctx, target):
    """Assemble the internal Gray-category tower and check its laws."""
    from .highercells import Tower, assemble_internal_graycat
    try:
        C = _load_input(target)
    except (presentation.ParseError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    tw = Tower(C)
    reports = assemble_internal_graycat(C)
    extra = {"stages": {
        "path": [len(tw.PH.cells[d]) for d in range(4)],
        "bigon": [len(tw.DD.cells[d]) for d in range(4)],
        "triple": [len(tw.DDD.cells[d]) for d in range(4)],
        "parallel": [len(tw.P2.cells[d]) for d in range(4)],
    }}
    _emit(ctx, "tower", [target], {}, reports, extra)


@main.command()
@click.argument("gname")
@click.argument("hname")
@click.option("--strict-only", is_flag=True,
              help="Restrict to the malleable mapping space.")
@click.pass_context
def hom(ctx, gname, hname, strict_only):
    """Materialize [G,H] and run the Gray axioms on it."""
    from .homspace import hom_graycat
    try:
        G = _load_input(gname)
        H = _load_input(hname)
    except (presentation.ParseError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    C, reg, reports = hom_graycat(G, H, cap=ctx.obj["cap"],
                                  strict_only=strict_only)
    reports = list(reports) + check_gray_axioms(C)
    extra = {"cells": [len(C.cells[d]) for d in range(4)]}
    _emit(ctx, "hom", [gname, hname],
          {"cap": ctx.obj["cap"], "strict_only": strict_only}, reports, extra)


@main.command()
@click.argument("target")
@click.option("--count", type=int, default=10)
@click.pass_context
def faults(ctx, target, count):
    """Seeded fault-injection trials against the axiom checker."""
    from .faults import run_fault_trials
    from .kernel import CheckReport
    names = [target] if target != "all" else \
        ["INT", "BIG", "PAIR", "CYC2", "TWIST", "CHAIN3"]
    try:
        for n in names:
            fixture(n)
    except UnknownFixture as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    det, tot, misses = run_fault_trials(fixture, names, count,
                                        seed=ctx.obj["seed"])
    rep = CheckReport("fault-detection", "pass" if det == tot else "fail",
                      tot, misses[0] if misses else None)
    _emit(ctx, "faults", [target],
          {"count": count, "seed": ctx.obj["seed"]}, [rep],
          {"detected": det})


@main.group()
def fixtures():
    """Fixture library."""


@fixtures.command("list")
@click.pass_context
def fixtures_list(ctx):
    for name in fixture_names():
        click.echo(name)
    ctx.exit(0)


@fixtures.command("dump")
@click.argument("name")
@click.argument("out", type=click.Path())
@click.pass_context
def fixtures_dump(ctx, name, out):
    """Write a fixture as a graycat document."""
    try:
        C = fixture(name)
    except UnknownFixture as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)
    presentation.save(C, out)
    click.echo(out)
    ctx.exit(0)


if __name__ == "__main__":
    main()
