"""Command-line client for the workbench service.

Every command builds a request, sends it to the service (in-process by
default, or to a remote instance given via --server or SYMCOH_SERVER), and
renders the structured response.  Exit codes: 0 success, 1 check or match
failure, 2 usage or parse errors, 3 oracle budget exhaustion.
"""

from __future__ import annotations

import json
import os
import sys

import click
import httpx

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _client(server: str | None):
    server = server or os.environ.get("SYMCOH_SERVER")
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app, raise_server_exceptions=False)


def _post(server: str | None, path: str, payload: dict) -> dict:
    with _client(server) as client:
        response = client.post(path, json=payload)
    if response.status_code == 400:
        detail = response.json().get("detail", {})
        caret = detail.get("caret")
        message = detail.get("message", "bad request")
        click.echo(caret if caret else message, err=True)
        sys.exit(EXIT_USAGE)
    if response.status_code == 422:
        click.echo(f"invalid request: {response.text}", err=True)
        sys.exit(EXIT_USAGE)
    if response.status_code != 200:
        click.echo(f"service error ({response.status_code}): {response.text}", err=True)
        sys.exit(EXIT_CHECK_FAILED)
    return response.json()


server_option = click.option(
    "--server",
    default=None,
    help="Base URL of a running workbench service (default: in-process)",
)


@click.group()
def main() -> None:
    """Exact cohomology of symmetric powers of curves."""


@main.command()
@click.option("--genus", "-g", type=click.IntRange(min=0), required=True)
@click.option("--power", "-n", type=click.IntRange(min=0), required=True)
@click.option("--oracle", is_flag=True, help="Cross-check against both oracles")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "csv", "json"]),
    default="table",
)
@server_option
def betti(genus: int, power: int, oracle: bool, fmt: str, server: str | None) -> None:
    """Degreewise dimensions of H*(Sym^n C)."""
    body = _post(
        server, "/betti", {"genus": genus, "power": power, "oracle": oracle}
    )
    dims = body["dims"]
    oracle_body = body.get("oracle")
    exit_code = EXIT_OK
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
    elif not oracle:
        if fmt == "csv":
            for d, dim in enumerate(dims):
                click.echo(f"{d},{dim}")
        else:
            click.echo("degree  dim")
            for d, dim in enumerate(dims):
                click.echo(f"{d:<6}  {dim}")
    else:
        rows = [("presentation", dims)]
        if oracle_body and oracle_body.get("invariant") is not None:
            rows.append(("invariant", oracle_body["invariant"]))
        rows.append(("macdonald", oracle_body["macdonald"]))
        matches = [
            "yes" if row == dims else "no" for _, row in rows
        ]
        if fmt == "csv":
            for (name, row), match in zip(rows, matches):
                click.echo(",".join([name] + [str(x) for x in row] + [match]))
        else:
            width = max(len(name) for name, _ in rows)
            click.echo(
                "  ".join(
                    [f"{'source':<{width}}"]
                    + [str(d) for d in range(len(dims))]
                    + ["match"]
                )
            )
            for (name, row), match in zip(rows, matches):
                click.echo(
                    "  ".join([f"{name:<{width}}"] + [str(x) for x in row] + [match])
                )
    if oracle:
        if oracle_body.get("status") == "budget_exceeded":
            click.echo(f"oracle skipped: {oracle_body.get('message')}", err=True)
            exit_code = EXIT_BUDGET
        elif oracle_body.get("match") is not True:
            exit_code = EXIT_CHECK_FAILED
    sys.exit(exit_code)


@main.command()
@click.option("--genus", "-g", type=click.IntRange(min=0), required=True)
@click.option("--power", "-n", type=click.IntRange(min=0), required=True)
@click.option("--format", "fmt", type=click.Choice(["json"]), default="json")
@server_option
def presentation(genus: int, power: int, fmt: str, server: str | None) -> None:
    """The quotient presentation of H*(Sym^n C) as a JSON document."""
    body = _post(server, "/presentation", {"genus": genus, "power": power})
    click.echo(json.dumps(body, indent=2))


@main.command(name="eval")
@click.option("--genus", "-g", type=click.IntRange(min=0), required=True)
@click.option("--power", "-n", type=click.IntRange(min=0), required=True)
@click.option("--integrate", is_flag=True, help="Print the integral instead")
@click.argument("expression")
@server_option
def eval_command(
    genus: int, power: int, integrate: bool, expression: str, server: str | None
) -> None:
    """Evaluate an expression in the presented ring (normal form or integral)."""
    body = _post(
        server,
        "/eval",
        {
            "genus": genus,
            "power": power,
            "expression": expression,
            "integrate": integrate,
        },
    )
    click.echo(body["integral"] if integrate else body["normal_form"])


@main.command()
@click.option(
    "--suite",
    type=click.Choice(["presentation", "modules", "oracles", "correspondences", "all"]),
    default="all",
)
@click.option("--genus", "-g", type=click.IntRange(min=0), required=True)
@click.option("--max-power", "-N", type=click.IntRange(min=0), required=True)
@click.option("--json", "json_out", type=click.Path(), default=None)
@server_option
def verify(
    suite: str, genus: int, max_power: int, json_out: str | None, server: str | None
) -> None:
    """Run the named verification suites and report pass/fail."""
    body = _post(
        server,
        "/verify",
        {"suites": [suite], "genus": genus, "max_power": max_power},
    )
    report = body["report"]
    from .verifier import render_text

    click.echo(render_text(report), nl=False)
    if json_out:
        with open(json_out, "w") as handle:
            json.dump(report, handle, indent=2)
            handle.write("\n")
    if report["status"] == "fail":
        sys.exit(EXIT_CHECK_FAILED)
    if report["status"] == "partial":
        sys.exit(EXIT_BUDGET)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
