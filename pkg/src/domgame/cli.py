"""Command-line surface.

Exit codes: 0 decided with certificate, 1 decided without, 2 unknown,
3 input error.
"""

from __future__ import annotations

import sys

import click

from .certificates import FactorCertificate, PairingDominatingSet
from .factor import NoFactor, perfect_12_factor
from .graph import Graph
from .intervals import (
    nestedness_and_chains,
    normalize_representation,
    pds_dp,
)
from .io import (
    Instance,
    InstanceParseError,
    certificate_to_json,
    emit_instance,
    parse_instance,
    verify_certificate,
)
from .oracle import BoundExceeded, Outcome, outcome
from .strategy import (
    DominatorStrategy,
    ExhaustiveReport,
    StallerStrategy,
    compose_dominator_strategy,
    play_match,
    staller_cut_factor_strategy,
)

EXIT_CERT = 0
EXIT_NO_CERT = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3


def _load(path: str) -> Instance:
    try:
        return parse_instance(path)
    except (InstanceParseError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _echo_normalized(instance: Instance) -> None:
    if instance.rep is None:
        return
    norm = normalize_representation(instance.rep)
    for i in range(norm.n):
        click.echo(f"{i} {norm.lo(i)} {norm.hi(i)}")


@click.group()
def main() -> None:
    """Maker-Breaker domination game toolkit."""


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--max-oracle-n", default=13, show_default=True)
@click.option("--emit-cert", type=click.Path(), default=None)
@click.option("--emit-normalized", is_flag=True)
def decide(instance, max_oracle_n, emit_cert, emit_normalized):
    """Route the instance to the strongest applicable decider."""
    from .decide import decide as run_decide

    inst = _load(instance)
    if emit_normalized:
        _echo_normalized(inst)
    decision = run_decide(inst.graph, rep=inst.rep, max_oracle_n=max_oracle_n)
    click.echo(f"outcome: {decision.outcome.value}")
    click.echo(f"method: {decision.method}")
    cert = decision.certificate
    kind = None
    if isinstance(cert, FactorCertificate):
        kind = "factor"
    elif isinstance(cert, PairingDominatingSet):
        kind = "apds"
    if kind is not None and emit_cert:
        with open(emit_cert, "w", encoding="utf-8") as fh:
            fh.write(certificate_to_json(kind, inst, cert))
        click.echo(f"certificate written to {emit_cert}")
    if decision.outcome is Outcome.UNKNOWN:
        sys.exit(EXIT_UNKNOWN)
    sys.exit(EXIT_CERT if cert is not None else EXIT_NO_CERT)


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--emit-cert", type=click.Path(), default=None)
def factor(instance, emit_cert):
    """Perfect [1,2]-factor or a Hall violator."""
    inst = _load(instance)
    result = perfect_12_factor(inst.graph)
    if isinstance(result, NoFactor):
        click.echo(f"no perfect [1,2]-factor; Hall violator: {sorted(result.hall_violator)}")
        sys.exit(EXIT_NO_CERT)
    click.echo(f"perfect [1,2]-factor with {len(result.components)} components")
    for comp in result.components:
        click.echo(f"  {comp}")
    if emit_cert:
        with open(emit_cert, "w", encoding="utf-8") as fh:
            fh.write(certificate_to_json("factor", inst, result))
    sys.exit(EXIT_CERT)


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--emit-cert", type=click.Path(), default=None)
@click.option("--emit-normalized", is_flag=True)
def pds(instance, emit_cert, emit_normalized):
    """Pairing dominating set via the interval profile search."""
    inst = _load(instance)
    if inst.rep is None:
        click.echo("error: pds requires an interval section", err=True)
        sys.exit(EXIT_INPUT)
    if emit_normalized:
        _echo_normalized(inst)
    result = pds_dp(inst.rep)
    if result is None:
        click.echo("no pairing dominating set")
        sys.exit(EXIT_NO_CERT)
    click.echo(f"adjacent pairing dominating set: {list(result.pairs)}")
    if emit_cert:
        with open(emit_cert, "w", encoding="utf-8") as fh:
            fh.write(certificate_to_json("apds", inst, result))
    sys.exit(EXIT_CERT)


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--emit-normalized", is_flag=True)
def nu(instance, emit_normalized):
    """Nestedness of the representation and its proper chain partition."""
    inst = _load(instance)
    if inst.rep is None:
        click.echo("error: nu requires an interval section", err=True)
        sys.exit(EXIT_INPUT)
    norm = normalize_representation(inst.rep)
    if emit_normalized:
        _echo_normalized(inst)
    k, partition = nestedness_and_chains(norm)
    click.echo(f"nestedness: {k}")
    for i, chain in enumerate(partition.chains):
        click.echo(f"chain {i}: {list(chain)}")
    sys.exit(EXIT_CERT)


@main.command(name="oracle")
@click.argument("instance", type=click.Path(exists=True))
@click.option("--max-oracle-n", default=13, show_default=True)
def oracle_cmd(instance, max_oracle_n):
    """Exact outcome by memoized minimax."""
    inst = _load(instance)
    result = outcome(inst.graph, max_n=max_oracle_n)
    click.echo(f"outcome: {result.value}")
    sys.exit(EXIT_UNKNOWN if result is Outcome.UNKNOWN else EXIT_NO_CERT)


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--dominator", "dom_kind", type=click.Choice(["composed", "oracle", "random", "exhaustive"]), default="oracle", show_default=True)
@click.option("--staller", "stall_kind", type=click.Choice(["cutfactor", "oracle", "random", "exhaustive"]), default="oracle", show_default=True)
@click.option("--first", type=click.Choice(["dominator", "staller"]), default="dominator", show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--max-oracle-n", default=13, show_default=True)
@click.option("--emit-cert", type=click.Path(), default=None)
def play(instance, dom_kind, stall_kind, first, seed, max_oracle_n, emit_cert):
    """Play one match or verify a strategy against an exhaustive adversary."""
    from .decide import decide as run_decide

    inst = _load(instance)
    G = inst.graph
    try:
        dom = dom_kind
        if dom_kind == "composed":
            decision = run_decide(G, rep=inst.rep, max_oracle_n=max_oracle_n)
            if decision.outcome is not Outcome.D or decision.certificate is None:
                click.echo("error: no Dominator certificate available to compose", err=True)
                sys.exit(EXIT_INPUT)
            dom = compose_dominator_strategy(G, decision.certificate)
        stall = stall_kind
        if stall_kind == "cutfactor":
            stall = staller_cut_factor_strategy(G)
        result = play_match(G, dom, stall, first=first, seed=seed, max_oracle_n=max_oracle_n)
    except (ValueError, BoundExceeded) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    if isinstance(result, ExhaustiveReport):
        click.echo(
            f"exhaustive lines: {result.lines}; fixed side {result.fixed_side} "
            f"losses: {result.fixed_losses}; wins: {result.wins}"
        )
        sys.exit(EXIT_NO_CERT if result.fixed_never_loses else EXIT_UNKNOWN)
    click.echo(f"winner: {result.winner} ({result.reason})")
    for player, v in result.moves:
        click.echo(f"  {player} -> {v}")
    if emit_cert:
        kind = "staller" if result.winner == "staller" else "transcript"
        with open(emit_cert, "w", encoding="utf-8") as fh:
            fh.write(certificate_to_json(kind, inst, result))
    sys.exit(EXIT_CERT)


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.argument("certificate", type=click.Path(exists=True))
def verify(instance, certificate):
    """Validate a certificate file against an instance."""
    inst = _load(instance)
    try:
        with open(certificate, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    ok, reason = verify_certificate(inst, text)
    if ok:
        click.echo("pass")
        sys.exit(EXIT_CERT)
    click.echo(f"fail: {reason}")
    sys.exit(EXIT_NO_CERT)


@main.command()
@click.option("--kind", type=click.Choice(["regular", "tree", "block", "outerplanar", "interval", "proper_interval"]), required=True)
@click.option("--n", default=8, show_default=True)
@click.option("--r", default=3, show_default=True, help="degree for regular graphs")
@click.option("--k", default=2, show_default=True, help="target nestedness for interval families")
@click.option("--p-delete", default=0.3, show_default=True, help="edge deletion rate for outerplanar")
@click.option("--seed", default=0, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def gen(kind, n, r, k, p_delete, seed, out):
    """Generate a deterministic instance file."""
    from .generators import GenerationError, generate_instance

    try:
        inst = generate_instance(kind, {"n": n, "r": r, "k": k, "p_delete": p_delete}, seed=seed)
    except GenerationError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    text = emit_instance(inst)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        click.echo(f"instance written to {out}")
    else:
        click.echo(text, nl=False)
    sys.exit(EXIT_CERT)


@main.command()
@click.option("--out-dir", type=click.Path(), default="bench_out", show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--quick", is_flag=True, help="smaller corpora for a fast smoke run")
def bench(out_dir, seed, quick):
    """Reproduce the verification experiments; writes CSV tables and figures."""
    from .bench import run_bench

    summary = run_bench(out_dir=out_dir, seed=seed, quick=quick)
    for row in summary:
        click.echo(
            f"{row['suite']}: {row['instances']} instances, "
            f"{row['disagreements']} disagreements, {row['seconds']:.2f}s"
        )
    sys.exit(EXIT_CERT if all(r["disagreements"] == 0 for r in summary) else EXIT_UNKNOWN)


if __name__ == "__main__":
    main()
