"""Reproducible experiment runner behind the `bench` CLI command.

Each suite replays one of the verification experiments on seeded corpora and
appends per-case rows (instance, method tag, decider verdict, oracle verdict).
Writes bench_cases.csv, bench_summary.csv and two PNG charts to the output
directory.
"""

from __future__ import annotations

import csv
import os
import random
import time

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .certificates import FactorCertificate
from .decide import decide
from .factor import perfect_12_factor
from .generators import generate_instance
from .graph import build_graph
from .intervals import pds_dp
from .oracle import Outcome, brute_force_factor, brute_force_pds, outcome


def _random_graph(n: int, rng: random.Random):
    p = rng.uniform(0.2, 0.7)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


def _suite_tutte(count: int, seed: int, cases: list) -> int:
    rng = random.Random(seed)
    bad = 0
    for idx in range(count):
        n = rng.randint(2, 9)
        G = _random_graph(n, rng)
        fast = isinstance(perfect_12_factor(G), FactorCertificate)
        slow = brute_force_factor(G, "perfect") is not None
        agree = fast == slow
        bad += not agree
        cases.append(
            {
                "suite": "tutte_matching",
                "instance": f"random-{idx}",
                "n": n,
                "method": "factor",
                "verdict": "factor" if fast else "no-factor",
                "reference": "factor" if slow else "no-factor",
                "agree": int(agree),
            }
        )
    return bad


def _suite_class(kind: str, count: int, seed: int, cases: list) -> int:
    bad = 0
    for idx in range(count):
        inst = generate_instance(kind, {"n": 4 + idx % 6, "p_delete": 0.35}, seed=seed + idx)
        G = inst.graph
        has_factor = isinstance(perfect_12_factor(G), FactorCertificate)
        exact = outcome(G)
        agree = has_factor == (exact is Outcome.D)
        bad += not agree
        cases.append(
            {
                "suite": f"{kind}_characterization",
                "instance": f"{kind}-{idx}",
                "n": G.n,
                "method": kind,
                "verdict": "D" if has_factor else "not-D",
                "reference": exact.value,
                "agree": int(agree),
            }
        )
    return bad


def _suite_interval(count: int, seed: int, cases: list) -> int:
    bad = 0
    for idx in range(count):
        inst = generate_instance(
            "interval", {"n": 4 + idx % 5, "k": 1 + idx % 3}, seed=seed + idx
        )
        got = pds_dp(inst.rep)
        ref = brute_force_pds(inst.graph)
        exact = outcome(inst.graph)
        agree = (got is not None) == (ref is not None) == (exact is Outcome.D)
        bad += not agree
        cases.append(
            {
                "suite": "interval_pds",
                "instance": f"interval-{idx}",
                "n": inst.graph.n,
                "method": "interval_dp",
                "verdict": "D" if got is not None else "not-D",
                "reference": exact.value,
                "agree": int(agree),
            }
        )
    return bad


def _suite_decider(count: int, seed: int, cases: list) -> int:
    rng = random.Random(seed)
    bad = 0
    for idx in range(count):
        n = rng.randint(2, 9)
        G = _random_graph(n, rng)
        decision = decide(G)
        exact = outcome(G)
        agree = (decision.outcome is Outcome.D) == (exact is Outcome.D)
        bad += not agree
        cases.append(
            {
                "suite": "decider_agreement",
                "instance": f"decide-{idx}",
                "n": n,
                "method": decision.method,
                "verdict": decision.outcome.value,
                "reference": exact.value,
                "agree": int(agree),
            }
        )
    return bad


def run_bench(out_dir: str = "bench_out", seed: int = 0, quick: bool = False) -> list[dict]:
    os.makedirs(out_dir, exist_ok=True)
    scale = 10 if quick else 60
    cases: list[dict] = []
    summary: list[dict] = []
    suites = [
        ("tutte_matching", lambda: _suite_tutte(scale * 2, seed, cases)),
        ("block_characterization", lambda: _suite_class("block", scale, seed + 1, cases)),
        ("outerplanar_characterization", lambda: _suite_class("outerplanar", scale, seed + 2, cases)),
        ("interval_pds", lambda: _suite_interval(scale, seed + 3, cases)),
        ("decider_agreement", lambda: _suite_decider(scale, seed + 4, cases)),
    ]
    for name, run in suites:
        before = len(cases)
        t0 = time.perf_counter()
        bad = run()
        summary.append(
            {
                "suite": name,
                "instances": len(cases) - before,
                "disagreements": bad,
                "seconds": time.perf_counter() - t0,
            }
        )

    with open(os.path.join(out_dir, "bench_cases.csv"), "w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["suite", "instance", "n", "method", "verdict", "reference", "agree"]
        )
        writer.writeheader()
        writer.writerows(cases)
    with open(os.path.join(out_dir, "bench_summary.csv"), "w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["suite", "instances", "disagreements", "seconds"]
        )
        writer.writeheader()
        writer.writerows(summary)

    _figures(out_dir, summary)
    return summary


def _figures(out_dir: str, summary: list[dict]) -> None:
    names = [row["suite"] for row in summary]
    rates = [
        1.0 - row["disagreements"] / max(row["instances"], 1) for row in summary
    ]
    seconds = [row["seconds"] for row in summary]

    fig, ax = plt.subplots(figsize=(7, 3.2))
    ax.bar(range(len(names)), rates, color="#336699")
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=20, ha="right", fontsize=7)
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("agreement rate")
    fig.tight_layout()
    fig.savefig(os.path.join(out_dir, "bench_agreement.png"), dpi=150)
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(7, 3.2))
    ax.bar(range(len(names)), seconds, color="#996633")
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=20, ha="right", fontsize=7)
    ax.set_ylabel("seconds")
    fig.tight_layout()
    fig.savefig(os.path.join(out_dir, "bench_runtime.png"), dpi=150)
    plt.close(fig)
