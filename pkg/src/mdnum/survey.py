"""Census surveys: run md_exact over many graphs and test the known bounds and characterizations."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .canon import canonical_code
from .coloring import emit_coloring, separated_pair_count, separating_colors, verify_md
from .decide import decide_half
from .errors import ContractError, ResourceError
from .families import a_family_members
from .graph import Graph, all_pairs, cartesian_product, complete_graph
from .graph6 import encode_graph6
from .metrics import (
    blocks,
    connectivity,
    distance_summary,
    independence_number,
    is_two_connected,
    mean_distance_bound,
)
from .planarity import MAX_N as PLANAR_MAX_N
from .planarity import is_planar_small
from .solver import SolverConfig, md_exact

CHECKS = ("conjecture", "alpha", "diam2", "half", "theorem32", "si_bound", "cdist", "planarity", "mean_distance")


@dataclass(frozen=True)
class EpsilonBound:
    epsilon: Fraction
    c_value: Fraction


def epsilon_bound(epsilon) -> EpsilonBound:
    """C(eps) = (1 + eps)^2 / (4 eps^2 (1 - eps)), evaluated exactly."""
    eps = Fraction(epsilon)
    if not 0 < eps < Fraction(1, 2):
        raise ContractError("epsilon must lie strictly between 0 and 1/2")
    c = (1 + eps) ** 2 / (4 * eps ** 2 * (1 - eps))
    if not c < Fraction(9, 8) / eps ** 2:
        raise AssertionError("closed form exceeds 9/(8 eps^2)")
    return EpsilonBound(eps, c)


@dataclass
class SurveyRecord:
    graph6: str
    n: int
    m: int
    kappa: int
    alpha: int | None = None
    diameter: int | None = None
    md: int | None = None
    witness_hash: str | None = None
    checks: dict = field(default_factory=dict)
    note: str = ""

    def as_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)


@dataclass
class SurveyReport:
    records: list
    counts: dict
    counterexamples: list
    unresolved: list
    skipped: list

    def lines(self) -> list[str]:
        out = [r.as_json() for r in self.records]
        out.append(json.dumps({
            "summary": self.counts,
            "counterexamples": self.counterexamples,
            "unresolved": self.unresolved,
            "skipped": self.skipped,
        }, sort_keys=True))
        return out


@lru_cache(maxsize=None)
def _a_codes(n: int, reading: str) -> frozenset:
    return frozenset(canonical_code(g) for g in a_family_members(n, reading))


@lru_cache(maxsize=None)
def _product_codes(n: int) -> frozenset:
    out = set()
    for s in range(2, n + 1):
        if n % s == 0 and n // s >= s:
            out.add(canonical_code(cartesian_product(complete_graph(s), complete_graph(n // s))[0]))
    return frozenset(out)


def _two_common(g: Graph) -> bool:
    return all(g.has_edge(u, v) or len(set(g.adj[u]) & set(g.adj[v])) >= 2 for u, v in all_pairs(g.n))


def witness_hash(g: Graph, coloring) -> str:
    return hashlib.sha256(emit_coloring(g, coloring).encode()).hexdigest()[:16]


def survey_graph(g: Graph, checks=CHECKS, config: SolverConfig = SolverConfig()) -> SurveyRecord:
    """One survey record; ``checks`` values are ``pass``, ``fail`` or ``n/a``."""
    n = g.n
    k = connectivity(g)
    rec = SurveyRecord(encode_graph6(g), n, g.m, k)
    try:
        res = md_exact(g, config)
    except ResourceError as exc:
        rec.note = f"unresolved: {exc}"
        return rec
    mdv, wit = res.md, res.witness
    cert = verify_md(g, wit)
    rec.md, rec.witness_hash = mdv, witness_hash(g, wit)
    two = n >= 3 and is_two_connected(g)
    dist = distance_summary(g)
    rec.diameter = dist.diameter
    if n <= 20:
        rec.alpha = independence_number(g)[0]

    def put(name, applies, ok):
        if name in checks:
            rec.checks[name] = "n/a" if not applies else ("pass" if ok() else "fail")

    put("conjecture", k >= 1, lambda: mdv <= n // k)
    put("alpha", two and rec.alpha is not None, lambda: mdv <= rec.alpha)

    def diam2():
        if two and mdv > 2:
            return False
        if not two and n >= 2 and len(blocks(g).blocks) != mdv:
            return False
        if _two_common(g):
            return mdv <= 2 and (mdv == 2) == (canonical_code(g) in _product_codes(n))
        return True

    put("diam2", dist.diameter == 2, diam2)

    def half():
        report = decide_half(g)
        if not report.theorem_verdict == report.verdict:
            rec.note = (rec.note + "; " if rec.note else "") + "theorem-only verdict differs"
        return report.verdict == (mdv == n // 2)

    put("half", two, half)

    def theorem32():
        code = canonical_code(g)
        strict = code in _a_codes(n, "strict")
        broad = code in _a_codes(n, "broad")
        if strict or broad:
            rec.note = (rec.note + "; " if rec.note else "") + f"A-family member (strict={strict}, broad={broad})"
        return mdv <= 2 and (mdv == 2) == strict

    put("theorem32", n >= 4 and k >= n // 2, theorem32)
    put("si_bound", 1 <= k and 2 * k < n,
        lambda: all(separated_pair_count(cert, c) >= k * (n - k) for c in wit.palette))
    put("cdist", n >= 2,
        lambda: all(len(separating_colors(cert, u, v)) <= dist.dist[u][v] for u, v in all_pairs(n)))
    put("planarity", two and mdv == n // 2 and n <= PLANAR_MAX_N, lambda: is_planar_small(g))
    put("mean_distance", k >= 1 and n >= 2, lambda: dist.mu <= mean_distance_bound(n, k))
    return rec


def _survey_one(args):
    g, checks, budget = args
    return survey_graph(g, checks, SolverConfig(budget=budget))


def run_survey(graphs, checks=CHECKS, *, budget: int = SolverConfig.budget, jobs: int = 1,
               skipped=()) -> SurveyReport:
    """Survey connected graphs; disconnected inputs are listed under ``skipped``."""
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise ContractError(f"unknown checks {bad}; choose from {', '.join(CHECKS)}")
    skipped = list(skipped)
    work = []
    for g in graphs:
        if not g.is_connected():
            skipped.append(f"{encode_graph6(g)}: disconnected")
        else:
            work.append((g, tuple(checks), budget))
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            records = pool.map(_survey_one, work, chunksize=16)
    else:
        records = [_survey_one(w) for w in work]
    records.sort(key=lambda r: r.graph6)
    counts = {c: {"pass": 0, "fail": 0, "n/a": 0} for c in checks}
    counterexamples, unresolved = [], []
    for r in records:
        if r.md is None:
            unresolved.append(r.graph6)
            continue
        for c, verdict in r.checks.items():
            counts[c][verdict] += 1
            if verdict == "fail":
                counterexamples.append({"graph6": r.graph6, "check": c})
    counts["graphs"] = len(records)
    return SurveyReport(records, counts, counterexamples, unresolved, sorted(skipped))
