"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

The lines are collected in ``RESULTS`` and echoed in pytest's terminal
summary (see conftest.py); running this file directly prints them too.
"""

import functools
import itertools
import random
import time

import numpy as np

from conftest import all_graphs
from drawn import TWO_TRIANGLES_MONOPOLAR, TWO_TRIANGLES_SUBCOLORABLE, SPLIT_AFTER
from graphpart import (
    SearchStats,
    TwoSatFormula,
    brute_monopolar,
    brute_pi_partition,
    brute_subcoloring,
    generate_planted,
    gnp,
    oracle_profile,
    parse_spec,
    recognize_cluster_vs_fsg,
    recognize_exclusive,
    recognize_monopolar,
    recognize_subcoloring_ka,
    recognize_subcoloring_total,
    solve_twosat,
    verify_certificate,
)
from graphpart.errors import InvariantViolation

RESULTS: list[str] = []

CLIQUE, EDGELESS, CLUSTER = parse_spec("clique"), parse_spec("edgeless"), parse_spec("cluster")
SOLVERS = (
    ("monopolar", recognize_monopolar, "monopolar", "monopolar", "a_side"),
    ("subcoloring-ka", recognize_subcoloring_ka, "subcoloring_a_side", "subcoloring", "a_side"),
    ("subcoloring-total", recognize_subcoloring_total, "subcoloring_total", "subcoloring", "total"),
)


def report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


class Tally:
    """Mismatches and structural-bound violations over a batch of instances."""

    def __init__(self):
        self.instances = 0
        self.mismatches = []
        self.bad_certificates = []
        self.violations = []
        self.solver_seconds = 0.0

    def run(self, graph, ks, profile):
        self.instances += 1
        for name, solve, key, problem, mode in SOLVERS:
            best = getattr(profile, key)
            for k in ks:
                stats = SearchStats()
                start = time.perf_counter()
                try:
                    found = solve(graph, k, stats)
                except InvariantViolation as exc:
                    self.violations.append((name, k, graph, str(exc)))
                    continue
                finally:
                    self.solver_seconds += time.perf_counter() - start
                expected = best is not None and best <= k
                if (found is not None) != expected:
                    self.mismatches.append((name, k, graph))
                if found is not None and not verify_certificate(graph, found, problem, k, mode):
                    self.bad_certificates.append((name, k, graph))
                self.violations += [(name, k, graph, msg) for msg in bound_violations(name, k, stats)]


def bound_violations(name, k, stats):
    """Re-check the recorded per-path maxima against the structural bounds."""
    out = []
    if name == "monopolar":
        if stats.path_max["pull_up"] > k + 1:
            out.append(f"pull-up count {stats.path_max['pull_up']} > k+1")
        if stats.path_max["push_down_or_branch"] > k + 1:
            out.append(f"push-down/branch count {stats.path_max['push_down_or_branch']} > k+1")
        if stats.max_depth > k + 2:
            out.append(f"depth {stats.max_depth} > k+2")
    elif name == "subcoloring-ka":
        if stats.initial_constraints_max > 2 * k + 2:
            out.append(f"{stats.initial_constraints_max} initial constraints > 2k+2")
    elif stats.path_max["dummy_rounds"] > 1:
        out.append(f"dummy round fired {stats.path_max['dummy_rounds']} times on one path")
    return out


@functools.lru_cache(maxsize=None)
def exhaustive():
    """Every labeled graph on at most six vertices, all three solvers, k = 0..3."""
    tally = Tally()
    start = time.perf_counter()
    for g in all_graphs(6):
        tally.run(g, range(4), oracle_profile(g))
    tally.seconds = time.perf_counter() - start
    return tally


@functools.lru_cache(maxsize=None)
def randomized():
    rng = random.Random(20240601)
    tally = Tally()
    start = time.perf_counter()
    for _ in range(1000):
        g = gnp(rng.randint(7, 16), rng.choice((0.1, 0.3, 0.5)), rng.randrange(2**32))
        tally.run(g, range(1, 5), oracle_profile(g))
    tally.seconds = time.perf_counter() - start
    return tally


def test_criterion_1_exhaustive_oracle_equivalence():
    t = exhaustive()
    ok = not t.mismatches and not t.violations and not t.bad_certificates and t.seconds < 600
    report(1, ok, f"{t.instances} graphs x k 0..3 x 3 solvers, {len(t.mismatches)} mismatches, {t.seconds:.0f}s")


def test_criterion_2_randomized_oracle_equivalence():
    t = randomized()
    ok = not t.mismatches and not t.bad_certificates and not t.violations and t.seconds < 300
    report(
        2, ok,
        f"{t.instances} G(n,p) graphs x k 1..4, {len(t.mismatches)} mismatches, "
        f"{len(t.bad_certificates)} bad certificates, {t.seconds:.0f}s",
    )


def test_criterion_3_split_and_unipolar_collapse():
    bad = []
    count = 0
    for g in all_graphs(6):
        count += 1
        if (recognize_monopolar(g, 1) is None) != (brute_pi_partition(g, CLIQUE, EDGELESS) is None):
            bad.append(("split", g))
        if (recognize_subcoloring_ka(g, 1) is None) != (brute_pi_partition(g, CLIQUE, CLUSTER) is None):
            bad.append(("unipolar", g))
    report(3, not bad, f"{count} graphs, split and unipolar, {len(bad)} mismatches")


def test_criterion_4_structural_bounds():
    violations = exhaustive().violations + randomized().violations
    detail = f"{len(violations)} violations over criteria 1 and 2 runs"
    if violations:
        detail += f"; first: {violations[0][0]} k={violations[0][1]} {violations[0][3]}"
    report(4, not violations, detail)


def test_criterion_5_planted_monopolar_scaling():
    times, verified = {}, {}
    for n in (10_000, 100_000):
        graph, _ = generate_planted("planted-monopolar", n, 3, 0.02, 1, a_fraction=300 / n)
        start = time.perf_counter()
        found = recognize_monopolar(graph, 3)
        times[n] = time.perf_counter() - start
        verified[n] = found is not None and verify_certificate(graph, found, "monopolar", 3)
    ratio = times[100_000] / times[10_000]
    ok = all(verified.values()) and ratio <= 20 and max(times.values()) < 10
    report(
        5, ok,
        f"n=1e4 {times[10_000]:.2f}s, n=1e5 {times[100_000]:.2f}s, ratio {ratio:.1f}, "
        f"verified {all(verified.values())}",
    )


def test_criterion_6_generic_solvers_agree_with_monopolar():
    bad = []
    count = 0
    for g in all_graphs(6):
        count += 1
        mono = [recognize_monopolar(g, k) is not None for k in range(4)]
        if (recognize_exclusive(g, CLIQUE, EDGELESS) is not None) != mono[1]:
            bad.append(("split", 1, g))
        for k in range(4):
            if (recognize_cluster_vs_fsg(g, k, EDGELESS) is not None) != mono[k]:
                bad.append(("cluster-vs-edgeless", k, g))
    report(6, not bad, f"{count} graphs, XP split and cluster-vs-edgeless k 0..3, {len(bad)} mismatches")


def satisfiable_by_enumeration(formula):
    n = formula.var_count
    table = (np.arange(1 << n)[:, None] >> np.arange(n)) & 1
    alive = np.ones(1 << n, dtype=bool)
    for (x, px), (y, py) in formula.clauses:
        alive &= (table[:, x] == px) | (table[:, y] == py)
    return bool(alive.any())


def test_criterion_7_twosat():
    rng = random.Random(7)
    mismatches = bad_assignments = 0
    start = time.perf_counter()
    for _ in range(500):
        n = rng.randint(1, 15)
        f = TwoSatFormula(n)
        for _ in range(rng.randint(0, 60)):
            f.add_clause((rng.randrange(n), rng.random() < 0.5), (rng.randrange(n), rng.random() < 0.5))
        result = solve_twosat(f)
        if (result is not None) != satisfiable_by_enumeration(f):
            mismatches += 1
        if result is not None and not f.satisfied_by(result):
            bad_assignments += 1
    seconds = time.perf_counter() - start
    ok = not mismatches and not bad_assignments and seconds < 30
    report(7, ok, f"500 formulas, {mismatches} mismatches, {bad_assignments} bad assignments, {seconds:.1f}s")


def test_criterion_8_drawn_examples():
    split_graph, _ = SPLIT_AFTER
    mono_graph, _ = TWO_TRIANGLES_MONOPOLAR
    sub_graph, _ = TWO_TRIANGLES_SUBCOLORABLE
    checks = {
        "split-after-insert monopolar k=1": recognize_monopolar(split_graph, 1) is not None
        and brute_monopolar(split_graph, 1) is not None,
        "two-triangles monopolar k=2": verify_certificate(mono_graph, recognize_monopolar(mono_graph, 2), "monopolar", 2)
        and brute_monopolar(mono_graph, 2) is not None,
        "two-triangles not monopolar k=1": recognize_monopolar(mono_graph, 1) is None
        and brute_monopolar(mono_graph, 1) is None,
        "subcolorable a_side k=2": recognize_subcoloring_ka(sub_graph, 2) is not None
        and brute_subcoloring(sub_graph, 2) is not None,
        "subcolorable total k=4": recognize_subcoloring_total(sub_graph, 4) is not None
        and brute_subcoloring(sub_graph, 4, "total") is not None,
    }
    failed = [name for name, ok in checks.items() if not ok]
    report(8, not failed, f"{len(checks) - len(failed)}/{len(checks)} drawn-example checks" + (f", failed {failed}" if failed else ""))


if __name__ == "__main__":
    for name, test in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                test()
            except AssertionError:
                pass
