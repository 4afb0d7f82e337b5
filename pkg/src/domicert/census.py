"""Exhaustive verification over all small trees and connected graphs.

The census enumerates every isomorphism class in a size range, runs a
configurable set of named checks against each graph, and aggregates the
verdicts into a deterministic report: identical configurations produce
byte-identical JSON regardless of worker count. Class counts are
cross-checked against independently known values before any verdict is
trusted.

Check names:

* ``thm1``          2 * gamma_ev == gamma_pr
* ``thm2``          trees only: ev-uniqueness and paired-uniqueness coincide
* ``thm2_probe``    the thm2 equivalence tested on any graph; failures are
                    expected and recorded as findings, not bugs
* ``cor1``          a unique minimum ev-set forces a unique paired set
* ``cor_general``   trees only: either uniqueness pins down the other
                    family's set through spans and matchings
* ``cor_general2``  paired-uniqueness holds exactly when all minimum
                    ev-sets span one common vertex set (the paired set)
* ``claim``         no three edges of a minimum ev-set form a path on four
                    vertices or a triangle
* ``lemma1``        every minimum ev-set with a sharing pair detangles,
                    step invariants included
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from multiprocessing import Pool

from .domination import DEFAULT_BUDGET, MinSetFamily, solve_ev, solve_pr, spanned_vertices
from .errors import CapabilityError, InvariantViolation, NotMinimumWitness
from .graphs import (
    Graph,
    canonical_code,
    emit_graph6,
    is_tree,
    parse_edge_list,
    perfect_matchings_within,
)
from .twinning import check_claim, detangle, sharing_pairs, twinning

TREES = "trees"
CONNECTED = "connected_graphs"

CHECK_NAMES = ("claim", "cor1", "cor_general", "cor_general2", "lemma1", "thm1", "thm2", "thm2_probe")
STANDARD_CHECKS = ("claim", "cor1", "cor_general", "cor_general2", "lemma1", "thm1", "thm2")

TREE_GENERATION_BOUND = 16
CONNECTED_GENERATION_BOUND = 8

# connected graph classes per vertex count, for generator cross-checks
_CONNECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

REPORT_VERSION = "report-v1"


# --- class counting ------------------------------------------------------


@lru_cache(maxsize=None)
def _rooted_tree_count(n: int) -> int:
    if n <= 1:
        return n
    total = 0
    for j in range(1, n):
        inner = 0
        for d in range(1, j + 1):
            if j % d == 0:
                inner += d * _rooted_tree_count(d)
        total += inner * _rooted_tree_count(n - j)
    return total // (n - 1)


def tree_class_count(n: int) -> int:
    """Number of isomorphism classes of trees on n vertices."""
    if n < 1:
        raise ValueError("need n >= 1")
    r = _rooted_tree_count
    paired = sum(r(a) * r(n - a) for a in range(1, n))
    if n % 2 == 0:
        paired -= r(n // 2)
    return r(n) - paired // 2


def connected_class_count(n: int) -> int:
    """Known number of connected-graph classes, for generator cross-checks."""
    try:
        return _CONNECTED_CLASS_COUNTS[n]
    except KeyError:
        raise CapabilityError(f"no reference count for connected graphs on {n} vertices") from None


# --- free tree generation ------------------------------------------------
#
# Successor walk over canonical level sequences (the Wright, Richmond,
# Odlyzko, McKay scheme): each tree is a list of depths in preorder, the
# successor of a rooted sequence is computed in place, and candidates
# failing the centroid conditions for free trees jump ahead.


def generate_trees(n: int):
    """Yield one representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > TREE_GENERATION_BOUND:
        raise CapabilityError(f"tree generation supports n <= {TREE_GENERATION_BOUND}, got {n}")
    if n == 1:
        yield Graph(1, ())
        return
    layout = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free_tree(layout)
        if layout is not None:
            yield _levels_to_graph(layout)
            layout = _next_rooted_tree(layout)


def _next_rooted_tree(levels, p=None):
    # Beyer-Hedetniemi successor of a canonical rooted level sequence.
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    result = list(levels)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _next_free_tree(candidate):
    # Accept the candidate if its first root subtree is no taller, no
    # larger and no lexicographically later than the rest; otherwise jump.
    left, rest = _split_first_subtree(candidate)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    successor = _next_rooted_tree(candidate, p)
    if candidate[p] > 2:
        new_left, _ = _split_first_subtree(successor)
        suffix = range(1, max(new_left) + 2)
        successor[-len(suffix):] = suffix
    return successor


def _split_first_subtree(levels):
    # First subtree of the root versus everything else (re-rooted at 0).
    second = None
    seen_one = False
    for i, lev in enumerate(levels):
        if lev == 1:
            if seen_one:
                second = i
                break
            seen_one = True
    if second is None:
        second = len(levels)
    left = [levels[i] - 1 for i in range(1, second)]
    rest = [0] + [levels[i] for i in range(second, len(levels))]
    return left, rest


def _levels_to_graph(levels) -> Graph:
    edges = []
    stack: list[int] = []
    for i, lev in enumerate(levels):
        while len(stack) > lev:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph(len(levels), edges)


# --- connected graph generation -------------------------------------------
#
# Every connected graph on m vertices keeps a connected graph when some
# non-cut vertex is removed, so attaching a new vertex to every nonempty
# subset of each (m-1)-representative reaches every class. Canonical
# codes deduplicate.


def generate_connected_graphs(n: int):
    """Yield one representative per isomorphism class of connected graphs."""
    if not 2 <= n <= CONNECTED_GENERATION_BOUND:
        raise CapabilityError(f"connected generation supports 2 <= n <= {CONNECTED_GENERATION_BOUND}, got {n}")
    reps = [Graph(1, ())]
    for m in range(2, n + 1):
        found: dict[bytes, Graph] = {}
        for g in reps:
            newcomer = m - 1
            for mask in range(1, 1 << newcomer):
                extra = [(i, newcomer) for i in range(newcomer) if mask >> i & 1]
                h = Graph(m, g.edges + tuple(extra))
                code = canonical_code(h)
                if code not in found:
                    found[code] = h
        reps = [found[c] for c in sorted(found)]
    yield from reps


# --- per-graph checks ------------------------------------------------------


def verify_graph(graph: Graph, checks, budget: int = DEFAULT_BUDGET) -> dict[str, str]:
    """Run the named checks; verdicts are pass, fail, skip or na.

    A budget overrun skips every requested check for the graph; checks
    that only claim something about trees come back na on non-trees.
    """
    names = _validated_checks(checks)
    try:
        ev = solve_ev(graph, budget)
        pr = solve_pr(graph, budget)
    except CapabilityError:
        return {name: "skip" for name in names}
    tree = is_tree(graph)
    out: dict[str, str] = {}
    for name in names:
        if name in ("thm2", "cor_general") and not tree:
            out[name] = "na"
            continue
        holds = _CHECK_TABLE[name](graph, ev, pr)
        out[name] = "pass" if holds else "fail"
    return out


def _check_thm1(graph: Graph, ev: MinSetFamily, pr: MinSetFamily) -> bool:
    return 2 * ev.gamma == pr.gamma


def _check_uniqueness_equivalence(graph: Graph, ev: MinSetFamily, pr: MinSetFamily) -> bool:
    return (len(ev.sets) == 1) == (len(pr.sets) == 1)


def _check_cor1(graph: Graph, ev: MinSetFamily, pr: MinSetFamily) -> bool:
    return len(ev.sets) != 1 or len(pr.sets) == 1


def _check_cor_general(graph: Graph, ev: MinSetFamily, pr: MinSetFamily) -> bool:
    if len(pr.sets) == 1:
        if len(ev.sets) != 1:
            return False
        m = ev.sets[0]
        d = pr.sets[0]
        if spanned_vertices(m) != frozenset(d):
            return False
        if list(perfect_matchings_within(graph, d)) != [m]:
            return False
    if len(ev.sets) == 1:
        m = ev.sets[0]
        if len(pr.sets) != 1 or frozenset(pr.sets[0]) != spanned_vertices(m):
            return False
    return True


def _check_cor_general2(graph: Graph, ev: MinSetFamily, pr: MinSetFamily) -> bool:
    spans = {spanned_vertices(m) for m in ev.sets}
    paired_unique = len(pr.sets) == 1
    if paired_unique != (len(spans) == 1):
        return False
    if paired_unique and spans != {frozenset(pr.sets[0])}:
        return False
    return True


def _check_claim(graph: Graph, ev: MinSetFamily, pr: MinSetFamily) -> bool:
    return all(check_claim(graph, m) for m in ev.sets)


def _check_lemma1(graph: Graph, ev: MinSetFamily, pr: MinSetFamily) -> bool:
    for m in ev.sets:
        if sharing_pairs(m) == 0:
            continue
        if not _detangles_cleanly(graph, ev, m):
            return False
    return True


def _detangles_cleanly(graph: Graph, ev: MinSetFamily, members) -> bool:
    # replay the left-branch iteration, holding every step to the script:
    # both rewrites stay minimum, share one fewer pair, and agree on count
    cap = len(members) ** 2
    current = members
    steps = 0
    while sharing_pairs(current) > 0:
        steps += 1
        if steps > cap:
            return False
        pair = _smallest_sharing_pair(current)
        try:
            left, right, _, _ = twinning(graph, current, *pair)
        except NotMinimumWitness:
            return False
        before = sharing_pairs(current)
        left_pairs = sharing_pairs(left)
        if left_pairs != sharing_pairs(right) or left_pairs >= before:
            return False
        if left == right:
            return False
        if not (ev.contains(left) and ev.contains(right)):
            return False
        current = left
    try:
        result = detangle(graph, members)
    except (NotMinimumWitness, InvariantViolation):
        return False
    return (
        result.left == current
        and result.iterations == steps
        and len(result.left) == len(members) == len(result.right)
        and result.left != result.right
        and sharing_pairs(result.left) == 0 == sharing_pairs(result.right)
        and spanned_vertices(result.left) != spanned_vertices(result.right)
        and ev.contains(result.left)
        and ev.contains(result.right)
    )


def _smallest_sharing_pair(members):
    ordered = sorted(members)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if set(a) & set(b):
                return a, b
    raise InvariantViolation("no sharing pair present")


_CHECK_TABLE = {
    "thm1": _check_thm1,
    "thm2": _check_uniqueness_equivalence,
    "thm2_probe": _check_uniqueness_equivalence,
    "cor1": _check_cor1,
    "cor_general": _check_cor_general,
    "cor_general2": _check_cor_general2,
    "claim": _check_claim,
    "lemma1": _check_lemma1,
}


def _validated_checks(checks) -> tuple[str, ...]:
    names = tuple(sorted(set(checks)))
    if not names:
        raise ValueError("need at least one check")
    unknown = [name for name in names if name not in _CHECK_TABLE]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return names


# --- census runs -----------------------------------------------------------


@dataclass(frozen=True)
class CensusConfig:
    """A census request; validated on construction."""

    family: str
    n_min: int
    n_max: int
    checks: tuple[str, ...] = STANDARD_CHECKS
    worker_count: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.family not in (TREES, CONNECTED):
            raise ValueError(f"unknown family {self.family!r}")
        if not 2 <= self.n_min <= self.n_max:
            raise ValueError("need 2 <= n_min <= n_max")
        bound = TREE_GENERATION_BOUND if self.family == TREES else CONNECTED_GENERATION_BOUND
        if self.n_max > bound:
            raise ValueError(f"family {self.family} supports n_max <= {bound}")
        object.__setattr__(self, "checks", _validated_checks(self.checks))
        if self.worker_count < 1:
            raise ValueError("need at least one worker")
        if self.budget < 1:
            raise ValueError("budget must be positive")


@dataclass
class CensusReport:
    """Aggregated verdicts; the JSON form is canonical and timing-free."""

    family: str
    n_min: int
    n_max: int
    checks: tuple[str, ...]
    budget: int
    per_n: dict[int, dict]
    totals: dict
    worker_count: int = 1
    wall_time_seconds: float = 0.0

    def payload(self) -> dict:
        # wall time and worker count stay out: equal configurations must
        # serialize identically however the work was split
        return {
            "version": REPORT_VERSION,
            "family": self.family,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "checks": list(self.checks),
            "budget": self.budget,
            "per_n": {str(n): record for n, record in self.per_n.items()},
            "totals": self.totals,
        }

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=2, sort_keys=True) + "\n"

    @property
    def counterexample_count(self) -> int:
        return self.totals["counterexamples"]

    @property
    def skip_count(self) -> int:
        return sum(per_check["skip"] for per_check in self.totals["verdicts"].values())


def run_census(config: CensusConfig) -> CensusReport:
    """Enumerate, check and aggregate; deterministic for any worker count."""
    start = time.perf_counter()
    per_n: dict[int, dict] = {}
    pool = Pool(config.worker_count) if config.worker_count > 1 else None
    try:
        for n in range(config.n_min, config.n_max + 1):
            per_n[n] = _census_slice(n, config, pool)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    totals_verdicts = {
        name: {verdict: sum(per_n[n]["verdicts"][name][verdict] for n in per_n)
               for verdict in ("pass", "fail", "skip", "na")}
        for name in config.checks
    }
    totals = {
        "graphs_examined": sum(per_n[n]["graphs_examined"] for n in per_n),
        "verdicts": totals_verdicts,
        "counterexamples": sum(len(per_n[n]["counterexamples"]) for n in per_n),
    }
    return CensusReport(
        family=config.family,
        n_min=config.n_min,
        n_max=config.n_max,
        checks=config.checks,
        budget=config.budget,
        per_n=per_n,
        totals=totals,
        worker_count=config.worker_count,
        wall_time_seconds=time.perf_counter() - start,
    )


def _census_slice(n: int, config: CensusConfig, pool) -> dict:
    if config.family == TREES:
        graphs = list(generate_trees(n))
        expected = tree_class_count(n)
    else:
        graphs = list(generate_connected_graphs(n))
        expected = connected_class_count(n)
    if len(graphs) != expected:
        raise InvariantViolation(f"generated {len(graphs)} classes for n={n}, expected {expected}")
    if pool is None:
        parts = [_verify_shard(([(g.n, g.edges) for g in graphs], config.checks, config.budget))]
    else:
        shards: list[list[tuple[int, tuple]]] = [[] for _ in range(config.worker_count)]
        for g in graphs:
            shards[_shard_index(canonical_code(g), config.worker_count)].append((g.n, g.edges))
        parts = pool.map(_verify_shard, [(shard, config.checks, config.budget) for shard in shards])
    verdicts = {name: {"pass": 0, "fail": 0, "skip": 0, "na": 0} for name in config.checks}
    examples: list[dict] = []
    for counts, found in parts:
        for name, by_verdict in counts.items():
            for verdict, count in by_verdict.items():
                verdicts[name][verdict] += count
        examples.extend(found)
    examples.sort(key=lambda rec: (rec["graph6"], rec["check"]))
    return {
        "graphs_examined": len(graphs),
        "expected_count": expected,
        "verdicts": verdicts,
        "counterexamples": examples,
    }


def _shard_index(code: bytes, workers: int) -> int:
    digest = hashlib.blake2b(code, digest_size=8).digest()
    return int.from_bytes(digest, "big") % workers


def _verify_shard(args):
    payload, checks, budget = args
    counts = {name: {"pass": 0, "fail": 0, "skip": 0, "na": 0} for name in checks}
    examples: list[dict] = []
    for n, edges in payload:
        graph = Graph(n, edges)
        verdicts = verify_graph(graph, checks, budget)
        for name, verdict in verdicts.items():
            counts[name][verdict] += 1
        failed = sorted(name for name, verdict in verdicts.items() if verdict == "fail")
        if failed:
            ev = solve_ev(graph, budget)
            pr = solve_pr(graph, budget)
            for name in failed:
                examples.append({
                    "graph6": emit_graph6(graph),
                    "check": name,
                    "gamma_ev": ev.gamma,
                    "ev_sets": [[list(e) for e in m] for m in ev.sets],
                    "gamma_pr": pr.gamma,
                    "pr_sets": [list(d) for d in pr.sets],
                })
    return counts, examples


# --- bundled counterexample fixture ----------------------------------------


def figure1_graph() -> Graph:
    """The bundled pendant-cycle fixture: a 4-cycle, one pendant per cycle vertex."""
    text = resources.files("domicert").joinpath("data/figure1.edges").read_text(encoding="utf-8")
    return parse_edge_list(text)


def figure1_claims(graph: Graph, budget: int = DEFAULT_BUDGET) -> tuple[tuple[str, bool], ...]:
    """The five claims the pendant-cycle fixture is shipped to witness."""
    ev = solve_ev(graph, budget)
    pr = solve_pr(graph, budget)
    spans = {spanned_vertices(m) for m in ev.sets}
    return (
        ("gamma_ev == 2", ev.gamma == 2),
        ("exactly two minimum ev sets", len(ev.sets) == 2),
        ("gamma_pr == 4", pr.gamma == 4),
        ("exactly one minimum paired set", len(pr.sets) == 1),
        ("every ev span equals the paired set", spans == {frozenset(pr.sets[0])}),
    )
