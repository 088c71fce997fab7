"""1-in-3 SAT oracle, instance generation, and the SAT/tiling equivalence harness."""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable, Iterator, Sequence

from .core import validate_tiling
from .errors import LengthMismatch, SolverAborted, TooLarge
from .reduction import VARIANTS, Cm13Instance, build_region, format_instance
from .solver import ABORTED, TILEABLE, construct_tiling, extract_assignment, solve
from .tilesets import builtin_tileset

BRUTE_FORCE_MAX_N = 24
ENUMERATE_MAX_N = 4
DEFAULT_NODE_LIMIT = 10_000_000


def eval_1in3(inst: Cm13Instance, assignment: Sequence[int]) -> bool:
    """True iff each clause has exactly one true occurrence (repeats count)."""
    if len(assignment) != inst.n:
        raise LengthMismatch(f"{len(assignment)} values for {inst.n} variables")
    return all(sum(1 for x in clause if assignment[x - 1]) == 1 for clause in inst.clauses)


def brute_force(inst: Cm13Instance) -> tuple[int, ...] | None:
    """Lexicographically smallest satisfying assignment, or None."""
    if inst.n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"n={inst.n} exceeds the brute-force cap {BRUTE_FORCE_MAX_N}")
    for a in itertools.product((0, 1), repeat=inst.n):
        if eval_1in3(inst, a):
            return a
    return None


def _triples(pool: tuple[int, ...]) -> Iterator[tuple[tuple[int, int, int], tuple[int, ...]]]:
    """Distinct sorted triples drawn from the multiset ``pool`` (sorted)."""
    seen = set()
    for idx in itertools.combinations(range(len(pool)), 3):
        triple = tuple(pool[i] for i in idx)
        if triple in seen:
            continue
        seen.add(triple)
        rest = list(pool)
        for x in triple:
            rest.remove(x)
        yield triple, tuple(rest)  # type: ignore[misc]


def enumerate_instances(n: int) -> Iterator[Cm13Instance]:
    """All canonical instances on n variables (clauses sorted, each sorted)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATE_MAX_N:
        raise TooLarge(f"enumeration is capped at n={ENUMERATE_MAX_N}")

    def rec(pool: tuple[int, ...], last: tuple[int, ...]) -> Iterator[list]:
        if not pool:
            yield []
            return
        for triple, rest in _triples(pool):
            if triple < last:
                continue
            for tail in rec(rest, triple):
                yield [triple] + tail

    pool = tuple(sorted(v for v in range(1, n + 1) for _ in range(3)))
    for clauses in rec(pool, ()):
        yield Cm13Instance(n, tuple(clauses))


def random_instance(n: int, seed: int) -> Cm13Instance:
    """Shuffle the 3n occurrence slots with ``seed`` and canonicalize."""
    rng = random.Random(seed)
    slots = [v for v in range(1, n + 1) for _ in range(3)]
    rng.shuffle(slots)
    clauses = tuple(tuple(slots[3 * i:3 * i + 3]) for i in range(n))
    return Cm13Instance(n, clauses).canonical()  # type: ignore[arg-type]


@dataclass
class VariantResult:
    tileable: bool | None
    status: str
    nodes: int
    seconds: float
    constructed_valid: bool | None = None
    roundtrip: bool | None = None


@dataclass
class EquivalenceReport:
    instance: str
    sat: bool
    witness: tuple[int, ...] | None
    variants: dict[str, VariantResult] = field(default_factory=dict)

    @property
    def aborted(self) -> bool:
        return any(r.status == ABORTED for r in self.variants.values())

    @property
    def agree(self) -> bool:
        """SAT verdict matches every completed tiling verdict and witness checks pass."""
        for r in self.variants.values():
            if r.status == ABORTED:
                continue
            if r.tileable != self.sat:
                return False
            if self.sat and not (r.constructed_valid and r.roundtrip):
                return False
        return True

    def to_json(self) -> str:
        d = asdict(self)
        d["agree"] = self.agree
        d["aborted"] = self.aborted
        return json.dumps(d, sort_keys=True)


def instance_id(inst: Cm13Instance) -> str:
    return f"n{inst.n}:" + ";".join(",".join(map(str, c)) for c in inst.clauses)


def equivalence_check(inst: Cm13Instance, variants: Iterable[str] = VARIANTS,
                      node_limit: int | None = DEFAULT_NODE_LIMIT,
                      strict: bool = False) -> EquivalenceReport:
    """Compare brute-force satisfiability with tileability of the region.

    With ``strict`` a hit limit raises :class:`SolverAborted`; otherwise the
    variant is recorded with status ``aborted`` and left out of ``agree``.
    """
    witness = brute_force(inst)
    report = EquivalenceReport(instance_id(inst), witness is not None, witness)
    for variant in variants:
        tiles = builtin_tileset(variant)
        region, _ = build_region(inst, variant)
        start = time.perf_counter()
        out = solve(region, tiles, node_limit=node_limit)
        seconds = time.perf_counter() - start
        if out.status == ABORTED:
            if strict:
                raise SolverAborted(f"{variant}: {out.limit} limit on {report.instance}")
            report.variants[variant] = VariantResult(None, ABORTED, out.stats.nodes, seconds)
            continue
        res = VariantResult(out.status == TILEABLE, out.status, out.stats.nodes, seconds)
        if out.tiling is not None and validate_tiling(region, tiles, out.tiling):
            res.tileable = None  # solver produced an invalid tiling: never agree
            res.status = "invalid"
        if witness is not None:
            built = construct_tiling(inst, witness, variant, tiles=tiles)
            res.constructed_valid = not validate_tiling(region, tiles, built)
            res.roundtrip = extract_assignment(built, inst, tiles) == witness
        report.variants[variant] = res
    return report


@dataclass
class HarnessSummary:
    total: int = 0
    agree: int = 0
    disagree: int = 0
    aborted: int = 0
    sat: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        return (f"{self.total} instances: {self.agree} agree, {self.disagree} disagree, "
                f"{self.aborted} aborted, {self.sat} satisfiable, {self.seconds:.1f}s")


def run_harness(instances: Iterable[Cm13Instance], variants: Iterable[str] = VARIANTS,
                node_limit: int | None = DEFAULT_NODE_LIMIT,
                out: IO[str] | None = None) -> HarnessSummary:
    """Check each instance; optionally write one JSON report per line to ``out``."""
    variants = tuple(variants)
    summary = HarnessSummary()
    start = time.perf_counter()
    for inst in instances:
        rep = equivalence_check(inst, variants, node_limit)
        summary.total += 1
        summary.sat += rep.sat
        if rep.aborted:
            summary.aborted += 1
        if rep.agree:
            summary.agree += 1
        else:
            summary.disagree += 1
            summary.failures.append(format_instance(inst))
        if out is not None:
            out.write(rep.to_json() + "\n")
    summary.seconds = time.perf_counter() - start
    return summary


def random_instances(count: int, sizes: Sequence[int], seed: int) -> list[Cm13Instance]:
    """``count`` seeded instances, cycling through ``sizes``."""
    return [random_instance(sizes[i % len(sizes)], seed + i) for i in range(count)]
