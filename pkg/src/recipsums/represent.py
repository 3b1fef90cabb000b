"""Minimal-length representations a = 1/x_1^k + ... + 1/x_N^k (mod p).

Admissible bases are integers 1 <= x <= floor(p^epsilon) not divisible by
p. Layer j holds the residues expressible as a sum of exactly j admissible
reciprocal k-th powers; layers are grown by repeated sumset with layer 1
until every residue is covered, which is guaranteed within p layers
because x = 1 is always admissible (a copies of 1 sum to a). The minimal
N per residue is the first layer containing it, and a witness is recovered
by backtracking; ties resolve to the lexicographically smallest sequence.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .errors import Error, IterationCap, Unreachable
from .field import PrimeField, Residue, make_field
from .growth import sumset
from .intmath import pow_floor
from .sets import ResidueSet


@dataclass(frozen=True)
class ReprProblem:
    """A representation problem: modulus, power k, and height exponent."""

    field: PrimeField
    k: int
    epsilon: Fraction

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not (0 < self.epsilon <= 1):
            raise ValueError("epsilon must lie in (0, 1]")

    @cached_property
    def height(self) -> int:
        """floor(p^epsilon), evaluated exactly."""
        return pow_floor(self.field.p, self.epsilon)

    @cached_property
    def admissible(self) -> tuple[int, ...]:
        """Bases 1 <= x <= height with p not dividing x, ascending."""
        p = self.field.p
        return tuple(x for x in range(1, self.height + 1) if x % p != 0)


@dataclass(frozen=True)
class Witness:
    """A verified representation target = sum of reciprocal k-th powers."""

    problem: ReprProblem
    target: Residue
    xs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not check_representation(self.xs, self.target.value, self.problem):
            raise ValueError(f"witness {self.xs} does not represent {self.target.value}")

    @property
    def n(self) -> int:
        return len(self.xs)


def check_representation(xs, target_value: int, problem: ReprProblem) -> bool:
    """Admissibility plus the congruence, recomputed from field arithmetic only."""
    p = problem.field.p
    h = problem.height
    total = 0
    for x in xs:
        if not (1 <= x <= h) or x % p == 0:
            return False
        total = (total + problem.field.recip_power(x, problem.k)) % p
    return total == target_value % p


def verify_witness(w: Witness, problem: ReprProblem) -> bool:
    """Recompute a witness's congruence and admissibility from scratch."""
    return check_representation(w.xs, w.target.value, problem)


def base_reciprocals(problem: ReprProblem) -> ResidueSet:
    """The layer-1 set {1/x^k mod p : x admissible}."""
    return ResidueSet.from_members(
        problem.field,
        (problem.field.recip_power(x, problem.k) for x in problem.admissible),
    )


@dataclass
class LayerTable:
    """Exactly-j-term reachability layers with per-residue first-hit index."""

    problem: ReprProblem
    base: ResidueSet
    layers: tuple[np.ndarray, ...]  # layers[j-1] = residues needing exactly j terms
    coverage: np.ndarray  # coverage[r] = minimal j with r in layer j
    recips: tuple[int, ...]  # reciprocal values aligned with problem.admissible
    first_x: dict[int, int]  # reciprocal value -> smallest admissible base


@lru_cache(maxsize=32)
def build_layer_table(problem: ReprProblem) -> LayerTable:
    """Grow layers R_{j+1} = R_j + R_1 until every residue is covered."""
    p = problem.field.p
    base = base_reciprocals(problem)
    recips = tuple(problem.field.recip_power(x, problem.k) for x in problem.admissible)
    first_x: dict[int, int] = {}
    for x, r in zip(problem.admissible, recips):
        first_x.setdefault(r, x)

    coverage = np.zeros(p, dtype=np.int64)
    coverage[base.bits] = 1
    covered = base.card
    layers = [base.bits]
    seen = {base.bits.tobytes()}
    current = base
    j = 1
    while covered < p:
        if j > p:
            raise IterationCap(f"coverage incomplete after {p} layers (p = {p})")
        nxt = sumset(current, base)
        j += 1
        newly = nxt.bits & (coverage == 0)
        if newly.any():
            coverage[newly] = j
            covered += int(newly.sum())
        key = nxt.bits.tobytes()
        if key in seen and covered < p:
            missing = np.flatnonzero(coverage == 0)
            raise Unreachable(
                f"layers cycle with {missing.size} residues uncovered, e.g. {int(missing[0])}"
            )
        seen.add(key)
        layers.append(nxt.bits)
        current = nxt
    coverage.setflags(write=False)
    return LayerTable(
        problem=problem,
        base=base,
        layers=tuple(layers),
        coverage=coverage,
        recips=recips,
        first_x=first_x,
    )


def min_terms(a: Residue | int, problem: ReprProblem) -> Witness:
    """Minimal representation of a, with the lexicographically smallest witness."""
    p = problem.field.p
    target = int(a) % p
    table = build_layer_table(problem)
    n = int(table.coverage[target])
    xs: list[int] = []
    t = target
    for j in range(n, 1, -1):
        prev = table.layers[j - 2]
        for x, r in zip(problem.admissible, table.recips):
            if prev[(t - r) % p]:
                xs.append(x)
                t = (t - r) % p
                break
        else:  # pragma: no cover - table guarantees a predecessor
            raise RuntimeError("backtracking found no predecessor; table corrupt")
    xs.append(table.first_x[t])
    return Witness(problem=problem, target=problem.field.residue(target), xs=tuple(xs))


def n_max(problem: ReprProblem) -> tuple[int, list[int]]:
    """Largest minimal term count over all residues, plus the full per-residue table."""
    table = build_layer_table(problem)
    return int(table.coverage.max()), [int(v) for v in table.coverage]


def _scan_row(args: tuple[int, int, Fraction, bool]) -> dict:
    p, k, epsilon, timing = args
    start = time.perf_counter()
    row: dict = {
        "p": p,
        "H": None,
        "base_size": None,
        "n_max": None,
        "max_layer": None,
        "elapsed_ms": 0,
        "error": None,
    }
    try:
        problem = ReprProblem(make_field(p), k, epsilon)
        table = build_layer_table(problem)
        row["H"] = problem.height
        row["base_size"] = table.base.card
        row["n_max"] = int(table.coverage.max())
        row["max_layer"] = len(table.layers)
    except Error as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    if timing:
        row["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
    return row


def scan(
    primes: list[int],
    k: int,
    epsilon: Fraction,
    workers: int = 1,
    timing: bool = False,
) -> list[dict]:
    """One row per prime: height, base size, n_max, layer count.

    Rows are ordered by p and identical for any worker count. Wall-clock
    timing is suppressed (reported as 0) unless explicitly requested, so
    repeated runs produce byte-identical reports.
    """
    args = [(p, k, epsilon, timing) for p in sorted(primes)]
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_row, args))
    else:
        rows = [_scan_row(a) for a in args]
    return rows
