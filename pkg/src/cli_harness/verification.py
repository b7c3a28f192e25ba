"""
Verification Suites
Exact-equality property suites over the lattice matrices, the published
reference matrices and a corpus of glued graphs. Every check compares
exact rationals or polynomials; there is no tolerance anywhere.
"""

import logging
import multiprocessing as mp
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Sequence, Tuple

import networkx as nx

from exact_algebra import (
    MultiPoly,
    RatMatrix,
    mat_det,
    mat_inverse,
    mat_one_inverse,
    mat_rank,
    solution_space_dim,
)
from graph_core import Multigraph, SplitInstance, complete_graph, components, parse_split, serialize_split
from partition_lattice import MAX_TERMINALS, enumerate_partitions, reference_order_permutation, stirling2
from split_engine import (
    OnSingularHyperbolaError,
    RegionKind,
    alternative_one_inverse,
    brylawski_eval,
    build_An,
    build_Ln,
    build_Tn,
    det_Tn_closed_form,
    hyperbola_one_term_splittings,
    reference_fixtures,
    solution_dim_formula,
    split_evaluate,
    y_one_coefficients_symbolic,
)
from tutte_engine import (
    DisconnectedGraphError,
    TooLargeError,
    aux_limit_lemma_check,
    contraction_negami_identity_check,
    contraction_tutte_identity_check,
    forest_counts,
    forest_identity_check,
    glue_negami_identity_check,
    glue_tutte_identity_check,
    kirchhoff_count,
    limit_lemma_check,
    negami_tutte_check,
    one_point_join_check,
    tutte_at,
)

from .presets import Point
from .run_config import parse_points

logger = logging.getLogger(__name__)

MATRIX_SUITES = ('fixtures', 'determinant', 'rank', 'one_inverse')
INSTANCE_SUITES = (
    'round_trip',
    'region_sweep',
    'brylawski',
    'negami',
    'spanning_trees',
    'non_uniqueness',
    'forests',
)
ALL_SUITES = MATRIX_SUITES + INSTANCE_SUITES

# Spanning-subgraph sweeps on a glued graph are skipped above this size
MAX_GLUED_PROFILE_VERTICES = 10


@dataclass
class SuiteResult:
    """Outcome of one suite: number of checks run and the failing ones"""

    name: str
    checks: int = 0
    skipped: int = 0
    failures: List[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(message)
            logger.error(f"[{self.name}] {message}")
        return ok

    def attempt(self, label: str, fn: Callable[[], bool]) -> None:
        """Run a boolean check; size and connectivity limits count as skips"""
        try:
            self.check(fn(), f"{label} does not hold")
        except (TooLargeError, DisconnectedGraphError) as e:
            self.skipped += 1
            logger.debug(f"[{self.name}] {label} skipped: {e}")
        except Exception as e:
            self.check(False, f"{label} raised {type(e).__name__}: {e}")

    def merge(self, other: 'SuiteResult') -> None:
        self.checks += other.checks
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        self.duration += other.duration

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'checks': self.checks,
            'skipped': self.skipped,
            'failures': list(self.failures),
            'duration': round(self.duration, 6),
        }


@dataclass(frozen=True)
class VerifyOptions:
    """Points, sample counts and limits shared by all suites"""

    suites: Tuple[str, ...] = ALL_SUITES
    generic_points: Tuple[Point, ...] = ()
    x_one_points: Tuple[Point, ...] = ()
    y_one_points: Tuple[Point, ...] = ()
    random_matrices: int = 100
    determinant_samples: int = 20
    seed: int = 2024
    max_n: int = MAX_TERMINALS
    max_oracle_edges: int = 20

    @classmethod
    def from_settings(
        cls,
        settings: Mapping[str, Any],
        suites: Sequence[str] = (),
        seed: int = 2024,
        max_n: int = MAX_TERMINALS,
        max_oracle_edges: int = 20
    ) -> 'VerifyOptions':
        verification = settings.get('verification', {})
        unknown = [s for s in suites if s not in ALL_SUITES]
        if unknown:
            raise ValueError(f"Unknown suite(s): {', '.join(unknown)}; available: {', '.join(ALL_SUITES)}")
        return cls(
            suites=tuple(suites) or ALL_SUITES,
            generic_points=parse_points(verification.get('generic_points', [])),
            x_one_points=parse_points(verification.get('x_one_points', [])),
            y_one_points=parse_points(verification.get('y_one_points', [])),
            random_matrices=int(verification.get('random_matrices', 100)),
            determinant_samples=int(verification.get('determinant_samples', 20)),
            seed=seed,
            max_n=max_n,
            max_oracle_edges=max_oracle_edges,
        )


# ----------------------------------------------------------------------
# Matrix suites


def fixtures_suite(options: VerifyOptions) -> SuiteResult:
    """Computed lattice matrices against the published ones"""
    result = SuiteResult('fixtures')
    perm = reference_order_permutation(4)

    A_4 = build_An(4)
    result.check(A_4.conjugate(perm) == reference_fixtures.A_4(), "A_4 differs from the reference matrix")
    result.check(
        mat_inverse(A_4).conjugate(perm) == reference_fixtures.B_prime_4(),
        "A_4^-1 differs from the reference B'_4"
    )

    L_41 = build_Ln(4, 1)
    result.check(L_41.conjugate(perm) == reference_fixtures.L_4_at_1(), "L_4(1) differs from the reference matrix")
    printed_L, printed_D = reference_fixtures.L_4_at_1(), reference_fixtures.D_4()
    result.check(printed_L @ printed_D @ printed_L == printed_L, "reference D_4 does not satisfy L D L = L")

    result.check(build_Ln(2) == reference_fixtures.L_2(), "L_2(x) differs from the reference matrix")
    result.check(build_Ln(3) == reference_fixtures.L_3(), "L_3(x) differs from the reference matrix")
    result.check(y_one_coefficients_symbolic(2) == reference_fixtures.D_2(), "L_2(x)^-1 differs from D_2(x)")
    result.check(y_one_coefficients_symbolic(3) == reference_fixtures.D_3(), "L_3(x)^-1 differs from D_3(x)")
    return result


def _random_rational(rng) -> Fraction:
    return Fraction(rng.randint(-40, 40), rng.randint(1, 12))


def determinant_suite(options: VerifyOptions) -> SuiteResult:
    """det T_n(t) against the product over partitions of t(t-1)...(t-|A|+1)"""
    result = SuiteResult('determinant')
    rng = nx.utils.create_py_random_state(options.seed)
    for n in range(1, min(5, options.max_n) + 1):
        samples = [_random_rational(rng) for _ in range(options.determinant_samples)]
        for t in samples + list(range(n)):
            computed = mat_det(build_Tn(n, t))
            expected = det_Tn_closed_form(n, t)
            result.check(computed == expected, f"det T_{n}({t}) = {computed}, closed form {expected}")
    return result


def rank_suite(options: VerifyOptions) -> SuiteResult:
    """Rank of T_n(q) as a Stirling sum and the solution-space dimension"""
    result = SuiteResult('rank')
    for n in range(2, min(5, options.max_n) + 1):
        for q in range(n):
            T_n = build_Tn(n, q)
            expected = sum(stirling2(n, i) for i in range(q + 1))
            rank = mat_rank(T_n)
            result.check(rank == expected, f"rank T_{n}({q}) = {rank}, expected {expected}")
            result.check(
                solution_space_dim(T_n) == solution_dim_formula(n, q),
                f"solution space of T_{n}({q}) has dimension {solution_space_dim(T_n)}, "
                f"formula {solution_dim_formula(n, q)}"
            )
    return result


def _random_symmetric(rng) -> RatMatrix:
    """Sum of r signed rank-one terms v v^T; rank at most r"""
    m = rng.randint(1, 8)
    r = rng.randint(0, m)
    vectors = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)] for _ in range(r)]
    signs = [rng.choice((1, -1, 2)) for _ in range(r)]
    return RatMatrix.from_function(
        m, lambda i, j: sum((s * v[i] * v[j] for s, v in zip(signs, vectors)), Fraction(0))
    )


def one_inverse_suite(options: VerifyOptions) -> SuiteResult:
    """M B M = M for the deterministic {1}-inverse on singular and random matrices"""
    result = SuiteResult('one_inverse')
    matrices: List[Tuple[str, RatMatrix]] = []
    for n in range(1, min(5, options.max_n) + 1):
        matrices += [(f"T_{n}({q})", build_Tn(n, q)) for q in range(n)]
    for n in (4, 5):
        if n <= options.max_n:
            matrices.append((f"L_{n}(1)", build_Ln(n, 1)))

    rng = nx.utils.create_py_random_state(options.seed + 1)
    matrices += [(f"random matrix {i}", _random_symmetric(rng)) for i in range(options.random_matrices)]

    for label, M in matrices:
        B = mat_one_inverse(M)
        result.check(M @ B @ M == M, f"{label}: M B M != M")
        result.check(
            mat_rank(M) == mat_rank(M.transpose()),
            f"{label}: rank differs from the rank of the transpose"
        )
    return result


MATRIX_SUITE_FUNCTIONS: Dict[str, Callable[[VerifyOptions], SuiteResult]] = {
    'fixtures': fixtures_suite,
    'determinant': determinant_suite,
    'rank': rank_suite,
    'one_inverse': one_inverse_suite,
}


# ----------------------------------------------------------------------
# Instance suites


def hyperbola_points(n: int) -> List[Point]:
    """Two points on each singular hyperbola (x-1)(y-1) = q, q = 1..n-1"""
    points = []
    for q in range(1, n):
        points.append((Fraction(2), Fraction(1 + q)))
        points.append((Fraction(-1), 1 - Fraction(q, 2)))
    return points


def _alternative_solver(M: RatMatrix) -> RatMatrix:
    return alternative_one_inverse(M)


def _round_trip(index: int, split: SplitInstance, options: VerifyOptions, result: SuiteResult) -> None:
    result.check(parse_split(serialize_split(split)) == split, f"instance {index}: split does not round-trip")


def _region_sweep(index: int, split: SplitInstance, options: VerifyOptions, result: SuiteResult) -> None:
    glued = split.glued()
    connected = components(split.K) == 1 and components(split.H) == 1
    line_points = list(options.x_one_points) + list(options.y_one_points) + [(Fraction(1), Fraction(1))]
    singular = hyperbola_points(split.n)

    for x, y in list(options.generic_points) + singular + line_points:
        if (x == 1 or y == 1) and not connected:
            result.skipped += 1
            continue
        try:
            evaluated = split_evaluate(split, x, y, max_n=options.max_n)
        except Exception as e:
            result.check(False, f"instance {index} at ({x}, {y}): {type(e).__name__}: {e}")
            continue
        direct = tutte_at(glued, x, y)
        result.check(
            evaluated.value == direct,
            f"instance {index} at ({x}, {y}), {evaluated.region.label}: split {evaluated.value} != direct {direct}"
        )
        if (x, y) in singular:
            result.check(
                evaluated.region.kind is RegionKind.HYPERBOLA_SINGULAR,
                f"instance {index} at ({x}, {y}) classified {evaluated.region.label}"
            )


def _brylawski(index: int, split: SplitInstance, options: VerifyOptions, result: SuiteResult) -> None:
    if split.n != 2 or components(split.K) != 1 or components(split.H) != 1:
        return
    glued = split.glued()
    for x, y in options.generic_points:
        if (x - 1) * (y - 1) == 1:
            continue
        four_term = brylawski_eval(split, x, y)
        evaluated = split_evaluate(split, x, y, max_n=options.max_n).value
        result.check(four_term == evaluated, f"instance {index} at ({x}, {y}): 2-sum {four_term} != split {evaluated}")

    for x, y in hyperbola_points(2):
        try:
            brylawski_eval(split, x, y)
            result.check(False, f"instance {index} at ({x}, {y}): 2-sum formula accepted a point on t = 1")
        except OnSingularHyperbolaError:
            result.checks += 1
        direct = tutte_at(glued, x, y)
        evaluated = split_evaluate(split, x, y, max_n=options.max_n).value
        result.check(evaluated == direct, f"instance {index} at ({x}, {y}): split {evaluated} != direct {direct}")
        for name, value in hyperbola_one_term_splittings(split, x, y).items():
            result.check(value == direct, f"instance {index} at ({x}, {y}): {name} splitting {value} != {direct}")


def _one_point_parts(split: SplitInstance) -> Tuple[Multigraph, Multigraph]:
    """K and a copy of H that share only the first terminal"""
    root = split.terminals[0]
    rename = {v: f"{v}'" for v in split.H.vertices if v != root}
    H = Multigraph(
        tuple(rename.get(v, v) for v in split.H.vertices),
        tuple((rename.get(u, u), rename.get(v, v)) for u, v in split.H.edges),
        (root,)
    )
    return split.K.with_terminals((root,)), H


def _negami(index: int, split: SplitInstance, options: VerifyOptions, result: SuiteResult) -> None:
    glued = split.glued()
    cap = options.max_oracle_edges
    partitions = enumerate_partitions(split.terminals, max_n=options.max_n)
    for name, G in (('K', split.K), ('H', split.H)):
        result.attempt(f"instance {index}: Negami-Tutte relation on {name}", lambda G=G: negami_tutte_check(G))
        result.attempt(f"instance {index}: forest limit on {name}", lambda G=G: limit_lemma_check(G, max_edges=cap))
        result.attempt(
            f"instance {index}: contraction Negami identity on {name}",
            lambda G=G: contraction_negami_identity_check(G, max_edges=cap)
        )
        result.attempt(
            f"instance {index}: contraction Tutte identity at y = 1 on {name}",
            lambda G=G: contraction_tutte_identity_check(G, max_edges=cap)
        )
        for A in partitions:
            result.attempt(
                f"instance {index}: auxiliary limit at {A} on {name}",
                lambda G=G, A=A: aux_limit_lemma_check(G, A, max_edges=cap)
            )

    if glued.num_edges <= cap:
        result.attempt(f"instance {index}: Negami-Tutte relation on the glued graph", lambda: negami_tutte_check(glued))
        result.attempt(
            f"instance {index}: glued Negami identity",
            lambda: glue_negami_identity_check(split, max_edges=cap)
        )
    else:
        result.skipped += 2
    result.attempt(
        f"instance {index}: glued Tutte identity at y = 1",
        lambda: glue_tutte_identity_check(split, max_edges=cap)
    )
    result.attempt(
        f"instance {index}: one-point join of K and H",
        lambda: one_point_join_check(*_one_point_parts(split))
    )


def _spanning_trees(index: int, split: SplitInstance, options: VerifyOptions, result: SuiteResult) -> None:
    if components(split.K) != 1 or components(split.H) != 1:
        result.skipped += 1
        return
    trees = kirchhoff_count(split.glued())
    evaluated = split_evaluate(split, 1, 1, max_n=options.max_n).value
    result.check(evaluated == trees, f"instance {index}: split at (1, 1) gives {evaluated}, matrix-tree {trees}")


def _non_uniqueness(index: int, split: SplitInstance, options: VerifyOptions, result: SuiteResult) -> None:
    if split.n < 4 or components(split.K) != 1 or components(split.H) != 1:
        return
    for x in (Fraction(1), Fraction(3)):
        first = split_evaluate(split, x, 1, max_n=options.max_n)
        second = split_evaluate(split, x, 1, solver=_alternative_solver, max_n=options.max_n)
        result.check(
            first.coefficients.entries != second.coefficients.entries,
            f"instance {index} at ({x}, 1): the two solutions coincide"
        )
        result.check(
            first.value == second.value,
            f"instance {index} at ({x}, 1): solutions disagree ({first.value} != {second.value})"
        )


def _forests(index: int, split: SplitInstance, options: VerifyOptions, result: SuiteResult) -> None:
    cap = options.max_oracle_edges
    graphs = [('K', split.K), ('H', split.H)]
    glued = split.glued()
    if glued.num_vertices <= MAX_GLUED_PROFILE_VERTICES:
        graphs.append(('glued graph', glued))
    else:
        result.skipped += 1
    for name, G in graphs:
        result.attempt(
            f"instance {index}: forest generating identity on {name}",
            lambda G=G: forest_identity_check(G, max_edges=cap)
        )


INSTANCE_CHECKS: Dict[str, Callable[[int, SplitInstance, VerifyOptions, SuiteResult], None]] = {
    'round_trip': _round_trip,
    'region_sweep': _region_sweep,
    'brylawski': _brylawski,
    'negami': _negami,
    'spanning_trees': _spanning_trees,
    'non_uniqueness': _non_uniqueness,
    'forests': _forests,
}


def check_instance(payload: Tuple[int, SplitInstance, VerifyOptions]) -> Dict[str, SuiteResult]:
    """
    Run every selected instance suite on one split

    Module-level and driven by a single tuple so a process pool can map it.
    """
    index, split, options = payload
    results = {}
    for name in options.suites:
        if name not in INSTANCE_CHECKS:
            continue
        result = SuiteResult(name)
        start = time.perf_counter()
        try:
            INSTANCE_CHECKS[name](index, split, options, result)
        except Exception as e:
            result.check(False, f"instance {index}: {type(e).__name__}: {e}")
        result.duration = time.perf_counter() - start
        results[name] = result
    logger.debug(f"Instance {index} (n={split.n}) checked")
    return results


def _triangle_forests() -> SuiteResult:
    result = SuiteResult('forests')
    counts = forest_counts(complete_graph(3))
    result.check(counts.S == (3, 3, 1), f"triangle forest counts {counts.S}, expected (3, 3, 1)")
    generating = counts.generating_polynomial()
    expected = MultiPoly.variable('x') ** 3 - 1
    result.check(generating == expected, f"triangle forest polynomial {generating}, expected {expected}")
    return result


# ----------------------------------------------------------------------
# Driver


def run_verification(
    instances: Sequence[SplitInstance],
    options: VerifyOptions,
    workers: int = 1,
    source: str = 'corpus'
) -> Dict[str, Any]:
    """
    Run the selected suites

    Matrix suites run once; instance suites run on every instance,
    optionally in a process pool. Results are merged in instance order.

    Args:
        instances: Glued graphs to check
        options: Points, sample counts and limits
        workers: Process pool size; 1 runs in process
        source: Description of the instances for the report

    Returns:
        Verification report dictionary (kind 'verify')
    """
    start = time.perf_counter()
    logger.info(f"Running {len(options.suites)} suites on {len(instances)} instances ({source})")

    suites: Dict[str, SuiteResult] = {}
    for name in options.suites:
        if name in MATRIX_SUITE_FUNCTIONS:
            suite_start = time.perf_counter()
            try:
                suites[name] = MATRIX_SUITE_FUNCTIONS[name](options)
            except Exception as e:
                suites[name] = SuiteResult(name)
                suites[name].check(False, f"{type(e).__name__}: {e}")
            suites[name].duration = time.perf_counter() - suite_start
        else:
            suites[name] = _triangle_forests() if name == 'forests' else SuiteResult(name)

    payloads = [(i, split, options) for i, split in enumerate(instances)]
    if workers > 1 and len(payloads) > 1:
        with mp.Pool(processes=workers) as pool:
            per_instance = pool.map(check_instance, payloads)
    else:
        per_instance = [check_instance(p) for p in payloads]

    for results in per_instance:
        for name, result in results.items():
            suites[name].merge(result)

    ordered = [suites[name] for name in options.suites]
    for suite in ordered:
        level = logging.INFO if suite.passed else logging.ERROR
        logger.log(level, f"Suite {suite.name}: {'PASS' if suite.passed else 'FAIL'} ({suite.checks} checks)")

    return {
        'kind': 'verify',
        'source': source,
        'instances': len(instances),
        'passed': all(s.passed for s in ordered),
        'duration': round(time.perf_counter() - start, 6),
        'suites': [s.to_dict() for s in ordered],
    }
