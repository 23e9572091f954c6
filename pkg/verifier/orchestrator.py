"""
Verification orchestrator.

Runs catalog checks over (theorem, instance) pairs:
1. Plan: resolve theorem ids and the grid for each instance
2. Cache: reuse stored reports for identical (table, theorem, parameters)
3. Act: run the checks, sequentially or across worker processes
4. Synthesize: merge reports in (catalog order, instance id) order
"""

import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, replace
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from tools.core_algebra import GammaSemigroup
from tools.errors import GuardExceededError
from tools.fuzzy_engine import GradeGrid
from tools.instance_factory import CorpusInstance
from util.result_cache import SimpleResultCache, get_cache
from util.settings import VerifierSettings, get_settings
from verifier.catalog import CATALOG_ORDER, get_theorem, parse_theorem_ids
from verifier.context import VerificationContext
from verifier.models import CheckResult, CheckStatus, TheoremReport
from verifier.report_synthesizer import CorpusReport

logger = logging.getLogger(__name__)

CorpusLike = Iterable[Union[CorpusInstance, Tuple[str, GammaSemigroup], GammaSemigroup]]


def run_check(
    theorem_id: str,
    structure: GammaSemigroup,
    grid: Optional[GradeGrid] = None,
    instance_id: str = "adhoc",
    settings: Optional[VerifierSettings] = None,
    context: Optional[VerificationContext] = None,
) -> TheoremReport:
    """Run one catalog check on one instance; guard overruns become status skipped."""
    entry = get_theorem(theorem_id)
    settings = settings or get_settings()
    if context is None:
        context = VerificationContext(structure, grid or GradeGrid.uniform(settings.grid_levels), instance_id, settings)

    start_time = time.time()
    try:
        result = entry.check(context)
    except GuardExceededError as e:
        logger.info(f"[orchestrator] ⚠️ {entry.id} on {context.instance_id} skipped: {e}")
        result = CheckResult(CheckStatus.SKIPPED, notes=(str(e),))
    execution_time = time.time() - start_time

    report = TheoremReport(
        theorem=entry.id,
        instance=context.instance_id,
        status=result.status,
        family_size=len(context.family),
        grid=context.grid.describe(),
        checked=result.checked,
        witness=result.witness,
        truncated=context.family.truncated,
        notes=list(result.notes),
    )
    if report.status is CheckStatus.COUNTEREXAMPLE:
        logger.error(f"[orchestrator] ❌ {entry.id} on {context.instance_id}: {report.witness}")
    else:
        logger.debug(f"[orchestrator] {entry.id} on {context.instance_id}: {report.status.value} ({execution_time:.3f}s)")
    return report


def _cache_parameters(grid: GradeGrid, settings: VerifierSettings) -> str:
    return "|".join(
        str(v)
        for v in (
            grid.describe(),
            settings.family_budget,
            settings.seed,
            settings.subset_guard,
            settings.morphism_check_guard,
            settings.lemma_subset_guard,
            settings.power_exponents,
        )
    )


def verify_instance(
    instance_id: str,
    structure: GammaSemigroup,
    grid: GradeGrid,
    theorem_ids: Sequence[str],
    settings: VerifierSettings,
) -> List[TheoremReport]:
    """All requested theorems on one instance, sharing one VerificationContext."""
    cache: Optional[SimpleResultCache] = (
        get_cache(settings.cache_dir, settings.cache_ttl_seconds) if settings.cache_dir else None
    )
    parameters = _cache_parameters(grid, settings)
    context = VerificationContext(structure, grid, instance_id, settings)
    reports = []
    for theorem_id in theorem_ids:
        key = None
        if cache is not None:
            key = cache.make_key(structure.table.tobytes(), structure.table.shape, theorem_id, parameters)
            cached = cache.get(key)
            if cached is not None:
                reports.append(replace(TheoremReport.from_dict(cached), instance=instance_id))
                continue
        report = run_check(theorem_id, structure, grid, instance_id, settings, context)
        if cache is not None:
            cache.set(key, theorem_id, report.to_dict())
        reports.append(report)
    return reports


def _verify_instance_job(
    instance_id: str, table: list, levels: List[str], theorem_ids: List[str], settings_values: dict
) -> List[dict]:
    """Process-pool entry point; arguments and results are plain picklable data."""
    settings = VerifierSettings(**settings_values)
    grid = GradeGrid(tuple(levels))
    reports = verify_instance(instance_id, GammaSemigroup(table), grid, theorem_ids, settings)
    return [report.to_dict() for report in reports]


async def _run_parallel(jobs: List[tuple], workers: int) -> List[TheoremReport]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, _verify_instance_job, *job) for job in jobs]
        batches = await asyncio.gather(*futures)
    return [TheoremReport.from_dict(document) for batch in batches for document in batch]


def _normalize(corpus: CorpusLike) -> List[CorpusInstance]:
    instances = []
    for index, item in enumerate(corpus):
        if isinstance(item, GammaSemigroup):
            instances.append(CorpusInstance(f"instance-{index:05d}", item))
        else:
            instances.append(CorpusInstance(*item))
    return instances


def verify_corpus(
    corpus: CorpusLike,
    grid: Optional[GradeGrid] = None,
    theorem_ids: Optional[Sequence[str]] = None,
    settings: Optional[VerifierSettings] = None,
    complete: bool = False,
) -> CorpusReport:
    """
    Run every requested theorem on every instance.

    Args:
        corpus: instances (CorpusInstance, (id, structure) pairs or bare structures)
        grid: grade grid; defaults to settings.grid_levels levels
        theorem_ids: subset of the catalog; None runs all
        settings: guards, budgets, workers and cache; defaults to the global settings
        complete: use n+1 grid levels per instance instead of ``grid``

    Returns:
        CorpusReport with results ordered by (catalog order, instance id)
    """
    settings = settings or get_settings()
    instances = _normalize(corpus)
    theorem_ids = parse_theorem_ids(",".join(theorem_ids)) if theorem_ids else list(CATALOG_ORDER)
    base_grid = grid or GradeGrid.uniform(settings.grid_levels)

    def grid_for(structure: GammaSemigroup) -> GradeGrid:
        return GradeGrid.complete_for(structure.n) if complete else base_grid

    logger.info(
        f"[orchestrator] 🔍 Verifying {len(theorem_ids)} theorems over {len(instances)} instances "
        f"(workers={settings.workers}, complete={complete})"
    )
    start_time = time.time()

    if settings.workers > 1 and len(instances) > 1:
        settings_values = asdict(settings)
        jobs = [
            (
                item.id,
                item.structure.table.tolist(),
                [str(level) for level in grid_for(item.structure)],
                list(theorem_ids),
                settings_values,
            )
            for item in instances
        ]
        results = asyncio.run(_run_parallel(jobs, settings.workers))
    else:
        results = []
        for item in instances:
            results.extend(verify_instance(item.id, item.structure, grid_for(item.structure), theorem_ids, settings))

    position = {tid: index for index, tid in enumerate(CATALOG_ORDER)}
    results.sort(key=lambda report: (position[report.theorem], report.instance))

    report = CorpusReport.build(instances, results, version=settings.report_version)
    status = "✅" if report.ok else "❌"
    logger.info(
        f"[orchestrator] {status} {len(results)} checks in {time.time() - start_time:.2f}s, "
        f"{len(report.counterexamples)} counterexamples"
    )
    return report
