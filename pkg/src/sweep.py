from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

from joblib import Parallel, delayed

from .matroid import Matroid
from .suites import SUITE_ORDER, run_lemma_suite
from .utils import SweepSettings
from .verifier import VerdictReport, check_main_theorem, check_vertical_theorem

CHECKS = ("main", "vertical", "lemmas")

Subject = Tuple[str, Matroid]


def run_unit(name: str, M: Matroid, check: str, which: str, settings: SweepSettings) -> List[VerdictReport]:
    """Run one check on one matroid, then release what it memoized."""
    try:
        if check == "main":
            return [check_main_theorem(M, name, settings=settings)]
        if check == "vertical":
            return [check_vertical_theorem(M, name)]
        if check == "lemmas":
            suites = SUITE_ORDER if which == "all" else (which,)
            return [run_lemma_suite(M, w, name, settings=settings) for w in suites]
        raise ValueError(f"unknown check {check!r}")
    finally:
        M.release()


def sweep(subjects: Sequence[Subject], check: str, *, which: str = "all", settings: SweepSettings) -> List[VerdictReport]:
    """Run one check over many matroids; reports keep the input order for any n_jobs."""
    chosen = []
    for name, M in subjects:
        if settings.max_elements is not None and M.size > settings.max_elements:
            logging.info("Skipping %s (%d elements > %d)", name, M.size, settings.max_elements)
            continue
        chosen.append((name, M))
    logging.info("Running %s on %d matroids with n_jobs=%d", check, len(chosen), settings.n_jobs)
    batches = Parallel(n_jobs=settings.n_jobs)(
        delayed(run_unit)(name, M, check, which, settings) for name, M in chosen
    )
    return [report for batch in batches for report in batch]
