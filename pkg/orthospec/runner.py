import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from .config import get_worker_count
from .exceptions import CrossValidationError, InvalidParameterError
from .identities import catalog, cross_validate, get_template, verify
from .types import CrossCheck, VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Job:
    """One identity id with its parameter overrides."""
    id: str
    params: Dict[str, Any] = field(default_factory=dict, hash=False)


class Runner:
    """
    Runs verifications or cross-validations over many identities.

    Every job instantiates its own Identity inside its worker, so no term
    generator is shared between threads. Results come back in job order
    whatever the completion order.

    Example
    -------
    >>> runner = make_runner(["eq-5.8a", ("eq-7.1", {"n": 3})], tolerance="1e-20")
    >>> reports = runner.verify_all()
    """

    def __init__(self, jobs: List[Job], precision: Optional[int] = None, tolerance: Optional[str] = None,
                 max_terms: Optional[int] = None, workers: Optional[int] = None):
        self.jobs = jobs
        self.precision = precision
        self.tolerance = tolerance
        self.max_terms = max_terms
        self.workers = workers or get_worker_count()
        self._validate_jobs()

    def _validate_jobs(self):
        if not self.jobs:
            raise InvalidParameterError("Runner needs at least one job")
        # unknown ids and parameter names fail before any work starts
        for job in self.jobs:
            get_template(job.id).instantiate(job.params)

    def _verify_single(self, job: Job) -> VerificationReport:
        identity = get_template(job.id).instantiate(job.params)
        return verify(identity, precision=self.precision, tolerance=self.tolerance, max_terms=self.max_terms)

    def _cross_validate_single(self, job: Job, prefix: int) -> Optional[CrossCheck]:
        identity = get_template(job.id).instantiate(job.params)
        if identity.link is None:
            logger.debug(f"{job.id}: no geometric model, skipped")
            return None
        params = identity.describe_parameters()
        try:
            cross_validate(identity, prefix=prefix)
        except CrossValidationError as e:
            return CrossCheck(id=identity.id, params=params, model=identity.link.model, prefix=prefix,
                              matched=False, first_difference=e.index, message=str(e))
        return CrossCheck(id=identity.id, params=params, model=identity.link.model, prefix=prefix, matched=True)

    def verify_all(self) -> List[VerificationReport]:
        logger.info(f"verifying {len(self.jobs)} identities on {self.workers} workers")
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(self._verify_single, self.jobs))

    def cross_validate_all(self, prefix: int = 20) -> List[CrossCheck]:
        """Cross-checks for the jobs that have a geometric model."""
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            results = list(executor.map(lambda job: self._cross_validate_single(job, prefix), self.jobs))
        return [r for r in results if r is not None]

    def __repr__(self) -> str:
        return f"Runner(jobs={[job.id for job in self.jobs]}, workers={self.workers})"


def make_runner(jobs: Optional[Iterable[Union[str, Tuple[str, Dict[str, Any]], Job]]] = None, **kwargs) -> Runner:
    """
    Build a Runner from ids, (id, params) tuples or Jobs; None means the whole catalog at defaults.
    """
    if jobs is None:
        normalized = [Job(template.id) for template in catalog()]
    else:
        normalized = []
        for job in jobs:
            if isinstance(job, Job):
                normalized.append(job)
            elif isinstance(job, str):
                normalized.append(Job(job))
            else:
                normalized.append(Job(job[0], dict(job[1])))
    return Runner(normalized, **kwargs)
