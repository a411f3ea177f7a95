"""
Parallel exact sweep of X_n(a1,a2,a3) over a grid, with resumable checkpoints.

Cells are (a1, a2, a3, n). Work is distributed per triple; results come back
in grid order so output is identical for any job count.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import pandas as pd

from ..utils.errors import DomainError
from .decomposition import X_value

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class SweepRecord:
    a: Triple
    n: int
    x: Fraction

    def to_json(self) -> str:
        return json.dumps({"a": list(self.a), "n": self.n, "x": str(self.x)})


@dataclass
class SweepSummary:
    max_a1: int
    max_a23: int
    cells: int = 0
    triples: int = 0
    violations: List[SweepRecord] = field(default_factory=list)
    resumed_from: int = 0
    table: Optional[pd.DataFrame] = None

    @property
    def success(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            "max_a1": self.max_a1,
            "max_a23": self.max_a23,
            "cells": self.cells,
            "triples": self.triples,
            "violations": [json.loads(r.to_json()) for r in self.violations],
            "resumed_from": self.resumed_from,
            "success": self.success,
        }


def iter_triples(max_a1: int, max_a23: int) -> Iterator[Triple]:
    """Grid 2 <= a1 <= max_a1, 1 <= a2, a3 <= max_a23 in lexicographic order"""
    for a1 in range(2, max_a1 + 1):
        for a2 in range(1, max_a23 + 1):
            for a3 in range(1, max_a23 + 1):
                yield (a1, a2, a3)


def evaluate_triple(triple: Triple) -> List[SweepRecord]:
    a1, a2, a3 = triple
    return [SweepRecord(triple, n, X_value(n, a1, a2, a3)) for n in range(1, a1)]


class Checkpoint:
    """JSON state file recording how many triples of a grid are done"""

    def __init__(self, path: Path, max_a1: int, max_a23: int):
        self.path = Path(path)
        self.key = {"max_a1": max_a1, "max_a23": max_a23}

    def load(self) -> Tuple[int, int, List[SweepRecord]]:
        """Return (completed triples, completed cells, violations) or zeros"""
        if not self.path.exists():
            return 0, 0, []
        with open(self.path) as f:
            state = json.load(f)
        if state.get("grid") != self.key:
            logger.warning(f"Checkpoint {self.path.name} belongs to another grid, ignoring it")
            return 0, 0, []
        violations = [
            SweepRecord(tuple(v["a"]), v["n"], Fraction(v["x"])) for v in state["violations"]
        ]
        return state["triples"], state["cells"], violations

    def save(self, triples: int, cells: int, violations: List[SweepRecord]) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        state = {
            "grid": self.key,
            "triples": triples,
            "cells": cells,
            "violations": [json.loads(r.to_json()) for r in violations],
            "saved_at": datetime.now().isoformat(),
        }
        tmp = self.path.with_suffix(".tmp")
        with open(tmp, "w") as f:
            json.dump(state, f, indent=2)
        tmp.replace(self.path)

    def clear(self) -> None:
        if self.path.exists():
            self.path.unlink()


def run_sweep(max_a1: int = 12, max_a23: int = 12, jobs: int = 1,
              checkpoint_path: Optional[Path] = None, checkpoint_every: int = 10_000,
              inject_fault: bool = False,
              on_record: Optional[Callable[[SweepRecord], None]] = None) -> SweepSummary:
    """
    Evaluate X_n on every cell of the grid

    Args:
        max_a1, max_a23: Grid bounds
        jobs: Worker processes (1 runs in-process)
        checkpoint_path: Resumable state file; completed triples are skipped
        checkpoint_every: Cells between checkpoint writes
        inject_fault: Add 1 to the first evaluated cell (harness self-test)
        on_record: Called for every record in grid order

    Returns:
        SweepSummary with violations and a per-a1 pandas table
    """
    if max_a1 < 1 or max_a23 < 1:
        raise DomainError(f"grid bounds must be >= 1, got ({max_a1},{max_a23})")

    triples = list(iter_triples(max_a1, max_a23))
    checkpoint = Checkpoint(checkpoint_path, max_a1, max_a23) if checkpoint_path else None
    done, cells, violations = checkpoint.load() if checkpoint else (0, 0, [])
    summary = SweepSummary(max_a1, max_a23, cells=cells, triples=done,
                           violations=list(violations), resumed_from=done)
    if done:
        logger.info(f"Resuming sweep after {done} of {len(triples)} triples")
    logger.info(f"Sweeping X_n over {len(triples) - done} triples with {jobs} job(s)")

    pending = triples[done:]
    per_a1: Dict[int, List[int]] = {}
    since_checkpoint = 0
    first = True

    def consume(records: List[SweepRecord]):
        nonlocal since_checkpoint, first
        for record in records:
            if inject_fault and first:
                record = SweepRecord(record.a, record.n, record.x + 1)
            first = False
            if record.x != 0:
                logger.error(f"X_{record.n}{record.a} = {record.x}")
                summary.violations.append(record)
            if on_record:
                on_record(record)
            counts = per_a1.setdefault(record.a[0], [0, 0])
            counts[0] += 1
            counts[1] += record.x != 0
        summary.cells += len(records)
        summary.triples += 1
        since_checkpoint += len(records)
        if checkpoint and since_checkpoint >= checkpoint_every:
            checkpoint.save(summary.triples, summary.cells, summary.violations)
            logger.info(f"Checkpoint written at {summary.cells} cells")
            since_checkpoint = 0

    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunksize = max(1, len(pending) // (jobs * 8))
            for records in pool.map(evaluate_triple, pending, chunksize=chunksize):
                consume(records)
    else:
        for triple in pending:
            consume(evaluate_triple(triple))

    if checkpoint:
        checkpoint.save(summary.triples, summary.cells, summary.violations)

    if per_a1:
        summary.table = pd.DataFrame(
            [(a1, cells, nonzero) for a1, (cells, nonzero) in sorted(per_a1.items())],
            columns=["a1", "cells", "nonzero"],
        )
    logger.info(
        f"Sweep finished: {summary.cells} cells, {len(summary.violations)} nonzero"
    )
    return summary
