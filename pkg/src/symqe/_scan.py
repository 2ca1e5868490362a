"""Ordered first-failure scan over independent checks, optionally in processes.

The parallel path evaluates contiguous chunks independently and merges them
in order, so the trace and the reported failure are identical to the serial
path.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional


def _scan_serial(check: Callable, f, items: Iterable, trace: bool, exhaustive: bool):
    kept = []
    failed = None
    for item in items:
        rec = check(f, item)
        if trace:
            kept.append(rec)
        if not rec.passed and failed is None:
            failed = rec
            if not exhaustive:
                break
    return kept, failed


def scan(
    check: Callable,
    f,
    items: Iterable,
    *,
    trace: bool = True,
    exhaustive: bool = False,
    workers: Optional[int] = None,
):
    """Returns ``(records, first_failed_record_or_None)``.

    ``records`` is empty unless ``trace``; it stops at the first failure
    unless ``exhaustive``.  ``check`` must be a module-level function when
    ``workers > 1``.
    """
    if not workers or workers <= 1:
        return _scan_serial(check, f, items, trace, exhaustive)
    items = list(items)
    if not items:
        return [], None
    nchunks = min(len(items), workers * 4)
    step = -(-len(items) // nchunks)
    chunks = [items[i : i + step] for i in range(0, len(items), step)]
    kept = []
    failed = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_scan_serial, check, f, chunk, trace, exhaustive) for chunk in chunks
        ]
        for fut in futures:
            recs, fail = fut.result()
            kept.extend(recs)
            if fail is not None and failed is None:
                failed = fail
                if not exhaustive:
                    for other in futures:
                        other.cancel()
                    break
    return kept, failed
