"""Throughput comparison of the MixColumns architectures.

Timings are only reported after every backend has produced byte-identical
output on the same corpus.  Footprint is the exact number of lookup-table
bytes each backend holds.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import platform
import statistics
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from aesmix.cipher import Direction, decrypt_blocks, encrypt_blocks
from aesmix.errors import CorrectnessError, InputError
from aesmix.keyschedule import expand_key
from aesmix.mixcolumns import Arch, MixBackend, get_backend

CSV_COLUMNS = (
    "backend",
    "direction",
    "blocks",
    "ns_per_block_median",
    "blocks_per_sec_median",
    "ns_min",
    "ns_max",
    "table_bytes",
)


@dataclass(frozen=True)
class BenchConfig:
    backends: tuple = tuple(Arch)
    block_count: int = 10_000
    warmup_blocks: int = 256
    repetitions: int = 5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.block_count < 1:
            raise InputError("block_count must be >= 1")
        if self.repetitions < 1:
            raise InputError("repetitions must be >= 1")
        if self.warmup_blocks < 0:
            raise InputError("warmup_blocks must be >= 0")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must fit in 64 bits")


@dataclass
class BenchRow:
    backend: str
    direction: str
    blocks: int
    ns_per_block_median: float
    blocks_per_sec_median: float
    ns_min: float
    ns_max: float
    table_bytes: int


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    table_bytes: dict[str, int] = field(default_factory=dict)
    environment: str = ""
    checksums: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> BenchReport:
        return cls(
            rows=[BenchRow(**r) for r in d["rows"]],
            table_bytes=dict(d["table_bytes"]),
            environment=d["environment"],
            checksums=dict(d.get("checksums", {})),
        )


def environment_descriptor() -> str:
    parts = [
        platform.platform(),
        platform.machine(),
        platform.processor() or "unknown-cpu",
        f"python {platform.python_version()}",
        f"numpy {np.__version__}",
    ]
    try:
        with open("/proc/cpuinfo") as f:
            for line in f:
                if line.startswith("model name"):
                    parts.append(line.split(":", 1)[1].strip())
                    break
    except OSError:
        pass
    return "; ".join(parts)


def make_corpus(block_count: int, seed: int) -> tuple[bytes, bytes]:
    """Deterministic (key, data) pair for a seed."""
    rng = np.random.default_rng(seed)
    key = rng.bytes(16)
    return key, rng.bytes(16 * block_count)


def _resolve(b) -> MixBackend:
    return b if isinstance(b, MixBackend) else get_backend(b)


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def run_bench(cfg: BenchConfig) -> BenchReport:
    backends = [_resolve(b) for b in cfg.backends]
    key, corpus = make_corpus(cfg.block_count, cfg.seed)
    ks = expand_key(key)
    ops = {Direction.ENCRYPT: encrypt_blocks, Direction.DECRYPT: decrypt_blocks}

    # Correctness gate: no timing is taken until all backends agree.
    checksums = {}
    for direction, op in ops.items():
        digests = {b.name: _digest(op(corpus, ks, b)) for b in backends}
        if len(set(digests.values())) > 1:
            raise CorrectnessError(
                f"backends disagree on {direction.value}: "
                + ", ".join(f"{k}={v[:12]}" for k, v in digests.items())
            )
        if digests:
            checksums[direction.value] = next(iter(digests.values()))

    warm = corpus[: 16 * min(cfg.warmup_blocks, cfg.block_count)]
    report = BenchReport(
        table_bytes={b.name: b.table_bytes for b in backends},
        environment=environment_descriptor(),
        checksums=checksums,
    )
    for b in backends:
        for direction, op in ops.items():
            if warm:
                op(warm, ks, b)
            samples = []
            for _ in range(cfg.repetitions):
                t0 = time.perf_counter_ns()
                out = op(corpus, ks, b)
                samples.append(time.perf_counter_ns() - t0)
                if _digest(out) != checksums[direction.value]:
                    raise CorrectnessError(
                        f"{b.name} {direction.value} output changed between runs"
                    )
            per_block = [max(s, 1) / cfg.block_count for s in samples]
            median = statistics.median(per_block)
            report.rows.append(
                BenchRow(
                    backend=b.name,
                    direction=direction.value,
                    blocks=cfg.block_count,
                    ns_per_block_median=median,
                    blocks_per_sec_median=1e9 / median,
                    ns_min=min(per_block),
                    ns_max=max(per_block),
                    table_bytes=b.table_bytes,
                )
            )
    return report


def emit_report(report: BenchReport, fmt: str = "csv") -> bytes:
    fmt = fmt.lower()
    if fmt == "json":
        return (json.dumps(asdict(report), indent=2, sort_keys=True) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in report.rows:
            w.writerow(
                [
                    r.backend,
                    r.direction,
                    r.blocks,
                    f"{r.ns_per_block_median:.1f}",
                    f"{r.blocks_per_sec_median:.1f}",
                    f"{r.ns_min:.1f}",
                    f"{r.ns_max:.1f}",
                    r.table_bytes,
                ]
            )
        return buf.getvalue().encode()
    if fmt == "table":
        header = list(CSV_COLUMNS)
        body = [
            [
                r.backend,
                r.direction,
                str(r.blocks),
                f"{r.ns_per_block_median:,.1f}",
                f"{r.blocks_per_sec_median:,.0f}",
                f"{r.ns_min:,.1f}",
                f"{r.ns_max:,.1f}",
                str(r.table_bytes),
            ]
            for r in report.rows
        ]
        widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
        lines.append("  ".join("-" * w for w in widths))
        for row in body:
            lines.append(
                "  ".join(
                    v.ljust(w) if i < 2 else v.rjust(w)
                    for i, (v, w) in enumerate(zip(row, widths))
                )
            )
        if report.environment:
            lines.append("")
            lines.append(f"environment: {report.environment}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")
