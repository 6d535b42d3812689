"""Dataset loading (plain, FASTA, UCI csv), synthetic generation and results files."""

from __future__ import annotations

import csv
import io as _stdio
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from dpflmd.core import DNA_ALPHABET, Alphabet, Dataset, SequenceRecord

# IUPAC ambiguity codes plus gap characters
AMBIGUOUS = set("NRYKMSWBDHV-.")

FORMATS = ("plain", "fasta", "uci-csv")

CSV_HEADER = [
    "run_id", "dataset", "f", "delta", "l_min", "l_max", "N", "epsilon", "xi", "x", "seed",
    "precision", "recall", "f1", "runtime_seconds", "total_budget",
]


class DatasetError(ValueError):
    pass


def _raw_records(text: str, fmt: str):
    """Yield (line number, raw sequence) pairs."""
    if fmt == "plain":
        for n, line in enumerate(text.splitlines(), 1):
            if line.strip():
                yield n, line.strip()
    elif fmt == "fasta":
        start, chunks = None, None
        for n, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if line.startswith(">"):
                if chunks is not None:
                    yield start, "".join(chunks)
                start, chunks = n + 1, []
            elif line:
                if chunks is None:
                    raise DatasetError(f"line {n}: sequence data before the first '>' header")
                chunks.append(line)
        if chunks is not None:
            yield start, "".join(chunks)
    elif fmt == "uci-csv":
        for n, row in enumerate(csv.reader(_stdio.StringIO(text)), 1):
            if row and row[-1].strip():
                yield n, "".join(row[-1].split())
    else:
        raise DatasetError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_dataset(text: str, fmt: str = "plain", alphabet: Alphabet = DNA_ALPHABET, ambiguous: str = "reject") -> Dataset:
    """Parse dataset text.

    ``ambiguous`` controls IUPAC codes and gaps: ``reject`` raises, ``strip``
    deletes those characters, ``skip`` drops the whole record. Any other
    out-of-alphabet symbol always raises.
    """
    if ambiguous not in ("reject", "strip", "skip"):
        raise ValueError(f"unknown ambiguity policy {ambiguous!r}")
    seqs = []
    for lineno, raw in _raw_records(text, fmt):
        seq = raw.upper()
        if ambiguous != "reject" and any(ch in AMBIGUOUS and ch not in alphabet for ch in seq):
            if ambiguous == "skip":
                continue
            seq = "".join(ch for ch in seq if not (ch in AMBIGUOUS and ch not in alphabet))
        for ch in seq:
            if ch not in alphabet:
                raise DatasetError(f"line {lineno}: symbol {ch!r} is not in alphabet {alphabet.sa}")
        if seq:
            seqs.append(seq)
    if not seqs:
        raise DatasetError("no sequences found")
    return Dataset(tuple(SequenceRecord(i, s) for i, s in enumerate(seqs)), alphabet)


def load_dataset(path, fmt: str = "plain", alphabet: Alphabet = DNA_ALPHABET, ambiguous: str = "reject") -> Dataset:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DatasetError(f"{path}: {exc.strerror}") from exc
    if not text.strip():
        raise DatasetError(f"{path}: empty file")
    try:
        return parse_dataset(text, fmt, alphabet, ambiguous)
    except DatasetError as exc:
        raise DatasetError(f"{path}: {exc}") from exc


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_dataset(dataset: Dataset, path) -> None:
    try:
        _atomic_write(Path(path), "".join(r.data + "\n" for r in dataset.records))
    except OSError as exc:
        raise OSError(f"cannot write dataset to {path}: {exc}") from exc


@dataclass(frozen=True)
class SyntheticSpec:
    num_records: int
    record_length: int
    alphabet: Alphabet = DNA_ALPHABET
    planted_motif: str | tuple[str, ...] | None = None
    plant_rate: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.num_records < 1 or self.record_length < 1:
            raise ValueError("num_records and record_length must be positive")
        if not 0 <= self.plant_rate <= 1:
            raise ValueError(f"plant_rate must lie in [0, 1], got {self.plant_rate}")
        for m in self.motifs:
            if len(m) > self.record_length:
                raise ValueError(f"motif {m!r} is longer than record_length {self.record_length}")
            self.alphabet.validate(m)

    @property
    def motifs(self) -> tuple[str, ...]:
        if self.planted_motif is None:
            return ()
        if isinstance(self.planted_motif, str):
            return (self.planted_motif,)
        return tuple(self.planted_motif)


def generate_synthetic(spec: SyntheticSpec) -> Dataset:
    """Uniform random records; each motif overwrites a uniform random slot in
    ``ceil(plant_rate * n)`` randomly chosen records. Several motifs planted in
    the same record are kept from overlapping when the record has room."""
    rng = np.random.default_rng(spec.seed)
    sym = np.array(spec.alphabet.symbols)
    n, L = spec.num_records, spec.record_length
    rows = [list(r) for r in sym[rng.integers(0, len(sym), size=(n, L))]]
    taken: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    k = math.ceil(spec.plant_rate * n)
    for motif in spec.motifs:
        m = len(motif)
        for i in rng.choice(n, size=k, replace=False):
            pos = int(rng.integers(0, L - m + 1))
            for _ in range(64):
                if all(pos + m <= a or b <= pos for a, b in taken[i]):
                    break
                pos = int(rng.integers(0, L - m + 1))
            rows[i][pos : pos + m] = motif
            taken[i].append((pos, pos + m))
    return Dataset(tuple(SequenceRecord(i, "".join(r)) for i, r in enumerate(rows)), spec.alphabet)


@dataclass
class RunRecord:
    run_id: int
    dataset: str
    f: float
    delta: int
    l_min: int
    l_max: int
    N: int
    epsilon: float
    xi: float
    x: int
    seed: int
    precision: float
    recall: float
    f1: float
    runtime_seconds: float
    total_budget: float
    ncfm: list = field(default_factory=list)  # list[ScoredMotif]


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def results_csv(results) -> str:
    buf = _stdio.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in results:
        w.writerow([_fmt(getattr(r, k)) for k in CSV_HEADER])
    return buf.getvalue()


def ncfm_to_json(ncfm) -> list:
    return [m.to_dict() if hasattr(m, "to_dict") else dict(m) for m in ncfm]


def write_results(results, path) -> tuple[Path, Path]:
    """Write the run CSV and a JSON sidecar (same stem) holding each run's NCFM."""
    path = Path(path)
    sidecar = path.with_suffix(".json")
    results = list(results)
    doc = {"runs": [{"run_id": r.run_id, "seed": r.seed, "ncfm": ncfm_to_json(r.ncfm)} for r in results]}
    try:
        _atomic_write(path, results_csv(results))
        _atomic_write(sidecar, json.dumps(doc, indent=1) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write results to {path}: {exc}") from exc
    return path, sidecar


def read_ncfm(path) -> list[dict]:
    """Load an NCFM from a ``mine``/``oracle`` JSON file or a single-run sidecar."""
    doc = json.loads(Path(path).read_text())
    if isinstance(doc, dict):
        if "ncfm" in doc:
            return doc["ncfm"]
        if "runs" in doc and len(doc["runs"]) == 1:
            return doc["runs"][0]["ncfm"]
        raise ValueError(f"{path}: expected a single NCFM, found {len(doc.get('runs', []))} runs")
    return doc

