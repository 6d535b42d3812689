"""Alphabet, sequence and parameter types plus exact-support primitives."""

from __future__ import annotations

from dataclasses import dataclass, field

DNA = "ACGT"


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(symbols) < 2:
            raise ValueError("alphabet needs at least two symbols")
        if any(len(s) != 1 for s in symbols):
            raise ValueError("alphabet symbols must be single characters")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"alphabet symbols are not distinct: {symbols!r}")

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        return cls(tuple(text))

    @property
    def sa(self) -> str:
        """All symbols concatenated in alphabet order."""
        return "".join(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, ch: object) -> bool:
        return ch in self.symbols

    def validate(self, text: str) -> None:
        for i, ch in enumerate(text):
            if ch not in self.symbols:
                raise ValueError(f"symbol {ch!r} at position {i} is not in alphabet {self.sa}")


DNA_ALPHABET = Alphabet.from_string(DNA)


@dataclass(frozen=True)
class SequenceRecord:
    client_id: int
    data: str


@dataclass(frozen=True)
class Dataset:
    records: tuple[SequenceRecord, ...]
    alphabet: Alphabet = DNA_ALPHABET
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        records = tuple(self.records)
        object.__setattr__(self, "records", records)
        if not records:
            raise ValueError("dataset must contain at least one record")
        by_id = {}
        for rec in records:
            if not rec.data:
                raise ValueError(f"record {rec.client_id} is empty")
            self.alphabet.validate(rec.data)
            if rec.client_id in by_id:
                raise ValueError(f"duplicate client_id {rec.client_id}")
            by_id[rec.client_id] = rec
        object.__setattr__(self, "_by_id", by_id)

    @classmethod
    def from_strings(cls, seqs, alphabet: Alphabet = DNA_ALPHABET) -> "Dataset":
        return cls(tuple(SequenceRecord(i, s) for i, s in enumerate(seqs)), alphabet)

    def __len__(self) -> int:
        return len(self.records)

    def __getitem__(self, client_id: int) -> SequenceRecord:
        return self._by_id[client_id]

    @property
    def client_ids(self) -> list[int]:
        return [r.client_id for r in self.records]

    @property
    def avelen(self) -> float:
        return sum(len(r.data) for r in self.records) / len(self.records)


@dataclass(frozen=True)
class MiningParams:
    """User-facing mining contract.

    ``containment`` selects how a client decides its true bit: ``"exact"``
    (contiguous substring) or ``"first-occurrence"`` (the literal prefix
    position heuristic). ``debias`` stores debiased rather than raw noisy
    frequencies in the profile.
    """

    f: float
    delta: int = 1
    l_min: int = 1
    l_max: int = 4
    top_n: int = 30
    epsilon: float = 3.0
    xi: float = 0.01
    x: int = 1
    seed: int = 0
    containment: str = "exact"
    debias: bool = False

    def __post_init__(self):
        if not 0 < self.f <= 1:
            raise ValueError(f"f must lie in (0, 1], got {self.f}")
        if int(self.delta) != self.delta or self.delta < 0:
            raise ValueError(f"delta must be a nonnegative integer, got {self.delta}")
        if not 1 <= self.l_min <= self.l_max:
            raise ValueError(f"need 1 <= l_min <= l_max, got [{self.l_min}, {self.l_max}]")
        if self.top_n < 1:
            raise ValueError(f"top_n must be >= 1, got {self.top_n}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if not 0 < self.xi <= 1:
            raise ValueError(f"xi must lie in (0, 1], got {self.xi}")
        if self.x < 1:
            raise ValueError(f"x must be >= 1, got {self.x}")
        if self.seed < 0:
            raise ValueError(f"seed must be unsigned, got {self.seed}")
        if self.containment not in ("exact", "first-occurrence"):
            raise ValueError(f"unknown containment mode {self.containment!r}")

    def check_dataset(self, dataset: Dataset) -> None:
        if self.x > len(dataset):
            raise ValueError(f"x={self.x} exceeds dataset size {len(dataset)}")


def contains_substring(seq: SequenceRecord | str, pattern: str) -> bool:
    if not pattern:
        raise ValueError("pattern must be non-empty")
    data = seq.data if isinstance(seq, SequenceRecord) else seq
    return pattern in data


def support(pattern: str, dataset: Dataset) -> float:
    """Fraction of records containing ``pattern`` at least once."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    if not len(dataset):
        raise ValueError("empty dataset")
    hits = sum(1 for rec in dataset.records if pattern in rec.data)
    return hits / len(dataset)
