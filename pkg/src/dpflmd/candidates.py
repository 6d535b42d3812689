"""Apriori candidate generation and merged-sequence (prefix + alphabet) compression."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from dpflmd.core import Alphabet


@dataclass(frozen=True)
class MergedSequence:
    text: str
    candidate_length: int

    @property
    def prefix(self) -> str:
        return self.text[: self.candidate_length - 1]

    @property
    def tail(self) -> str:
        return self.text[self.candidate_length - 1 :]


@dataclass(frozen=True)
class CandidateSet:
    length: int
    candidates: tuple[str, ...]
    merged: tuple[MergedSequence, ...]

    def __len__(self) -> int:
        return len(self.candidates)


def merge(prefix: str, alphabet: Alphabet) -> MergedSequence:
    return MergedSequence(prefix + alphabet.sa, len(prefix) + 1)


def split_merged(m: MergedSequence, alphabet: Alphabet | None = None) -> list[str]:
    """Expand a merged sequence back into its sibling candidates.

    Without an alphabet the tail after the prefix is taken as the symbol list.
    """
    l = m.candidate_length
    if l < 1 or len(m.text) < l + 1:
        raise ValueError(f"merged sequence {m.text!r} too short for candidate length {l}")
    tail = m.tail
    if alphabet is not None and tail != alphabet.sa:
        raise ValueError(f"merged sequence {m.text!r} does not end with alphabet {alphabet.sa!r}")
    if len(set(tail)) != len(tail):
        raise ValueError(f"merged sequence {m.text!r} has a repeated symbol in its tail")
    prefix = m.prefix
    return [prefix + c for c in tail]


def generate_candidates(F_prev, l_min: int, l: int, alphabet: Alphabet) -> CandidateSet:
    """Build length-``l`` candidates by appending each symbol to a frequent prefix.

    On the seed round (``l == l_min``) ``F_prev`` is ignored and replaced by
    every string of length ``l_min - 1``. Prefixes are iterated in sorted order
    so candidate positions line up between server and clients.
    """
    if l < l_min:
        raise ValueError(f"l={l} is below l_min={l_min}")
    if l == l_min:
        prefixes = ["".join(t) for t in product(alphabet.symbols, repeat=l_min - 1)]
    else:
        prefixes = sorted(set(F_prev))
        for p in prefixes:
            if len(p) != l - 1:
                raise ValueError(f"prefix {p!r} does not have length {l - 1}")
    merged = tuple(merge(p, alphabet) for p in prefixes)
    candidates = tuple(p + c for p in prefixes for c in alphabet.symbols)
    return CandidateSet(l, candidates, merged)
