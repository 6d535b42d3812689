"""Federated, locally differentially private DNA motif mining."""

from dpflmd.core import DNA_ALPHABET, Alphabet, Dataset, MiningParams, SequenceRecord, contains_substring, support
from dpflmd.oracle import exact_mine
from dpflmd.server import run_mining

__all__ = [
    "DNA_ALPHABET",
    "Alphabet",
    "Dataset",
    "MiningParams",
    "SequenceRecord",
    "contains_substring",
    "exact_mine",
    "run_mining",
    "support",
]
