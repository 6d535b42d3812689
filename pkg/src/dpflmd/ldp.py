"""Binary randomized response: noise factor, bit flipping, debiasing, budget ledger."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

# spawn-key tags separating the server's sampling stream from client streams
SERVER_STREAM = 0
CLIENT_STREAM = 1


@dataclass(frozen=True)
class NoiseFactor:
    eta: float

    def __post_init__(self):
        if not 0 <= self.eta < 0.5:
            raise ValueError(f"noise factor must lie in [0, 0.5), got {self.eta}")

    def __float__(self) -> float:
        return self.eta


def noise_factor(epsilon: float) -> NoiseFactor:
    """Flip probability giving epsilon-LDP for one binary response."""
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    # 1/(1+e^eps) written via expit-style form to avoid overflow for large eps
    return NoiseFactor(math.exp(-epsilon) / (1.0 + math.exp(-epsilon)))


def _eta(eta) -> float:
    return eta.eta if isinstance(eta, NoiseFactor) else float(eta)


def randomize_bit(v: int, eta, rng: np.random.Generator) -> int:
    if v not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {v!r}")
    return 1 - v if rng.random() < _eta(eta) else v


def randomize_bits(bits, eta, rng: np.random.Generator) -> np.ndarray:
    """Vectorised ``randomize_bit``; consumes one draw per bit, in order."""
    bits = np.asarray(bits, dtype=np.int8)
    flips = rng.random(bits.shape[0]) < _eta(eta)
    return np.where(flips, 1 - bits, bits).astype(np.int8)


def debias_frequency(observed_mean: float, eta) -> float:
    """Invert E[observed] = f(1 - eta) + (1 - f) eta. Not clipped."""
    e = _eta(eta)
    return (observed_mean - e) / (1.0 - 2.0 * e)


def client_rng(seed: int, round_index: int, client_id: int) -> np.random.Generator:
    """Independent stream per (master seed, round, client)."""
    return np.random.default_rng(
        np.random.SeedSequence(seed, spawn_key=(round_index, CLIENT_STREAM, client_id))
    )


def server_rng(seed: int, round_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(round_index, SERVER_STREAM)))


@dataclass
class BudgetLedger:
    """Cumulative epsilon spent per client. Records only; enforces nothing."""

    per_client: dict = field(default_factory=lambda: defaultdict(float))

    def record_spend(self, client_id, response_count: int, epsilon: float) -> "BudgetLedger":
        if response_count < 0:
            raise ValueError("response_count must be nonnegative")
        if response_count:
            self.per_client[client_id] += response_count * epsilon
        return self

    @property
    def total(self) -> float:
        return math.fsum(self.per_client.values())

    @property
    def max_spend(self) -> float:
        return max(self.per_client.values(), default=0.0)


def record_spend(ledger: BudgetLedger, client_id, response_count: int, epsilon: float) -> BudgetLedger:
    return ledger.record_spend(client_id, response_count, epsilon)
