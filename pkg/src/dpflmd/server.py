"""Server orchestration: levelwise rounds, participant sampling, tallying, threshold filtering."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from dpflmd.candidates import generate_candidates
from dpflmd.client import ProtocolError, QueryMessage, answer_query
from dpflmd.consolidated import ScoredMotif, consolidated_frequencies, top_n
from dpflmd.core import Dataset, MiningParams
from dpflmd.ldp import BudgetLedger, client_rng, debias_frequency, noise_factor, server_rng

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResponseTally:
    candidate: str
    ones: int
    total: int

    @property
    def rate(self) -> float:
        return self.ones / self.total


@dataclass(frozen=True)
class CorrectedThreshold:
    theta: float

    def __float__(self) -> float:
        return self.theta


@dataclass(frozen=True)
class RoundRecord:
    round_index: int
    length: int
    n_candidates: int
    n_merged: int
    theta: float
    participants: tuple[int, ...]
    promoted: int
    cumulative_epsilon: float


@dataclass
class Profile:
    frequent_by_length: dict = field(default_factory=dict)  # l -> {pattern: frequency}
    round_log: list = field(default_factory=list)


@dataclass
class MiningResult:
    ncfm: list  # list[ScoredMotif]
    profile: Profile
    ledger: BudgetLedger
    params: MiningParams

    @property
    def patterns(self) -> set[str]:
        return {m.pattern for m in self.ncfm}


def corrected_threshold(f: float, eta, xi: float, x: int) -> CorrectedThreshold:
    """Acceptance rate for noisy tallies: expected noisy rate at true support f
    plus a Hoeffding margin for confidence 1 - xi over x responses."""
    e = float(eta)
    if not 0 < xi <= 1:
        raise ValueError(f"xi must lie in (0, 1], got {xi}")
    if not 0 < f <= 1:
        raise ValueError(f"f must lie in (0, 1], got {f}")
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    return CorrectedThreshold(f + e - 2 * f * e + math.sqrt(-math.log(xi) / (2 * x)))


def is_frequent(tally: ResponseTally, theta, expected_total: int | None = None) -> bool:
    if tally.total <= 0 or (expected_total is not None and tally.total != expected_total):
        raise ProtocolError(f"incomplete tally for {tally.candidate!r}: {tally.total} responses")
    return tally.ones / tally.total >= float(theta)


def sample_participants(clients: Dataset, x: int, rng: np.random.Generator) -> list[int]:
    """Uniform sample of x client ids without replacement, in dataset order."""
    n = len(clients)
    if not 1 <= x <= n:
        raise ValueError(f"x={x} must lie in [1, {n}]")
    idx = np.sort(rng.choice(n, size=x, replace=False))
    ids = clients.client_ids
    return [ids[i] for i in idx]


def run_round(
    l: int,
    F_prev,
    dataset: Dataset,
    params: MiningParams,
    ledger: BudgetLedger,
    profile: Profile | None = None,
    round_index: int | None = None,
) -> dict:
    """One federated round at length ``l``; returns {pattern: stored frequency}."""
    if round_index is None:
        round_index = l - params.l_min
    eta = noise_factor(params.epsilon)
    cs = generate_candidates(F_prev, params.l_min, l, dataset.alphabet)
    theta = corrected_threshold(params.f, eta, params.xi, params.x)
    participants: list[int] = []
    frequent: dict = {}
    if cs.candidates:
        participants = sample_participants(dataset, params.x, server_rng(params.seed, round_index))
        query = QueryMessage(l, cs.merged, eta)
        ones = np.zeros(len(cs.candidates), dtype=np.int64)
        # canonical client order keeps aggregation independent of answer scheduling
        for cid in participants:
            resp = answer_query(dataset[cid], query, client_rng(params.seed, round_index, cid), params.containment)
            if len(resp.bits) != len(cs.candidates):
                raise ProtocolError(
                    f"client {cid} returned {len(resp.bits)} bits for {len(cs.candidates)} candidates"
                )
            ones += np.asarray(resp.bits, dtype=np.int64)
            ledger.record_spend(cid, len(resp.bits), params.epsilon)
        for cand, n1 in zip(cs.candidates, ones.tolist()):
            tally = ResponseTally(cand, n1, len(participants))
            if is_frequent(tally, theta, params.x):
                rate = tally.rate
                frequent[cand] = debias_frequency(rate, eta) if params.debias else rate
    if profile is not None:
        if frequent:
            profile.frequent_by_length[l] = frequent
        rec = RoundRecord(
            round_index, l, len(cs.candidates), len(cs.merged), theta.theta,
            tuple(participants), len(frequent), ledger.total,
        )
        profile.round_log.append(rec)
        log.info(
            "round=%d l=%d |C|=%d |MC|=%d theta=%.6f promoted=%d eps_total=%.6g",
            rec.round_index, l, rec.n_candidates, rec.n_merged, rec.theta, rec.promoted, rec.cumulative_epsilon,
        )
    return frequent


def run_mining(dataset: Dataset, params: MiningParams) -> MiningResult:
    """Full levelwise pipeline followed by consolidated-frequency top-N ranking."""
    if not len(dataset):
        raise ValueError("empty dataset")
    params.check_dataset(dataset)
    profile = Profile()
    ledger = BudgetLedger()
    F_prev: dict = {}
    for round_index, l in enumerate(range(params.l_min, params.l_max + 1)):
        F_prev = run_round(l, F_prev, dataset, params, ledger, profile, round_index)
    scored = consolidated_frequencies(profile, params.l_min, params.l_max, params.delta)
    ncfm: list[ScoredMotif] = top_n(scored, params.top_n)
    return MiningResult(ncfm, profile, ledger, params)
