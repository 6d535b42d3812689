import random

import pytest

from dpflmd.core import Dataset, MiningParams, support
from dpflmd.oracle import brute_force_cf, exact_mine


def test_identical_records():
    ds = Dataset.from_strings(["ACGT"] * 5)
    gt = exact_mine(ds, MiningParams(f=1.0, delta=0, l_min=1, l_max=2, top_n=30))
    found = {p: s for fr in gt.frequent_by_length.values() for p, s in fr.items()}
    assert found == {p: 1.0 for p in ["A", "C", "G", "T", "AC", "CG", "GT"]}


def test_f_above_one_rejected():
    with pytest.raises(ValueError):
        MiningParams(f=1.01)


def test_brute_force_cf():
    assert brute_force_cf({"ACG": 0.4}, 1) == {"ACG": 0.4}
    sup = {"AC": 0.1, "GT": 0.2, "TA": 0.3}
    assert all(v == pytest.approx(0.6) for v in brute_force_cf(sup, 2).values())
    with pytest.raises(ValueError):
        brute_force_cf({"A": 0.1, "AC": 0.2}, 1)


def test_supports_exact_and_downward_closed(planted_dataset):
    params = MiningParams(f=0.3, l_min=1, l_max=5)
    gt = exact_mine(planted_dataset, params)
    frequent = {p for fr in gt.frequent_by_length.values() for p in fr}
    for l, fr in gt.frequent_by_length.items():
        for p, s in fr.items():
            assert s == support(p, planted_dataset) >= params.f
            # every substring of length >= l_min is frequent too
            for i in range(len(p)):
                for j in range(i + 1, len(p) + 1):
                    assert p[i:j] in frequent


def test_deterministic_and_seed_independent():
    r = random.Random(2)
    ds = Dataset.from_strings(["".join(r.choice("ACGT") for _ in range(20)) for _ in range(30)])
    a = exact_mine(ds, MiningParams(f=0.3, seed=1))
    b = exact_mine(ds, MiningParams(f=0.3, seed=99))
    assert a == b
