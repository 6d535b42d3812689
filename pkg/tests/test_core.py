import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dpflmd.core import Alphabet, Dataset, MiningParams, SequenceRecord, contains_substring, support

dna = st.text(alphabet="ACGT", min_size=1, max_size=40)


def naive_contains(s, p):
    n, m = len(s), len(p)
    for i in range(n - m + 1):
        if all(s[i + k] == p[k] for k in range(m)):
            return True
    return False


@pytest.mark.parametrize(
    "seq,pat,expected",
    [("AGTCA", "GTC", True), ("AGTCA", "AGTCAG", False), ("ABCABC", "ABCA", True)],
)
def test_contains_substring_examples(seq, pat, expected):
    assert contains_substring(SequenceRecord(0, seq), pat) is expected


def test_contains_substring_rejects_empty():
    with pytest.raises(ValueError):
        contains_substring("ACGT", "")


def test_contains_matches_naive_scan():
    rng = random.Random(0)
    for _ in range(10_000):
        s = "".join(rng.choice("ACGT") for _ in range(rng.randint(1, 30)))
        p = "".join(rng.choice("ACGT") for _ in range(rng.randint(1, 5)))
        assert contains_substring(s, p) == naive_contains(s, p)


def test_support_examples():
    ds = Dataset.from_strings(["ACGT", "GGAC", "TTTT", "CCCC"])
    assert support("AC", ds) == 0.5
    assert support("GAGA", ds) == 0.0
    same = Dataset.from_strings(["ACGT"] * 3)
    assert support("ACGT", same) == 1.0


@given(st.lists(dna, min_size=1, max_size=12), dna, st.sampled_from("ACGT"))
def test_support_monotone_under_extension(seqs, p, c):
    ds = Dataset.from_strings(seqs)
    assert support(p + c, ds) <= support(p, ds)
    k = support(p, ds) * len(ds)
    assert abs(k - round(k)) < 1e-9 and 0 <= round(k) <= len(ds)


def test_alphabet_invariants():
    a = Alphabet.from_string("ACGT")
    assert a.sa == "ACGT" and len(a) == 4
    with pytest.raises(ValueError):
        Alphabet.from_string("AAC")
    with pytest.raises(ValueError):
        Alphabet.from_string("A")


def test_dataset_validation():
    with pytest.raises(ValueError):
        Dataset.from_strings([])
    with pytest.raises(ValueError):
        Dataset.from_strings(["ACGN"])
    with pytest.raises(ValueError):
        Dataset((SequenceRecord(1, "AC"), SequenceRecord(1, "GT")))
    with pytest.raises(ValueError):
        Dataset.from_strings(["AC", ""])


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(f=0),
        dict(f=1.2),
        dict(f=0.5, delta=-1),
        dict(f=0.5, l_min=3, l_max=2),
        dict(f=0.5, l_min=0),
        dict(f=0.5, top_n=0),
        dict(f=0.5, epsilon=0),
        dict(f=0.5, xi=0),
        dict(f=0.5, xi=1.5),
        dict(f=0.5, x=0),
        dict(f=0.5, containment="fuzzy"),
    ],
)
def test_mining_params_reject_invalid(kwargs):
    with pytest.raises(ValueError):
        MiningParams(**kwargs)


def test_mining_params_x_bounded_by_dataset():
    ds = Dataset.from_strings(["AC", "GT"])
    with pytest.raises(ValueError):
        MiningParams(f=0.5, x=3).check_dataset(ds)
