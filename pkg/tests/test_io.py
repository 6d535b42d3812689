import json
import random

import pytest

from dpflmd.consolidated import ScoredMotif
from dpflmd.core import Dataset, support
from dpflmd.io import (
    CSV_HEADER,
    DatasetError,
    RunRecord,
    SyntheticSpec,
    generate_synthetic,
    load_dataset,
    write_dataset,
    write_results,
)


def test_plain(tmp_path):
    p = tmp_path / "d.txt"
    p.write_text("ACGT\nTTTT\n")
    ds = load_dataset(p)
    assert [r.data for r in ds.records] == ["ACGT", "TTTT"]


def test_fasta(tmp_path):
    p = tmp_path / "d.fa"
    p.write_text(">h1\nAC\nGT\n>h2\nTT\n")
    assert [r.data for r in load_dataset(p, "fasta").records] == ["ACGT", "TT"]


def test_fasta_without_header(tmp_path):
    p = tmp_path / "d.fa"
    p.write_text("ACGT\n>h\nAA\n")
    with pytest.raises(DatasetError):
        load_dataset(p, "fasta")


def promoters_like(path, n=106, length=57, seed=0):
    r = random.Random(seed)
    rows = []
    for i in range(n):
        seq = "".join(r.choice("acgt") for _ in range(length))
        rows.append(f"{'+-'[i % 2]},S{i},\t\t{seq}")
    path.write_text("\n".join(rows) + "\n")


def test_uci_csv(tmp_path):
    p = tmp_path / "promoters.data"
    promoters_like(p)
    ds = load_dataset(p, "uci-csv")
    assert len(ds) == 106 and ds.avelen == 57.0
    assert ds.records[0].data.isupper()


def test_lowercase_uppercased(tmp_path):
    p = tmp_path / "d.txt"
    p.write_text("acgt\n")
    assert load_dataset(p).records[0].data == "ACGT"


def test_unknown_symbol_names_line(tmp_path):
    p = tmp_path / "d.txt"
    p.write_text("ACGT\nACNT\n")
    with pytest.raises(DatasetError, match="line 2.*'N'"):
        load_dataset(p)
    assert [r.data for r in load_dataset(p, ambiguous="strip").records] == ["ACGT", "ACT"]
    assert [r.data for r in load_dataset(p, ambiguous="skip").records] == ["ACGT"]
    p.write_text("ACXT\n")
    with pytest.raises(DatasetError):
        load_dataset(p, ambiguous="strip")


def test_empty_and_missing(tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("\n\n")
    with pytest.raises(DatasetError):
        load_dataset(p)
    with pytest.raises(DatasetError):
        load_dataset(tmp_path / "nope.txt")


def test_plain_round_trip(tmp_path):
    ds = generate_synthetic(SyntheticSpec(20, 15, seed=3))
    write_dataset(ds, tmp_path / "x.txt")
    assert load_dataset(tmp_path / "x.txt") == ds


def test_synthetic_planting():
    ds = generate_synthetic(SyntheticSpec(50, 30, planted_motif="ACGTAC", plant_rate=1.0, seed=1))
    assert support("ACGTAC", ds) == 1.0
    part = generate_synthetic(SyntheticSpec(50, 30, planted_motif="ACGTAC", plant_rate=0.5, seed=1))
    assert support("ACGTAC", part) >= 0.5
    multi = generate_synthetic(SyntheticSpec(80, 40, planted_motif=("AAAAAA", "CCCCCC"), plant_rate=1.0, seed=2))
    assert support("AAAAAA", multi) == support("CCCCCC", multi) == 1.0


def test_synthetic_shape_and_determinism():
    spec = SyntheticSpec(10_000, 110, seed=5)
    ds = generate_synthetic(spec)
    assert len(ds) == 10_000 and ds.avelen == 110.0
    assert generate_synthetic(SyntheticSpec(30, 10, seed=5)) == generate_synthetic(SyntheticSpec(30, 10, seed=5))


def test_synthetic_spec_validation():
    with pytest.raises(ValueError):
        SyntheticSpec(10, 4, planted_motif="ACGTA")
    with pytest.raises(ValueError):
        SyntheticSpec(10, 4, plant_rate=1.5)


def record(i, n_motifs=30):
    ncfm = [ScoredMotif(f"A{j}"[:1] * (j % 4 + 1), 0.5, 1.0 + j) for j in range(n_motifs)]
    return RunRecord(i, "syn", 0.3, 1, 1, 4, 30, 3.0, 0.01, 53, 7, 0.5, 0.25, 1 / 3, 0.01, 12.0, ncfm)


def test_write_results(tmp_path):
    csv_path, js = write_results([record(i) for i in range(100)], tmp_path / "out" / "r.csv")
    lines = csv_path.read_text().splitlines()
    assert lines[0].split(",") == CSV_HEADER
    assert len(lines) == 101
    assert "0.3333333333333333" in lines[1]
    doc = json.loads(js.read_text())
    assert len(doc["runs"]) == 100 and len(doc["runs"][0]["ncfm"]) == 30
    assert not list((tmp_path / "out").glob("*.tmp"))


def test_write_results_reports_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(OSError, match="file"):
        write_results([record(0)], blocker / "r.csv")
