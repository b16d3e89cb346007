import math

import pytest

import chroma


def test_uio_counts_are_catalan():
    for n in range(1, 8):
        assert len(chroma.enumerate_uios(n)) == math.comb(2 * n, n) // (n + 1)


def test_chromatic_examples():
    assert chroma.chromatic([3, 3]) == {"2": 2}
    assert chroma.chromatic([2, 3]) == {"1,1": 1}
    assert chroma.chromatic([3, 4, 4]) == {"2,1": 1, "3": 3}
    assert chroma.chromatic([4, 4, 4]) == {"3": 6}


def test_positivity_report():
    r = chroma.positivity_report([3, 4, 5, 5])
    assert r["ePositive"] and r["sPositive"] and r["sinkCheck"]


def test_convert():
    assert chroma.convert("m", [2, 1], "p") == {"2,1": 1, "3": -1}
    assert chroma.convert("p", [2], "e") == {"1,1": 1, "2": -2}


def test_power_sums_via_corrects():
    for nxt in chroma.enumerate_uios(4):
        for k in range(1, 5):
            assert chroma.power_via_corrects(nxt, k) == chroma.power_g(nxt, k)


def test_covering_corrects():
    assert chroma.covering_corrects_count([3, 4, 4]) == "3"
    assert chroma.is_correct([3, 4, 4], [0, 1, 2])
    assert not chroma.is_correct([3, 4, 4], [0, 2, 1])


def test_schur_via_lgv_matches_conjugate():
    assert chroma.schur_via_lgv([3, 4, 4], [1, 1]) == chroma.schur_g([3, 4, 4], [2])


def test_verify_and_scan():
    assert set(chroma.suites()) >= {"ppos", "lgv", "involutions"}
    report = chroma.verify("involutions", max_n=3, max_k=3)
    assert report["ok"] and report["failures"] == []
    scan = chroma.scan(max_n=5)
    assert scan["scanned"] == 42 + 14 + 5 + 2 + 1
    assert scan["negatives"] == 0


def test_errors_are_value_errors():
    with pytest.raises(chroma.ChromaError):
        chroma.chromatic([1, 2])
    with pytest.raises(ValueError):
        chroma.verify("nope")
