import pytest

sset = pytest.importorskip("sset")


def test_mapping_complex_of_delta3_matches_cube():
    mc = sset.mapping_complex("delta3", "0", "3", dim_bound=3)
    assert sset.cell_counts(mc) == [4, 5, 2]
    assert sset.cell_counts(sset.cube_oracle(3, 0, 3, 3)) == [4, 5, 2]


def test_compare_square_poset():
    assert sset.compare("square-poset", "00", "11", dim_bound=3) == {"verdict": "homology-iso", "range": 2}


def test_homology_of_sphere():
    groups = sset.homology("boundary3", bound=3, reduced=True)["groups"]
    assert [g["betti"] for g in groups] == [0, 0, 1, 0]


def test_iso():
    assert sset.is_isomorphic("delta1", "J1") is False
    assert sset.is_isomorphic("horn2-1", "horn2-1")


def test_q_methods_agree_on_counts():
    a = sset.q_complex(2, 3, "necklace")
    b = sset.q_complex(2, 3, "chain-quotient")
    assert sset.cell_counts(a) == sset.cell_counts(b)


def test_inner_horn_certificate():
    cert = {"class": "inner", "node": {"kind": "generator",
                                       "generator": {"catalog": "inner", "family": "horn", "params": [2, 1]}}}
    assert sset.check_certificate(cert)["valid"]
    cert["node"]["generator"]["params"] = [2, 0]
    assert not sset.check_certificate(cert)["valid"]


def test_fibration_verdicts():
    d1, d0 = sset.build("delta1"), sset.build("delta0")
    ref = lambda c, w=(): {"word": list(w), "cell": c}
    f = {"dom": d1, "cod": d0, "images": {"0": ref("0"), "1": ref("0"), "01": ref("0", [0])}}
    assert sset.check_fibration(f, "inner", 3)["verdict"] == "holds"
    assert sset.check_fibration(f, "left", 3)["verdict"] == "fails"


def test_validate_rejects_corrupted():
    bad = {"dim": 1, "cells": {"0": ["a"], "1": ["e"]}, "faces": {"e": [{"word": [], "cell": "zz"}]}}
    report = sset.validate(bad)
    assert report["valid"] is False and report["violation"]
    assert sset.validate(sset.build("square-poset"))["valid"]


def test_invalid_input_raises():
    with pytest.raises(sset.InvalidInput):
        sset.build("no-such-base")


def test_corpus_and_fast_criteria():
    assert len(sset.corpus_names()) >= 8
    summary = sset.run_acceptance(only=[1, 2])
    assert summary["pass"] and len(summary["criteria"]) == 2
