import pytest

import linearr


def test_corpus_census():
    ceva = linearr.Arrangement.resolve("ceva3")
    assert len(ceva) == 9
    assert ceva.field == "eisenstein"
    assert ceva.census().get(3) == 12
    assert ceva.census().get(2, 0) == 0
    assert "ceva3" in linearr.corpus_names()


def test_betti_and_nets():
    ceva = linearr.Arrangement.resolve("ceva3")
    assert ceva.beta(3) == 2
    assert len(ceva.nets(3)) == 4
    assert ceva.betti(3)["beta"] == 2
    ex = linearr.Arrangement.resolve("example-2.6-4")
    assert ex.nets(3) == [[[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]]]


def test_parse_text():
    a = linearr.Arrangement("field: rational\n1 0 0\n0 1 0\n0 0 1\n", "tri")
    assert a.census() == {2: 3}
    assert a.lines[0] == ["1", "0", "0"]
    with pytest.raises(linearr.DataError):
        linearr.Arrangement("field: rational\n1 0 0\n2 0 0\n")
    with pytest.raises(ValueError):
        linearr.Arrangement.resolve("pappus:1")


def test_monodromy_and_reports():
    report = linearr.Arrangement.resolve("hesse12").monodromy()
    assert report["verdict"] == "nontrivial"
    assert linearr.Arrangement.resolve("generic-6").monodromy()["verdict"] == "trivial"
    full = linearr.Arrangement.resolve("pappus").analyze()
    assert full["census"] == {"t3": 10, "t2": 6}


def test_isomorphism_latin_and_certificate():
    a = linearr.Arrangement.resolve("pappus")
    b = linearr.Arrangement.resolve("pappus:3")
    assert linearr.lattice_isomorphism(a, b) is not None
    c = linearr.Arrangement.resolve("example-2.6-1")
    d = linearr.Arrangement.resolve("example-2.6-4")
    assert linearr.lattice_isomorphism(c, d) is None
    assert linearr.latin_inventory(4) == (576, 2)
    assert linearr.verify_lemma14()["conclusion"] == "no admissible solution"


def test_cli_passthrough():
    code, out, _ = linearr.run(["census", "hesse9"])
    assert code == 0 and out == "t3=9 t2=9\n"
    assert linearr.run(["bogus"])[0] == 64
