"""Smoke tests for the python module: import, exact values, error mapping.

Usage: test_smoke.py [dir-with-extension].  With an argument the raw build
tree extension `_qmf` is imported; without one the installed `qmf` package.
"""

import sys
from fractions import Fraction

if len(sys.argv) > 1:
    sys.path.insert(0, sys.argv[1])
    import _qmf as qmf
else:
    import qmf


def test_expand():
    terms = qmf.expand("A4", "6")
    assert [c for _, c in terms] == ["1", "12", "-60", "768", "-11004", "178200"]
    assert [e for e, _ in terms] == ["0", "1", "2", "3", "4", "5"]

    eta = qmf.expand("eta.1", "49/24")
    assert eta[0] == ("1/24", "1")
    assert eta[1] == ("25/24", "-1")
    assert Fraction(eta[1][0]) - Fraction(eta[0][0]) == 1

    try:
        qmf.expand("nosuchform")
    except KeyError:
        pass
    else:
        raise AssertionError("unknown form should raise KeyError")


def test_registry():
    names = qmf.form_names()
    assert "Delta" in names and "theta3" in names and len(names) > 60
    info = qmf.form_info("Delta")
    assert info["weight"] == "12" and info["order"] == "1" and info["field"] == 0
    assert len(info["routes"]) >= 1


def test_verify():
    rows = qmf.verify("golden.*")
    assert len(rows) == 7
    assert all(r["pass"] for r in rows)
    assert all(r["tier"] == "golden" for r in rows)
    assert qmf.verify("zzz.nomatch") == []


def test_counts():
    table = qmf.counts("squares", s=1, max_n=10)
    rows = table["rows"]
    assert rows[1]["lattice"] == "4" and rows[3]["lattice"] == "0"
    assert all(r["agree"] for r in rows)
    assert rows[0]["formulas"] == [None] * len(table["labels"])

    tri = qmf.counts("triangles", s=2, max_n=6)
    assert [r["lattice"] for r in tri["rows"]] == ["1", "4", "6", "8", "13", "12", "14"]
    assert all(r["agree"] for r in tri["rows"])


def test_pf_check():
    reports = qmf.pf_check(samples=5, seed=7)
    families = {r["family"] for r in reports}
    assert {"general", "weight12", "chazyXII", "reductions"} <= families
    assert all(r["failures"] == [] for r in reports)


def test_sigma():
    assert qmf.sigma(6, 1, [1]) == "12"
    assert qmf.sigma(5, 0, [0, 1, 0, -1]) == "2"
    assert qmf.sigma(9, 1, [0, 1, -2]) == "1"
    assert qmf.sigma(9, 1, [0, 1, -2], conj=True) == "9"


def main():
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("python smoke: all ok")


if __name__ == "__main__":
    main()
