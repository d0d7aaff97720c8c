"""Python smoke tests for the compiled module, run under ctest."""

import fractions

import reebcalc


def test_ellipsoid_spectrum():
    sys = reebcalc.ellipsoid(["1", "5/2"])
    assert sys["n"] == 2
    spec = reebcalc.spectrum(sys, max_degree=10)
    degrees = [row["degree"] for row in spec["degrees"]]
    assert degrees == [2, 4, 6, 8, 10]
    assert spec["degrees"][2]["iterates"][0]["orbit"] == "x2"

    target = {"kind": "standard_sphere", "n": 2}
    check = reebcalc.perfect_check(sys, target, 10)
    assert check["verdict"] == "perfect-up-to-cutoff"


def test_resonance_and_ratios():
    sys = reebcalc.ellipsoid(["1", "5/2"])
    res = reebcalc.resonance(sys)
    assert res["verdict"] is True
    assert fractions.Fraction(res["lhs"]) == fractions.Fraction(1, 2)
    rat = reebcalc.ratios(sys)
    assert rat["all_equal"] is True
    assert all(row["ratio"] == "14/5" for row in rat["rows"])


def test_index_ops():
    sys = reebcalc.ellipsoid(["1", "5/2"])
    assert reebcalc.cz_index(sys, "x1", 1) == 3
    assert reebcalc.mean_index(sys, "x1") == "14/5"
    assert reebcalc.degree(sys, "x2", 1) == 6
    try:
        reebcalc.cz_index(sys, "x1", 5)
    except reebcalc.DomainError as e:
        assert "degenerate" in str(e)
    else:
        raise AssertionError("degenerate iterate must raise")


def test_cluster():
    sol = reebcalc.cluster(["14/5", "7"], "1/10", 100)
    assert sol["k"] == [5, 2]
    assert sol["spread"] == "0"
    odd = reebcalc.cluster(["14/5", "7"], "3/2", 100, parity="all_odd")
    assert odd["k"] == [3, 1]
    assert odd["spread"] == "7/5"
    oracle = reebcalc.brute_oracle(["14/5", "7"], "3/2", 100, parity="all_odd")
    assert oracle["spread"] == "7/5"
    try:
        reebcalc.cluster(["14/5", "7"], "1", 10000, parity="all_odd")
    except reebcalc.DomainError as e:
        assert "7/5" in str(e)
    else:
        raise AssertionError("parity obstruction must raise")


def test_classifier():
    verdict = reebcalc.classify_s3({
        "mode": "perfect",
        "entries": [
            {"type": "elliptic", "delta": "14/5", "irrational": True},
            {"type": "elliptic", "delta": "7", "irrational": True},
        ],
    })
    assert verdict["result"] == "Consistent"
    ruled = reebcalc.classify_s3({
        "mode": "exact",
        "entries": [
            {"type": "pos_hyperbolic", "mu": 4},
            {"type": "neg_hyperbolic", "mu": 3},
        ],
    })
    assert ruled["result"] == "RuledOut"
    assert any(t["rule"] == "R7" and t["status"] == "fired" for t in ruled["trace"])

    witness = reebcalc.witness_ellipsoid("14/5")
    assert witness == {"a1": "1", "a2": "5/2", "delta2": "7"}


def test_bounds():
    assert reebcalc.bound_b({"kind": "standard_sphere", "n": 2}, 2, 0, 50)["value"] == 2
    sys = reebcalc.ellipsoid(["1", "5/2"])
    ec = reebcalc.even_count(sys, {"kind": "standard_sphere", "n": 2}, 0, 50)
    assert ec["pass"] is True and ec["even_orbits"] == 2


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"smoke: {len(tests)} tests passed")


if __name__ == "__main__":
    main()
