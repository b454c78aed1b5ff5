"""Smoke tests for the python module: validation, K-theory, oracle calls."""

import toricsg


def test_validate_and_faces():
    S = toricsg.ToricSemigroup.validate([(2, -1), (1, 0), (2, 1)])
    assert S.generators == [(1, 0), (2, -1), (2, 1)]
    assert S.ray(1) == (2, -1)
    assert S.ray(2) == (2, 1)
    face = S.face(1)
    assert face["asymptotic_generator"] == (2, -1)
    assert S.saturation_member((1, 0))
    assert not S.saturation_member((0, 1))

    try:
        toricsg.ToricSemigroup.validate([(1, 0), (-1, 0)])
    except ValueError as e:
        assert "NotPointed" in str(e)
    else:
        raise AssertionError("NotPointed set was accepted")


def test_k_theory():
    S = toricsg.ToricSemigroup.validate([(2, -1), (1, 0), (2, 1)])
    kt = toricsg.k_theory(S)
    assert kt["detM"] == 4
    assert kt["K0"]["name"] == "Z + Z/4"
    assert kt["K1"]["name"] == "0"

    n2 = toricsg.ToricSemigroup.validate([(1, 0), (0, 1)])
    assert toricsg.k_theory(n2)["K0"]["name"] == "Z"


def test_gap_analysis():
    ns = toricsg.gap_analysis([3, 5])
    assert ns["gaps"] == [1, 2, 4, 7]
    assert ns["frobenius"] == 7
    assert ns["conductor"] == 8


def test_oracle():
    S = toricsg.ToricSemigroup.validate([(2, -1), (1, 0), (2, 1)])
    oracle = toricsg.Oracle(S)
    assert oracle.member((3, 1))
    assert not oracle.member((0, 1))
    assert (0, 0) in oracle.enumerate(4)
    assert oracle.index_map((2, 0), 1) == 2
    assert oracle.independence_failure_check(50)
    z = oracle.find_translator([(-1, 0), (0, -1)])
    assert oracle.member(z)


def test_reports_and_ensemble():
    rep = toricsg.analyze_report([(1, 0), (0, 1)])
    assert rep["ktheory"]["detM"] == 1
    ver = toricsg.verify_report([(2, -1), (1, 0), (2, 1)], bound=100)
    assert not ver["mismatch"]
    ens = toricsg.generate_ensemble(3, 7, coord_max=5)
    assert len(ens) == 3
    assert ens == toricsg.generate_ensemble(3, 7, coord_max=5)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"{name}: ok")
            except Exception as e:  # noqa: BLE001
                failed += 1
                print(f"{name}: FAILED — {e!r}")
    raise SystemExit(1 if failed else 0)
