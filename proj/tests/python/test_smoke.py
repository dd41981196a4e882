import _wheelerlib as wl

LEFT = """alphabet a b c
initial 1
finals 3 4
trans 1 a 2
trans 1 b 4
trans 1 c 4
trans 2 a 3
trans 2 b 4
trans 2 c 4
trans 3 c 3
trans 3 b 2
trans 3 a 4
trans 4 a 4
trans 4 b 4
trans 4 c 4
"""

RIGHT = """alphabet a b c
initial 1
finals 1 2
trans 1 a 2
trans 2 a 3
trans 3 c 3
trans 3 b 2
"""


def test_minimize_roundtrip():
    out = wl.minimize(LEFT)
    assert "alphabet a b c" in out
    assert out == wl.minimize(out)


def test_complement_pair():
    comp = wl.complement(LEFT)
    assert wl.minimize(comp) == wl.minimize(RIGHT)


def test_uw_verdicts():
    left = wl.is_uw(LEFT)
    assert left["uw"] is False
    assert len(left["violating_order"]) == 3
    assert wl.is_uw(RIGHT)["uw"] is True


def test_wheeler_fixed_order():
    assert wl.is_wheeler(LEFT, "a,b,c") is False
    assert wl.is_wheeler(RIGHT, "a,b,c") is True


def test_classify():
    rep = wl.classify(LEFT)
    assert rep["uw"] is False
    assert rep["comp_uw"] is True
    assert rep["prefix_universal"] is True
    assert rep["finite"] is False


def test_export_dot():
    assert wl.export_dot(RIGHT).startswith("digraph")


def test_ov_pipeline():
    ov = wl.gen_ov(3, 3, seed=4, mode="planted-yes")
    assert ov.splitlines()[0] == "3 3"
    assert wl.solve_ov(ov) is True
    dfa = wl.ov_to_dfa(ov)
    assert wl.is_uw(dfa)["uw"] is False  # orthogonal pair <=> NotUW


def test_run_cli():
    code, out, err = wl.run_cli(["gen-ov", "2", "2", "--seed", "1"])
    assert code == 0
    assert out.splitlines()[0] == "2 2"
