"""Smoke test for the pycubeplan extension.

Build and install first:

    pip install --no-build-isolation -e crates/python
"""

import pycubeplan as cp


def main():
    k5 = cp.System.builtin("agv-k5", n=2).build()
    assert k5.f_vector() == [10, 30, 15]
    assert k5.euler_characteristic() == -5
    assert k5.is_closed_surface() and not k5.is_orientable_surface()
    assert k5.check_npc() == []

    arm = cp.System.builtin("arm", n=5)
    complex_ = arm.build()
    assert complex_.betti()[0] == 1 and sum(complex_.betti()[1:]) == 0
    assert complex_.collapse()[0] == 1

    walk = arm.random_path(20, rng_seed=3)
    normal = walk.normalize()
    assert normal.is_valid() and normal.is_normal()
    assert len(normal) <= len(walk)
    assert normal.end() == walk.end()
    assert arm.parse_script(normal.script()) == normal

    with open_fixture("fig11.state") as f:
        seed = " ".join(line for line in f.read().splitlines() if not line.startswith("#"))
    hexes = cp.System.builtin("hex", n=1, variant="changing", constraint="connected").with_seeds([seed])
    violations = hexes.build().check_npc()
    assert any(state == seed.strip() for state, _, _ in violations)

    line = cp.System.builtin("hex", n=3)
    assert len(line.shape_complex().f_vector()) == 3
    shape_path = line.random_path(6, rng_seed=1, shape=True)
    placed = line.lift(shape_path, (-1, 0))
    assert len(placed) == len(shape_path)

    try:
        cp.System.builtin("arm", n=5).build(cap=4).betti()
    except cp.CubeplanError as e:
        assert "Truncated" in str(e)
    else:
        raise AssertionError("truncated complex answered a topology query")

    assert cp.System.parse(arm.serialize()).serialize() == arm.serialize()
    print("smoke test passed")


def open_fixture(name):
    import pathlib

    return open(pathlib.Path(__file__).resolve().parent.parent / "fixtures" / name)


if __name__ == "__main__":
    main()
