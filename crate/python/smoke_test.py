"""Smoke test for the Python bindings. Run after `pip install -e crates/py`."""

import queer_howe as qh


def passed(report):
    return all(c["status"] == "pass" for c in report["checks"])


def main():
    q = qh.RatFunc.q()
    x = qh.RatFunc("(q^2 - 1)/(q)")
    assert str(x * q) == str(q * q - qh.RatFunc("1"))
    assert x.specialize(2, 1) == ("3", "2")
    assert (x - x).is_zero()

    v = qh.QueerRep.vector(2)
    assert (v.dim, v.rank, v.param) == (4, 2, "q")
    v2 = v.tensor_power(2)
    assert v2.dim == 16
    assert sum(v2.weights().values()) == 16
    assert passed(v2.check_relations())
    assert passed(v2.check_relations(mode="prob", trials=2, seed=3))
    assert passed(v2.zero_weight_hc())
    assert v.generator(1, 1)

    assert sorted(qh.strict_partitions(5, 2)) == [[3, 2], [4, 1], [5]]
    entries = qh.census(2, 2)["entries"]
    assert sum(e["copies"] * e["irreducible_dim"] for e in entries) == 16

    r = qh.sergeev(2, 2)
    assert passed(r)
    assert r["derived_values"]["hc_image_dim"] == 8
    assert r["derived_values"]["queer_image_dim"] == 32
    assert qh.howe(1, 1, 2)["derived_values"]["dim.l2"] == 2
    for report in (qh.hc_tensor_check(2, 3), qh.fixture(), qh.classical(1, 2), qh.census_suite(1, 3)):
        assert passed(report), report["suite"]

    try:
        qh.sergeev(1, 1, mode="prob", trials=0)
    except ValueError:
        pass
    else:
        raise AssertionError("trials=0 accepted")
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
