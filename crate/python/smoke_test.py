"""Smoke test for the ucphase Python module.

Build and install first:
    cd crates/python && pip install --no-build-isolation .
"""
from fractions import Fraction

import ucphase


def main():
    s = ucphase.universal_character("1", "1")
    assert str(s) == "x1*y1 - 1", s
    assert s.degree() == 0

    lam, mu = ucphase.Partition([2, 1]), ucphase.Partition("1")
    routes = {m: ucphase.universal_character(lam, mu, method=m) for m in ("jacobi-trudi", "operator", "raising")}
    assert len({str(p) for p in routes.values()}) == 1
    jt = routes["jacobi-trudi"]
    assert jt.decompose() == {("2,1", "1"): Fraction(1)}
    assert ucphase.synthesize(jt.decompose(), *jt.cutoffs) == jt
    assert ucphase.Poly.from_json(jt.to_json()) == jt

    p = ucphase.Poly("x1", 2, 2) * ucphase.Poly("y1", 2, 2) - ucphase.Poly("1", 2, 2)
    assert p == ucphase.universal_character([1], [1], cutoffs=(2, 2))

    model = ucphase.PhaseModel(1, 1)
    us = [Fraction(2)]
    assert model.bethe_projected(us) == model.bethe_expansion(us)
    assert model.bethe_expansion(us)[("", "")] == Fraction(1, 4)
    assert model.rtt_check(cap=2)["pass"]
    assert ucphase.PhaseModel(2).phase_algebra_check(3)["pass"]

    assert ucphase.macmahon(6) == [1, 1, 3, 6, 13, 24, 48]
    assert ucphase.macmahon(4, "correlator") == ucphase.macmahon(4, "enumerate")
    assert ucphase.plane_partition_count(5) == 24
    assert ucphase.macmahon_check(5)["pass"]
    try:
        ucphase.plane_partition_count(40)
    except ValueError:
        pass
    else:
        raise AssertionError("enumeration bound not enforced")
    print("python smoke test passed")


if __name__ == "__main__":
    main()
