import pytest

from _support import quot, residue, ring, suite2
from spectilt import abtranspose, homalg
from spectilt.errors import HypothesisError
from spectilt.homalg import FpModule
from spectilt.polycore import QQ
from spectilt.ringspec import declare_prime, quotient_ring


def test_transpose_of_free_is_zero():
    R = ring("x,y")
    assert abtranspose.transpose(FpModule.free(R, 2)).module.is_zero()


def test_double_transpose():
    R = ring("x,y")
    for M in (quot(R, "x"), quot(R, "x", "y"), quot(R, "x^2", "x*y")):
        T = abtranspose.transpose(M)
        assert T.minimality == "canonical"
        back = abtranspose.transpose(T.module).module
        assert homalg.iso_proxy(back, M, allow_shift=True).equal


def test_grade_condition():
    R = ring("x,y")
    assert abtranspose.grade_condition(quot(R, "x", "y"), 1) is None
    assert abtranspose.grade_condition(quot(R, "x"), 1) == 1
    assert abtranspose.grade_condition(FpModule.free(R), 0) == 0


def test_lp_needs_positive_height():
    R = ring("x,y")
    with pytest.raises(HypothesisError) as e:
        abtranspose.lp_module(declare_prime(R, []))
    assert e.value.hypothesis == "ht p >= 1"


def test_lp_grade_condition_failure():
    S = quotient_ring(QQ, "x,y", ["x^2", "x*y"])
    m = declare_prime(S, ["x", "y"])
    with pytest.raises(HypothesisError) as e:
        abtranspose.lp_module(m)
    assert e.value.hypothesis == abtranspose.GRADE_HYPOTHESIS
    assert e.value.exit_code == 2


def test_lp_height_one_is_principal_quotient():
    R = ring("x,y")
    L = abtranspose.lp_module(declare_prime(R, ["x"]))
    assert homalg.pd(L) == 1
    assert homalg.iso_proxy(L, quot(R, "x"), allow_shift=True).equal


def test_tr_omega_zero_is_transpose():
    R = ring("x,y,z")
    U = residue(R, ["x", "y"])
    a = abtranspose.tr_omega(U, 0)
    b = abtranspose.transpose(U).module
    assert homalg.iso_proxy(a, b).equal


def test_functor_check_reports_rows():
    R = ring("x,y")
    names = [n for n, _ in suite2()][:5]
    mods = [M for _, M in suite2()][:5]
    rep = abtranspose.functor_iso_check(quot(R, "x", "y"), 1, mods, names=names)
    assert rep.ok
    assert {r["module"] for r in rep.rows} >= set(names)
    assert rep.to_dict()["n"] == 1
