import pytest

from _support import quot, ring, window
from spectilt import classify
from spectilt.errors import HypothesisError, InputError
from spectilt.homalg import FpModule
from spectilt.polycore import QQ
from spectilt.ringspec import SpecSeq, Window, declare_prime, quotient_ring

Z, PX, PY, M = range(4)


def seq(*Ys):
    return SpecSeq(window("x,y"), [list(Y) for Y in Ys])


def test_validate_reports_witnesses():
    bad = classify.validate_sequence(seq([Z, PX, PY, M]))
    assert not bad.valid
    assert not bad.conditions["iii"] and bad.conditions["i"] and bad.conditions["ii"]
    assert bad.witnesses["iii"][0]["invariant"] == "mu_0(p, R)"
    assert bad.gorenstein_equivalence
    nonclosed = classify.validate_sequence(seq([PX]))
    assert not nonclosed.conditions["i"]
    assert nonclosed.witnesses["i"] == [{"Y": 1, "prime": window("x,y").primes[PX].name,
                                         "missing": window("x,y").primes[M].name}]
    ascending = classify.validate_sequence(seq([M], [PX, M]))
    assert not ascending.conditions["ii"]


def test_enumeration_sorted_and_counted():
    E = classify.enumerate_sequences(2, window("x,y"))
    assert len(E.sequences) == 9
    assert sum(E.counts.values()) == 9
    assert E.sequences[0].Y == (frozenset(), frozenset())
    d = E.to_dict()
    assert d["count"] == 9 and len(d["counts_by_last"]) == 2
    with pytest.raises(InputError):
        classify.enumerate_sequences(0, window("x,y"))


def test_cotilting_verdicts():
    R = ring("x,y")
    s = seq([M])
    assert classify.cotilting_membership(quot(R, "x"), s).member
    v = classify.cotilting_membership(quot(R, "x", "y"), s)
    assert not v.member
    assert v.witnesses == [{"prime": window("x,y").primes[M].name, "i": 1, "invariant": "mu_0(p, M)", "value": 1}]
    assert "window-relative" in v.caveats


def test_invalid_sequence_rejected():
    R = ring("x,y")
    with pytest.raises(InputError) as e:
        classify.cotilting_membership(quot(R, "x"), seq([Z, PX, PY, M]))
    assert e.value.code == "classify.invalid_sequence"


def test_bass_with_minimal_primes_rejected():
    R = ring("x,y")
    with pytest.raises(InputError) as e:
        classify.cotilting_membership(quot(R, "x"), seq([PX, M]), "bass", primes="minimal")
    assert e.value.code == "classify.minimal_bass"
    with pytest.raises(InputError):
        classify.cotilting_membership(quot(R, "x"), seq([M]), "ext", primes="some")


def test_unknown_method():
    R = ring("x,y")
    with pytest.raises(InputError):
        classify.cotilting_membership(quot(R, "x"), seq([M]), "magic")
    with pytest.raises(InputError):
        classify.tilting_membership(quot(R, "x"), seq([M]), "bass")


def test_tilting_divisibility_needs_n1():
    R = ring("x,y")
    with pytest.raises(InputError) as e:
        classify.tilting_membership(quot(R, "x"), seq([M], [M]), "divisibility")
    assert e.value.code == "classify.divisibility_n"
    assert classify.tilting_membership(FpModule.zero(R), seq([M]), "divisibility").member
    assert not classify.tilting_membership(quot(R, "x"), seq([M]), "divisibility").member


def test_membership_all_agree_on_both_sides():
    R = ring("x,y")
    for side in ("cotilting", "tilting"):
        verdicts, agree = classify.membership_all(quot(R, "x^2", "x*y"), seq([PX, PY, M]), side)
        assert agree and len(verdicts) >= 3
    with pytest.raises(InputError):
        classify.membership_all(quot(R, "x"), seq([M]), "sideways")


def test_gorenstein_L_needs_gorenstein():
    S = quotient_ring(QQ, "x,y", ["x^2", "x*y"])
    m = declare_prime(S, ["x", "y"], name="m")
    px = declare_prime(S, ["x"], name="px")
    s = SpecSeq(Window([px, m]), [[]])
    with pytest.raises(HypothesisError):
        classify.cotilting_membership(FpModule.free(S), s, "gorenstein-L")


def test_resolving_generators():
    gens = classify.resolving_generators(seq([PX, PY, M], [M]))
    labels = [g["label"] for g in gens]
    assert labels[-1] == "R"
    assert len(gens) == 4
    assert all(g["pd"] <= 2 for g in gens)


def test_shift_check_range():
    R = ring("x,y")
    with pytest.raises(InputError):
        classify.shift_check(quot(R, "x"), seq([M], [M]), 3)
    assert classify.shift_check(quot(R, "x"), seq([PX, PY, M], [M]), 2)["agree"]


def test_separator_none_for_equal():
    assert classify.find_separator(seq([M]), seq([M])) is None
    r = classify.find_separator(seq([M]), seq([PX, M]))
    assert r is not None and r["verdict_a"] != r["verdict_b"]


def test_same_class_check():
    R = ring("x,y")
    mods = [FpModule.free(R), quot(R, "x"), quot(R, "x", "y")]
    rep = classify.same_class_check([quot(R, "x")], [quot(R, "x", degree=2)], mods)
    assert rep["agree"]
    # R has pd 0, so everything is Ext-orthogonal to it; R/(x) is not orthogonal to R
    rep = classify.same_class_check([quot(R, "x")], [FpModule.free(R)], mods, names=["R", "R/(x)", "k"])
    assert not rep["agree"]
    assert rep["rows"][0] == {"module": "R", "first": False, "second": True, "agree": False}
    assert [r["module"] for r in rep["rows"]] == ["R", "R/(x)", "k"]
