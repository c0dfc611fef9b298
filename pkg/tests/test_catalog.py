import random
from fractions import Fraction

import pytest

from pmgraph import (
    ParameterError,
    UnknownFamilyError,
    build,
    check_family,
    closed_form,
    cross_check,
    family,
    genus,
    invariant_set,
    list_families,
    random_lengths,
    validate,
)


def _ones(fid):
    return {name: 1 for name in family(fid).params}


class TestRegistry:
    def test_counts(self):
        fids = list_families()
        assert len(fids) == 41
        by_genus = {}
        for fid in fids:
            by_genus.setdefault(family(fid).genus, []).append(fid)
        assert len(by_genus[0]) == 4
        assert len(by_genus[1]) == 9
        assert len(by_genus[2]) == 14
        assert len(by_genus[3]) == 14

    def test_unknown_family(self):
        with pytest.raises(UnknownFamilyError):
            family("g5.I")

    def test_only_zero_length_family_is_degenerate(self):
        degenerate = [fid for fid in list_families() if family(fid).degenerate]
        assert degenerate == ["g0.I"]

    def test_parameter_validation(self):
        with pytest.raises(ParameterError):
            build("g3.XIV", {"a": 1})  # missing
        with pytest.raises(ParameterError):
            build("g1.I", {"a": 1, "zz": 2})  # extra
        with pytest.raises(ParameterError):
            build("g1.I", {"a": 0})  # nonpositive
        with pytest.raises(ParameterError):
            build("g1.I", {"a": "one"})  # unparseable

    def test_every_family_is_valid_and_total_genus_3(self):
        rng = random.Random(7)
        for fid in list_families():
            spec = family(fid)
            g = build(fid, random_lengths(spec.params, rng))
            assert validate(g).passed, fid
            data = genus(g)
            assert data.gbar == 3, fid
            assert data.g == spec.genus, fid


class TestClosedForms:
    def test_k4_row(self):
        inv = closed_form("g3.XIV", _ones("g3.XIV"))
        assert inv.tau == Fraction(5, 16)
        assert inv.theta == 6
        assert inv.delta[1] == 0
        assert inv.phi == Fraction(17, 48)
        assert inv.lam == Fraction(75, 112)
        assert inv.epsilon == Fraction(11, 6)
        assert inv.z == Fraction(37, 144)

    def test_single_loop_row_scales_linearly(self):
        for a in (1, Fraction(5, 3), 12):
            inv = closed_form("g1.I", {"a": a})
            assert inv.tau == Fraction(a, 12)
            assert inv.theta == 0
            assert inv.phi == Fraction(a, 9)
            assert inv.lam == Fraction(3, 28) * a
            assert inv.epsilon == Fraction(2, 9) * a

    def test_symmetric_theta_family_attains_phi_floor(self):
        inv = closed_form("g2.III", {"a": 1, "b": 1, "c": 1})
        assert inv.phi == Fraction(7, 81) * inv.ell

    def test_point_family(self):
        inv = closed_form("g0.I", {})
        assert inv.ell == 0
        assert inv.phi == 0

    def test_identical_presentation_pairs(self):
        # three catalog entries appear twice with distinct drawings but the
        # same underlying metric graph; their rows must agree identically
        rng = random.Random(99)
        for left, right in (
            ("g1.III", "g1.IV"),
            ("g1.VII", "g1.VIII"),
            ("g2.XI", "g2.XII"),
        ):
            params = family(left).params
            assert params == family(right).params
            for _ in range(5):
                lengths = random_lengths(params, rng)
                a = closed_form(left, lengths)
                b = closed_form(right, lengths)
                assert a == b, (left, right, lengths)

    def test_delta_partition(self):
        rng = random.Random(3)
        for fid in ("g1.V", "g2.VII", "g3.X", "g3.XIV"):
            lengths = random_lengths(family(fid).params, rng)
            inv = closed_form(fid, lengths)
            assert inv.delta[0] + inv.delta[1] == inv.ell, fid

    def test_g3_ix_tau_consistent_with_engine(self):
        # the corrected tau entry; see the g3_IX_tau_as_printed probe
        lengths = _ones("g3.IX")
        inv = closed_form("g3.IX", lengths)
        assert inv.tau == Fraction(7, 20)
        assert inv.tau == invariant_set(build("g3.IX", lengths)).tau


class TestCrossCheck:
    def test_single_report(self):
        report = cross_check("g3.XIV", _ones("g3.XIV"))
        assert report.passed
        assert report.mismatches == ()

    def test_every_family_small_run(self):
        for fid in list_families():
            if family(fid).degenerate:
                continue
            passed, failure = check_family(fid, samples=4, seed=123)
            assert failure is None, (fid, failure)
            assert passed == 4

    def test_deterministic(self):
        a = check_family("g3.XIII", samples=3, seed=5)
        b = check_family("g3.XIII", samples=3, seed=5)
        assert a == b

    def test_random_lengths_bounds(self):
        rng = random.Random(1)
        lengths = random_lengths(("a", "b", "c"), rng)
        for value in lengths.values():
            assert 0 < value
            assert value.numerator <= 64
            assert value.denominator <= 64
