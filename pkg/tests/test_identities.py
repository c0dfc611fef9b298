from fractions import Fraction

import pytest

from pmgraph import (
    PROBE_NAMES,
    identity_names,
    named,
    verify_all,
    verify_identity,
)

ONES = {v: 1 for v in "abcdef"}


class TestNamedPolynomials:
    def test_xiv_b_listing(self):
        p = named("xiv.B")
        assert p.monomial_count() == 3
        assert p.evaluate(ONES) == 3

    def test_monomial_counts_at_ones(self):
        assert named("xiv.A").evaluate(ONES) == 12
        assert named("xiv.C").evaluate(ONES) == 16
        assert named("xiv.D").evaluate(ONES) == 48
        assert named("xiv.M").evaluate(ONES) == 48

    def test_r_and_s_vanish_at_equal_lengths(self):
        assert named("xiv.R").evaluate(ONES) == 0
        assert named("xiv.S").evaluate(ONES) == 0
        diagonal = {v: Fraction(5, 7) for v in "abcdef"}
        assert named("xiv.R").evaluate(diagonal) == 0
        assert named("xiv.S").evaluate(diagonal) == 0

    def test_ell_c_monomial_count(self):
        # expanding ell*C collapses 96 products into 48 + 36 + 12 monomials
        from pmgraph import variables

        va, vb, vc, vd, ve, vf, *_ = variables()
        product = (va + vb + vc + vd + ve + vf) * named("xiv.C")
        assert product.monomial_count() == named("xiv.D").monomial_count() + \
            named("xiv.A").monomial_count() + named("xiv.B").monomial_count()
        # counted with multiplicity: 48*1 + 12*3 + 3*4 = 96 = 6*16 products
        assert sum(product.coefficients()) == 96

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            named("xiv.Q")

    def test_viii_d_is_cubic_with_eight_terms(self):
        p = named("viii.D")
        assert p.monomial_count() == 8
        assert p.degree() == 3


class TestCertificates:
    def test_all_non_probes_pass(self):
        for cert in verify_all():
            if cert.name in PROBE_NAMES:
                continue
            assert cert.passed, (cert.name, cert.components)

    def test_probes_fail_with_witnesses(self):
        probes = [cert for cert in verify_all() if cert.probe]
        assert {cert.name for cert in probes} == set(PROBE_NAMES)
        assert len(probes) == 3
        for cert in probes:
            assert not cert.passed, cert.name
            assert cert.witness, cert.name

    def test_registry_contains_required_names(self):
        names = set(identity_names())
        required = {
            "xiv.D_equals_M",
            "xiv.ellC",
            "xiv.tau_rewrite",
            "xiv.phi_rewrite",
            "viii.H_amhm",
            "viii.phi_rewrite",
            "xiii.phi_rewrite",
            "ineq7_equiv",
            "ineq9_line2",
        }
        required |= {f"xiv.case_{label}" for label in
                     ("I", "II", "III", "IV", "V", "VI", "VII", "VIII")}
        required |= {f"xiv.T{i}_sub" for i in range(1, 9)}
        assert required <= names

    def test_unknown_identity(self):
        with pytest.raises(KeyError):
            verify_identity("nope")

    def test_t_sub_expansions_nonnegative(self):
        # coefficient-by-coefficient, not numerically
        for i in range(1, 9):
            cert = verify_identity(f"xiv.T{i}_sub")
            assert cert.passed
            labels = [comp.label for comp in cert.components]
            assert any("negative" in label for label in labels)

    def test_case_decompositions(self):
        for label in ("I", "II", "III", "IV", "V", "VI", "VII", "VIII"):
            assert verify_identity(f"xiv.case_{label}").passed

    def test_s_decomposition(self):
        assert verify_identity("xiv.S_decomposition").passed

    def test_probe_witness_values(self):
        by_name = {cert.name: cert for cert in verify_all()}
        assert "7/20" in by_name["g3_IX_tau_as_printed"].witness
        assert "-480" in by_name["ineq8_as_printed"].witness
        assert "-10/9" in by_name["ineq9_line1_as_printed"].witness
