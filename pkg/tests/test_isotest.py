import pytest

from centext.catalog import get_group, identify_group
from centext.cocycles import (
    apply_coboundary,
    are_cohomologous,
    compute_cocycle_space,
    make_cocycle,
    trivial_cocycle,
)
from centext.errors import (
    ConditionsFailed,
    GroupMismatch,
    HypothesisNotVerified,
    NotG1Iso,
    NotG2Iso,
    NotLowerIso,
    PreconditionViolated,
    SizeLimitExceeded,
)
from centext.extensions import (
    HomMatrix,
    build_extension,
    decompose_hom,
    is_homomorphism_direct,
    preserves_kernel_setwise,
    preserves_section_setwise,
    reconstruct_hom,
)
from centext.groups import (
    GroupMap,
    enumerate_automorphisms,
    enumerate_homs,
    enumerate_isomorphisms,
    identity_map,
    trivial_map,
)
from centext.isotest import (
    IsoCertificate,
    build_purely_nonabelian_iso,
    direct_to_lower,
    direct_to_upper,
    g1_isomorphic_necessary,
    g1g2_isomorphic,
    g2_isomorphic_equal_order,
    g2_isomorphic_necessary,
    lower_b2trivial,
    lower_necessary,
    lower_sufficient,
    lower_to_direct,
    oracle_iso_survey,
    simple_quotient_check,
    upper_isomorphic,
    upper_to_direct,
    verify_theorems,
)


def class_extensions(n1, n2):
    space = compute_cocycle_space(get_group(n1), get_group(n2))
    return [build_extension(rep) for rep in space.class_representatives]


def carrier_map(src, tgt, fn):
    images = tuple(tgt.index_of_pair(*fn(*src.pair_of_index(i)))
                   for i in range(src.group.order))
    return GroupMap(dom=src.group, cod=tgt.group, images=images)


@pytest.fixture(scope="module")
def z2k4():
    return class_extensions("Z2", "K4")


@pytest.fixture(scope="module")
def z2z2():
    return class_extensions("Z2", "Z2")


@pytest.fixture(scope="module")
def z3z3():
    return class_extensions("Z3", "Z3")


class TestCertificate:
    def test_unknown_kind_rejected(self, z2z2):
        with pytest.raises(ValueError):
            IsoCertificate(kind="sideways", source=z2z2[0], target=z2z2[0])

    def test_upper_certificate_dict_and_components(self, z2k4):
        cert = upper_isomorphic(z2k4[2], z2k4[3])
        assert cert is not None and cert.kind == "upper"
        d = cert.to_dict()
        assert d["kind"] == "upper"
        assert d["g1"] == 2 and d["g2"] == 4
        assert d["sigma"] is not None and d["rho"] is not None
        assert d["t"] is not None and d["delta"] is None
        m = cert.components()
        assert m.phi21.is_trivial()
        phi = cert.materialize()
        assert preserves_kernel_setwise(z2k4[2], z2k4[3], phi)


class TestUpperIsomorphic:
    def test_matches_oracle_on_every_class_pair(self, z2z2, z3z3, z2k4):
        for exts in (z2z2, z3z3, z2k4):
            for a in exts:
                for b in exts:
                    found = upper_isomorphic(a, b)
                    assert (found is not None) == oracle_iso_survey(a, b)["upper"]

    def test_distinct_classes_same_carrier_can_be_upper_isomorphic(self, z3z3):
        # the two order-9 cyclic carriers: distinct classes, linked by the
        # kernel automorphism
        assert are_cohomologous(z3z3[1].cocycle, z3z3[2].cocycle) is None
        cert = upper_isomorphic(z3z3[1], z3z3[2])
        assert cert is not None
        ident = tuple(range(3))
        assert cert.sigma.images != ident or cert.rho.images != ident

    def test_carrier_types_separate_classes(self, z2k4):
        assert upper_isomorphic(z2k4[2], z2k4[7]) is None
        assert upper_isomorphic(z2k4[0], z2k4[1]) is None

    def test_mismatched_group_pairs_rejected(self, z2z2):
        other = class_extensions("Z2", "Z4")[0]
        with pytest.raises(GroupMismatch):
            upper_isomorphic(z2z2[0], other)

    def test_direct_product_reachable_only_from_the_trivial_class(self, z2k4):
        triv = trivial_cocycle(get_group("Z2"), get_group("K4"))
        for k, e in enumerate(z2k4):
            expected = are_cohomologous(triv, e.cocycle) is not None
            assert (upper_to_direct(e) is not None) == expected
            assert (direct_to_upper(e) is not None) == expected
            assert expected == (k == 0)

    def test_upper_to_direct_certificate_lands_on_the_direct_product(self, z2z2):
        cert = upper_to_direct(z2z2[0])
        assert cert is not None
        assert cert.target.cocycle.is_trivial()
        assert cert.rho.images == tuple(range(2))


class TestLowerNecessarySufficient:
    def test_roundtrip_on_a_verified_quotient(self, z2z2):
        e = z2z2[1]
        phi = identity_map(e.group)
        cert = lower_necessary(e, e, phi)
        assert cert.kind == "lower"
        assert cert.rho.images == tuple(range(2))
        assert lower_sufficient(cert).images == phi.images

    def test_hypothesis_gate_on_an_unverified_quotient(self, z3z3):
        z3 = get_group("Z3")
        e1 = z3z3[1]
        doubled = make_cocycle(z3, z3, tuple(
            tuple((2 * v) % 3 for v in row) for row in e1.cocycle.table))
        e2 = build_extension(doubled)
        phi = carrier_map(e1, e2, lambda x, y: ((2 * x) % 3, y))
        ok, _ = is_homomorphism_direct(e1, e2, phi)
        assert ok and phi.is_bijective()
        with pytest.raises(HypothesisNotVerified):
            lower_necessary(e1, e2, phi)
        cert = lower_necessary(e1, e2, phi, assume_sim_trivial=True)
        assert cert.sigma.images == (0, 2, 1)
        assert cert.delta.is_trivial()
        assert lower_sufficient(cert).images == phi.images

    def test_rejects_non_isomorphisms_and_section_movers(self, z2z2):
        e = z2z2[0]
        with pytest.raises(NotLowerIso):
            lower_necessary(e, e, trivial_map(e.group, e.group))
        swap = carrier_map(e, e, lambda x, y: (y, x))
        assert swap.is_bijective()
        with pytest.raises(NotLowerIso):
            lower_necessary(e, e, swap)

    def test_sufficient_rejects_wrong_kind_and_missing_fields(self, z2k4):
        cert = upper_isomorphic(z2k4[2], z2k4[3])
        with pytest.raises(PreconditionViolated):
            lower_sufficient(cert)
        partial = IsoCertificate(kind="lower", source=z2k4[0],
                                 target=z2k4[0],
                                 sigma=identity_map(get_group("Z2")))
        with pytest.raises(PreconditionViolated):
            lower_sufficient(partial)

    def test_sufficient_names_the_failed_condition(self, z2k4):
        z2, k4 = get_group("Z2"), get_group("K4")
        e = z2k4[0]
        cert = IsoCertificate(kind="lower", source=e, target=e,
                              sigma=identity_map(z2),
                              rho=trivial_map(k4, k4),
                              delta=trivial_map(z2, k4))
        with pytest.raises(ConditionsFailed, match="rho_not_automorphism"):
            lower_sufficient(cert)

    def test_lower_to_direct_iff_the_cocycle_is_trivial(self, z2k4):
        verdicts = [lower_to_direct(e) for e in z2k4]
        assert verdicts == [True] + [False] * 7
        for e, v in zip(z2k4, verdicts):
            assert v == oracle_iso_survey(e, z2k4[0])["lower"]

    def test_direct_to_lower_hits_only_vanishing_tables(self, z2k4):
        assert direct_to_lower(z2k4[0]) is not None
        for e in z2k4[1:]:
            assert direct_to_lower(e) is None


class TestLowerB2Trivial:
    def test_rejects_kernels_with_nontrivial_self_coboundaries(self, z3z3):
        with pytest.raises(PreconditionViolated):
            lower_b2trivial(z3z3[0], z3z3[0])

    def test_matches_oracle_for_order_two_kernels(self, z2z2, z2k4):
        for exts in (z2z2, z2k4):
            for a in exts:
                for b in exts:
                    cert = lower_b2trivial(a, b)
                    assert (cert is not None) == oracle_iso_survey(a, b)["lower"]

    def test_certificate_is_section_preserving(self, z2k4):
        cert = lower_b2trivial(z2k4[2], z2k4[3])
        assert cert is not None
        phi = cert.materialize()
        assert preserves_section_setwise(z2k4[2], z2k4[3], phi)

    def test_isomorphic_pair_without_section_preserving_map(self, z2k4):
        # classes 1 and 5 share the carrier type but no lower isomorphism
        assert identify_group(z2k4[1].group) == identify_group(z2k4[5].group)
        assert lower_b2trivial(z2k4[1], z2k4[5]) is None
        survey = oracle_iso_survey(z2k4[1], z2k4[5])
        assert survey["plain"] and survey["upper"] and not survey["lower"]


class TestSimpleQuotientCheck:
    def test_rejects_abelian_and_non_simple_quotients(self, z2k4):
        with pytest.raises(PreconditionViolated):
            simple_quotient_check(z2k4[0], z2k4[0])
        z2, s3 = get_group("Z2"), get_group("S3")
        e = build_extension(trivial_cocycle(z2, s3))
        with pytest.raises(PreconditionViolated):
            simple_quotient_check(e, e)


class TestPurelyNonabelianBuilder:
    def test_identity_tuple_gives_the_identity(self):
        z2, q8 = get_group("Z2"), get_group("Q8")
        e = class_extensions("Z2", "Q8")[1]
        phi = build_purely_nonabelian_iso(
            identity_map(z2), trivial_map(q8, z2), trivial_map(z2, q8),
            identity_map(q8), e, e)
        assert phi.images == tuple(range(16))

    def test_every_section_to_kernel_hom_gives_a_distinct_isomorphism(self):
        z2, q8 = get_group("Z2"), get_group("Q8")
        e = build_extension(trivial_cocycle(z2, q8))
        seen = set()
        for eta in enumerate_homs(q8, z2):
            phi = build_purely_nonabelian_iso(
                identity_map(z2), eta, trivial_map(z2, q8),
                identity_map(q8), e, e)
            seen.add(phi.images)
        assert len(seen) == 4

    def test_exact_transport_automorphism_pairs(self):
        z2, q8 = get_group("Z2"), get_group("Q8")
        e = class_extensions("Z2", "Q8")[1]
        t = e.cocycle.table
        hits = 0
        for rho in enumerate_automorphisms(q8):
            if all(t[rho.images[y]][rho.images[yp]] == t[y][yp]
                   for y in range(8) for yp in range(8)):
                phi = build_purely_nonabelian_iso(
                    identity_map(z2), trivial_map(q8, z2),
                    trivial_map(z2, q8), rho, e, e)
                assert phi.is_bijective()
                hits += 1
        assert hits >= 1

    def test_central_delta_gives_a_nonobvious_isomorphism(self):
        z2, q8 = get_group("Z2"), get_group("Q8")
        e = build_extension(trivial_cocycle(z2, q8))
        delta = GroupMap(dom=z2, cod=q8, images=(0, 4))
        for eta in enumerate_homs(q8, z2):
            phi = build_purely_nonabelian_iso(
                identity_map(z2), eta, delta, identity_map(q8), e, e)
            assert phi.images != tuple(range(16))

    def test_rejects_each_violated_requirement(self):
        z2, q8 = get_group("Z2"), get_group("Q8")
        ext_q8 = class_extensions("Z2", "Q8")
        e0 = build_extension(trivial_cocycle(z2, q8))
        e1 = ext_q8[1]
        ident1, ident2 = identity_map(z2), identity_map(q8)
        eta0, delta0 = trivial_map(q8, z2), trivial_map(z2, q8)

        k4 = class_extensions("Z2", "K4")[0]
        with pytest.raises(PreconditionViolated, match="purely non-abelian"):
            build_purely_nonabelian_iso(
                ident1, trivial_map(get_group("K4"), z2),
                trivial_map(z2, get_group("K4")),
                identity_map(get_group("K4")), k4, k4)
        with pytest.raises(PreconditionViolated, match="sigma"):
            build_purely_nonabelian_iso(trivial_map(z2, z2), eta0, delta0,
                                        ident2, e0, e0)
        bad_eta = GroupMap(dom=q8, cod=z2, images=(0, 1, 1, 1, 1, 1, 1, 1))
        with pytest.raises(PreconditionViolated, match="eta"):
            build_purely_nonabelian_iso(ident1, bad_eta, delta0,
                                        ident2, e0, e0)
        bad_delta = GroupMap(dom=z2, cod=q8, images=(0, 1))
        with pytest.raises(PreconditionViolated, match="delta is not"):
            build_purely_nonabelian_iso(ident1, eta0, bad_delta,
                                        ident2, e0, e0)
        with pytest.raises(PreconditionViolated, match="rho"):
            build_purely_nonabelian_iso(ident1, eta0, delta0,
                                        trivial_map(q8, q8), e0, e0)

        central = GroupMap(dom=z2, cod=q8, images=(0, 4))
        d4_exts = class_extensions("Z2", "D4")
        d4 = get_group("D4")
        e_d4_triv = build_extension(trivial_cocycle(z2, d4))
        with pytest.raises(PreconditionViolated,
                           match="does not vanish on the delta image"):
            build_purely_nonabelian_iso(
                ident1, trivial_map(d4, z2), GroupMap(dom=z2, cod=d4,
                                                      images=(0, 4)),
                identity_map(d4), e_d4_triv, d4_exts[2])
        with pytest.raises(PreconditionViolated, match="kill the source"):
            build_purely_nonabelian_iso(ident1, eta0, central,
                                        ident2, e1, e0)
        s3 = get_group("S3")
        e_s3 = build_extension(trivial_cocycle(z2, s3))
        transposition = GroupMap(dom=z2, cod=s3, images=(0, 1))
        assert transposition.is_homomorphism()
        with pytest.raises(PreconditionViolated, match="commute"):
            build_purely_nonabelian_iso(
                ident1, trivial_map(s3, z2), transposition,
                identity_map(s3), e_s3, e_s3)
        with pytest.raises(PreconditionViolated, match="transport"):
            build_purely_nonabelian_iso(ident1, eta0, delta0,
                                        ident2, e1, e0)

    def test_non_injective_configuration_is_rejected_but_materializes(self):
        # all four components the identity on an exponent-two pair: the
        # assembled map is a homomorphism that kills the diagonal, so the
        # builder must refuse the abelian quotient outright
        k4 = get_group("K4")
        e = build_extension(trivial_cocycle(k4, k4))
        ident = identity_map(k4)
        with pytest.raises(PreconditionViolated, match="purely non-abelian"):
            build_purely_nonabelian_iso(ident, ident, ident, ident, e, e)
        m = HomMatrix(source=e, target=e, phi11=ident, phi12=ident,
                      phi21=ident, phi22=ident)
        phi = reconstruct_hom(m)
        ok, _ = is_homomorphism_direct(e, e, phi)
        assert ok
        assert not phi.is_bijective()
        for x in range(4):
            assert phi.images[e.index_of_pair(x, x)] == 0

    def test_inversion_configuration_on_order_four_cyclic_pair(self):
        z4 = get_group("Z4")
        e = build_extension(trivial_cocycle(z4, z4))
        ident = identity_map(z4)
        inv = GroupMap(dom=z4, cod=z4, images=(0, 3, 2, 1))
        m = HomMatrix(source=e, target=e, phi11=ident, phi12=inv,
                      phi21=inv, phi22=ident)
        phi = reconstruct_hom(m)
        ok, _ = is_homomorphism_direct(e, e, phi)
        assert ok
        assert not phi.is_bijective()
        for x in range(4):
            assert phi.images[e.index_of_pair(x, x)] == 0


class TestG2Isomorphic:
    def test_necessary_certificate_on_a_projection_swap(self):
        z4, z2 = get_group("Z4"), get_group("Z2")
        e1 = build_extension(make_cocycle(z4, z2, ((0, 0), (0, 2))))
        e2 = build_extension(trivial_cocycle(z4, z2))
        phi = GroupMap(dom=e1.group, cod=e2.group,
                       images=(0, 2, 3, 5, 4, 6, 7, 1))
        ok, _ = is_homomorphism_direct(e1, e2, phi)
        assert ok and phi.is_bijective()
        cert = g2_isomorphic_necessary(e1, e2, phi)
        assert cert.kind == "g2"
        assert cert.delta.images == (0, 1, 0, 1)
        assert len(set(cert.eta.images)) == 2
        assert cert.materialize().images == phi.images

    def test_rejects_nontrivial_section_component_and_non_isos(self, z2z2):
        e = z2z2[0]
        with pytest.raises(NotG2Iso):
            g2_isomorphic_necessary(e, e, identity_map(e.group))
        with pytest.raises(NotG2Iso):
            g2_isomorphic_necessary(e, e, trivial_map(e.group, e.group))

    def test_nonabelian_quotients_never_admit_one(self):
        z2, s3 = get_group("Z2"), get_group("S3")
        e = build_extension(trivial_cocycle(z2, s3))
        for phi in enumerate_isomorphisms(e.group, e.group):
            assert not decompose_hom(e, e, phi).phi22.is_trivial()

    def test_equal_order_decision_matches_oracle(self, z2z2, z3z3):
        for exts in (z2z2, z3z3):
            for a in exts:
                for b in exts:
                    cert = g2_isomorphic_equal_order(a, b)
                    assert (cert is not None) == oracle_iso_survey(a, b)["g2"]

    def test_equal_order_requires_abelian_factors_of_equal_size(self, z2k4):
        with pytest.raises(PreconditionViolated):
            g2_isomorphic_equal_order(z2k4[0], z2k4[0])

    def test_equal_order_needs_a_trivial_source_class(self, z2z2):
        assert g2_isomorphic_equal_order(z2z2[1], z2z2[1]) is None
        assert g2_isomorphic_equal_order(z2z2[1], z2z2[0]) is None

    def test_equal_order_accepts_a_coboundary_target(self):
        z4 = get_group("Z4")
        t = GroupMap(dom=z4, cod=z4, images=(0, 1, 0, 0))
        shifted = apply_coboundary(t, trivial_cocycle(z4, z4))
        assert not shifted.is_trivial()
        e1 = build_extension(trivial_cocycle(z4, z4))
        e2 = build_extension(shifted)
        cert = g2_isomorphic_equal_order(e1, e2)
        assert cert is not None
        assert cert.t_witness is not None
        cert.materialize()


class TestG1Isomorphic:
    def test_coordinate_swap_certificate(self, z2z2):
        e = z2z2[0]
        swap = carrier_map(e, e, lambda x, y: (y, x))
        cert = g1_isomorphic_necessary(e, e, swap)
        assert cert.kind == "g1"
        assert cert.delta.images == (0, 1)
        assert cert.eta.images == (0, 1)
        assert cert.rho.is_trivial()
        assert cert.materialize().images == swap.images

    def test_hypothesis_gate_on_an_unverified_quotient(self, z3z3):
        e = z3z3[0]
        swap = carrier_map(e, e, lambda x, y: (y, x))
        with pytest.raises(HypothesisNotVerified):
            g1_isomorphic_necessary(e, e, swap)
        cert = g1_isomorphic_necessary(e, e, swap, assume_sim_trivial=True)
        assert cert.kind == "g1"

    def test_rejects_nontrivial_kernel_component_and_non_isos(self, z2z2):
        e = z2z2[0]
        with pytest.raises(NotG1Iso):
            g1_isomorphic_necessary(e, e, identity_map(e.group))
        with pytest.raises(NotG1Iso):
            g1_isomorphic_necessary(e, e, trivial_map(e.group, e.group))

    def test_nontrivial_source_class_blocks_the_kind(self, z2k4):
        for i in (0, 1, 2):
            for j in (0, 1, 2):
                expected = (i, j) == (0, 0)
                assert oracle_iso_survey(z2k4[i], z2k4[j])["g1"] == expected


class TestG1G2Isomorphic:
    def test_swap_on_a_direct_product(self, z2z2):
        cert = g1g2_isomorphic(z2z2[0], z2z2[0])
        assert cert is not None and cert.kind == "g1g2"
        phi = cert.materialize()
        m = decompose_hom(z2z2[0], z2z2[0], phi)
        assert m.phi11.is_trivial() and m.phi22.is_trivial()

    def test_matches_oracle_on_small_pairs(self, z2z2, z3z3):
        for exts in (z2z2, z3z3):
            for a in exts:
                for b in exts:
                    cert = g1g2_isomorphic(a, b)
                    assert (cert is not None) == oracle_iso_survey(a, b)["g1g2"]

    def test_requires_exact_vanishing_not_class_triviality(self):
        z4 = get_group("Z4")
        t = GroupMap(dom=z4, cod=z4, images=(0, 1, 0, 0))
        shifted = apply_coboundary(t, trivial_cocycle(z4, z4))
        e1 = build_extension(trivial_cocycle(z4, z4))
        e2 = build_extension(shifted)
        assert g1g2_isomorphic(e1, e2) is None
        assert not oracle_iso_survey(e1, e2)["g1g2"]
        assert oracle_iso_survey(e1, e2)["plain"]

    def test_unequal_factor_orders_are_absent(self, z2k4):
        assert g1g2_isomorphic(z2k4[0], z2k4[0]) is None


class TestOracleSurvey:
    def test_frozen_self_pair_profiles(self, z2z2):
        s0 = oracle_iso_survey(z2z2[0], z2z2[0])
        assert s0["isomorphism_count"] == 6
        assert all(s0[k] for k in
                   ("plain", "upper", "lower", "g1", "g2", "g1g2"))
        s1 = oracle_iso_survey(z2z2[1], z2z2[1])
        assert s1["isomorphism_count"] == 2
        assert s1["plain"] and s1["upper"] and s1["lower"]
        assert not (s1["g1"] or s1["g2"] or s1["g1g2"])


class TestVerifyTheorems:
    def test_default_catalog_is_clean(self):
        report = verify_theorems()
        assert report["checked_class_pairs"] == 81
        assert report["discrepancies"] == []
        assert report["logged_observations"] == []
        assert len(report["pairs"]) == 4

    def test_size_gate(self):
        with pytest.raises(SizeLimitExceeded):
            verify_theorems(pairs=[("Z2", "K4")], max_order=4)

    def test_single_tiny_pair(self):
        report = verify_theorems(pairs=[("Z1", "Z2")])
        assert report["checked_class_pairs"] == 1
        assert report["discrepancies"] == []
