#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "harada/harada.hpp"
#include "suite.hpp"

using namespace harada;

namespace {

GroupData data(const std::string& text) { return GroupData(build_group(parse_group_spec(text))); }

std::size_t faithful_index(const CentralAnalysis& ca) {
    for (std::size_t i = 0; i < ca.reports.size(); ++i)
        if (ca.reports[i].phi.is_faithful()) return i;
    throw std::logic_error("no faithful character");
}

Subgroup subgroup_of_order(const GroupData& gd, const Subgroup& z, std::size_t order) {
    for (const auto& s : all_subgroups(gd.group, z))
        if (s.order() == order) return s;
    throw std::logic_error("no subgroup of that order");
}

// Every (G, Z) pair used by the property tests: the full center and
// each of its subgroups, for suite groups with a small center.
template <class F>
void for_each_central_pair(F&& f) {
    for (const auto& gd : suite::groups()) {
        Subgroup zg = center(gd.group);
        if (zg.order() > 16) continue;
        for (const auto& z : all_subgroups(gd.group, zg)) f(gd, z);
    }
}

}  // namespace

TEST(IrrCharacters, Examples) {
    GroupData c1 = data("C 1");
    EXPECT_EQ(irr_characters(c1.group, whole_group(c1.group)).size(), 1u);

    GroupData c2 = data("C 2");
    auto ch = irr_characters(c2.group, whole_group(c2.group));
    ASSERT_EQ(ch.size(), 2u);
    EXPECT_TRUE(ch[0].is_trivial());
    EXPECT_EQ(ch[1].value(1).as_rational(), BigRational(-1));

    GroupData v = data("C 2,2");
    auto cv = irr_characters(v.group, whole_group(v.group));
    ASSERT_EQ(cv.size(), 4u);
    for (const auto& phi : cv)
        for (Element z : phi.domain.members) {
            auto q = phi.value(z).as_rational();
            ASSERT_TRUE(q.has_value());
            EXPECT_TRUE(*q == 1 || *q == -1);
        }
    GroupData s3 = data("S 3");
    EXPECT_THROW(irr_characters(s3.group, whole_group(s3.group)), invalid_input);
}

TEST(IrrCharacters, HomomorphismsWithCorrectKernels) {
    for (const char* t : {"C 12", "C 2,4", "C 4,4", "C 2,2,2", "C 3,3", "M 2 4", "C 2,2,4"}) {
        GroupData gd = data(t);
        Subgroup z = center(gd.group);
        auto chars = irr_characters(gd.group, z);
        EXPECT_EQ(chars.size(), z.order());
        EXPECT_TRUE(chars[0].is_trivial());
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const auto& phi = chars[i];
            std::vector<Element> ker;
            for (Element a : z.members) {
                if (phi.exponent(a) == 0) ker.push_back(a);
                for (Element b : z.members)
                    EXPECT_EQ(phi.value(gd.group.mul(a, b)), phi.value(a) * phi.value(b));
            }
            EXPECT_EQ(ker, phi.kernel.members);
            for (std::size_t j = 0; j < i; ++j) EXPECT_NE(chars[j].exponents, phi.exponents);
            std::size_t inv = inverse_character_index(chars, i);
            for (Element a : z.members) EXPECT_EQ(chars[inv].value(a), phi.value(a).conjugate());
        }
    }
}

TEST(ZOrbits, Examples) {
    GroupData d16 = data("D 16");
    ZOrbitData od = z_orbit_data(d16, center(d16.group));
    EXPECT_EQ(od.stratum_size(trivial_subgroup(d16.group)), 2u);
    EXPECT_EQ(od.stratum_size(center(d16.group)), 3u);

    GroupData a = data("C 2,4");
    Subgroup z = subgroup_of_order(a, whole_group(a.group), 2);
    ZOrbitData oa = z_orbit_data(a, z);
    EXPECT_EQ(oa.stratum_size(trivial_subgroup(a.group)), 4u);
    EXPECT_EQ(oa.stratum_size(z), 0u);

    for (unsigned n : {3u, 5u, 7u}) {
        GroupData q = data("Q " + std::to_string(4 * n));
        ZOrbitData oq = z_orbit_data(q, center(q.group));
        EXPECT_EQ(oq.stratum_size(center(q.group)), 0u) << n;
    }
    GroupData s3 = data("S 3");
    EXPECT_THROW(z_orbit_data(s3, whole_group(s3.group)), invalid_input);
}

TEST(ZOrbits, PartitionAnnihilatorsAndLemmaOnStrata) {
    for_each_central_pair([](const GroupData& gd, const Subgroup& z) {
        ZOrbitData od = z_orbit_data(gd, z);
        const std::size_t s = gd.classes.count();
        std::size_t covered = 0;
        for (std::size_t n = 0; n < od.subgroups.size(); ++n)
            covered += od.strata[n].size() * (z.order() / od.subgroups[n].order());
        EXPECT_EQ(covered, s) << gd.group.label();

        for (std::size_t o = 0; o < od.orbit_reps.size(); ++o) {
            const std::size_t k = od.orbit_reps[o];
            for (std::size_t p = 0; p < z.order(); ++p)
                EXPECT_EQ(od.subgroups[od.ann[o]].contains(z.members[p]), od.translate(p, k) == k);
            EXPECT_EQ(od.orbit_members(o).size() * od.subgroups[od.ann[o]].order(), z.order());
        }

        // sum_{X <= N} |I(G:Z)_X| = |I(G/N : Z/N)_1|
        for (const auto& n : od.subgroups) {
            std::size_t lhs = 0;
            for (std::size_t x = 0; x < od.subgroups.size(); ++x)
                if (od.subgroups[x].is_subset_of(n)) lhs += od.strata[x].size();
            Quotient q = quotient(gd.group, n);
            Subgroup zb = q.image(z);
            GroupData qd(std::move(q.group));
            ZOrbitData qo = z_orbit_data(qd, zb);
            EXPECT_EQ(lhs, qo.stratum_size(trivial_subgroup(qd.group))) << gd.group.label();
        }
    });
}

TEST(GramPhi, Examples) {
    GroupData d16 = data("D 16");
    CentralAnalysis ca = analyze_central(d16, center(d16.group));
    const PhiReport& f = ca.reports[faithful_index(ca)];
    ASSERT_EQ(f.gram.dim(), 2u);
    std::vector<BigRational> diag{*f.gram(0, 0).as_rational(), *f.gram(1, 1).as_rational()};
    std::sort(diag.begin(), diag.end());
    EXPECT_EQ(diag, (std::vector<BigRational>{2, 4}));
    EXPECT_TRUE(f.gram(0, 1).is_zero());
    EXPECT_EQ(f.gamma_phi.as_rational(), BigRational(8));

    // Z = {1}: the integer Gram matrix
    for (const char* t : {"S 4", "Q 8", "M 3 3"}) {
        GroupData gd = data(t);
        CentralAnalysis triv = analyze_central(gd, trivial_subgroup(gd.group));
        IntMatrix g = gram_integer(gd.algebra, gd.classes);
        const auto& r = triv.reports[0];
        ASSERT_EQ(r.gram.dim(), g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j)
                EXPECT_EQ(r.gram(i, j).as_rational(), BigRational(g(r.basis[i], r.basis[j])));
        EXPECT_EQ(r.mu_phi.as_rational(), harada_report(gd).mu);
    }

    GroupData c4 = data("C 4");
    Subgroup z2 = subgroup_of_order(c4, whole_group(c4.group), 2);
    CentralAnalysis cc = analyze_central(c4, z2);
    const PhiReport& fc = cc.reports[faithful_index(cc)];
    ASSERT_EQ(fc.gram.dim(), 2u);
    EXPECT_EQ(fc.gram(0, 0).as_rational(), BigRational(2));
    EXPECT_EQ(fc.gram(1, 1).as_rational(), BigRational(2));
    EXPECT_TRUE(fc.gram(0, 1).is_zero());
}

TEST(RefinedInvariants, DihedralAndSemidihedralValues) {
    for (unsigned q : {1u, 2u, 3u}) {
        GroupData d = data("D " + std::to_string(8 * q));
        CentralAnalysis ca = analyze_central(d, center(d.group));
        EXPECT_EQ(ca.reports[faithful_index(ca)].mu_phi.as_rational(), make_rational(1, 4)) << q;
    }
    for (unsigned n = 4; n <= 6; ++n) {
        GroupData sd = data("SD " + std::to_string(n));
        CentralAnalysis ca = analyze_central(sd, center(sd.group));
        const PhiReport& f = ca.reports[faithful_index(ca)];
        const unsigned long q = 1ul << (n - 2);
        BigInt qq = pow(BigInt(q), q / 2);
        EXPECT_EQ(f.gamma_phi.as_rational(), make_rational(qq, 2));
        EXPECT_EQ(f.c_phi, BigRational(2 * qq));
        EXPECT_EQ(f.mu_phi.as_rational(), make_rational(1, 4));
    }
}

TEST(RefinedInvariants, AbelianGroupsHaveUnitMu) {
    for (const char* t : {"C 6", "C 2,4", "C 2,2,2", "C 4,4", "C 3,3"}) {
        GroupData a = data(t);
        for (const auto& z : all_subgroups(a.group, whole_group(a.group))) {
            CentralAnalysis ca = analyze_central(a, z);
            const std::size_t quotient_order = a.group.order() / z.order();
            for (const auto& r : ca.reports) {
                EXPECT_EQ(r.mu_phi.as_rational(), BigRational(1));
                EXPECT_EQ(r.gamma_phi.as_rational(), BigRational(pow(BigInt(quotient_order), quotient_order)));
            }
        }
    }
}

TEST(RefinedInvariants, KappaDefinition) {
    GroupData d16 = data("D 16");
    CentralAnalysis ca = analyze_central(d16, center(d16.group));
    EXPECT_EQ(kappa(ca.orbits, center(d16.group)), 8);
    EXPECT_EQ(kappa(ca.orbits, trivial_subgroup(d16.group)), 1);
}

TEST(InducedCharacter, Examples) {
    GroupData c4 = data("C 4");
    auto chars = irr_characters(c4.group, whole_group(c4.group));
    InducedCharacter triv = induced_character(c4.group, chars[0]);
    EXPECT_EQ(triv.quotient.group.order(), 1u);
    EXPECT_EQ(triv.phi_bar.domain.order(), 1u);
    for (const auto& phi : chars) {
        InducedCharacter ind = induced_character(c4.group, phi);
        EXPECT_TRUE(ind.phi_bar.is_faithful());
        EXPECT_EQ(ind.phi_bar.domain.order(), phi.order());
        for (Element z : phi.domain.members)
            EXPECT_EQ(ind.phi_bar.value(ind.quotient.projection[z]).to_complex(), phi.value(z).to_complex());
        if (phi.order() == 2) {
            EXPECT_EQ(phi.kernel.order(), 2u);
            EXPECT_EQ(ind.quotient.group.order(), 2u);
        }
        if (phi.is_faithful()) EXPECT_EQ(ind.quotient.group.order(), 4u);
    }
}

TEST(CentralProperties, VanishingOutsideTheBasis) {
    for_each_central_pair([](const GroupData& gd, const Subgroup& z) {
        CentralAnalysis ca = analyze_central(gd, z);
        for (const auto& r : ca.reports) {
            auto traces = phi_traces(gd, ca.orbits, r.phi);
            for (std::size_t o = 0; o < ca.orbits.orbit_reps.size(); ++o) {
                if (ca.orbits.subgroups[ca.orbits.ann[o]].is_subset_of(r.phi.kernel)) continue;
                const std::size_t k = ca.orbits.orbit_reps[o];
                for (std::size_t j = 0; j < gd.classes.count(); ++j)
                    EXPECT_TRUE(phi_inner_product(gd, traces, r.phi.conductor, k, j).is_zero()) << gd.group.label();
            }
        }
    });
}

TEST(CentralProperties, DimensionMatchesQuotient) {
    for_each_central_pair([](const GroupData& gd, const Subgroup& z) {
        CentralAnalysis ca = analyze_central(gd, z);
        for (const auto& r : ca.reports) {
            InducedCharacter ind = induced_character(gd.group, r.phi);
            GroupData qd(std::move(ind.quotient.group));
            ZOrbitData qo = z_orbit_data(qd, ind.z_bar);
            EXPECT_EQ(r.basis.size(), qo.stratum_size(trivial_subgroup(qd.group))) << gd.group.label();
        }
    });
}

TEST(CentralProperties, BasisChoiceIndependence) {
    std::mt19937_64 rng(20240607);
    for_each_central_pair([&](const GroupData& gd, const Subgroup& z) {
        CentralAnalysis ca = analyze_central(gd, z);
        for (const auto& r : ca.reports)
            for (int trial = 0; trial < 10; ++trial) {
                auto basis = random_phi_basis(ca.orbits, r.phi, rng);
                EXPECT_EQ(gamma_phi(gd, ca.orbits, r.phi, basis), r.gamma_phi) << gd.group.label();
            }
    });
}

TEST(CentralProperties, ConjugateCharactersAgree) {
    for_each_central_pair([](const GroupData& gd, const Subgroup& z) {
        CentralAnalysis ca = analyze_central(gd, z);
        for (std::size_t i = 0; i < ca.reports.size(); ++i) {
            const auto& r = ca.reports[i];
            const auto& s = ca.reports[inverse_character_index(ca.characters, i)];
            EXPECT_EQ(r.gamma_phi, s.gamma_phi);
            EXPECT_TRUE(r.gamma_phi.to_complex().real() > 0);
            EXPECT_TRUE(r.c_phi > 0);
            EXPECT_TRUE(r.c_phi_integral) << gd.group.label();
        }
    });
}

TEST(CentralProperties, IndexBookkeepingAndFactorization) {
    for_each_central_pair([](const GroupData& gd, const Subgroup& z) {
        for (const auto& v : verify_factorization(gd, analyze_central(gd, z)))
            EXPECT_TRUE(v.pass) << v.description << " " << v.context << " " << v.lhs << " vs " << v.rhs;
    });
}
