#include <gtest/gtest.h>

#include "harada/harada.hpp"
#include "suite.hpp"

using namespace harada;

namespace {

GroupData data(const std::string& text) { return GroupData(build_group(parse_group_spec(text))); }

// D6 classes in canonical order: {e}, rotations (size 2), reflections (size 3).
constexpr std::size_t kRot = 1, kRef = 2;

}  // namespace

TEST(StructureConstants, DihedralSix) {
    GroupData d6 = data("D 6");
    ASSERT_EQ(d6.classes.size(kRot), 2u);
    ASSERT_EQ(d6.classes.size(kRef), 3u);
    EXPECT_EQ(d6.algebra.alpha(kRot, kRot, 0), 2u);
    EXPECT_EQ(d6.algebra.alpha(kRot, kRot, kRot), 1u);
    EXPECT_EQ(d6.algebra.alpha(kRot, kRot, kRef), 0u);
    EXPECT_EQ(d6.algebra.alpha(kRef, kRef, 0), 3u);
    EXPECT_EQ(d6.algebra.alpha(kRef, kRef, kRot), 3u);
    EXPECT_EQ(d6.algebra.alpha(kRef, kRef, kRef), 0u);
}

TEST(StructureConstants, TrivialGroup) {
    GroupData c1 = data("C 1");
    EXPECT_EQ(c1.algebra.alpha(0, 0, 0), 1u);
    EXPECT_EQ(c1.algebra.trace(0), 1u);
}

TEST(StructureConstants, IdentitiesOnSuite) {
    for (const auto& gd : suite::groups()) {
        const std::size_t s = gd.classes.count();
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                std::uint64_t total = 0;
                for (std::size_t k = 0; k < s; ++k) {
                    total += gd.algebra.alpha(i, j, k) * gd.classes.size(k);
                    EXPECT_EQ(gd.algebra.alpha(i, j, k), gd.algebra.alpha(j, i, k));
                }
                EXPECT_EQ(total, gd.classes.size(i) * gd.classes.size(j)) << gd.group.label();
                EXPECT_EQ(gd.algebra.alpha(i, 0, j), i == j ? 1u : 0u);
            }
    }
}

TEST(StructureConstants, TraceOfIdentityIsClassCount) {
    for (const auto& gd : suite::groups()) EXPECT_EQ(gd.algebra.trace(0), gd.classes.count());
}

TEST(Gram, Examples) {
    GroupData d6 = data("D 6");
    IntMatrix g = gram_integer(d6.algebra, d6.classes);
    std::vector<std::vector<long>> want{{3, 3, 0}, {3, 9, 0}, {0, 0, 18}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(g(i, j), want[i][j]);
    GroupData c1 = data("C 1");
    EXPECT_EQ(gram_integer(c1.algebra, c1.classes)(0, 0), 1);
    GroupData q8 = data("Q 8");
    EXPECT_EQ(det_integer(gram_integer(q8.algebra, q8.classes)), 65536);
}

TEST(Gram, PositiveDefiniteAndConjugationSymmetric) {
    for (const auto& gd : suite::groups()) {
        IntMatrix g = gram_integer(gd.algebra, gd.classes);
        EXPECT_TRUE(leading_minors_positive(g)) << gd.group.label();
        const auto& inv = gd.classes.inv_class;
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j) {
                EXPECT_GE(g(i, j), 0);
                EXPECT_EQ(g(i, j), g(inv[i], inv[j]));
                // Hermitian with integer entries, hence symmetric
                EXPECT_EQ(g(i, j), g(j, i));
            }
    }
}

TEST(Invariants, Examples) {
    HaradaReport d6 = harada_report(data("D 6"));
    EXPECT_EQ(d6.gamma, 324);
    EXPECT_EQ(d6.c, 36);
    EXPECT_EQ(d6.mu, 9);
    EXPECT_EQ(*d6.h, 3);
    EXPECT_TRUE(d6.integral);
    HaradaReport a = harada_report(data("C 2,4"));
    EXPECT_EQ(a.gamma, pow(BigInt(8), 8ul));
    EXPECT_EQ(a.gamma, a.c);
    EXPECT_EQ(*a.h, 1);
    EXPECT_EQ(harada_number(data("SD 4")), 16);
}

TEST(Invariants, ReportInvariantsOnSuite) {
    for (const auto& gd : suite::groups()) {
        HaradaReport r = harada_report(gd);
        EXPECT_GT(r.gamma, 0);
        EXPECT_EQ(r.mu * BigRational(r.c), BigRational(r.gamma));
        ASSERT_TRUE(r.h.has_value()) << gd.group.label();
        EXPECT_EQ(*r.h * *r.h, r.mu);
        EXPECT_EQ(r.integral, is_integer(r.mu));
        EXPECT_GT(*r.h, 0);
    }
}

TEST(DirectProductClaim, Examples) {
    GroupData d6 = data("D 6"), c2 = data("C 2"), c1 = data("C 1");
    auto r = verify_direct_product(d6, c2);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, "81");
    EXPECT_TRUE(verify_direct_product(d6, c1).pass);
    EXPECT_EQ(verify_direct_product(d6, c1).lhs, "9");
    auto dd = verify_direct_product(d6, d6);
    EXPECT_TRUE(dd.pass);
    EXPECT_EQ(dd.lhs, pow(BigInt(9), 6ul).get_str());
}

TEST(DirectProductClaim, SuitePairs) {
    std::vector<std::string> small{"C 3", "S 3", "Q 8", "D 10", "A 4", "M 2 3"};
    for (const auto& a : small)
        for (const auto& b : small) EXPECT_TRUE(verify_direct_product(data(a), data(b)).pass) << a << " x " << b;
}
