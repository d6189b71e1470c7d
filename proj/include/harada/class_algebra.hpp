#pragma once

// Structure constants of Z(CG) in the class-sum basis, the integer Gramian
// of the trace form, and gamma, c, mu, h.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "harada/bignum.hpp"
#include "harada/conjugacy.hpp"
#include "harada/matrix.hpp"

namespace harada {

/// One nonzero alpha_{ij}^k, stored under the pair (i, j).
struct StructureTerm {
    std::uint32_t k;
    std::uint64_t count;
};

/// [K_i][K_j] = sum_k alpha_{ij}^k [K_k], kept sparse per (i, j) in a flat
/// CSR layout.
class ClassAlgebra {
public:
    ClassAlgebra() = default;
    ClassAlgebra(std::size_t s, std::vector<std::size_t> offsets, std::vector<StructureTerm> terms)
        : s_(s), offsets_(std::move(offsets)), terms_(std::move(terms)) {
        trace_.assign(s_, 0);
        for (std::size_t k = 0; k < s_; ++k)
            for (std::size_t l = 0; l < s_; ++l) trace_[k] += alpha(k, l, l);
    }

    std::size_t class_count() const { return s_; }

    std::span<const StructureTerm> product(std::size_t i, std::size_t j) const {
        const std::size_t r = i * s_ + j;
        return {terms_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
    }

    std::uint64_t alpha(std::size_t i, std::size_t j, std::size_t k) const {
        auto row = product(i, j);
        auto it = std::lower_bound(row.begin(), row.end(), k,
                                   [](const StructureTerm& t, std::size_t key) { return t.k < key; });
        return (it != row.end() && it->k == k) ? it->count : 0;
    }

    /// T(k) = tr of multiplication by [K_k] = sum_l alpha_{kl}^l.
    std::uint64_t trace(std::size_t k) const { return trace_[k]; }
    const std::vector<std::uint64_t>& trace_vector() const { return trace_; }

private:
    std::size_t s_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<StructureTerm> terms_;
    std::vector<std::uint64_t> trace_;
};

/// alpha_{ij}^k = #{(x, y) in K_i x K_j : xy = g_k}, by scanning x over G
/// with y = x^{-1} g_k.
inline ClassAlgebra structure_constants(const FiniteGroup& g, const ClassData& cd) {
    const std::size_t s = cd.count();
    struct Triple {
        std::size_t ij;
        std::uint32_t k;
        std::uint64_t count;
    };
    std::vector<Triple> triples;
    std::vector<std::uint64_t> counts(s * s, 0);
    std::vector<std::size_t> touched;
    for (std::size_t k = 0; k < s; ++k) {
        const Element gk = cd.rep(k);
        for (Element x = 0; x < g.order(); ++x) {
            Element y = g.mul(g.inv(x), gk);
            std::size_t key = cd.class_of[x] * s + cd.class_of[y];
            if (counts[key]++ == 0) touched.push_back(key);
        }
        for (std::size_t key : touched) {
            triples.push_back({key, static_cast<std::uint32_t>(k), counts[key]});
            counts[key] = 0;
        }
        touched.clear();
    }
    std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
        return a.ij != b.ij ? a.ij < b.ij : a.k < b.k;
    });
    std::vector<std::size_t> offsets(s * s + 1, 0);
    std::vector<StructureTerm> terms;
    terms.reserve(triples.size());
    for (const auto& t : triples) {
        ++offsets[t.ij + 1];
        terms.push_back({t.k, t.count});
    }
    for (std::size_t r = 0; r < s * s; ++r) offsets[r + 1] += offsets[r];
    return ClassAlgebra(s, std::move(offsets), std::move(terms));
}

/// <[K_i] | [K_j]> = sum_k alpha_{i* j}^k T(k).
inline BigInt class_inner_product(const ClassAlgebra& ca, const ClassData& cd, std::size_t i, std::size_t j) {
    BigInt v = 0;
    for (const auto& t : ca.product(cd.inv_class[i], j)) {
        BigInt c;
        mpz_set_ui(c.get_mpz_t(), t.count);
        BigInt tr;
        mpz_set_ui(tr.get_mpz_t(), ca.trace(t.k));
        v += c * tr;
    }
    return v;
}

inline IntMatrix gram_integer(const ClassAlgebra& ca, const ClassData& cd) {
    const std::size_t s = ca.class_count();
    IntMatrix m(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) m(i, j) = class_inner_product(ca, cd, i, j);
    return m;
}

struct HaradaReport {
    BigInt gamma;
    BigInt c;
    BigRational mu;
    std::optional<BigRational> h;  // absent only on an anomaly
    bool integral = false;         // c divides gamma
    IntMatrix gram;
};

inline BigInt centralizer_product(const ClassData& cd) {
    BigInt c = 1;
    for (std::size_t o : cd.centralizer_order) c *= static_cast<unsigned long>(o);
    return c;
}

inline BigInt class_size_product(const ClassData& cd) {
    BigInt c = 1;
    for (const auto& k : cd.classes) c *= static_cast<unsigned long>(k.size());
    return c;
}

inline HaradaReport harada_report(const ClassAlgebra& ca, const ClassData& cd) {
    HaradaReport r;
    r.gram = gram_integer(ca, cd);
    r.gamma = abs(det_integer(r.gram));
    r.c = centralizer_product(cd);
    r.mu = make_rational(r.gamma, r.c);
    r.h = rational_sqrt(r.mu);
    r.integral = mpz_divisible_p(r.gamma.get_mpz_t(), r.c.get_mpz_t()) != 0;
    return r;
}

/// Everything derived from a group's conjugacy structure, computed once.
struct GroupData {
    FiniteGroup group;
    ClassData classes;
    ClassAlgebra algebra;

    explicit GroupData(FiniteGroup g)
        : group(std::move(g)), classes(conjugacy_classes(group)), algebra(structure_constants(group, classes)) {}
};

inline HaradaReport harada_report(const GroupData& gd) { return harada_report(gd.algebra, gd.classes); }

/// h(G) as an exact rational; throws anomaly if mu is not a square.
inline BigRational harada_number(const GroupData& gd) {
    HaradaReport r = harada_report(gd);
    if (!r.h) throw anomaly("mu(" + gd.group.label() + ") = " + r.mu.get_str() + " is not a rational square");
    return *r.h;
}

}  // namespace harada
