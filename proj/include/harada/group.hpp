#pragma once

// Finite groups as dense Cayley tables, subgroups, quotients and products.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "harada/error.hpp"

namespace harada {

using Element = std::uint32_t;

/// Size caps shared by constructors and enumerators.
struct Limits {
    std::size_t max_order = 2048;
    std::size_t full_associativity_bound = 256;
    std::size_t max_subgroup_enumeration = 64;
    std::size_t oracle_max_order = 512;

    /// Defaults, with max_order overridden by HARADA_MAX_ORDER when set.
    static Limits from_environment() {
        Limits l;
        if (const char* env = std::getenv("HARADA_MAX_ORDER")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) l.max_order = v;
        }
        return l;
    }
};

/// Group law on the elements 0..n-1. Immutable once constructed; the
/// constructor checks the axioms (associativity exhaustively up to
/// Limits::full_associativity_bound, on a fixed random sample above).
class FiniteGroup {
public:
    FiniteGroup(std::size_t order, std::vector<Element> table, std::string label, const Limits& limits = {})
        : n_(order), table_(std::move(table)), label_(std::move(label)) {
        if (n_ == 0) throw invalid_input("group order must be positive");
        if (n_ > limits.max_order)
            throw cap_exceeded("group order " + std::to_string(n_) + " exceeds cap " +
                               std::to_string(limits.max_order));
        if (table_.size() != n_ * n_) throw invalid_input("multiplication table has wrong size");
        validate(limits);
    }

    std::size_t order() const { return n_; }
    Element identity() const { return identity_; }
    Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
    Element inv(Element a) const { return inverse_[a]; }
    /// g^{-1} x g
    Element conj(Element x, Element g) const { return mul(mul(inv(g), x), g); }
    Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    const std::string& label() const { return label_; }
    const std::vector<Element>& table() const { return table_; }

    Element power(Element g, long k) const {
        if (k < 0) {
            g = inv(g);
            k = -k;
        }
        Element r = identity_;
        for (long i = 0; i < k; ++i) r = mul(r, g);
        return r;
    }

    std::size_t element_order(Element g) const {
        std::size_t k = 1;
        for (Element x = g; x != identity_; x = mul(x, g)) ++k;
        return k;
    }

    bool is_abelian() const {
        for (Element a = 0; a < n_; ++a)
            for (Element b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

private:
    void validate(const Limits& limits) {
        for (Element a = 0; a < n_; ++a) {
            std::vector<bool> row(n_, false), col(n_, false);
            for (Element b = 0; b < n_; ++b) {
                Element r = mul(a, b), c = mul(b, a);
                if (r >= n_ || row[r] || c >= n_ || col[c])
                    throw invalid_input("multiplication table is not a Latin square");
                row[r] = col[c] = true;
            }
        }
        identity_ = static_cast<Element>(n_);
        for (Element e = 0; e < n_ && identity_ == n_; ++e) {
            bool ok = true;
            for (Element a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
            if (ok) identity_ = e;
        }
        if (identity_ == n_) throw invalid_input("no identity element");
        inverse_.assign(n_, 0);
        for (Element a = 0; a < n_; ++a)
            for (Element b = 0; b < n_; ++b)
                if (mul(a, b) == identity_) {
                    if (mul(b, a) != identity_) throw invalid_input("left and right inverses differ");
                    inverse_[a] = b;
                }
        if (n_ <= limits.full_associativity_bound) {
            for (Element a = 0; a < n_; ++a)
                for (Element b = 0; b < n_; ++b) {
                    Element ab = mul(a, b);
                    for (Element c = 0; c < n_; ++c)
                        if (mul(ab, c) != mul(a, mul(b, c))) throw invalid_input("multiplication is not associative");
                }
        } else {
            std::mt19937_64 rng(0x5eed);
            std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n_ - 1));
            for (int t = 0; t < 200000; ++t) {
                Element a = pick(rng), b = pick(rng), c = pick(rng);
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw invalid_input("multiplication is not associative");
            }
        }
    }

    std::size_t n_;
    std::vector<Element> table_;
    std::string label_;
    Element identity_ = 0;
    std::vector<Element> inverse_;
};

/// A subgroup, stored as its sorted member list. The parent group is
/// passed alongside wherever it is needed.
struct Subgroup {
    std::vector<Element> members;

    std::size_t order() const { return members.size(); }
    bool contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }
    /// Index of x in the sorted member list.
    std::size_t position(Element x) const {
        return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), x) - members.begin());
    }
    bool is_subset_of(const Subgroup& o) const {
        return std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
    }
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() <=> b.order();
        return a.members <=> b.members;
    }
};

inline Subgroup whole_group(const FiniteGroup& g) {
    Subgroup s;
    s.members.resize(g.order());
    std::iota(s.members.begin(), s.members.end(), Element{0});
    return s;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

/// Closure of a generating set.
inline Subgroup generate(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<Element> queue{g.identity()};
    in[g.identity()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Element s : gens) {
            Element x = g.mul(queue[i], s);
            if (!in[x]) {
                in[x] = true;
                queue.push_back(x);
            }
        }
    std::sort(queue.begin(), queue.end());
    return Subgroup{std::move(queue)};
}

/// Checks closure and identity membership; throws otherwise.
inline Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup s{std::move(members)};
    for (Element x : s.members)
        if (x >= g.order()) throw invalid_input("subgroup member out of range");
    if (!s.contains(g.identity())) throw invalid_input("subset does not contain the identity");
    for (Element a : s.members) {
        if (!s.contains(g.inv(a))) throw invalid_input("subset not closed under inverses");
        for (Element b : s.members)
            if (!s.contains(g.mul(a, b))) throw invalid_input("subset not closed under multiplication");
    }
    return s;
}

inline Subgroup center(const FiniteGroup& g) {
    Subgroup z;
    for (Element a = 0; a < g.order(); ++a) {
        bool central = true;
        for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
        if (central) z.members.push_back(a);
    }
    return z;
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Element> comms;
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) {
            Element c = g.commutator(a, b);
            if (!seen[c]) {
                seen[c] = true;
                comms.push_back(c);
            }
        }
    return generate(g, comms);
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& n) {
    for (Element x : n.members)
        for (Element h = 0; h < g.order(); ++h)
            if (!n.contains(g.conj(x, h))) return false;
    return true;
}

inline bool is_central(const FiniteGroup& g, const Subgroup& n) {
    for (Element x : n.members)
        for (Element h = 0; h < g.order(); ++h)
            if (g.mul(x, h) != g.mul(h, x)) return false;
    return true;
}

struct Quotient {
    FiniteGroup group;
    std::vector<Element> projection;  // element of G -> coset index

    Subgroup image(const Subgroup& s) const {
        std::vector<Element> m;
        for (Element x : s.members) m.push_back(projection[x]);
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        return Subgroup{std::move(m)};
    }
};

/// G/N on cosets, numbered by increasing minimal element.
inline Quotient quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {}) {
    if (!is_normal(g, n)) throw invalid_input("subgroup is not normal");
    const std::size_t order = g.order();
    std::vector<Element> proj(order, static_cast<Element>(order));
    std::vector<Element> reps;
    for (Element x = 0; x < order; ++x) {
        if (proj[x] != order) continue;
        const Element id = static_cast<Element>(reps.size());
        reps.push_back(x);
        for (Element y : n.members) proj[g.mul(x, y)] = id;
    }
    const std::size_t k = reps.size();
    std::vector<Element> table(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) table[a * k + b] = proj[g.mul(reps[a], reps[b])];
    std::string label = g.label() + "/N" + std::to_string(n.order());
    return Quotient{FiniteGroup(k, std::move(table), std::move(label), limits), std::move(proj)};
}

/// Componentwise law; (a, b) is numbered a * |H| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {},
                                  std::string label = {}) {
    const std::size_t gn = g.order(), hn = h.order(), n = gn * hn;
    if (n > limits.max_order)
        throw cap_exceeded("direct product order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(limits.max_order));
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            table[a * n + b] = static_cast<Element>(g.mul(a / hn, b / hn) * hn + h.mul(a % hn, b % hn));
    if (label.empty()) label = "prod(" + g.label() + "," + h.label() + ")";
    return FiniteGroup(n, std::move(table), std::move(label), limits);
}

/// Isomorphism between central subgroups, as explicit (source, image) pairs.
using SubgroupIsomorphism = std::map<Element, Element>;

/// (G1 x G2)/N with N = {(h, theta(h)^{-1})}. H_i must be central and theta
/// an isomorphism H1 -> H2.
inline FiniteGroup central_product(const FiniteGroup& g1, const FiniteGroup& g2, const Subgroup& h1,
                                   const Subgroup& h2, const SubgroupIsomorphism& theta,
                                   const Limits& limits = {}, std::string label = {}) {
    if (!is_central(g1, h1) || !is_central(g2, h2)) throw invalid_input("glued subgroups must be central");
    if (h1.order() != h2.order() || theta.size() != h1.order())
        throw invalid_input("theta must be defined on all of H1 and |H1| = |H2|");
    std::vector<bool> hit(g2.order(), false);
    for (auto [a, b] : theta) {
        if (!h1.contains(a) || !h2.contains(b) || hit[b]) throw invalid_input("theta is not a bijection H1 -> H2");
        hit[b] = true;
    }
    for (auto [a, fa] : theta)
        for (auto [b, fb] : theta)
            if (theta.at(g1.mul(a, b)) != g2.mul(fa, fb)) throw invalid_input("theta is not a homomorphism");
    if (label.empty()) label = "cprod(" + g1.label() + "," + g2.label() + ")";
    const std::size_t full = g1.order() * g2.order();
    if (full / h1.order() > limits.max_order)
        throw cap_exceeded("central product order exceeds cap " + std::to_string(limits.max_order));
    Limits wide = limits;
    wide.max_order = std::max(limits.max_order, full);
    FiniteGroup prod = direct_product(g1, g2, wide);
    std::vector<Element> n;
    for (auto [a, fa] : theta) n.push_back(static_cast<Element>(a * g2.order() + g2.inv(fa)));
    Quotient q = quotient(prod, make_subgroup(prod, n), limits);
    return FiniteGroup(q.group.order(), q.group.table(), std::move(label), limits);
}

/// Every subgroup of an abelian group, ordered by (order, members).
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Subgroup& z, const Limits& limits = {}) {
    if (z.order() > limits.max_subgroup_enumeration)
        throw cap_exceeded("subgroup enumeration limited to order " + std::to_string(limits.max_subgroup_enumeration));
    for (Element a : z.members)
        for (Element b : z.members)
            if (g.mul(a, b) != g.mul(b, a)) throw invalid_input("subgroup enumeration requires an abelian group");
    std::vector<Subgroup> found{trivial_subgroup(g)};
    std::map<std::vector<Element>, bool> seen{{found[0].members, true}};
    for (std::size_t i = 0; i < found.size(); ++i)
        for (Element x : z.members) {
            if (found[i].contains(x)) continue;
            std::vector<Element> gens = found[i].members;
            gens.push_back(x);
            Subgroup s = generate(g, gens);
            if (seen.emplace(s.members, true).second) found.push_back(std::move(s));
        }
    std::sort(found.begin(), found.end());
    return found;
}

/// Invariant fingerprint used in place of full isomorphism testing.
struct Fingerprint {
    std::size_t order;
    std::vector<std::size_t> class_sizes;  // sorted
    std::size_t center_order;
    std::size_t derived_order;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

}  // namespace harada
