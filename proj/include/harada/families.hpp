#pragma once

// Family constructors. Metacyclic families (dihedral, generalized
// quaternion, semidihedral, M(p^d)) use the normal form x^a y^b; symmetric,
// alternating and user-supplied groups are closures of permutations.

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "harada/conjugacy.hpp"
#include "harada/group.hpp"

namespace harada {

/// Permutation of 0..d-1 in image form: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

struct GroupSpec;

namespace spec {
struct Cyclic { unsigned n; };
struct AbelianProduct { std::vector<unsigned> factors; };
struct Dihedral { unsigned order; };      // Dih_{2n}, order 2n
struct Quaternion { unsigned order; };    // Q_{4n}, order 4n
struct SemiDihedral { unsigned exponent; };  // SD_{2^k}
struct ModularM { unsigned p; unsigned d; };  // M(p^d)
struct Symmetric { unsigned n; };
struct Alternating { unsigned n; };
struct PermGenerated { std::vector<Permutation> generators; };
struct DirectProduct { std::shared_ptr<const GroupSpec> left, right; };
/// Glue data: generators of H1 <= G1 and H2 <= G2 of equal prime order,
/// theta maps first^k to second^k. Absent means "the unique central
/// subgroup of prime order in each factor".
struct CentralProduct {
    std::shared_ptr<const GroupSpec> left, right;
    std::optional<std::pair<Element, Element>> glue;
};
}  // namespace spec

struct GroupSpec {
    std::variant<spec::Cyclic, spec::AbelianProduct, spec::Dihedral, spec::Quaternion, spec::SemiDihedral,
                 spec::ModularM, spec::Symmetric, spec::Alternating, spec::PermGenerated, spec::DirectProduct,
                 spec::CentralProduct>
        kind;
};

inline GroupSpec make_direct(GroupSpec a, GroupSpec b) {
    return GroupSpec{spec::DirectProduct{std::make_shared<const GroupSpec>(std::move(a)),
                                         std::make_shared<const GroupSpec>(std::move(b))}};
}

inline GroupSpec make_central(GroupSpec a, GroupSpec b, std::optional<std::pair<Element, Element>> glue = {}) {
    return GroupSpec{spec::CentralProduct{std::make_shared<const GroupSpec>(std::move(a)),
                                          std::make_shared<const GroupSpec>(std::move(b)), glue}};
}

/// Canonical text form, accepted back by parse_group_spec.
inline std::string to_text(const GroupSpec& s) {
    struct V {
        std::string operator()(const spec::Cyclic& c) const { return "C " + std::to_string(c.n); }
        std::string operator()(const spec::AbelianProduct& a) const {
            std::string r = "C ";
            for (std::size_t i = 0; i < a.factors.size(); ++i) r += (i ? "," : "") + std::to_string(a.factors[i]);
            return r;
        }
        std::string operator()(const spec::Dihedral& d) const { return "D " + std::to_string(d.order); }
        std::string operator()(const spec::Quaternion& q) const { return "Q " + std::to_string(q.order); }
        std::string operator()(const spec::SemiDihedral& s) const { return "SD " + std::to_string(s.exponent); }
        std::string operator()(const spec::ModularM& m) const {
            return "M " + std::to_string(m.p) + " " + std::to_string(m.d);
        }
        std::string operator()(const spec::Symmetric& s) const { return "S " + std::to_string(s.n); }
        std::string operator()(const spec::Alternating& a) const { return "A " + std::to_string(a.n); }
        std::string operator()(const spec::PermGenerated& p) const {
            std::string r = "perm \"";
            for (std::size_t g = 0; g < p.generators.size(); ++g) {
                if (g) r += ";";
                const auto& perm = p.generators[g];
                std::vector<bool> seen(perm.size(), false);
                bool any = false;
                for (std::size_t i = 0; i < perm.size(); ++i) {
                    if (seen[i] || perm[i] == i) continue;
                    any = true;
                    r += "(";
                    for (std::size_t j = i; !seen[j]; j = perm[j]) {
                        seen[j] = true;
                        r += (j == i ? "" : " ") + std::to_string(j + 1);
                    }
                    r += ")";
                }
                if (!any) r += "()";
            }
            return r + "\"";
        }
        std::string operator()(const spec::DirectProduct& d) const {
            return "prod(" + to_text(*d.left) + "," + to_text(*d.right) + ")";
        }
        std::string operator()(const spec::CentralProduct& c) const {
            return "cprod(" + to_text(*c.left) + "," + to_text(*c.right) + ")";
        }
    };
    return std::visit(V{}, s.kind);
}

namespace detail {

inline long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long mod_inverse(long a, long m) {
    if (m == 1) return 0;
    for (long x = 1; x < m; ++x)
        if (mod(a * x, m) == 1) return x;
    throw invalid_input("exponent is not invertible modulo the order of x");
}

/// <x, y | x^m = 1, y^k = x^t, y^{-1} x y = x^r> on normal forms x^a y^b,
/// numbered a * k + b.
inline FiniteGroup metacyclic(long m, long k, long t, long r, std::string label, const Limits& limits) {
    const std::size_t n = static_cast<std::size_t>(m * k);
    if (n > limits.max_order)
        throw cap_exceeded("group order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_order));
    const long s = mod_inverse(mod(r, m), m);  // y x y^{-1} = x^s
    std::vector<long> spow(static_cast<std::size_t>(k), 1 % m);
    for (long b = 1; b < k; ++b) spow[b] = mod(spow[b - 1] * s, m);
    std::vector<Element> table(n * n);
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < k; ++b)
            for (long c = 0; c < m; ++c)
                for (long d = 0; d < k; ++d) {
                    long e = a + c * spow[b];
                    long f = b + d;
                    if (f >= k) {
                        f -= k;
                        e += t;
                    }
                    e = mod(e, m);
                    table[(a * k + b) * n + (c * k + d)] = static_cast<Element>(e * k + f);
                }
    return FiniteGroup(n, std::move(table), std::move(label), limits);
}

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// Closure of permutations under composition ((a*b)(i) = b(a(i)), i.e.
/// apply a first). Identity is element 0.
inline FiniteGroup permutation_closure(const std::vector<Permutation>& gens, std::string label, const Limits& limits) {
    std::size_t degree = gens.empty() ? 1 : gens.front().size();
    for (const auto& p : gens) {
        if (p.size() != degree) throw invalid_input("generators must act on a common domain");
        std::vector<bool> hit(degree, false);
        for (auto v : p) {
            if (v >= degree || hit[v]) throw invalid_input("generator is not a permutation");
            hit[v] = true;
        }
    }
    if (degree == 0) degree = 1;
    auto compose = [](const Permutation& a, const Permutation& b) {
        Permutation c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
        return c;
    };
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Permutation> elems{id};
    std::map<Permutation, Element> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            Permutation c = compose(elems[i], g);
            if (index.count(c)) continue;
            if (elems.size() >= limits.max_order)
                throw cap_exceeded("permutation closure exceeds cap " + std::to_string(limits.max_order));
            index.emplace(c, static_cast<Element>(elems.size()));
            elems.push_back(std::move(c));
        }
    const std::size_t n = elems.size();
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
    return FiniteGroup(n, std::move(table), std::move(label), limits);
}

inline Permutation cycle_perm(std::size_t degree, const std::vector<std::uint32_t>& cycle) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return p;
}

/// Subgroups of prime order inside Z(G), generated by each central element
/// of prime order.
inline std::vector<Subgroup> central_prime_subgroups(const FiniteGroup& g) {
    std::vector<Subgroup> out;
    for (Element x : center(g).members) {
        std::size_t o = g.element_order(x);
        if (!is_prime(static_cast<unsigned>(o))) continue;
        Subgroup s = generate(g, {x});
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Central product data resolved for a pair of built factors.
struct Gluing {
    Subgroup h1, h2;
    SubgroupIsomorphism theta;
};

/// H_i = <x_i>, theta(x1^k) = x2^k.
inline Gluing glue_by_generators(const FiniteGroup& g1, const FiniteGroup& g2, Element x1, Element x2) {
    if (x1 >= g1.order() || x2 >= g2.order()) throw invalid_input("glue element out of range");
    std::size_t o = g1.element_order(x1);
    if (o != g2.element_order(x2)) throw invalid_input("glue generators have different orders");
    Gluing gl{generate(g1, {x1}), generate(g2, {x2}), {}};
    for (std::size_t k = 0; k < o; ++k) gl.theta[g1.power(x1, static_cast<long>(k))] = g2.power(x2, static_cast<long>(k));
    return gl;
}

/// The unique central subgroups of a common prime order p in both factors.
inline Gluing default_gluing(const FiniteGroup& g1, const FiniteGroup& g2) {
    auto c1 = detail::central_prime_subgroups(g1);
    auto c2 = detail::central_prime_subgroups(g2);
    std::optional<Gluing> found;
    for (const auto& a : c1)
        for (const auto& b : c2) {
            if (a.order() != b.order()) continue;
            std::size_t p = a.order();
            std::size_t na = 0, nb = 0;
            for (const auto& x : c1) na += x.order() == p;
            for (const auto& x : c2) nb += x.order() == p;
            if (na != 1 || nb != 1) continue;
            if (found) throw invalid_input("central product gluing is ambiguous; pass explicit glue elements");
            Element x1 = a.members[0] == g1.identity() ? a.members[1] : a.members[0];
            Element x2 = b.members[0] == g2.identity() ? b.members[1] : b.members[0];
            found = glue_by_generators(g1, g2, x1, x2);
        }
    if (!found) throw invalid_input("no unique central subgroup of a common prime order; pass explicit glue elements");
    return *found;
}

inline FiniteGroup build_group(const GroupSpec& s, const Limits& limits = {});

namespace detail {

struct Builder {
    const Limits& limits;
    std::string label;

    FiniteGroup operator()(const spec::Cyclic& c) const {
        if (c.n == 0) throw invalid_input("cyclic order must be >= 1");
        return metacyclic(c.n, 1, 0, 1, label, limits);
    }
    FiniteGroup operator()(const spec::AbelianProduct& a) const {
        if (a.factors.empty()) throw invalid_input("abelian product needs at least one factor");
        std::size_t total = 1;
        for (unsigned f : a.factors) {
            if (f == 0) throw invalid_input("cyclic factor order must be >= 1");
            total *= f;
            if (total > limits.max_order) throw cap_exceeded("group order exceeds cap " + std::to_string(limits.max_order));
        }
        FiniteGroup g = (*this)(spec::Cyclic{a.factors.front()});
        for (std::size_t i = 1; i < a.factors.size(); ++i)
            g = direct_product(g, (*this)(spec::Cyclic{a.factors[i]}), limits, label);
        return FiniteGroup(g.order(), g.table(), label, limits);
    }
    FiniteGroup operator()(const spec::Dihedral& d) const {
        if (d.order < 2 || d.order % 2) throw invalid_input("dihedral order must be even and >= 2");
        return metacyclic(d.order / 2, 2, 0, -1, label, limits);
    }
    FiniteGroup operator()(const spec::Quaternion& q) const {
        if (q.order < 4 || q.order % 4) throw invalid_input("quaternion order must be a multiple of 4");
        long n = q.order / 4;
        return metacyclic(2 * n, 2, n, -1, label, limits);
    }
    FiniteGroup operator()(const spec::SemiDihedral& s) const {
        if (s.exponent < 4) throw invalid_input("semidihedral exponent must be >= 4");
        if (s.exponent > 30) throw cap_exceeded("semidihedral exponent too large");
        long m = 1L << (s.exponent - 1);
        return metacyclic(m, 2, 0, (1L << (s.exponent - 2)) - 1, label, limits);
    }
    FiniteGroup operator()(const spec::ModularM& mm) const {
        if (!is_prime(mm.p)) throw invalid_input("M(p^d) requires p prime");
        if (mm.d < 3) throw invalid_input("M(p^d) requires d >= 3");
        long m = 1;
        for (unsigned i = 0; i + 1 < mm.d; ++i) {
            m *= mm.p;
            if (static_cast<std::size_t>(m) > limits.max_order) throw cap_exceeded("group order exceeds cap");
        }
        return metacyclic(m, mm.p, 0, 1 + m / mm.p, label, limits);
    }
    FiniteGroup operator()(const spec::Symmetric& s) const {
        if (s.n == 0) throw invalid_input("symmetric degree must be >= 1");
        std::vector<Permutation> gens;
        if (s.n >= 2) {
            gens.push_back(cycle_perm(s.n, {0, 1}));
            std::vector<std::uint32_t> all(s.n);
            std::iota(all.begin(), all.end(), 0u);
            gens.push_back(cycle_perm(s.n, all));
        }
        return permutation_closure(gens.empty() ? std::vector<Permutation>{Permutation{0}} : gens, label, limits);
    }
    FiniteGroup operator()(const spec::Alternating& a) const {
        if (a.n == 0) throw invalid_input("alternating degree must be >= 1");
        std::vector<Permutation> gens;
        for (std::uint32_t i = 2; i < a.n; ++i) gens.push_back(cycle_perm(a.n, {0, 1, i}));
        if (gens.empty()) gens.push_back(cycle_perm(a.n, {}));
        return permutation_closure(gens, label, limits);
    }
    FiniteGroup operator()(const spec::PermGenerated& p) const {
        if (p.generators.empty()) throw invalid_input("perm needs at least one generator");
        return permutation_closure(p.generators, label, limits);
    }
    FiniteGroup operator()(const spec::DirectProduct& d) const {
        FiniteGroup a = build_group(*d.left, limits), b = build_group(*d.right, limits);
        return direct_product(a, b, limits, label);
    }
    FiniteGroup operator()(const spec::CentralProduct& c) const {
        FiniteGroup a = build_group(*c.left, limits), b = build_group(*c.right, limits);
        Gluing gl = c.glue ? glue_by_generators(a, b, c.glue->first, c.glue->second) : default_gluing(a, b);
        return central_product(a, b, gl.h1, gl.h2, gl.theta, limits, label);
    }
};

}  // namespace detail

inline FiniteGroup build_group(const GroupSpec& s, const Limits& limits) {
    return std::visit(detail::Builder{limits, to_text(s)}, s.kind);
}

}  // namespace harada
