#pragma once

// Linear characters of abelian (central) subgroups.

#include <numeric>
#include <vector>

#include "harada/cyclotomic.hpp"
#include "harada/group.hpp"

namespace harada {

/// phi : Z -> mu_m, stored as exponents: phi(z) = zeta_m^{exponent}.
struct LinearCharacter {
    Subgroup domain;
    unsigned conductor = 1;
    std::vector<unsigned> exponents;  // parallel to domain.members
    Subgroup kernel;

    unsigned exponent(Element z) const { return exponents[domain.position(z)]; }
    Cyclotomic value(Element z) const { return Cyclotomic::root_of_unity(conductor, exponent(z)); }
    bool is_trivial() const { return kernel.order() == domain.order(); }
    bool is_faithful() const { return kernel.order() == 1; }
    /// Order of phi in Irr(Z), i.e. |Z / Ker phi|.
    std::size_t order() const { return domain.order() / kernel.order(); }
};

namespace detail {

inline std::size_t exponent_of(const FiniteGroup& g, const Subgroup& z) {
    std::size_t e = 1;
    for (Element x : z.members) e = std::lcm(e, g.element_order(x));
    return e;
}

/// Z = <b_1> x ... x <b_r> with |b_1| >= |b_2| >= ..., found by repeatedly
/// taking an element of maximal order and a complement of its cyclic span.
inline std::vector<Element> cyclic_basis(const FiniteGroup& g, Subgroup z, const Limits& limits) {
    std::vector<Element> basis;
    while (z.order() > 1) {
        Element best = g.identity();
        std::size_t best_order = 1;
        for (Element x : z.members) {
            std::size_t o = g.element_order(x);
            if (o > best_order) {
                best = x;
                best_order = o;
            }
        }
        basis.push_back(best);
        Subgroup cyc = generate(g, {best});
        const std::size_t want = z.order() / best_order;
        std::optional<Subgroup> complement;
        for (const auto& c : all_subgroups(g, z, limits)) {
            if (c.order() != want) continue;
            bool meets = false;
            for (Element x : c.members) meets |= x != g.identity() && cyc.contains(x);
            if (!meets) {
                complement = c;
                break;
            }
        }
        if (!complement) throw anomaly("no complement for a maximal cyclic subgroup");
        z = *complement;
    }
    return basis;
}

}  // namespace detail

/// Irr(Z) for abelian Z, trivial character first. Characters are listed by
/// their exponent vector on the cyclic basis in lexicographic order.
inline std::vector<LinearCharacter> irr_characters(const FiniteGroup& g, const Subgroup& z, const Limits& limits = {}) {
    for (Element a : z.members)
        for (Element b : z.members)
            if (g.mul(a, b) != g.mul(b, a)) throw invalid_input("characters requested for a nonabelian subgroup");
    const unsigned m = static_cast<unsigned>(detail::exponent_of(g, z));
    std::vector<Element> basis = detail::cyclic_basis(g, z, limits);
    std::vector<std::size_t> orders;
    for (Element b : basis) orders.push_back(g.element_order(b));

    // coordinates of every element of Z on the basis
    std::vector<std::vector<std::size_t>> coords(z.order());
    {
        std::vector<std::size_t> e(basis.size(), 0);
        for (std::size_t idx = 0; idx < z.order(); ++idx) {
            Element x = g.identity();
            for (std::size_t i = 0; i < basis.size(); ++i) x = g.mul(x, g.power(basis[i], static_cast<long>(e[i])));
            coords[z.position(x)] = e;
            for (std::size_t i = basis.size(); i-- > 0;) {
                if (++e[i] < orders[i]) break;
                e[i] = 0;
            }
        }
    }

    std::vector<LinearCharacter> out;
    std::vector<std::size_t> a(basis.size(), 0);
    for (std::size_t idx = 0; idx < z.order(); ++idx) {
        LinearCharacter phi;
        phi.domain = z;
        phi.conductor = m;
        for (std::size_t p = 0; p < z.order(); ++p) {
            std::size_t ex = 0;
            for (std::size_t i = 0; i < basis.size(); ++i) ex += a[i] * coords[p][i] * (m / orders[i]);
            phi.exponents.push_back(static_cast<unsigned>(ex % m));
            if (ex % m == 0) phi.kernel.members.push_back(z.members[p]);
        }
        out.push_back(std::move(phi));
        for (std::size_t i = basis.size(); i-- > 0;) {
            if (++a[i] < orders[i]) break;
            a[i] = 0;
        }
    }
    return out;
}

/// Index of phi^{-1} in a list produced by irr_characters.
inline std::size_t inverse_character_index(const std::vector<LinearCharacter>& irr, std::size_t i) {
    const auto& phi = irr[i];
    for (std::size_t j = 0; j < irr.size(); ++j) {
        bool ok = true;
        for (std::size_t p = 0; p < phi.exponents.size() && ok; ++p)
            ok = (phi.exponents[p] + irr[j].exponents[p]) % phi.conductor == 0;
        if (ok) return j;
    }
    throw anomaly("character list is not closed under inversion");
}

/// phi-bar on Z/Ker(phi) inside G/Ker(phi), with phi-bar(z Ker phi) = phi(z).
struct InducedCharacter {
    Quotient quotient;
    Subgroup z_bar;
    LinearCharacter phi_bar;
};

inline InducedCharacter induced_character(const FiniteGroup& g, const LinearCharacter& phi, const Limits& limits = {}) {
    Quotient q = quotient(g, phi.kernel, limits);
    Subgroup zb = q.image(phi.domain);
    const unsigned mb = static_cast<unsigned>(phi.order());
    LinearCharacter bar;
    bar.domain = zb;
    bar.conductor = mb;
    bar.exponents.assign(zb.order(), 0);
    const unsigned step = phi.conductor / mb;
    for (Element z : phi.domain.members) {
        unsigned e = phi.exponent(z);
        if (e % step != 0) throw anomaly("character value outside the expected root group");
        bar.exponents[zb.position(q.projection[z])] = e / step;
    }
    bar.kernel = trivial_subgroup(q.group);
    return {std::move(q), std::move(zb), std::move(bar)};
}

}  // namespace harada
