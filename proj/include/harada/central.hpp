#pragma once

// Central characters: Z-orbits on Conj(G), annihilator strata, the bases
// B(G)_phi and the refined invariants gamma_phi, c_phi, mu_phi, kappa_N.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "harada/characters.hpp"
#include "harada/class_algebra.hpp"
#include "harada/matrix.hpp"

namespace harada {

struct ZOrbitData {
    Subgroup z;
    std::vector<Subgroup> subgroups;        // every N <= Z, canonical order
    std::vector<std::size_t> orbit_reps;    // class index per Z-orbit, j in I_{G/Z}
    std::vector<std::size_t> ann;           // per orbit: index into subgroups of Ann_Z(K_j)
    std::vector<std::size_t> orbit_of;      // class -> orbit position
    std::vector<std::vector<std::size_t>> strata;  // per subgroup: orbit reps with that annihilator
    std::vector<std::size_t> z_action;      // (position of z in Z) * s + class -> class of zK

    std::size_t class_count() const { return orbit_of.size(); }
    std::size_t translate(std::size_t z_pos, std::size_t k) const { return z_action[z_pos * class_count() + k]; }
    std::size_t subgroup_index(const Subgroup& n) const {
        for (std::size_t i = 0; i < subgroups.size(); ++i)
            if (subgroups[i] == n) return i;
        throw invalid_input("not a subgroup of Z");
    }
    std::size_t stratum_size(const Subgroup& n) const { return strata[subgroup_index(n)].size(); }
    /// Classes in the Z-orbit of orbit position o.
    std::vector<std::size_t> orbit_members(std::size_t o) const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < orbit_of.size(); ++k)
            if (orbit_of[k] == o) out.push_back(k);
        return out;
    }
};

/// Orbit representative: the orbit's class holding its minimal element.
inline ZOrbitData z_orbit_data(const GroupData& gd, const Subgroup& z, const Limits& limits = {}) {
    const FiniteGroup& g = gd.group;
    const ClassData& cd = gd.classes;
    if (!is_central(g, z)) throw invalid_input("Z is not central");
    ZOrbitData od;
    od.z = z;
    od.subgroups = all_subgroups(g, z, limits);
    const std::size_t s = cd.count();
    od.z_action.resize(z.order() * s);
    for (std::size_t p = 0; p < z.order(); ++p)
        for (std::size_t k = 0; k < s; ++k) od.z_action[p * s + k] = cd.class_of[g.mul(z.members[p], cd.rep(k))];

    od.orbit_of.assign(s, s);
    std::vector<std::size_t> by_rep(s);
    std::iota(by_rep.begin(), by_rep.end(), std::size_t{0});
    std::sort(by_rep.begin(), by_rep.end(), [&](std::size_t a, std::size_t b) { return cd.rep(a) < cd.rep(b); });
    for (std::size_t k : by_rep) {
        if (od.orbit_of[k] != s) continue;
        const std::size_t o = od.orbit_reps.size();
        od.orbit_reps.push_back(k);
        std::vector<Element> ann;
        for (std::size_t p = 0; p < z.order(); ++p) {
            std::size_t t = od.translate(p, k);
            od.orbit_of[t] = o;
            if (t == k) ann.push_back(z.members[p]);
        }
        od.ann.push_back(od.subgroup_index(Subgroup{ann}));
    }
    od.strata.assign(od.subgroups.size(), {});
    for (std::size_t o = 0; o < od.orbit_reps.size(); ++o) od.strata[od.ann[o]].push_back(od.orbit_reps[o]);
    return od;
}

/// kappa_N = prod_{X <= N} |X|^{|I(G:Z)_X|}.
inline BigInt kappa(const ZOrbitData& od, const Subgroup& n) {
    BigInt k = 1;
    for (std::size_t x = 0; x < od.subgroups.size(); ++x)
        if (od.subgroups[x].is_subset_of(n))
            k *= pow(BigInt(static_cast<unsigned long>(od.subgroups[x].order())), od.strata[x].size());
    return k;
}

/// tr(e_phi [K_k]) = (1/|Z|) sum_z conj(phi(z)) T(class of z K_k), for every k.
inline std::vector<Cyclotomic> phi_traces(const GroupData& gd, const ZOrbitData& od, const LinearCharacter& phi) {
    const std::size_t s = gd.classes.count();
    const unsigned m = phi.conductor;
    const BigRational inv_z = make_rational(1, static_cast<unsigned long>(od.z.order()));
    std::vector<Cyclotomic> roots;
    for (unsigned e = 0; e < m; ++e) roots.push_back(Cyclotomic::root_of_unity(m, e));
    std::vector<Cyclotomic> out;
    out.reserve(s);
    for (std::size_t k = 0; k < s; ++k) {
        std::vector<BigInt> bins(m, 0);
        for (std::size_t p = 0; p < od.z.order(); ++p) {
            unsigned e = (m - phi.exponents[p] % m) % m;
            BigInt t;
            mpz_set_ui(t.get_mpz_t(), gd.algebra.trace(od.translate(p, k)));
            bins[e] += t;
        }
        Cyclotomic v(m, BigRational(0));
        for (unsigned e = 0; e < m; ++e)
            if (bins[e] != 0) v += roots[e] * BigRational(bins[e]);
        out.push_back(v * inv_z);
    }
    return out;
}

/// <e_phi[K_i] | e_phi[K_j]> = sum_k alpha_{i* j}^k tr(e_phi [K_k]).
inline Cyclotomic phi_inner_product(const GroupData& gd, const std::vector<Cyclotomic>& traces, unsigned conductor,
                                    std::size_t i, std::size_t j) {
    Cyclotomic v(conductor, BigRational(0));
    for (const auto& t : gd.algebra.product(gd.classes.inv_class[i], j)) {
        BigInt c;
        mpz_set_ui(c.get_mpz_t(), t.count);
        v += traces[t.k] * BigRational(c);
    }
    return v;
}

/// Class indices of B(G)_phi: orbit reps whose annihilator lies in Ker phi.
inline std::vector<std::size_t> phi_basis(const ZOrbitData& od, const LinearCharacter& phi) {
    std::vector<std::size_t> out;
    for (std::size_t o = 0; o < od.orbit_reps.size(); ++o)
        if (od.subgroups[od.ann[o]].is_subset_of(phi.kernel)) out.push_back(od.orbit_reps[o]);
    return out;
}

inline ExactMatrix<Cyclotomic> gram_phi(const GroupData& gd, const ZOrbitData& od, const LinearCharacter& phi,
                                        const std::vector<std::size_t>& basis) {
    auto traces = phi_traces(gd, od, phi);
    const std::size_t d = basis.size();
    ExactMatrix<Cyclotomic> m(d, Cyclotomic(phi.conductor, BigRational(0)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) m(a, b) = phi_inner_product(gd, traces, phi.conductor, basis[a], basis[b]);
    return m;
}

/// c_phi = prod_{N <= Ker phi} prod_{j in I(G:Z)_N} |C_G(g_j)| / |Z/N|.
inline BigRational c_phi(const GroupData& gd, const ZOrbitData& od, const LinearCharacter& phi) {
    BigRational c = 1;
    for (std::size_t n = 0; n < od.subgroups.size(); ++n) {
        if (!od.subgroups[n].is_subset_of(phi.kernel)) continue;
        const unsigned long zn = od.z.order() / od.subgroups[n].order();
        for (std::size_t j : od.strata[n])
            c *= make_rational(static_cast<unsigned long>(gd.classes.centralizer_order[j]), zn);
    }
    return c;
}

struct PhiReport {
    LinearCharacter phi;
    std::vector<std::size_t> basis;
    ExactMatrix<Cyclotomic> gram;
    Cyclotomic gamma_phi;  // positive real
    BigRational c_phi;
    Cyclotomic mu_phi;
    std::vector<BigInt> kappa;  // parallel to ZOrbitData::subgroups
    bool c_phi_integral = true;

    bool rational() const { return gamma_phi.as_rational().has_value(); }
};

/// gamma_phi for an explicit choice of basis classes (one per orbit in the
/// basis strata).
inline Cyclotomic gamma_phi(const GroupData& gd, const ZOrbitData& od, const LinearCharacter& phi,
                            const std::vector<std::size_t>& basis) {
    if (basis.empty()) return Cyclotomic(phi.conductor, BigRational(1));
    return det_hermitian_cyclotomic(gram_phi(gd, od, phi, basis)).abs;
}

inline PhiReport phi_report(const GroupData& gd, const ZOrbitData& od, const LinearCharacter& phi) {
    PhiReport r;
    r.phi = phi;
    r.basis = phi_basis(od, phi);
    r.gram = gram_phi(gd, od, phi, r.basis);
    r.gamma_phi = r.basis.empty() ? Cyclotomic(phi.conductor, BigRational(1)) : det_hermitian_cyclotomic(r.gram).abs;
    r.c_phi = c_phi(gd, od, phi);
    r.c_phi_integral = is_integer(r.c_phi);
    r.mu_phi = r.gamma_phi * (1 / r.c_phi);
    for (const auto& n : od.subgroups) r.kappa.push_back(kappa(od, n));
    return r;
}

/// Orbit representatives re-chosen uniformly at random within each Z-orbit.
inline std::vector<std::size_t> random_phi_basis(const ZOrbitData& od, const LinearCharacter& phi, std::mt19937_64& rng) {
    std::vector<std::size_t> out;
    for (std::size_t o = 0; o < od.orbit_reps.size(); ++o) {
        if (!od.subgroups[od.ann[o]].is_subset_of(phi.kernel)) continue;
        auto members = od.orbit_members(o);
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        out.push_back(members[pick(rng)]);
    }
    return out;
}

/// Everything for one central subgroup: orbit data and all phi reports.
struct CentralAnalysis {
    ZOrbitData orbits;
    std::vector<LinearCharacter> characters;
    std::vector<PhiReport> reports;
};

inline CentralAnalysis analyze_central(const GroupData& gd, const Subgroup& z, const Limits& limits = {}) {
    CentralAnalysis a{z_orbit_data(gd, z, limits), irr_characters(gd.group, z, limits), {}};
    for (const auto& phi : a.characters) a.reports.push_back(phi_report(gd, a.orbits, phi));
    return a;
}

}  // namespace harada
