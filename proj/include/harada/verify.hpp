#pragma once

// Identity checks tying the exact invariants together. Every exact claim
// compares both sides by exact equality; only the spectral cross-check
// uses a tolerance.

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "harada/central.hpp"
#include "harada/families.hpp"
#include "harada/oracle.hpp"

namespace harada {

struct VerificationReport {
    std::string claim;        // catalogue id
    std::string description;  // the identity, in symbols
    std::string lhs;
    std::string rhs;
    bool pass = false;
    double tolerance = 0;  // 0 for exact claims
    std::string context;
    bool skipped = false;
};

inline std::string subgroup_text(const Subgroup& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.members.size(); ++i) r += (i ? "," : "") + std::to_string(s.members[i]);
    return r + "}";
}

inline std::string character_text(const LinearCharacter& phi) {
    std::string r = "[";
    for (std::size_t i = 0; i < phi.exponents.size(); ++i) r += (i ? "," : "") + std::to_string(phi.exponents[i]);
    return r + "]/" + std::to_string(phi.conductor);
}

namespace detail {

inline VerificationReport exact_claim(std::string claim, std::string description, const std::string& lhs,
                                      const std::string& rhs, bool pass, std::string context) {
    return VerificationReport{std::move(claim), std::move(description), lhs, rhs, pass, 0, std::move(context), false};
}

inline VerificationReport skipped_claim(std::string claim, std::string description, std::string why) {
    return VerificationReport{std::move(claim), std::move(description), "", "", true, 0, std::move(why), true};
}

inline Cyclotomic as_cyc(const BigRational& q) { return Cyclotomic(1, q); }

inline BigRational rational_or_throw(const Cyclotomic& x, const char* what) {
    auto q = x.as_rational();
    if (!q) throw anomaly(std::string(what) + " is not rational: " + x.to_string());
    return *q;
}

}  // namespace detail

/// gamma = h^2 c: exact perfect-square test of mu, plus the numeric
/// character-degree oracle when the order allows.
inline std::vector<VerificationReport> verify_gram_criterion(const GroupData& gd, const OracleOptions& opt = {},
                                                             const Limits& limits = {}) {
    std::vector<VerificationReport> out;
    HaradaReport r = harada_report(gd);
    const std::string ctx = gd.group.label();
    bool square = r.h.has_value() && (*r.h) * (*r.h) == r.mu;
    out.push_back(detail::exact_claim("thm31", "gamma(G)/c(G) is the square of a rational", r.mu.get_str(),
                                      r.h ? "(" + r.h->get_str() + ")^2" : "not a square",
                                      square && r.gamma > 0, ctx));
    if (gd.group.order() > limits.oracle_max_order) {
        out.push_back(detail::skipped_claim("thm31", "gamma(G) = h_oracle^2 c(G)", ctx + ": order above oracle cap"));
        return out;
    }
    SpectralCharacterData sd = spectral_oracle(gd, opt, limits);
    BigRational rhs = sd.h_oracle * sd.h_oracle * BigRational(r.c);
    BigRational diff = BigRational(r.gamma) - rhs;
    if (diff < 0) diff = -diff;
    double rel = BigRational(diff / BigRational(r.gamma)).get_d();
    VerificationReport v{"thm31", "gamma(G) = h_oracle^2 c(G)", r.gamma.get_str(), rhs.get_str(),
                         rel < opt.tolerance, opt.tolerance, ctx + " seed=" + std::to_string(sd.seed), false};
    out.push_back(std::move(v));
    return out;
}

/// mu(G x H) = mu(G)^{s(H)} mu(H)^{s(G)}, with the left side computed on
/// the constructed product.
inline VerificationReport verify_direct_product(const GroupData& g, const GroupData& h, const Limits& limits = {}) {
    GroupData gh(direct_product(g.group, h.group, limits));
    BigRational lhs = harada_report(gh).mu;
    BigRational rhs = pow(harada_report(g).mu, static_cast<unsigned long>(h.classes.count())) *
                      pow(harada_report(h).mu, static_cast<unsigned long>(g.classes.count()));
    return detail::exact_claim("prop33", "mu(GxH) = mu(G)^s(H) mu(H)^s(G)", lhs.get_str(), rhs.get_str(), lhs == rhs,
                               gh.group.label());
}

/// mu(G) = prod_phi mu_phi(G), and the index identity
/// gamma(G) = prod_phi gamma_phi(G) * prod_{N <= Z} |Z/N|^{|Z/N| |I(G:Z)_N|}.
inline std::vector<VerificationReport> verify_factorization(const GroupData& gd, const CentralAnalysis& ca) {
    const std::string ctx = gd.group.label() + " Z=" + subgroup_text(ca.orbits.z);
    HaradaReport r = harada_report(gd);
    Cyclotomic mu_prod(1, BigRational(1)), gamma_prod(1, BigRational(1));
    for (const auto& rep : ca.reports) {
        mu_prod *= rep.mu_phi;
        gamma_prod *= rep.gamma_phi;
    }
    BigInt index = 1;
    const auto& od = ca.orbits;
    for (std::size_t n = 0; n < od.subgroups.size(); ++n) {
        unsigned long zn = od.z.order() / od.subgroups[n].order();
        index *= pow(BigInt(zn), zn * od.strata[n].size());
    }
    Cyclotomic gamma_rhs = gamma_prod * BigRational(index);
    return {
        detail::exact_claim("thm37", "mu(G) = prod_phi mu_phi(G)", r.mu.get_str(), mu_prod.to_string(),
                            mu_prod == detail::as_cyc(r.mu), ctx),
        detail::exact_claim("thm37", "gamma(G) = prod_phi gamma_phi(G) * prod_N |Z/N|^(|Z/N||I(G:Z)_N|)",
                            r.gamma.get_str(), gamma_rhs.to_string(),
                            gamma_rhs == detail::as_cyc(BigRational(r.gamma)), ctx),
    };
}

/// The three lifting identities for one phi, checked against G/Ker(phi):
/// gamma_phi(G) = kappa^2 gamma_phibar(G/Ker), mu_phi(G) = kappa^2 mu_phibar(G/Ker),
/// and for the trivial character mu_1(G) = (kappa_Z h(G/Z))^2.
inline std::vector<VerificationReport> verify_lifting(const GroupData& gd, const CentralAnalysis& ca, std::size_t phi_index,
                                                      const Limits& limits = {}) {
    const PhiReport& rep = ca.reports[phi_index];
    const LinearCharacter& phi = rep.phi;
    const std::string ctx = gd.group.label() + " Z=" + subgroup_text(ca.orbits.z) + " phi=" + character_text(phi);
    InducedCharacter ind = induced_character(gd.group, phi, limits);
    GroupData quot(std::move(ind.quotient.group));
    ZOrbitData qod = z_orbit_data(quot, ind.z_bar, limits);
    PhiReport qrep = phi_report(quot, qod, ind.phi_bar);
    BigInt k = kappa(ca.orbits, phi.kernel);
    BigRational k2 = BigRational(k * k);
    Cyclotomic gamma_rhs = qrep.gamma_phi * k2;
    Cyclotomic mu_rhs = qrep.mu_phi * k2;
    std::vector<VerificationReport> out{
        detail::exact_claim("lem36", "gamma_phi(G) = kappa_Ker(G)^2 gamma_phibar(G/Ker)", rep.gamma_phi.to_string(),
                            gamma_rhs.to_string(), rep.gamma_phi == gamma_rhs, ctx),
        detail::exact_claim("prop412", "mu_phi(G) = kappa_Ker(G)^2 mu_phibar(G/Ker)", rep.mu_phi.to_string(),
                            mu_rhs.to_string(), rep.mu_phi == mu_rhs, ctx),
    };
    if (phi.is_trivial()) {
        HaradaReport qr = harada_report(quot);
        if (!qr.h) throw anomaly("mu(G/Z) is not a square");
        BigRational rhs = BigRational(k) * *qr.h;
        rhs *= rhs;
        out.push_back(detail::exact_claim("cor413", "mu_1(G) = (kappa_Z(G) h(G/Z))^2", rep.mu_phi.to_string(),
                                          rhs.get_str(), rep.mu_phi == detail::as_cyc(rhs), ctx));
    }
    return out;
}

/// h(G)^2 = (prod_phi kappa_Ker(phi)(G))^2 prod_phi mu_phibar(G/Ker phi),
/// the composite of the factorization and the lifting identities.
/// The product prod_phi kappa_Ker(phi) equals prod_N kappa_N^{#phi with Ker phi = N}.
inline VerificationReport verify_lifted_factorization(const GroupData& gd, const CentralAnalysis& ca,
                                                      const Limits& limits = {}) {
    const std::string ctx = gd.group.label() + " Z=" + subgroup_text(ca.orbits.z);
    HaradaReport r = harada_report(gd);
    BigInt kprod = 1;
    Cyclotomic mu_bar_prod(1, BigRational(1));
    for (const auto& rep : ca.reports) {
        kprod *= kappa(ca.orbits, rep.phi.kernel);
        InducedCharacter ind = induced_character(gd.group, rep.phi, limits);
        GroupData quot(std::move(ind.quotient.group));
        ZOrbitData qod = z_orbit_data(quot, ind.z_bar, limits);
        mu_bar_prod *= phi_report(quot, qod, ind.phi_bar).mu_phi;
    }
    Cyclotomic rhs = mu_bar_prod * BigRational(kprod * kprod);
    std::string h2 = r.h ? BigRational(*r.h * *r.h).get_str() : r.mu.get_str();
    return detail::exact_claim("thm412", "h(G)^2 = (prod_phi kappa_Ker(phi))^2 prod_phi mu_phibar(G/Ker phi)", h2,
                               rhs.to_string(), r.h && rhs == detail::as_cyc(BigRational(*r.h * *r.h)), ctx);
}

/// Z of prime order p, phi nontrivial:
/// mu(G) = p^{2|I(G:Z)_Z|} mu(G/Z) prod_{a in (Z/p)^x} mu_{phi^a}(G), and
/// for odd p, h(G) = p^{|I(G:Z)_Z|} h(G/Z) prod_{a=1}^{(p-1)/2} mu_{phi^a}(G).
inline std::vector<VerificationReport> verify_prime_center(const GroupData& gd, const CentralAnalysis& ca,
                                                           const Limits& limits = {}) {
    const auto& od = ca.orbits;
    const std::size_t p = od.z.order();
    const std::string ctx = gd.group.label() + " Z=" + subgroup_text(od.z);
    if (!detail::is_prime(static_cast<unsigned>(p))) throw invalid_input("Z must have prime order");
    HaradaReport r = harada_report(gd);
    Quotient q = quotient(gd.group, od.z, limits);
    GroupData quot(std::move(q.group));
    HaradaReport qr = harada_report(quot);
    const std::size_t iz = od.stratum_size(od.z);

    // phi = first nontrivial character; phi^a located by exponent scaling.
    std::size_t base = 1;
    const LinearCharacter& phi = ca.reports[base].phi;
    auto power_index = [&](std::size_t a) {
        for (std::size_t j = 0; j < ca.reports.size(); ++j) {
            bool ok = true;
            for (std::size_t i = 0; i < phi.exponents.size() && ok; ++i)
                ok = ca.reports[j].phi.exponents[i] == (a * phi.exponents[i]) % phi.conductor;
            if (ok) return j;
        }
        throw anomaly("phi^a not found");
    };
    Cyclotomic prod_all(1, BigRational(1)), prod_half(1, BigRational(1));
    for (std::size_t a = 1; a < p; ++a) {
        const Cyclotomic& mu_a = ca.reports[power_index(a)].mu_phi;
        prod_all *= mu_a;
        if (2 * a <= p - 1) prod_half *= mu_a;
    }
    BigRational pp(static_cast<unsigned long>(p));
    Cyclotomic rhs = prod_all * (pow(pp, 2 * iz) * qr.mu);
    std::vector<VerificationReport> out{detail::exact_claim(
        "prime", "mu(G) = p^(2|I(G:Z)_Z|) mu(G/Z) prod_a mu_phi^a(G)", r.mu.get_str(), rhs.to_string(),
        rhs == detail::as_cyc(r.mu), ctx)};
    if (p > 2) {
        if (!r.h || !qr.h) throw anomaly("h not rational");
        Cyclotomic hrhs = prod_half * (pow(pp, iz) * *qr.h);
        out.push_back(detail::exact_claim("prime", "h(G) = p^|I(G:Z)_Z| h(G/Z) prod_{a<=(p-1)/2} mu_phi^a(G)",
                                          r.h->get_str(), hrhs.to_string(), hrhs == detail::as_cyc(*r.h), ctx));
    }
    return out;
}

/// Central product over H1 ~ H2 of prime order p: direct h(G) against
/// p^{|I1_H||I2_H|} h(G1)^{|I2_1|} h(G2)^{|I1_1|} h(G1/H1)^{|I2_H|} h(G2/H2)^{|I1_H|}.
inline VerificationReport verify_central_product(const FiniteGroup& g1, const FiniteGroup& g2, const Gluing& gl,
                                                 const Limits& limits = {}) {
    const std::size_t p = gl.h1.order();
    if (!detail::is_prime(static_cast<unsigned>(p))) throw invalid_input("glued subgroups must have prime order");
    GroupData g(central_product(g1, g2, gl.h1, gl.h2, gl.theta, limits));
    GroupData d1(g1), d2(g2);
    ZOrbitData o1 = z_orbit_data(d1, gl.h1, limits), o2 = z_orbit_data(d2, gl.h2, limits);
    const unsigned long i1_one = o1.stratum_size(trivial_subgroup(g1)), i1_h = o1.stratum_size(gl.h1);
    const unsigned long i2_one = o2.stratum_size(trivial_subgroup(g2)), i2_h = o2.stratum_size(gl.h2);
    GroupData q1(quotient(g1, gl.h1, limits).group), q2(quotient(g2, gl.h2, limits).group);
    BigRational rhs = pow(BigRational(static_cast<unsigned long>(p)), i1_h * i2_h) *
                      pow(harada_number(d1), i2_one) * pow(harada_number(d2), i1_one) *
                      pow(harada_number(q1), i2_h) * pow(harada_number(q2), i1_h);
    BigRational lhs = harada_number(g);
    std::ostringstream ctx;
    ctx << g.group.label() << " p=" << p << " |I1_1|=" << i1_one << " |I1_H|=" << i1_h << " |I2_1|=" << i2_one
        << " |I2_H|=" << i2_h;
    return detail::exact_claim("cp003",
                               "h(G) = p^(|I1_H||I2_H|) h(G1)^|I2_1| h(G2)^|I1_1| h(G1/H1)^|I2_H| h(G2/H2)^|I1_H|",
                               lhs.get_str(), rhs.get_str(), lhs == rhs, ctx.str());
}

/// |G'| divides h(G), and h(G) is an integer.
inline std::vector<VerificationReport> divisibility_checks(const GroupData& gd) {
    HaradaReport r = harada_report(gd);
    const std::string ctx = gd.group.label();
    std::size_t derived = commutator_subgroup(gd.group).order();
    bool integral = r.h && is_integer(*r.h);
    bool divisible = integral && mpz_divisible_ui_p(r.h->get_num().get_mpz_t(), derived) != 0;
    std::string h = r.h ? r.h->get_str() : "none";
    return {
        detail::exact_claim("chigira", "h(G) is an integer", h, "integer", integral, ctx),
        detail::exact_claim("chigira", "|G'| divides h(G)", h, std::to_string(derived) + " | h", divisible, ctx),
    };
}

/// For a p-group with central Z of order p and G/Z abelian:
/// mu(G) = p^{(p-1)(2[s]_p - s)|Z(G)/Z|} where |G/Z(G)| = p^s.
inline VerificationReport verify_class_two_formula(const GroupData& gd, const Subgroup& z, const Limits& limits = {}) {
    const std::size_t p = z.order();
    if (!detail::is_prime(static_cast<unsigned>(p)) || !is_central(gd.group, z))
        throw invalid_input("Z must be central of prime order");
    if (!quotient(gd.group, z, limits).group.is_abelian()) throw invalid_input("G/Z must be abelian");
    const std::size_t zg = center(gd.group).order();
    std::size_t index = gd.group.order() / zg;
    unsigned long s = 0;
    while (index > 1) {
        if (index % p) throw invalid_input("G is not a p-group");
        index /= p;
        ++s;
    }
    // [s]_p = (p^s - 1)/(p - 1)
    unsigned long bracket = 0, pw = 1;
    for (unsigned long i = 0; i < s; ++i) {
        bracket += pw;
        pw *= p;
    }
    unsigned long exponent = (p - 1) * (2 * bracket - s) * (zg / p);
    BigRational rhs = pow(BigRational(static_cast<unsigned long>(p)), exponent);
    HaradaReport r = harada_report(gd);
    std::string ctx = gd.group.label() + " p=" + std::to_string(p) + " s=" + std::to_string(s);
    return detail::exact_claim("class2", "mu(G) = p^((p-1)(2[s]_p - s)|Z(G)/Z|)", r.mu.get_str(), rhs.get_str(),
                               r.mu == rhs, ctx);
}

}  // namespace harada
