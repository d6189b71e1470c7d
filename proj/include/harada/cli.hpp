#pragma once

// Command implementations behind tools/harada. Each returns the exit code
// and the text destined for stdout / stderr, so tests can drive them
// without a process boundary.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "harada/report.hpp"
#include "harada/spec_text.hpp"

namespace harada::cli {

enum exit_code : int { ok = 0, verification_failed = 1, bad_input = 2, over_cap = 3, internal_anomaly = 4 };

struct Options {
    std::string central = "none";  // none | auto | full-center | trivial
    unsigned jobs = 1;
    std::uint64_t seed = OracleOptions{}.seed;
    Limits limits = Limits::from_environment();
    std::string format = "json";  // json | table
    std::optional<std::pair<Element, Element>> glue;
};

struct Result {
    int code = ok;
    std::string out;
    std::string err;
};

inline const std::vector<std::string>& claim_catalogue() {
    static const std::vector<std::string> c{"thm31",   "prop33", "thm37", "lem36", "prop412",
                                            "cor413",  "thm412", "prime", "cp003", "chigira"};
    return c;
}

inline bool known_claim(const std::string& c) {
    const auto& cat = claim_catalogue();
    return c == "all" || std::find(cat.begin(), cat.end(), c) != cat.end();
}

/// Parse and attach an explicit --glue to a top-level cprod.
inline GroupSpec resolve_spec(const std::string& text, const Options& opt) {
    GroupSpec s = parse_group_spec(text);
    if (opt.glue) {
        auto* cp = std::get_if<spec::CentralProduct>(&s.kind);
        if (!cp) throw invalid_input("--glue applies only to a cprod spec");
        cp->glue = opt.glue;
    }
    return s;
}

inline std::vector<Subgroup> prime_order_subgroups(const GroupData& gd, const Subgroup& z, const Limits& limits) {
    std::vector<Subgroup> out;
    for (auto& s : all_subgroups(gd.group, z, limits))
        if (detail::is_prime(static_cast<unsigned>(s.order()))) out.push_back(std::move(s));
    return out;
}

/// Runs one catalogue claim (or "all") on the group described by spec.
/// Z is the full center for every per-Z claim.
inline std::vector<VerificationReport> run_claims(const std::string& claim, const GroupSpec& spec, const GroupData& gd,
                                                  const Options& opt) {
    if (!known_claim(claim)) throw invalid_input("unknown claim '" + claim + "'");
    auto want = [&](const char* c) { return claim == "all" || claim == c; };
    const Limits& L = opt.limits;
    std::vector<VerificationReport> out;
    auto append = [&](std::vector<VerificationReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    if (want("thm31")) {
        OracleOptions oo;
        oo.seed = opt.seed;
        append(verify_gram_criterion(gd, oo, L));
    }
    if (want("prop33")) {
        if (auto* d = std::get_if<spec::DirectProduct>(&spec.kind)) {
            GroupData a(build_group(*d->left, L)), b(build_group(*d->right, L));
            out.push_back(verify_direct_product(a, b, L));
        } else {
            out.push_back(detail::skipped_claim("prop33", "mu(GxH) = mu(G)^s(H) mu(H)^s(G)",
                                                gd.group.label() + ": not a prod(,) spec"));
        }
    }
    const bool per_z = want("thm37") || want("lem36") || want("prop412") || want("cor413") || want("thm412");
    if (per_z) {
        CentralAnalysis ca = analyze_central(gd, center(gd.group), L);
        if (want("thm37")) append(verify_factorization(gd, ca));
        if (want("lem36") || want("prop412") || want("cor413"))
            for (std::size_t i = 0; i < ca.reports.size(); ++i)
                for (auto& r : verify_lifting(gd, ca, i, L))
                    if (want(r.claim.c_str())) out.push_back(std::move(r));
        if (want("thm412")) out.push_back(verify_lifted_factorization(gd, ca, L));
    }
    if (want("prime")) {
        auto primes = prime_order_subgroups(gd, center(gd.group), L);
        if (primes.empty())
            out.push_back(detail::skipped_claim("prime", "mu(G) = p^(2|I(G:Z)_Z|) mu(G/Z) prod_a mu_phi^a(G)",
                                                gd.group.label() + ": no central subgroup of prime order"));
        for (const auto& z : primes) append(verify_prime_center(gd, analyze_central(gd, z, L), L));
    }
    if (want("cp003")) {
        if (auto* c = std::get_if<spec::CentralProduct>(&spec.kind)) {
            FiniteGroup a = build_group(*c->left, L), b = build_group(*c->right, L);
            Gluing gl = c->glue ? glue_by_generators(a, b, c->glue->first, c->glue->second) : default_gluing(a, b);
            out.push_back(verify_central_product(a, b, gl, L));
        } else {
            out.push_back(detail::skipped_claim("cp003", "central product formula",
                                                gd.group.label() + ": not a cprod(,) spec"));
        }
    }
    if (want("chigira")) append(divisibility_checks(gd));
    return out;
}

inline std::vector<CentralAnalysis> central_for(const GroupData& gd, const Options& opt) {
    if (opt.central == "none") return {};
    if (opt.central == "trivial") return {analyze_central(gd, trivial_subgroup(gd.group), opt.limits)};
    if (opt.central == "auto" || opt.central == "full-center")
        return {analyze_central(gd, center(gd.group), opt.limits)};
    throw invalid_input("--central must be auto, full-center or trivial");
}

inline void warn_irrational(const std::vector<CentralAnalysis>& central, std::string& err) {
    for (const auto& ca : central)
        for (const auto& r : ca.reports)
            if (!r.rational())
                err += "warning: gamma_phi is not rational for Z=" + subgroup_text(ca.orbits.z) +
                       " phi=" + character_text(r.phi) + ": " + r.gamma_phi.to_string() + "\n";
}

inline std::string render(const json& doc, const Options& opt, bool compact = false) {
    if (opt.format == "table") return table_text(doc);
    return (compact ? doc.dump() : doc.dump(2)) + "\n";
}

/// Maps library exceptions onto exit codes; anything else propagates.
template <class F>
Result guarded(F&& body) {
    try {
        return body();
    } catch (const parse_error& e) {
        return {bad_input, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const invalid_input& e) {
        return {bad_input, "", std::string("invalid input: ") + e.what() + "\n"};
    } catch (const cap_exceeded& e) {
        return {over_cap, "", std::string("cap exceeded: ") + e.what() + "\n"};
    } catch (const error& e) {
        return {internal_anomaly, "", std::string("anomaly: ") + e.what() + "\n"};
    }
}

inline Result cmd_invariants(const std::string& text, const Options& opt) {
    return guarded([&] {
        GroupData gd(build_group(resolve_spec(text, opt), opt.limits));
        HaradaReport r = harada_report(gd);
        auto central = central_for(gd, opt);
        Result res;
        warn_irrational(central, res.err);
        res.out = render(report_document(gd, central, {}, opt.seed), opt);
        if (!r.h) {
            res.code = internal_anomaly;
            res.err += "anomaly: mu = " + r.mu.get_str() + " is not a rational square\n";
        }
        return res;
    });
}

inline Result cmd_verify(const std::string& claim, const std::string& text, const Options& opt) {
    return guarded([&] {
        if (!known_claim(claim)) throw invalid_input("unknown claim '" + claim + "'");
        GroupSpec spec = resolve_spec(text, opt);
        GroupData gd(build_group(spec, opt.limits));
        auto checks = run_claims(claim, spec, gd, opt);
        auto central = central_for(gd, opt);
        Result res;
        warn_irrational(central, res.err);
        res.out = render(report_document(gd, central, checks, opt.seed), opt);
        for (const auto& c : checks)
            if (!c.pass) {
                res.code = verification_failed;
                res.err += "FAIL " + c.claim + ": " + c.description + " [" + c.context + "]\n";
            }
        return res;
    });
}

/// Family parameter -> spec. D and Q are indexed by n (orders 2n and 4n),
/// SD by the exponent, M by d with a fixed prime.
inline GroupSpec family_spec(const std::string& family, unsigned n, unsigned p) {
    if (family == "D") return GroupSpec{spec::Dihedral{2 * n}};
    if (family == "Q") return GroupSpec{spec::Quaternion{4 * n}};
    if (family == "SD") return GroupSpec{spec::SemiDihedral{n}};
    if (family == "M") return GroupSpec{spec::ModularM{p, n}};
    if (family == "C") return GroupSpec{spec::Cyclic{n}};
    if (family == "S") return GroupSpec{spec::Symmetric{n}};
    if (family == "A") return GroupSpec{spec::Alternating{n}};
    throw invalid_input("unknown family '" + family + "' (expected D, Q, SD, M, C, S or A)");
}

inline Result cmd_scan(const std::string& family, unsigned from, unsigned to, unsigned p, const Options& opt) {
    Result head = guarded([&] {
        family_spec(family, std::max(from, 1u), p);
        if (from > to) throw invalid_input("--from exceeds --to");
        return Result{};
    });
    if (head.code != ok) return head;

    std::vector<char> integral(to - from + 1, 0);  // one slot per item, written by its own task
    auto item = [&](unsigned n) {
        return guarded([&] {
            GroupSpec spec = family_spec(family, n, p);
            GroupData gd(build_group(spec, opt.limits));
            auto central = central_for(gd, opt);
            Result res;
            warn_irrational(central, res.err);
            json doc = report_document(gd, central, {}, opt.seed);
            doc["parameter"] = n;
            res.out = render(doc, opt, true);
            HaradaReport hr = harada_report(gd);
            integral[n - from] = hr.integral;
            if (!hr.h) res.code = internal_anomaly;
            return res;
        });
    };

    std::vector<Result> results(to - from + 1);
    const unsigned jobs = std::max(1u, opt.jobs);
    for (unsigned base = from; base <= to; base += jobs) {
        std::vector<std::future<Result>> batch;
        for (unsigned n = base; n <= to && n < base + jobs; ++n)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, item, n));
        for (std::size_t i = 0; i < batch.size(); ++i) results[base - from + i] = batch[i].get();
        if (to - base < jobs) break;  // guards unsigned overflow at the top of the range
    }

    Result out;
    bool all_integral = true;
    std::size_t anomalies = 0, failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        auto& r = results[i];
        out.err += r.err;
        if (r.code != ok) {
            ++failures;
            if (r.code == internal_anomaly) ++anomalies;
            out.code = std::max(out.code, r.code);
            json e{{"schema_version", kSchemaVersion},
                   {"parameter", from + i},
                   {"error", r.err.substr(0, r.err.find_last_not_of('\n') + 1)},
                   {"exit_code", r.code}};
            out.out += e.dump() + "\n";
            all_integral = false;
            continue;
        }
        out.out += r.out;
        if (!integral[i]) all_integral = false;
    }
    json summary{{"summary",
                  {{"family", family},
                   {"count", results.size()},
                   {"all_integral", all_integral},
                   {"failures", failures},
                   {"anomalies", anomalies}}}};
    out.out += summary.dump() + "\n";
    return out;
}

}  // namespace harada::cli
