#pragma once

// Report documents (schema "1"). Exact values are always strings:
// decimal integers, "p/q" rationals, "cyc(m)[c0,...]" for values outside Q.

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "harada/central.hpp"
#include "harada/verify.hpp"

namespace harada {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

inline json verification_json(const VerificationReport& v) {
    json j;
    j["claim"] = v.claim;
    j["pass"] = v.pass;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["description"] = v.description;
    j["context"] = v.context;
    j["skipped"] = v.skipped;
    if (v.tolerance > 0) {
        std::ostringstream t;
        t << v.tolerance;
        j["tolerance"] = t.str();
    }
    return j;
}

inline json central_json(const CentralAnalysis& ca) {
    json arr = json::array();
    for (std::size_t i = 0; i < ca.reports.size(); ++i) {
        const PhiReport& r = ca.reports[i];
        json e;
        e["Z"] = subgroup_text(ca.orbits.z);
        e["phi_id"] = i;
        e["phi"] = character_text(r.phi);
        e["kernel"] = subgroup_text(r.phi.kernel);
        e["conductor"] = r.phi.conductor;
        e["basis"] = r.basis;
        e["gamma_phi"] = r.gamma_phi.to_string();
        e["c_phi"] = r.c_phi.get_str();
        e["mu_phi"] = r.mu_phi.to_string();
        e["rational"] = r.rational();
        json k = json::object();
        for (std::size_t n = 0; n < ca.orbits.subgroups.size(); ++n)
            k[subgroup_text(ca.orbits.subgroups[n])] = r.kappa[n].get_str();
        e["kappa"] = std::move(k);
        arr.push_back(std::move(e));
    }
    return arr;
}

inline json report_document(const GroupData& gd, const std::vector<CentralAnalysis>& central,
                            const std::vector<VerificationReport>& verifications, std::uint64_t seed) {
    HaradaReport r = harada_report(gd);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["group"] = gd.group.label();
    doc["order"] = gd.group.order();
    json classes = json::array();
    for (std::size_t i = 0; i < gd.classes.count(); ++i)
        classes.push_back({{"rep", gd.classes.rep(i)},
                           {"size", gd.classes.size(i)},
                           {"centralizer", gd.classes.centralizer_order[i]}});
    doc["classes"] = std::move(classes);
    doc["gamma"] = r.gamma.get_str();
    doc["c"] = r.c.get_str();
    doc["mu"] = r.mu.get_str();
    doc["h"] = r.h ? json(r.h->get_str()) : json(nullptr);
    doc["integral"] = r.integral;
    const std::size_t derived = commutator_subgroup(gd.group).order();
    doc["chigira_divisible"] =
        r.h && is_integer(*r.h) && mpz_divisible_ui_p(r.h->get_num().get_mpz_t(), derived) != 0;
    json cen = json::array();
    for (const auto& ca : central)
        for (auto& e : central_json(ca)) cen.push_back(std::move(e));
    doc["central"] = std::move(cen);
    json ver = json::array();
    for (const auto& v : verifications) ver.push_back(verification_json(v));
    doc["verifications"] = std::move(ver);
    doc["seed"] = std::to_string(seed);
    return doc;
}

/// Human-readable rendering of a report document.
inline std::string table_text(const json& doc) {
    std::ostringstream o;
    auto str = [](const json& v) { return v.is_null() ? std::string("null") : v.is_string() ? v.get<std::string>() : v.dump(); };
    o << "group  " << str(doc["group"]) << "  (order " << str(doc["order"]) << ", " << doc["classes"].size()
      << " classes)\n";
    o << "class  rep  size  |C_G(g)|\n";
    for (std::size_t i = 0; i < doc["classes"].size(); ++i) {
        const auto& c = doc["classes"][i];
        o << std::setw(5) << i << std::setw(5) << str(c["rep"]) << std::setw(6) << str(c["size"]) << std::setw(10)
          << str(c["centralizer"]) << "\n";
    }
    for (const char* key : {"gamma", "c", "mu", "h", "integral", "chigira_divisible"})
        o << std::left << std::setw(18) << key << std::right << str(doc[key]) << "\n";
    if (!doc["central"].empty()) {
        o << "Z / phi                      gamma_phi        c_phi        mu_phi\n";
        for (const auto& e : doc["central"])
            o << str(e["Z"]) << " " << str(e["phi"]) << "  " << str(e["gamma_phi"]) << "  " << str(e["c_phi"]) << "  "
              << str(e["mu_phi"]) << "\n";
    }
    for (const auto& v : doc["verifications"])
        o << (v["skipped"].get<bool>() ? "SKIP " : v["pass"].get<bool>() ? "PASS " : "FAIL ") << str(v["claim"]) << "  "
          << str(v["description"]) << "  [" << str(v["context"]) << "]  " << str(v["lhs"]) << " vs " << str(v["rhs"])
          << "\n";
    return o.str();
}

}  // namespace harada
