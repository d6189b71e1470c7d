// harada: invariants, verification and family scans from the shell.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "harada/cli.hpp"

namespace {

// "i:j" -> element indices of the glued generators
std::pair<harada::Element, harada::Element> parse_glue(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw harada::invalid_input("--glue expects i:j");
    try {
        return {static_cast<harada::Element>(std::stoul(s.substr(0, colon))),
                static_cast<harada::Element>(std::stoul(s.substr(colon + 1)))};
    } catch (const std::logic_error&) {
        throw harada::invalid_input("--glue expects i:j");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harada's number and its central refinements from class-algebra Gramians"};
    app.require_subcommand(1);

    harada::cli::Options opt;
    std::string glue, claim, spec_text, family;
    unsigned from = 1, to = 1, p = 2;
    std::size_t max_order = 0;

    auto common = [&](CLI::App* sc) {
        sc->add_option("--central", opt.central, "central subgroup for phi reports")
            ->check(CLI::IsMember({"none", "auto", "full-center", "trivial"}));
        sc->add_option("--seed", opt.seed, "oracle seed");
        sc->add_option("--max-order", max_order, "group order cap (overrides HARADA_MAX_ORDER)");
        sc->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "table"}));
        sc->add_option("--jobs", opt.jobs, "parallel scan items");
        sc->add_option("--glue", glue, "cprod gluing generators i:j");
    };

    auto* inv = app.add_subcommand("invariants", "gamma, c, mu, h and optional phi reports");
    inv->add_option("spec", spec_text, "group descriptor")->required();
    common(inv);

    auto* ver = app.add_subcommand("verify", "check identities from the claim catalogue");
    ver->add_option("claim", claim, "claim id or all")->required();
    ver->add_option("spec", spec_text, "group descriptor")->required();
    common(ver);

    auto* scan = app.add_subcommand("scan", "one report per family parameter");
    scan->add_option("family", family, "D, Q, SD, M, C, S or A")->required();
    scan->add_option("--from", from, "first parameter")->required();
    scan->add_option("--to", to, "last parameter")->required();
    scan->add_option("--p", p, "prime for the M family");
    common(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : harada::cli::bad_input;
    }

    harada::cli::Result r;
    try {
        if (max_order) opt.limits.max_order = max_order;
        if (!glue.empty()) opt.glue = parse_glue(glue);
        if (*inv)
            r = harada::cli::cmd_invariants(spec_text, opt);
        else if (*ver)
            r = harada::cli::cmd_verify(claim, spec_text, opt);
        else
            r = harada::cli::cmd_scan(family, from, to, p, opt);
    } catch (const harada::invalid_input& e) {
        r = {harada::cli::bad_input, "", std::string("invalid input: ") + e.what() + "\n"};
    }
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
