#pragma once

// Group descriptor text:
//   C n | C n1,n2,... | D 2n | Q 4n | SD k | M p d | S n | A n
//   perm "(1 2 3);(1 2)" | prod(spec,spec) | cprod(spec,spec)
// Integers are decimal; perm points are 1-based.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "harada/error.hpp"
#include "harada/families.hpp"

namespace harada {

namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : s_(text) {}

    GroupSpec parse_all() {
        GroupSpec g = parse_spec();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return g;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw parse_error(msg, at); }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    unsigned number() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
            if (v > 0xFFFFFFFFul) fail("number too large");
        }
        return static_cast<unsigned>(v);
    }
    bool at_number() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    GroupSpec parse_spec() {
        const std::size_t start = (skip_ws(), pos_);
        std::string w = word();
        if (w == "C") {
            std::vector<unsigned> f{number()};
            while (peek(',') && next_is_number()) {
                ++pos_;
                f.push_back(number());
            }
            if (f.size() == 1) return GroupSpec{spec::Cyclic{f[0]}};
            return GroupSpec{spec::AbelianProduct{std::move(f)}};
        }
        if (w == "D") return GroupSpec{spec::Dihedral{number()}};
        if (w == "Q") return GroupSpec{spec::Quaternion{number()}};
        if (w == "SD") return GroupSpec{spec::SemiDihedral{number()}};
        if (w == "M") {
            unsigned p = number();
            return GroupSpec{spec::ModularM{p, number()}};
        }
        if (w == "S") return GroupSpec{spec::Symmetric{number()}};
        if (w == "A") return GroupSpec{spec::Alternating{number()}};
        if (w == "perm") return parse_perm();
        if (w == "prod" || w == "cprod") {
            expect('(');
            GroupSpec a = parse_spec();
            expect(',');
            GroupSpec b = parse_spec();
            expect(')');
            return w == "prod" ? make_direct(std::move(a), std::move(b)) : make_central(std::move(a), std::move(b));
        }
        pos_ = start;
        fail(w.empty() ? "expected a group family" : "unknown group family '" + w + "'");
    }

    // "C 2,4" inside "prod(C 2,C 3)": a comma continues the factor list only
    // when a number follows it.
    bool next_is_number() {
        std::size_t save = pos_;
        ++pos_;
        bool r = at_number();
        pos_ = save;
        return r;
    }

    GroupSpec parse_perm() {
        expect('"');
        std::vector<std::vector<std::vector<unsigned>>> gens(1);
        unsigned degree = 1;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) fail("unterminated permutation string");
            char c = s_[pos_];
            if (c == '"') {
                ++pos_;
                break;
            }
            if (c == ';') {
                ++pos_;
                gens.emplace_back();
                continue;
            }
            if (c != '(') fail("expected '(' in cycle notation");
            ++pos_;
            std::vector<unsigned> cyc;
            while (!peek(')')) {
                if (peek(',')) {
                    ++pos_;
                    continue;
                }
                skip_ws();
                const std::size_t at = pos_;
                unsigned pt = number();
                if (pt == 0) fail_at("permutation points are 1-based", at);
                for (unsigned q : cyc)
                    if (q == pt - 1) fail_at("repeated point in cycle", at);
                cyc.push_back(pt - 1);
                degree = std::max(degree, pt);
            }
            ++pos_;
            gens.back().push_back(std::move(cyc));
        }
        spec::PermGenerated pg;
        for (const auto& cycles : gens) {
            Permutation p(degree);
            for (unsigned i = 0; i < degree; ++i) p[i] = i;
            // cycles compose left to right
            for (const auto& cyc : cycles) {
                Permutation c(degree);
                for (unsigned i = 0; i < degree; ++i) c[i] = i;
                for (std::size_t i = 0; i < cyc.size(); ++i) c[cyc[i]] = cyc[(i + 1) % cyc.size()];
                for (unsigned i = 0; i < degree; ++i) p[i] = c[p[i]];
            }
            pg.generators.push_back(std::move(p));
        }
        return GroupSpec{std::move(pg)};
    }
};

}  // namespace detail

/// Throws parse_error carrying the offending position.
inline GroupSpec parse_group_spec(std::string_view text) { return detail::SpecParser(text).parse_all(); }

}  // namespace harada
