#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "harada/group.hpp"

namespace harada {

struct ConjugacyClass {
    std::vector<Element> members;  // sorted
    Element representative;        // minimal member
    std::size_t size() const { return members.size(); }
};

/// Conjugacy classes ordered identity first, then by (size, representative).
struct ClassData {
    std::vector<ConjugacyClass> classes;
    std::vector<std::size_t> class_of;          // element -> class index
    std::vector<std::size_t> inv_class;         // i -> i*
    std::vector<std::size_t> centralizer_order;  // |G| / |K_i|

    std::size_t count() const { return classes.size(); }
    std::size_t size(std::size_t i) const { return classes[i].size(); }
    Element rep(std::size_t i) const { return classes[i].representative; }
};

inline ClassData conjugacy_classes(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<bool> done(n, false);
    std::vector<ConjugacyClass> raw;
    for (Element x = 0; x < n; ++x) {
        if (done[x]) continue;
        ConjugacyClass k;
        for (Element h = 0; h < n; ++h) {
            Element y = g.conj(x, h);
            if (!done[y]) {
                done[y] = true;
                k.members.push_back(y);
            }
        }
        std::sort(k.members.begin(), k.members.end());
        k.representative = k.members.front();
        raw.push_back(std::move(k));
    }
    const Element e = g.identity();
    std::stable_sort(raw.begin(), raw.end(), [e](const ConjugacyClass& a, const ConjugacyClass& b) {
        bool ai = a.representative == e, bi = b.representative == e;
        if (ai != bi) return ai;
        if (a.size() != b.size()) return a.size() < b.size();
        return a.representative < b.representative;
    });
    ClassData cd;
    cd.classes = std::move(raw);
    cd.class_of.assign(n, 0);
    for (std::size_t i = 0; i < cd.classes.size(); ++i)
        for (Element x : cd.classes[i].members) cd.class_of[x] = i;
    for (std::size_t i = 0; i < cd.classes.size(); ++i) {
        cd.inv_class.push_back(cd.class_of[g.inv(cd.classes[i].representative)]);
        cd.centralizer_order.push_back(n / cd.classes[i].size());
    }
    return cd;
}

inline Fingerprint fingerprint(const FiniteGroup& g) {
    ClassData cd = conjugacy_classes(g);
    Fingerprint f{g.order(), {}, center(g).order(), commutator_subgroup(g).order()};
    for (const auto& k : cd.classes) f.class_sizes.push_back(k.size());
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
    return f;
}

}  // namespace harada
