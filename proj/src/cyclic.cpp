#include "etalab/cyclic.hpp"

#include <algorithm>
#include <map>

namespace etalab {

namespace {

// Distinct cyclic subgroups of G with an element -> subgroup index, used by
// the batch computations.  sub_of[x] identifies <x>.
struct CyclicIndex {
    std::vector<Subgroup> subgroups;
    std::vector<std::uint32_t> sub_of;
    std::vector<std::vector<bool>> member;  // member[s][x]: x in subgroups[s]

    explicit CyclicIndex(const FiniteGroup& g) {
        const std::uint32_t n = g.order();
        sub_of.assign(n, 0);
        std::map<std::vector<ElementId>, std::uint32_t> seen;
        for (std::uint32_t x = 0; x < n; ++x) {
            Subgroup s = cyclic_subgroup(g, static_cast<ElementId>(x));
            auto [it, inserted] =
                seen.try_emplace(std::move(s.elements),
                                 static_cast<std::uint32_t>(subgroups.size()));
            if (inserted)
                subgroups.push_back(Subgroup{&g, it->first});
            sub_of[x] = it->second;
        }
        member.assign(subgroups.size(), std::vector<bool>(n, false));
        for (std::size_t s = 0; s < subgroups.size(); ++s)
            for (ElementId e : subgroups[s].elements) member[s][e] = true;
    }

    // <x> strictly below some other cyclic subgroup?  Scans every h, per
    // the generic containment definition.
    bool element_is_maximal(std::uint32_t n, ElementId x) const {
        const std::uint32_t sx = sub_of[x];
        for (std::uint32_t h = 0; h < n; ++h) {
            const std::uint32_t sh = sub_of[h];
            if (sh != sx && member[sh][x]) return false;
        }
        return true;
    }
};

}  // namespace

Subgroup cyclic_subgroup(const FiniteGroup& g, ElementId x) {
    std::vector<ElementId> elems{0};
    ElementId y = x;
    while (y != 0) {
        elems.push_back(y);
        y = g.mul(y, x);
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup{&g, std::move(elems)};
}

std::vector<ElementId> pth_power_set(const FiniteGroup& g, std::uint64_t p) {
    std::vector<bool> hit(g.order(), false);
    for (std::uint32_t x = 0; x < g.order(); ++x)
        hit[g.power(static_cast<ElementId>(x), static_cast<std::int64_t>(p))] = true;
    std::vector<ElementId> out;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (hit[x]) out.push_back(static_cast<ElementId>(x));
    return out;
}

bool is_maximal_cyclic(const FiniteGroup& g, ElementId x) {
    // <x> < <h> is equivalent to: x is a power of h and o(h) > o(x).
    const std::uint32_t ox = g.element_order(x);
    for (std::uint32_t h = 0; h < g.order(); ++h) {
        if (g.element_order(static_cast<ElementId>(h)) <= ox) continue;
        ElementId y = 0;
        do {
            y = g.mul(y, static_cast<ElementId>(h));
            if (y == x) return false;
        } while (y != 0);
    }
    return true;
}

bool is_maximal_cyclic_pgroup(const FiniteGroup& g, ElementId x, std::uint64_t p) {
    std::vector<ElementId> powers = pth_power_set(g, p);
    return !std::binary_search(powers.begin(), powers.end(), x);
}

std::vector<Subgroup> maximal_cyclic_subgroups(const FiniteGroup& g) {
    CyclicIndex index(g);
    const std::uint32_t n = g.order();
    // Maximality is a property of <x>, so one generator settles it.
    enum : char { kUnknown, kMaximal, kCovered };
    std::vector<char> state(index.subgroups.size(), kUnknown);
    for (std::uint32_t x = 0; x < n; ++x) {
        char& s = state[index.sub_of[x]];
        if (s != kUnknown) continue;
        s = index.element_is_maximal(n, static_cast<ElementId>(x)) ? kMaximal
                                                                   : kCovered;
    }
    std::vector<Subgroup> out;
    for (std::size_t s = 0; s < index.subgroups.size(); ++s)
        if (state[s] == kMaximal) out.push_back(index.subgroups[s]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(
    const FiniteGroup& g, const std::vector<Subgroup>& subs) {
    // Memoized canonical forms: conjugating a member must land on a member.
    std::map<std::vector<ElementId>, std::size_t> index;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].parent != &g)
            throw UsageError("subgroup does not belong to this group");
        index.emplace(subs[i].elements, i);
    }

    std::vector<bool> assigned(subs.size(), false);
    std::vector<std::vector<Subgroup>> classes;
    // Visit in canonical order so classes come out sorted by least member.
    std::vector<std::size_t> order(subs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return subs[a].elements < subs[b].elements;
    });

    for (std::size_t i : order) {
        if (assigned[i]) continue;
        std::vector<std::vector<ElementId>> orbit;
        for (std::uint32_t t = 0; t < g.order(); ++t) {
            std::vector<ElementId> image;
            image.reserve(subs[i].elements.size());
            for (ElementId h : subs[i].elements)
                image.push_back(g.conjugate(h, static_cast<ElementId>(t)));
            std::sort(image.begin(), image.end());
            auto it = index.find(image);
            if (it == index.end())
                throw ConsistencyError(
                    "input subgroup list is not closed under conjugation");
            if (!assigned[it->second]) {
                assigned[it->second] = true;
                orbit.push_back(std::move(image));
            }
        }
        std::sort(orbit.begin(), orbit.end());
        std::vector<Subgroup> cls;
        cls.reserve(orbit.size());
        for (auto& members : orbit) cls.push_back(Subgroup{&g, std::move(members)});
        classes.push_back(std::move(cls));
    }
    // Classes were formed in canonical order of their least member already;
    // keep a final sort for safety.
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

MaximalCyclicClasses maximal_cyclic_classes(const FiniteGroup& g) {
    MaximalCyclicClasses result;
    result.group = &g;
    result.classes = subgroup_conjugacy_classes(g, maximal_cyclic_subgroups(g));
    return result;
}

std::uint64_t eta(const FiniteGroup& g) { return maximal_cyclic_classes(g).eta(); }

bool is_cyclic_group(const FiniteGroup& g) {
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (g.element_order(static_cast<ElementId>(x)) == g.order()) return true;
    return false;
}

CoverReport check_cyclic_cover(const FiniteGroup& g) {
    CoverReport report;
    std::vector<Subgroup> components = maximal_cyclic_subgroups(g);
    report.degenerate =
        components.size() == 1 && components.front().size() == g.order();

    std::vector<std::uint32_t> hits(g.order(), 0);
    for (const Subgroup& c : components)
        for (ElementId e : c.elements) ++hits[e];
    report.is_cover =
        std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h > 0; });

    // A private element must generate its component: any x with hits[x] == 1
    // lying in c works only if <x> = c.
    report.is_irredundant = true;
    for (const Subgroup& c : components) {
        ElementId witness = 0;
        bool found = false;
        for (ElementId e : c.elements) {
            if (hits[e] == 1 && g.element_order(e) == c.size()) {
                witness = e;
                found = true;
                break;
            }
        }
        if (!found) {
            report.is_irredundant = false;
            report.witnesses.clear();
            return report;
        }
        report.witnesses.push_back(witness);
    }
    return report;
}

}  // namespace etalab
