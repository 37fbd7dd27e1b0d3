#include "etalab/group.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace etalab {

FiniteGroup::FiniteGroup(std::uint32_t order, std::vector<ElementId> table,
                         std::string spec_label, const LawCheckOptions& opts)
    : order_(order), table_(std::move(table)), spec_label_(std::move(spec_label)) {
    if (order_ == 0) throw LawError("a group has at least one element");
    if (order_ > kMaxRepresentableOrder)
        throw ResourceError("group order " + std::to_string(order_) +
                            " exceeds the representable maximum " +
                            std::to_string(kMaxRepresentableOrder));
    if (table_.size() != std::size_t(order_) * order_)
        throw LawError("multiplication table is not order x order");
    for (ElementId v : table_)
        if (v >= order_) throw LawError("table entry out of range");

    // Identity law, exhaustive.
    for (std::uint32_t x = 0; x < order_; ++x) {
        if (mul_raw(0, x) != x || mul_raw(x, 0) != x)
            throw LawError("element 0 is not the identity");
    }

    // Two-sided inverses, exhaustive.
    inverse_.assign(order_, 0);
    for (std::uint32_t x = 0; x < order_; ++x) {
        bool found = false;
        for (std::uint32_t y = 0; y < order_; ++y) {
            if (mul_raw(x, y) == 0 && mul_raw(y, x) == 0) {
                inverse_[x] = static_cast<ElementId>(y);
                found = true;
                break;
            }
        }
        if (!found)
            throw LawError("element " + std::to_string(x) +
                           " has no two-sided inverse");
    }

    verify_laws(opts);
}

void FiniteGroup::verify_laws(const LawCheckOptions& opts) const {
    auto check_triple = [this](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
        if (mul_raw(mul_raw(x, y), z) != mul_raw(x, mul_raw(y, z)))
            throw LawError("associativity fails at (" + std::to_string(x) + "," +
                           std::to_string(y) + "," + std::to_string(z) + ")");
    };
    if (order_ <= opts.exhaustive_threshold) {
        for (std::uint32_t x = 0; x < order_; ++x)
            for (std::uint32_t y = 0; y < order_; ++y)
                for (std::uint32_t z = 0; z < order_; ++z) check_triple(x, y, z);
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::uint32_t> dist(0, order_ - 1);
        for (std::uint32_t i = 0; i < opts.samples; ++i)
            check_triple(dist(rng), dist(rng), dist(rng));
    }
}

ElementId FiniteGroup::power(ElementId x, std::int64_t k) const {
    check_element(x);
    std::uint64_t e;
    if (k < 0) {
        x = inverse_[x];
        e = 0ULL - static_cast<std::uint64_t>(k);
    } else {
        e = static_cast<std::uint64_t>(k);
    }
    ElementId acc = 0;  // identity
    ElementId base = x;
    while (e > 0) {
        if (e & 1) acc = mul_raw(acc, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint32_t FiniteGroup::element_order(ElementId x) const {
    check_element(x);
    std::uint32_t k = 1;
    ElementId y = x;
    while (y != 0) {
        y = mul_raw(y, x);
        ++k;
    }
    return k;
}

bool Subgroup::contains(ElementId x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup whole_group(const FiniteGroup& g) {
    Subgroup s{&g, {}};
    s.elements.resize(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i)
        s.elements[i] = static_cast<ElementId>(i);
    return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{&g, {0}}; }

Subgroup generated_subgroup(const FiniteGroup& g,
                            const std::vector<ElementId>& gens) {
    std::vector<bool> seen(g.order(), false);
    seen[0] = true;
    std::vector<ElementId> members{0};
    std::queue<ElementId> frontier;
    frontier.push(0);
    for (ElementId x : gens) {
        if (x >= g.order())
            throw UsageError("generator index out of range");
        if (!seen[x]) {
            seen[x] = true;
            members.push_back(x);
            frontier.push(x);
        }
    }
    // Closure under right multiplication by the generators; in a finite
    // group this already yields inverses.
    while (!frontier.empty()) {
        ElementId x = frontier.front();
        frontier.pop();
        for (ElementId h : gens) {
            ElementId y = g.mul_raw(x, h);
            if (!seen[y]) {
                seen[y] = true;
                members.push_back(y);
                frontier.push(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{&g, std::move(members)};
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    if (h.parent != &g)
        throw UsageError("subgroup does not belong to this group");
    for (ElementId x : h.elements) {
        for (std::uint32_t t = 0; t < g.order(); ++t) {
            if (!h.contains(g.conjugate(x, static_cast<ElementId>(t))))
                return false;
        }
    }
    return true;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
    if (n.parent != &g)
        throw UsageError("subgroup does not belong to this group");
    if (!is_normal(g, n))
        throw DomainError("quotient by a non-normal subgroup");

    const std::uint32_t m = static_cast<std::uint32_t>(g.order() / n.size());
    constexpr ElementId kUnassigned = static_cast<ElementId>(0xFFFF);
    std::vector<ElementId> coset_of(g.order(), kUnassigned);
    std::vector<ElementId> rep;  // minimal member of each coset
    rep.reserve(m);

    // Sweeping elements in increasing order makes the first unassigned
    // element the minimal member of its coset, which fixes the numbering.
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (coset_of[x] != kUnassigned) continue;
        const ElementId cid = static_cast<ElementId>(rep.size());
        rep.push_back(static_cast<ElementId>(x));
        for (ElementId h : n.elements)
            coset_of[g.mul(static_cast<ElementId>(x), h)] = cid;
    }

    std::vector<ElementId> table(std::size_t(m) * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            table[std::size_t(i) * m + j] = coset_of[g.mul(rep[i], rep[j])];

    FiniteGroup q(m, std::move(table),
                  g.spec_label() + "/N" + std::to_string(n.size()));
    return QuotientResult{std::move(q), std::move(coset_of)};
}

FiniteGroup subgroup_as_group(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    const std::uint32_t m = static_cast<std::uint32_t>(h.size());
    std::vector<ElementId> index_of(g.order(), 0);
    for (std::uint32_t i = 0; i < m; ++i) index_of[h.elements[i]] = static_cast<ElementId>(i);
    std::vector<ElementId> table(std::size_t(m) * m);
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
            ElementId z = g.mul(h.elements[i], h.elements[j]);
            if (!h.contains(z))
                throw ConsistencyError("element set is not closed under the product");
            table[std::size_t(i) * m + j] = index_of[z];
        }
    }
    return FiniteGroup(m, std::move(table),
                       g.spec_label() + "|sub" + std::to_string(m));
}

std::optional<PrimePower> prime_power_decompose(std::uint64_t order) {
    if (order < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= order; ++p) {
        if (order % p == 0) {
            std::uint32_t n = 0;
            std::uint64_t v = order;
            while (v % p == 0) {
                v /= p;
                ++n;
            }
            if (v != 1) return std::nullopt;
            return PrimePower{p, n};
        }
    }
    return PrimePower{order, 1};  // order itself is prime
}

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

}  // namespace etalab
