#include "etalab/series.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "etalab/error.hpp"

namespace etalab {

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h,
                             const Subgroup& k) {
    if (h.parent != &g || k.parent != &g)
        throw UsageError("subgroup does not belong to this group");
    std::set<ElementId> gens;
    for (ElementId a : h.elements)
        for (ElementId b : k.elements) gens.insert(g.commutator(a, b));
    gens.erase(0);
    return generated_subgroup(g, std::vector<ElementId>(gens.begin(), gens.end()));
}

LowerCentralSeries lower_central_series(const FiniteGroup& g) {
    LowerCentralSeries series;
    Subgroup whole = whole_group(g);
    series.terms.push_back(whole);
    while (series.terms.back().size() > 1) {
        Subgroup next = commutator_subgroup(g, series.terms.back(), whole);
        if (next.elements == series.terms.back().elements)
            throw DomainError("not nilpotent: lower central series stabilizes at order " +
                              std::to_string(next.size()));
        series.terms.push_back(std::move(next));
    }
    series.nilpotence_class =
        static_cast<std::uint32_t>(series.terms.size() - 1);
    return series;
}

Subgroup center(const FiniteGroup& g) {
    std::vector<ElementId> members;
    for (std::uint32_t z = 0; z < g.order(); ++z) {
        bool central = true;
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            if (g.mul_raw(z, x) != g.mul_raw(x, z)) {
                central = false;
                break;
            }
        }
        if (central) members.push_back(static_cast<ElementId>(z));
    }
    return Subgroup{&g, std::move(members)};
}

std::uint64_t exponent(const Subgroup& h) {
    std::uint64_t e = 1;
    for (ElementId x : h.elements)
        e = std::lcm(e, std::uint64_t(h.parent->element_order(x)));
    return e;
}

BoundCheck check_lemma_orders(const FiniteGroup& g) {
    auto pp = prime_power_decompose(g.order());
    if (!pp) throw DomainError("check_lemma_orders requires a p-group");
    LowerCentralSeries series = lower_central_series(g);
    const std::uint32_t l = series.nilpotence_class;
    if (l < 2) throw DomainError("check_lemma_orders requires nilpotence class >= 2");

    const Subgroup& last = series.terms[l - 1];  // G^l
    const Int exp_last = exponent(last);
    Int bound = 1;
    for (std::uint32_t i = 0; i < pp->n / (l + 1); ++i) bound *= pp->p;

    BoundCheck check;
    check.label = "lemma-orders";
    check.lhs = Rat(exp_last);
    check.rhs = Rat(bound);
    check.relation = Relation::Divides;
    check.pass = relation_holds(check.lhs, Relation::Divides, check.rhs);
    check.context.p = static_cast<std::int64_t>(pp->p);
    check.context.n = pp->n;
    check.context.l = l;
    return check;
}

}  // namespace etalab
