#pragma once

// Lower central series, nilpotence class, center, exponents, and the
// exponent-divisibility check on the last nontrivial term.

#include <cstdint>
#include <vector>

#include "etalab/bounds.hpp"
#include "etalab/group.hpp"

namespace etalab {

// Subgroup generated by { [h,k] : h in H, k in K }.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h,
                             const Subgroup& k);

// terms = [G^1, G^2, ..., G^(l+1)] with G^1 = G, G^(i+1) = [G^i, G],
// G^(l+1) trivial and G^l nontrivial; nilpotence_class = l.  The trivial
// group has terms = [ {0} ] and class 0.
struct LowerCentralSeries {
    std::vector<Subgroup> terms;
    std::uint32_t nilpotence_class = 0;
};

// Throws DomainError("not nilpotent") when the descent stabilizes at a
// nontrivial term (arbitrary GTBL input need not be nilpotent).
LowerCentralSeries lower_central_series(const FiniteGroup& g);

// { z : z x = x z for all x }.
Subgroup center(const FiniteGroup& g);

// Least common multiple of the element orders of H.
std::uint64_t exponent(const Subgroup& h);

// For a p-group of class l >= 2 and order p^n, records whether
// exponent(G^l) divides p^floor(n/(l+1)).  Throws DomainError when the
// class is < 2 or the order is not a prime power.
BoundCheck check_lemma_orders(const FiniteGroup& g);

}  // namespace etalab
