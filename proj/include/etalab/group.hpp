#pragma once

// Finite groups as explicit multiplication tables, plus the primitive
// operations everything else is built on: products, inverses, powers,
// conjugation, commutators, subgroup closure, normality, quotients.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etalab/error.hpp"

namespace etalab {

// Index of a group element.  0 is always the identity.  An ElementId is
// only meaningful relative to the FiniteGroup it came from.
using ElementId = std::uint16_t;

// Hard ceiling imposed by the ElementId representation.
inline constexpr std::uint64_t kMaxRepresentableOrder = 65535;

// How the group laws are verified on construction.  Identity and inverse
// laws are always checked exhaustively (they are linear); associativity is
// cubic, so it is exhaustive only up to `exhaustive_threshold` and checked
// on `samples` pseudo-random triples above that.
struct LawCheckOptions {
    std::uint32_t exhaustive_threshold = 512;
    std::uint32_t samples = 10000;
    std::uint64_t seed = 0x6574616c61625f67ULL;
};

// A finite group given by its full multiplication table.  Immutable after
// construction; safe to share across threads.
class FiniteGroup {
public:
    // `table` is row-major, n*n entries, table[x*n+y] = x*y.  Verifies the
    // group laws per `opts` and computes the inverse map.  Throws LawError.
    FiniteGroup(std::uint32_t order, std::vector<ElementId> table,
                std::string spec_label, const LawCheckOptions& opts = {});

    std::uint32_t order() const { return order_; }
    const std::string& spec_label() const { return spec_label_; }

    ElementId mul(ElementId x, ElementId y) const {
        check_element(x);
        check_element(y);
        return table_[std::size_t(x) * order_ + y];
    }

    ElementId inverse(ElementId x) const {
        check_element(x);
        return inverse_[x];
    }

    // x^k with square-and-multiply; k may be negative.
    ElementId power(ElementId x, std::int64_t k) const;

    // Smallest k >= 1 with x^k = identity.
    std::uint32_t element_order(ElementId x) const;

    // t^-1 * x * t
    ElementId conjugate(ElementId x, ElementId t) const {
        return mul(mul(inverse(t), x), t);
    }

    // a^-1 * b^-1 * a * b
    ElementId commutator(ElementId a, ElementId b) const {
        return mul(mul(inverse(a), inverse(b)), mul(a, b));
    }

    // Unchecked table access for hot loops whose indices are trusted.
    ElementId mul_raw(std::uint32_t x, std::uint32_t y) const {
        return table_[std::size_t(x) * order_ + y];
    }

private:
    void check_element(ElementId x) const {
        if (x >= order_)
            throw UsageError("element index " + std::to_string(x) +
                             " out of range for group of order " +
                             std::to_string(order_));
    }
    void verify_laws(const LawCheckOptions& opts) const;

    std::uint32_t order_;
    std::vector<ElementId> table_;
    std::vector<ElementId> inverse_;
    std::string spec_label_;
};

// A subgroup of a specific parent group, stored as the sorted list of its
// element ids.  The sorted list is the canonical form: subgroup equality,
// ordering and hashing all mean element-set equality.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<ElementId> elements;  // sorted ascending, contains 0

    std::size_t size() const { return elements.size(); }
    bool contains(ElementId x) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent == b.parent && a.elements == b.elements;
    }
    // Canonical subgroup order: lexicographic on the sorted element lists.
    friend bool operator<(const Subgroup& a, const Subgroup& b) {
        return a.elements < b.elements;
    }
};

// The whole group as a subgroup of itself.
Subgroup whole_group(const FiniteGroup& g);

// Trivial subgroup {identity}.
Subgroup trivial_subgroup(const FiniteGroup& g);

// Smallest subgroup containing `gens`, by breadth-first closure under the
// group operation.  generated_subgroup(G, {}) is the trivial subgroup.
Subgroup generated_subgroup(const FiniteGroup& g,
                            const std::vector<ElementId>& gens);

// True iff t^-1 H t = H for every t in G.
bool is_normal(const FiniteGroup& g, const Subgroup& h);

struct QuotientResult {
    FiniteGroup group;
    // projection[x] = id of the coset of x; a surjective homomorphism.
    std::vector<ElementId> projection;
};

// Coset group G/N.  Cosets are numbered by their minimal member's index,
// so the identity coset is element 0.  Throws DomainError if N is not
// normal in G.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

// The subgroup re-indexed as a standalone group (elements renumbered
// 0..|H|-1 in ascending parent order, so the identity stays at 0).
FiniteGroup subgroup_as_group(const Subgroup& h);

// order = p^n for a prime p, n >= 1.  Returns nullopt for order 1 and for
// orders with more than one prime factor.
struct PrimePower {
    std::uint64_t p;
    std::uint32_t n;
};
std::optional<PrimePower> prime_power_decompose(std::uint64_t order);

bool is_prime(std::uint64_t m);

}  // namespace etalab
