#pragma once

// Construction of the catalog's groups: cyclic groups, direct products,
// the dihedral / quaternion / semidihedral 2-group families, Heisenberg
// groups, modular p-groups, plus a tiny expression language describing
// them and a portable plain-text multiplication-table format (GTBL).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "etalab/group.hpp"

namespace etalab {

// Expression tree for group constructions.  Built through the factory
// functions below, which validate the parameter constraints.
struct GroupSpec {
    enum class Kind {
        Cyclic,        // cyclic(m), m >= 1
        Product,       // product(e1, ..., ek), k >= 1
        Dihedral,      // dihedral(2m), m >= 2
        Quaternion,    // quaternion(2^k), k >= 3
        Semidihedral,  // semidihedral(2^k), k >= 4
        Heisenberg,    // heisenberg(p), p an odd prime
        Modular,       // modular(p, k), p prime, k >= 3, (p,k) != (2,3)
        Table,         // table(path), a GTBL file
    };

    Kind kind = Kind::Cyclic;
    std::uint64_t m = 1;              // cyclic modulus / family order / prime p
    std::uint64_t k = 0;              // modular exponent
    std::string path;                 // table path
    std::vector<GroupSpec> children;  // product factors

    static GroupSpec cyclic(std::uint64_t m);
    static GroupSpec product(std::vector<GroupSpec> factors);
    static GroupSpec dihedral(std::uint64_t order);
    static GroupSpec quaternion(std::uint64_t order);
    static GroupSpec semidihedral(std::uint64_t order);
    static GroupSpec heisenberg(std::uint64_t p);
    static GroupSpec modular(std::uint64_t p, std::uint64_t k);
    static GroupSpec table(std::string path);

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Canonical textual form, e.g. "product(cyclic(4),cyclic(2))".
// parse_spec(print_spec(s)) == s.
std::string print_spec(const GroupSpec& spec);

// Parses the grammar
//   expr := name "(" args ")"
// with arbitrary whitespace between tokens.  Throws SpecParseError with a
// position for syntax errors and UsageError for constraint violations.
GroupSpec parse_spec(const std::string& text);

struct RealizeOptions {
    std::uint64_t max_order = 5000;
    LawCheckOptions laws{};
};

// Group order the spec will realize to, without building the table.
// Table specs return 0 (unknown until the file is read).
std::uint64_t spec_order(const GroupSpec& spec);

// Builds the multiplication table for the spec under the fixed indexing
// conventions (see each build_* in builders.cpp).  Throws ResourceError
// if the order exceeds opts.max_order.
FiniteGroup realize(const GroupSpec& spec, const RealizeOptions& opts = {});

// GTBL v1: line 1 "gtbl 1 <n>", then n lines of n decimal entries,
// row x column y holding x*y; element 0 must be the identity; trailing
// newline required; '#' comment lines allowed before the header only.
FiniteGroup read_table(const std::string& path, const RealizeOptions& opts = {});
FiniteGroup read_table_stream(std::istream& in, const std::string& label,
                              const RealizeOptions& opts = {});
void write_table(const FiniteGroup& g, const std::string& path);
void write_table_stream(const FiniteGroup& g, std::ostream& out);

}  // namespace etalab
