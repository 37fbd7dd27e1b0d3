#pragma once

// Catalog construction, the named verification suites tying group
// computations to the closed forms, the independent eta oracle, and
// machine-readable reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etalab/bounds.hpp"
#include "etalab/builders.hpp"
#include "etalab/cyclic.hpp"
#include "etalab/group.hpp"
#include "etalab/series.hpp"

namespace etalab {

struct CatalogEntry {
    GroupSpec spec;
    std::string text;     // canonical spec text; catalog sort key
    std::uint64_t order;  // known from the spec without realizing
    std::uint64_t p;      // catalog entries are p-groups
    std::uint32_t n;      // order = p^n
};

// Invariants of one catalog entry, computed once and cached.  Groups
// themselves are realized on demand and dropped again: a full catalog of
// explicit tables up to order 5000 would not fit in memory comfortably.
struct EntryAnalysis {
    bool cyclic = false;
    bool abelian = false;
    std::uint64_t eta = 0;
    std::uint32_t nilpotence_class = 0;
    std::vector<std::uint64_t> series_orders;
    std::uint64_t exponent_last = 1;  // exponent(G^l), 1 for the trivial group
    std::uint64_t center_order = 0;
    std::uint64_t eta_center = 0;
};

class Catalog {
public:
    Catalog(std::vector<CatalogEntry> entries, std::uint64_t max_order,
            LawCheckOptions laws);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::uint64_t max_order() const { return max_order_; }
    const LawCheckOptions& laws() const { return laws_; }

    FiniteGroup realize_entry(std::size_t i) const;
    const EntryAnalysis& analyze(std::size_t i) const;
    // Same, reusing an already-realized copy of entry i.
    const EntryAnalysis& analyze_with(std::size_t i, const FiniteGroup& g) const;

private:
    std::vector<CatalogEntry> entries_;
    std::uint64_t max_order_;
    LawCheckOptions laws_;
    mutable std::vector<std::optional<EntryAnalysis>> analysis_;
};

// The stock catalog: cyclic p-groups, two- and three-factor abelian
// products, dihedral / quaternion / semidihedral 2-groups, modular
// p-groups, Heisenberg groups for odd primes, and nonabelian-family x
// cyclic products, everything up to max_order, entries sorted by spec
// text.  Throws ConfigError when nothing qualifies.
Catalog default_catalog(std::uint64_t max_order,
                        const std::vector<std::uint64_t>& primes,
                        LawCheckOptions laws = {});

// eta computed without the p-power shortcut and without the library's
// maximality scan: enumerate all cyclic subgroups, discard any contained
// in a strictly larger one, partition the survivors into conjugation
// orbits, count orbits.
std::uint64_t oracle_eta(const FiniteGroup& g);

// Deduplicated normal subgroups for quotient tests: the trivial subgroup,
// every lower-central term (stopping at stabilization, so non-nilpotent
// input is fine), the center, and the normal closure of <g> for every g.
std::vector<Subgroup> sample_normal_subgroups(const FiniteGroup& g);

struct CheckRecord {
    std::string spec;
    std::optional<std::int64_t> p, n, l, a, b, eta_value;
    Rat lhs;
    Rat rhs;
    Relation relation = Relation::Ge;
    enum class Status { Pass, Fail, Skip } status = Status::Skip;
    std::string reason;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;

    std::uint64_t passed() const;
    std::uint64_t failed() const;
    std::uint64_t skipped() const;
};

// Valid suite names, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one named suite over the catalog.  Every entry appears in the
// report, either checked or skipped with a reason.  Unknown names raise
// UsageError listing the valid ones.
Report run_suite(const std::string& name, const Catalog& catalog);

// Serialization.  All three forms are deterministic: same catalog and
// suite, byte-identical output (reports carry no timestamps).
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);
// Flat table with header "spec,p,n,l,eta,bound_num,bound_den,pass".
std::string report_to_csv(const Report& report);
std::string report_to_human(const Report& report);

}  // namespace etalab
