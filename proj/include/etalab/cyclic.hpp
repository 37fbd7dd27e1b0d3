#pragma once

// Maximal cyclic subgroups, their conjugacy classes, eta(G), and the
// covering/irredundance checks.
//
// eta(G) is the number of conjugacy classes of maximal cyclic subgroups.
// For a p-group, <g> is maximal cyclic exactly when g lies outside the
// p-th power image {x^p : x in G}; the generic containment test works for
// every finite group and the two must agree on p-groups.

#include <cstdint>
#include <vector>

#include "etalab/group.hpp"

namespace etalab {

// The cyclic subgroup <g> in canonical form.
Subgroup cyclic_subgroup(const FiniteGroup& g, ElementId x);

// The image of the p-th power map {x^p : x in G}, as a sorted element set.
std::vector<ElementId> pth_power_set(const FiniteGroup& g, std::uint64_t p);

// Generic maximality: <x> is contained in no strictly larger cyclic
// subgroup, decided by testing every h in G.
bool is_maximal_cyclic(const FiniteGroup& g, ElementId x);

// p-group shortcut: x generates a maximal cyclic subgroup iff x is not a
// p-th power.  Caller promises |G| is a power of p.
bool is_maximal_cyclic_pgroup(const FiniteGroup& g, ElementId x, std::uint64_t p);

// All maximal cyclic subgroups, deduplicated, sorted canonically.
std::vector<Subgroup> maximal_cyclic_subgroups(const FiniteGroup& g);

// Partition of `subs` into orbits under H -> t^-1 H t.  Requires the input
// to be conjugation-closed (ConsistencyError otherwise).  Members of each
// class and the classes themselves are sorted canonically; the canonical
// representative of a class is its first member.
std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(
    const FiniteGroup& g, const std::vector<Subgroup>& subs);

struct MaximalCyclicClasses {
    const FiniteGroup* group = nullptr;
    std::vector<std::vector<Subgroup>> classes;

    std::size_t eta() const { return classes.size(); }
    const Subgroup& representative(std::size_t i) const { return classes[i].front(); }
};

MaximalCyclicClasses maximal_cyclic_classes(const FiniteGroup& g);

// Number of conjugacy classes of maximal cyclic subgroups, via the generic
// containment algorithm.
std::uint64_t eta(const FiniteGroup& g);

// Is G cyclic (generated by one element)?
bool is_cyclic_group(const FiniteGroup& g);

struct CoverReport {
    bool is_cover = false;        // union of maximal cyclic subgroups = G
    bool is_irredundant = false;  // every component has a private element
    // For cyclic G the family is {G} itself, which is not a proper
    // subgroup, so the covering reading degenerates.
    bool degenerate = false;
    // One private generator per component (parallel to the component list).
    std::vector<ElementId> witnesses;
};

// Checks that the maximal cyclic subgroups cover G and that each one owns
// a generator lying in no other component.
CoverReport check_cyclic_cover(const FiniteGroup& g);

}  // namespace etalab
