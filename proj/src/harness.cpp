#include "etalab/harness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace etalab {

namespace {

// RFC-style quoting for fields that contain commas or quotes (spec texts
// of products do).
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Catalog::Catalog(std::vector<CatalogEntry> entries, std::uint64_t max_order,
                 LawCheckOptions laws)
    : entries_(std::move(entries)), max_order_(max_order), laws_(laws) {
    std::sort(entries_.begin(), entries_.end(),
              [](const CatalogEntry& x, const CatalogEntry& y) { return x.text < y.text; });
    analysis_.resize(entries_.size());
}

FiniteGroup Catalog::realize_entry(std::size_t i) const {
    RealizeOptions opts;
    opts.max_order = max_order_;
    opts.laws = laws_;
    return realize(entries_.at(i).spec, opts);
}

const EntryAnalysis& Catalog::analyze(std::size_t i) const {
    if (!analysis_.at(i)) {
        FiniteGroup g = realize_entry(i);
        return analyze_with(i, g);
    }
    return *analysis_[i];
}

const EntryAnalysis& Catalog::analyze_with(std::size_t i, const FiniteGroup& g) const {
    if (analysis_.at(i)) return *analysis_[i];
    EntryAnalysis a;
    a.cyclic = is_cyclic_group(g);
    a.eta = eta(g);
    LowerCentralSeries series = lower_central_series(g);
    a.nilpotence_class = series.nilpotence_class;
    for (const Subgroup& t : series.terms) a.series_orders.push_back(t.size());
    a.exponent_last = series.nilpotence_class == 0
                          ? 1
                          : exponent(series.terms[series.nilpotence_class - 1]);
    Subgroup z = center(g);
    a.center_order = z.size();
    a.abelian = z.size() == g.order();
    a.eta_center = eta(subgroup_as_group(z));
    analysis_[i] = std::move(a);
    return *analysis_[i];
}

Catalog default_catalog(std::uint64_t max_order,
                        const std::vector<std::uint64_t>& primes,
                        LawCheckOptions laws) {
    if (max_order < 4) throw UsageError("default_catalog requires max_order >= 4");
    if (primes.empty()) throw UsageError("default_catalog requires at least one prime");
    std::vector<std::uint64_t> ps(primes);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (std::uint64_t p : ps)
        if (!is_prime(p))
            throw UsageError("catalog primes must be prime, got " + std::to_string(p));

    const std::uint64_t cap = std::min(max_order, kMaxRepresentableOrder);
    std::vector<GroupSpec> specs;
    std::vector<GroupSpec> nonabelian;  // bases for family x cyclic products

    for (std::uint64_t p : ps) {
        if (p > cap) continue;
        // cyclic p-groups and abelian products of two or three factors,
        // exponents nonincreasing left to right
        for (std::uint64_t pa = p; pa <= cap; pa *= p) {
            specs.push_back(GroupSpec::cyclic(pa));
            for (std::uint64_t pb = p; pb <= pa && pb <= cap / pa; pb *= p) {
                specs.push_back(GroupSpec::product(
                    {GroupSpec::cyclic(pa), GroupSpec::cyclic(pb)}));
                for (std::uint64_t pc = p; pc <= pb && pc <= cap / (pa * pb); pc *= p) {
                    specs.push_back(GroupSpec::product({GroupSpec::cyclic(pa),
                                                        GroupSpec::cyclic(pb),
                                                        GroupSpec::cyclic(pc)}));
                }
            }
        }
        if (p == 2) {
            std::uint64_t k = 3;
            for (std::uint64_t o = 8; o <= cap; o *= 2, ++k) {
                nonabelian.push_back(GroupSpec::dihedral(o));
                nonabelian.push_back(GroupSpec::quaternion(o));
                if (k >= 4) {
                    nonabelian.push_back(GroupSpec::semidihedral(o));
                    nonabelian.push_back(GroupSpec::modular(2, k));
                }
            }
        } else {
            if (p <= cap / p / p) {  // p^3 <= cap
                nonabelian.push_back(GroupSpec::heisenberg(p));
                std::uint64_t k = 3;
                for (std::uint64_t o = p * p * p; o <= cap; o *= p, ++k)
                    nonabelian.push_back(GroupSpec::modular(p, k));
            }
        }
    }

    for (const GroupSpec& base : nonabelian) {
        specs.push_back(base);
        const std::uint64_t base_order = spec_order(base);
        const std::uint64_t p = prime_power_decompose(base_order)->p;
        for (std::uint64_t q = p; q <= cap / base_order; q *= p)
            specs.push_back(GroupSpec::product({base, GroupSpec::cyclic(q)}));
    }

    std::vector<CatalogEntry> entries;
    for (GroupSpec& s : specs) {
        std::uint64_t order = spec_order(s);
        if (order < 2 || order > cap) continue;
        auto pp = prime_power_decompose(order);
        CatalogEntry e;
        e.text = print_spec(s);
        e.spec = std::move(s);
        e.order = order;
        e.p = pp->p;
        e.n = pp->n;
        entries.push_back(std::move(e));
    }
    if (entries.empty())
        throw ConfigError("catalog is empty for max_order=" + std::to_string(max_order));
    return Catalog(std::move(entries), max_order, laws);
}

std::uint64_t oracle_eta(const FiniteGroup& g) {
    const std::uint32_t n = g.order();

    // Every cyclic subgroup, built by repeated multiplication.
    std::set<std::vector<ElementId>> cyclics;
    for (std::uint32_t x = 0; x < n; ++x) {
        std::vector<ElementId> members{0};
        ElementId y = static_cast<ElementId>(x);
        while (y != 0) {
            members.push_back(y);
            y = g.mul(y, static_cast<ElementId>(x));
        }
        std::sort(members.begin(), members.end());
        cyclics.insert(std::move(members));
    }

    // Keep those contained in no strictly larger cyclic subgroup.
    std::vector<std::vector<ElementId>> survivors;
    for (const auto& a : cyclics) {
        bool dominated = false;
        for (const auto& b : cyclics) {
            if (b.size() > a.size() &&
                std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) survivors.push_back(a);
    }

    // Conjugation orbits.
    std::set<std::vector<ElementId>> pool(survivors.begin(), survivors.end());
    std::uint64_t orbits = 0;
    while (!pool.empty()) {
        std::vector<ElementId> seed = *pool.begin();
        ++orbits;
        for (std::uint32_t t = 0; t < n; ++t) {
            const ElementId ti = g.inverse(static_cast<ElementId>(t));
            std::vector<ElementId> image;
            image.reserve(seed.size());
            for (ElementId h : seed)
                image.push_back(g.mul(g.mul(ti, h), static_cast<ElementId>(t)));
            std::sort(image.begin(), image.end());
            pool.erase(image);
        }
    }
    return orbits;
}

std::vector<Subgroup> sample_normal_subgroups(const FiniteGroup& g) {
    std::set<std::vector<ElementId>> acc;
    acc.insert({0});

    // Lower-central descent, stopping at stabilization so that arbitrary
    // (possibly non-nilpotent) tables are accepted.
    Subgroup whole = whole_group(g);
    Subgroup current = whole;
    acc.insert(current.elements);
    while (current.size() > 1) {
        Subgroup next = commutator_subgroup(g, current, whole);
        if (next.elements == current.elements) break;
        acc.insert(next.elements);
        current = std::move(next);
    }

    acc.insert(center(g).elements);

    // Normal closure of <x>; identical for every generator of <x>, so
    // dedupe by cyclic subgroup before closing.
    std::set<std::vector<ElementId>> seen_cyclic;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        Subgroup cyc = cyclic_subgroup(g, static_cast<ElementId>(x));
        if (!seen_cyclic.insert(cyc.elements).second) continue;
        std::set<ElementId> conj;
        for (std::uint32_t t = 0; t < g.order(); ++t)
            conj.insert(g.conjugate(static_cast<ElementId>(x), static_cast<ElementId>(t)));
        Subgroup closure = generated_subgroup(
            g, std::vector<ElementId>(conj.begin(), conj.end()));
        acc.insert(closure.elements);
    }

    std::vector<Subgroup> out;
    out.reserve(acc.size());
    for (const auto& members : acc) out.push_back(Subgroup{&g, members});
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t Report::passed() const {
    return std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) {
        return c.status == CheckRecord::Status::Pass;
    });
}
std::uint64_t Report::failed() const {
    return std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) {
        return c.status == CheckRecord::Status::Fail;
    });
}
std::uint64_t Report::skipped() const {
    return std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) {
        return c.status == CheckRecord::Status::Skip;
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "formula-abelian", "eta-families",     "gp-minimum",
        "product-bound",   "abelian-bound",    "odd-bound",
        "lemma-orders",    "main-theorem",     "quotient-monotone",
        "center-bound",    "cover-irredundant", "oracle-cross",
        "size-rewrite"};
    return names;
}

namespace {

CheckRecord skip_record(const CatalogEntry& e, const std::string& reason) {
    CheckRecord r;
    r.spec = e.text;
    r.p = static_cast<std::int64_t>(e.p);
    r.n = e.n;
    r.status = CheckRecord::Status::Skip;
    r.reason = reason;
    return r;
}

CheckRecord entry_record(const CatalogEntry& e, Rat lhs, Relation rel, Rat rhs) {
    CheckRecord r;
    r.spec = e.text;
    r.p = static_cast<std::int64_t>(e.p);
    r.n = e.n;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.relation = rel;
    r.status = relation_holds(r.lhs, rel, r.rhs) ? CheckRecord::Status::Pass
                                                 : CheckRecord::Status::Fail;
    return r;
}

// Product of cyclic factors, each of order p^a with a >= 1, same p.
bool all_cyclic_factors(const GroupSpec& s, std::uint64_t p) {
    return s.kind == GroupSpec::Kind::Product &&
           std::all_of(s.children.begin(), s.children.end(), [p](const GroupSpec& c) {
               if (c.kind != GroupSpec::Kind::Cyclic) return false;
               auto pp = prime_power_decompose(c.m);
               return pp && pp->p == p;
           });
}

// a with m = p^a, for spec-shaped cyclic factors.
std::int64_t cyclic_exponent(const GroupSpec& c) {
    return prime_power_decompose(c.m)->n;
}

void run_formula_abelian(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        if (!all_cyclic_factors(e.spec, e.p) || e.spec.children.size() != 2) {
            rep.checks.push_back(skip_record(e, "not a two-factor cyclic product"));
            continue;
        }
        const std::int64_t a = cyclic_exponent(e.spec.children[0]);
        const std::int64_t b = cyclic_exponent(e.spec.children[1]);
        const EntryAnalysis& an = cat.analyze(i);
        CheckRecord r = entry_record(e, Rat(Int(an.eta)), Relation::Eq,
                                     Rat(g_p(std::int64_t(e.p), a, b)));
        r.a = a;
        r.b = b;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        rep.checks.push_back(std::move(r));
    }
}

void run_eta_families(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        const auto kind = e.spec.kind;
        if (kind != GroupSpec::Kind::Dihedral && kind != GroupSpec::Kind::Quaternion &&
            kind != GroupSpec::Kind::Semidihedral) {
            rep.checks.push_back(
                skip_record(e, "not a dihedral/quaternion/semidihedral group"));
            continue;
        }
        if (e.p != 2) {
            rep.checks.push_back(skip_record(e, "not a 2-group"));
            continue;
        }
        const EntryAnalysis& an = cat.analyze(i);
        CheckRecord r = entry_record(e, Rat(Int(an.eta)), Relation::Eq, Rat(3));
        r.l = an.nilpotence_class;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        rep.checks.push_back(std::move(r));
    }
}

void run_gp_minimum(Report& rep) {
    // Formula-level suite; fixed grids rather than catalog entries.
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (std::int64_t n = 2; n <= 20; ++n) {
            BoundCheck c = check_gp_minimum(p, n);
            CheckRecord r;
            r.spec = "gp-min(p=" + std::to_string(p) + ";n=" + std::to_string(n) + ")";
            r.p = p;
            r.n = n;
            r.lhs = c.lhs;
            r.rhs = c.rhs;
            r.relation = c.relation;
            r.status =
                c.pass ? CheckRecord::Status::Pass : CheckRecord::Status::Fail;
            r.reason = c.context.note;
            rep.checks.push_back(std::move(r));
        }
    }
    // Positivity of the critical-point offset, proved prime by prime.
    std::int64_t proved = 0, total = 0;
    std::int64_t first_failure = 0;
    for (std::int64_t p = 2; p <= 10000; ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        ++total;
        if (critical_point_positivity(p))
            ++proved;
        else if (first_failure == 0)
            first_failure = p;
    }
    CheckRecord r;
    r.spec = "ln-positivity(p<=10000)";
    r.lhs = Rat(proved);
    r.rhs = Rat(total);
    r.relation = Relation::Eq;
    r.status = proved == total ? CheckRecord::Status::Pass : CheckRecord::Status::Fail;
    r.reason = proved == total
                   ? "provably positive at every prime"
                   : "first unproved prime: " + std::to_string(first_failure);
    rep.checks.push_back(std::move(r));
}

void run_product_bound(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        if (e.spec.kind != GroupSpec::Kind::Product) {
            rep.checks.push_back(skip_record(e, "not a direct product"));
            continue;
        }
        if (!all_cyclic_factors(e.spec, e.p)) {
            rep.checks.push_back(skip_record(e, "H is not abelian"));
            continue;
        }
        if (e.spec.children.size() < 3) {
            rep.checks.push_back(skip_record(e, "H is cyclic"));
            continue;
        }
        // G = H x C_{p^a}: H = all factors but the last, a from the last.
        std::vector<GroupSpec> head(e.spec.children.begin(),
                                    e.spec.children.end() - 1);
        GroupSpec h_spec = GroupSpec::product(std::move(head));
        const std::int64_t a = cyclic_exponent(e.spec.children.back());

        RealizeOptions opts;
        opts.max_order = cat.max_order();
        opts.laws = cat.laws();
        const std::uint64_t eta_h = eta(realize(h_spec, opts));
        const EntryAnalysis& an = cat.analyze(i);

        CheckRecord r = entry_record(e, Rat(Int(an.eta)), Relation::Ge,
                                     Rat(product_bound(a, std::int64_t(eta_h))));
        r.a = a;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        r.reason = "eta(H)=" + std::to_string(eta_h);
        rep.checks.push_back(std::move(r));
    }
}

void run_abelian_bound(const Catalog& cat, Report& rep, bool odd_only) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        if (odd_only && e.p == 2) {
            rep.checks.push_back(skip_record(e, "p = 2"));
            continue;
        }
        const EntryAnalysis& an = cat.analyze(i);
        if (!an.abelian) {
            rep.checks.push_back(skip_record(e, "not abelian"));
            continue;
        }
        if (an.cyclic) {
            rep.checks.push_back(skip_record(e, "cyclic"));
            continue;
        }
        const Rat bound = odd_only
                              ? odd_abelian_bound(std::int64_t(e.p), e.n)
                              : Rat(abelian_bound(std::int64_t(e.p), e.n));
        CheckRecord r = entry_record(e, Rat(Int(an.eta)), Relation::Ge, bound);
        r.l = an.nilpotence_class;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        rep.checks.push_back(std::move(r));
    }
}

void run_lemma_orders(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        const EntryAnalysis& an = cat.analyze(i);
        if (an.nilpotence_class < 2) {
            rep.checks.push_back(skip_record(e, "nilpotence class < 2"));
            continue;
        }
        Int bound = 1;
        for (std::uint32_t j = 0; j < e.n / (an.nilpotence_class + 1); ++j)
            bound *= e.p;
        CheckRecord r = entry_record(e, Rat(Int(an.exponent_last)),
                                     Relation::Divides, Rat(bound));
        r.l = an.nilpotence_class;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        rep.checks.push_back(std::move(r));
    }
}

void run_main_theorem(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        const EntryAnalysis& an = cat.analyze(i);
        if (an.cyclic) {
            rep.checks.push_back(skip_record(e, "cyclic"));
            continue;
        }
        // l(eta - p - 1) >= (p-1)(n - 2l): the bound cleared of division.
        const Int p(e.p), n(e.n), l(an.nilpotence_class), et(an.eta);
        CheckRecord r = entry_record(e, Rat(l * (et - p - 1)), Relation::Ge,
                                     Rat((p - 1) * (n - 2 * l)));
        r.l = an.nilpotence_class;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        rep.checks.push_back(std::move(r));
    }
}

void run_size_rewrite(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        const EntryAnalysis& an = cat.analyze(i);
        if (an.cyclic) {
            rep.checks.push_back(skip_record(e, "cyclic"));
            continue;
        }
        CheckRecord r = entry_record(
            e, Rat(e.n), Relation::Le,
            size_bound_from_eta(std::int64_t(e.p), std::int64_t(an.eta),
                                an.nilpotence_class));
        r.l = an.nilpotence_class;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        rep.checks.push_back(std::move(r));
    }
}

void run_quotient_monotone(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        FiniteGroup g = cat.realize_entry(i);
        const EntryAnalysis& an = cat.analyze_with(i, g);
        std::uint64_t worst = 0;
        std::uint64_t checked = 0;
        for (const Subgroup& nsub : sample_normal_subgroups(g)) {
            if (nsub.size() == g.order()) continue;  // trivial quotient excluded
            QuotientResult q = quotient(g, nsub);
            worst = std::max(worst, eta(q.group));
            ++checked;
        }
        CheckRecord r =
            entry_record(e, Rat(Int(worst)), Relation::Le, Rat(Int(an.eta)));
        r.l = an.nilpotence_class;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        r.reason = std::to_string(checked) + " proper normal subgroups";
        rep.checks.push_back(std::move(r));
    }
}

void run_center_bound(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        const EntryAnalysis& an = cat.analyze(i);
        CheckRecord r = entry_record(e, Rat(Int(an.eta_center)), Relation::Le,
                                     Rat(Int(an.eta)));
        r.l = an.nilpotence_class;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        r.reason = "|Z(G)|=" + std::to_string(an.center_order);
        rep.checks.push_back(std::move(r));
    }
}

void run_cover_irredundant(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        const EntryAnalysis& an = cat.analyze(i);
        if (an.cyclic) {
            rep.checks.push_back(skip_record(e, "cyclic (degenerate covering)"));
            continue;
        }
        FiniteGroup g = cat.realize_entry(i);
        CoverReport cover = check_cyclic_cover(g);
        CheckRecord r = entry_record(
            e, Rat(int(cover.is_cover) + int(cover.is_irredundant)), Relation::Eq,
            Rat(2));
        r.eta_value = static_cast<std::int64_t>(an.eta);
        r.reason = std::to_string(cover.witnesses.size()) + " components";
        if (!cover.is_cover) r.reason = "union of components misses elements";
        else if (!cover.is_irredundant) r.reason = "a component has no private generator";
        rep.checks.push_back(std::move(r));
    }
}

void run_oracle_cross(const Catalog& cat, Report& rep) {
    for (std::size_t i = 0; i < cat.entries().size(); ++i) {
        const CatalogEntry& e = cat.entries()[i];
        FiniteGroup g = cat.realize_entry(i);
        const EntryAnalysis& an = cat.analyze_with(i, g);
        const std::uint64_t oracle = oracle_eta(g);

        // Element-wise agreement of the generic containment test with the
        // p-power shortcut.
        std::vector<Subgroup> maximal = maximal_cyclic_subgroups(g);
        std::vector<bool> generic_maximal(g.order(), false);
        for (const Subgroup& s : maximal)
            for (ElementId x : s.elements)
                if (g.element_order(x) == s.size()) generic_maximal[x] = true;
        std::vector<ElementId> ppow = pth_power_set(g, e.p);
        std::int64_t mismatch = -1;
        for (std::uint32_t x = 0; x < g.order() && mismatch < 0; ++x) {
            bool shortcut =
                !std::binary_search(ppow.begin(), ppow.end(), static_cast<ElementId>(x));
            if (shortcut != generic_maximal[x]) mismatch = x;
        }

        CheckRecord r =
            entry_record(e, Rat(Int(an.eta)), Relation::Eq, Rat(Int(oracle)));
        r.l = an.nilpotence_class;
        r.eta_value = static_cast<std::int64_t>(an.eta);
        if (mismatch >= 0) {
            r.status = CheckRecord::Status::Fail;
            r.reason = "maximality routes disagree at element " +
                       std::to_string(mismatch);
        } else {
            r.reason = "shortcut agrees elementwise";
        }
        rep.checks.push_back(std::move(r));
    }
}

}  // namespace

Report run_suite(const std::string& name, const Catalog& catalog) {
    Report rep;
    rep.suite = name;
    if (name == "formula-abelian") run_formula_abelian(catalog, rep);
    else if (name == "eta-families") run_eta_families(catalog, rep);
    else if (name == "gp-minimum") run_gp_minimum(rep);
    else if (name == "product-bound") run_product_bound(catalog, rep);
    else if (name == "abelian-bound") run_abelian_bound(catalog, rep, false);
    else if (name == "odd-bound") run_abelian_bound(catalog, rep, true);
    else if (name == "lemma-orders") run_lemma_orders(catalog, rep);
    else if (name == "main-theorem") run_main_theorem(catalog, rep);
    else if (name == "quotient-monotone") run_quotient_monotone(catalog, rep);
    else if (name == "center-bound") run_center_bound(catalog, rep);
    else if (name == "cover-irredundant") run_cover_irredundant(catalog, rep);
    else if (name == "oracle-cross") run_oracle_cross(catalog, rep);
    else if (name == "size-rewrite") run_size_rewrite(catalog, rep);
    else {
        std::string valid;
        for (const std::string& s : suite_names()) valid += " " + s;
        throw UsageError("unknown suite '" + name + "'; valid suites:" + valid);
    }
    return rep;
}

namespace {

const char* status_string(CheckRecord::Status s) {
    switch (s) {
        case CheckRecord::Status::Pass: return "pass";
        case CheckRecord::Status::Fail: return "fail";
        case CheckRecord::Status::Skip: return "skip";
    }
    return "?";
}

Relation relation_from_symbol(const std::string& s) {
    if (s == ">=") return Relation::Ge;
    if (s == "<=") return Relation::Le;
    if (s == "=") return Relation::Eq;
    if (s == "divides") return Relation::Divides;
    throw UsageError("unknown relation symbol '" + s + "'");
}

}  // namespace

std::string report_to_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const CheckRecord& c : report.checks) {
        nlohmann::ordered_json entry;
        entry["spec"] = c.spec;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        if (c.p) params["p"] = *c.p;
        if (c.n) params["n"] = *c.n;
        if (c.l) params["l"] = *c.l;
        if (c.a) params["a"] = *c.a;
        if (c.b) params["b"] = *c.b;
        if (c.eta_value) params["eta"] = *c.eta_value;
        entry["parameters"] = std::move(params);
        if (c.status != CheckRecord::Status::Skip) {
            entry["lhs"] = rat_to_string(c.lhs);
            entry["rhs"] = rat_to_string(c.rhs);
            entry["relation"] = relation_symbol(c.relation);
        }
        entry["status"] = status_string(c.status);
        entry["reason"] = c.reason;
        doc["entries"].push_back(std::move(entry));
    }
    doc["totals"] = {{"pass", report.passed()},
                     {"fail", report.failed()},
                     {"skip", report.skipped()}};
    return doc.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    Report rep;
    rep.suite = doc.at("suite").get<std::string>();
    for (const auto& entry : doc.at("entries")) {
        CheckRecord c;
        c.spec = entry.at("spec").get<std::string>();
        const auto& params = entry.at("parameters");
        if (params.contains("p")) c.p = params["p"].get<std::int64_t>();
        if (params.contains("n")) c.n = params["n"].get<std::int64_t>();
        if (params.contains("l")) c.l = params["l"].get<std::int64_t>();
        if (params.contains("a")) c.a = params["a"].get<std::int64_t>();
        if (params.contains("b")) c.b = params["b"].get<std::int64_t>();
        if (params.contains("eta")) c.eta_value = params["eta"].get<std::int64_t>();
        const std::string status = entry.at("status").get<std::string>();
        c.status = status == "pass"   ? CheckRecord::Status::Pass
                   : status == "fail" ? CheckRecord::Status::Fail
                                      : CheckRecord::Status::Skip;
        if (c.status != CheckRecord::Status::Skip) {
            c.lhs = Rat(entry.at("lhs").get<std::string>());
            c.rhs = Rat(entry.at("rhs").get<std::string>());
            c.relation = relation_from_symbol(entry.at("relation").get<std::string>());
        }
        c.reason = entry.at("reason").get<std::string>();
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

std::string report_to_csv(const Report& report) {
    std::ostringstream out;
    out << "spec,p,n,l,eta,bound_num,bound_den,pass\n";
    for (const CheckRecord& c : report.checks) {
        out << csv_escape(c.spec) << ',';
        if (c.p) out << *c.p;
        out << ',';
        if (c.n) out << *c.n;
        out << ',';
        if (c.l) out << *c.l;
        out << ',';
        if (c.eta_value) out << *c.eta_value;
        out << ',';
        if (c.status == CheckRecord::Status::Skip) {
            out << ",,skip\n";
            continue;
        }
        out << numerator(c.rhs) << ',' << denominator(c.rhs) << ','
            << (c.status == CheckRecord::Status::Pass ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string report_to_human(const Report& report) {
    std::ostringstream out;
    out << "suite: " << report.suite << '\n';
    for (const CheckRecord& c : report.checks) {
        out << "  [" << status_string(c.status) << "] " << c.spec;
        if (c.status == CheckRecord::Status::Skip) {
            out << " (" << c.reason << ")\n";
            continue;
        }
        out << ": " << rat_to_string(c.lhs) << ' ' << relation_symbol(c.relation)
            << ' ' << rat_to_string(c.rhs);
        if (c.eta_value) out << "  eta=" << *c.eta_value;
        if (!c.reason.empty()) out << "  (" << c.reason << ")";
        out << '\n';
    }
    out << "totals: " << report.passed() << " pass, " << report.failed()
        << " fail, " << report.skipped() << " skip\n";
    return out.str();
}

}  // namespace etalab
