// Command-line surface: group construction, eta and invariant computation,
// verification suites over the stock catalog, and formula/value tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource limit exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "etalab/builders.hpp"
#include "etalab/cyclic.hpp"
#include "etalab/harness.hpp"
#include "etalab/series.hpp"

namespace {

using namespace etalab;

struct CommonOpts {
    std::uint64_t max_order = 5000;
    std::string primes = "2,3,5";
    std::string format = "human";
    std::string out_path;
    bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--max-order", opts.max_order, "maximum realized group order")
        ->envname("ETALAB_MAX_ORDER");
    cmd->add_option("--primes", opts.primes, "comma-separated catalog primes")
        ->envname("ETALAB_PRIMES");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"human", "structured", "csv"}));
    cmd->add_option("--out", opts.out_path, "write output to this file");
    cmd->add_flag("--verbose", opts.verbose, "more detail in the output");
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> primes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::uint64_t p = 0;
        try {
            p = std::stoull(item);
        } catch (const std::exception&) {
            throw UsageError("invalid prime list entry: '" + item + "'");
        }
        if (!is_prime(p)) throw UsageError(item + " is not prime");
        primes.push_back(p);
    }
    if (primes.empty()) throw UsageError("prime list is empty");
    return primes;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + opts.out_path);
    out << text;
}

RealizeOptions realize_options(const CommonOpts& opts) {
    if (opts.max_order < 2) throw UsageError("--max-order must be >= 2");
    RealizeOptions r;
    r.max_order = opts.max_order;
    return r;
}

int cmd_eta(const CommonOpts& opts, const std::string& spec_text) {
    FiniteGroup g = realize(parse_spec(spec_text), realize_options(opts));
    MaximalCyclicClasses classes = maximal_cyclic_classes(g);
    const bool cyclic = is_cyclic_group(g);

    std::ostringstream out;
    if (opts.format == "human") {
        out << "eta = " << classes.eta();
        if (cyclic) out << " (cyclic; covering degenerate)";
        out << "\n";
        if (opts.verbose) {
            for (std::size_t i = 0; i < classes.classes.size(); ++i) {
                const Subgroup& rep = classes.representative(i);
                ElementId gen = 0;
                for (ElementId x : rep.elements)
                    if (g.element_order(x) == rep.size()) {
                        gen = x;
                        break;
                    }
                out << "class " << (i + 1) << ": generator " << gen << ", order "
                    << g.element_order(gen) << ", class size "
                    << classes.classes[i].size() << "\n";
            }
        }
    } else if (opts.format == "structured") {
        nlohmann::ordered_json doc;
        doc["spec"] = g.spec_label();
        doc["order"] = g.order();
        doc["eta"] = classes.eta();
        doc["cyclic"] = cyclic;
        if (opts.verbose) {
            doc["classes"] = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < classes.classes.size(); ++i) {
                const Subgroup& rep = classes.representative(i);
                ElementId gen = 0;
                for (ElementId x : rep.elements)
                    if (g.element_order(x) == rep.size()) {
                        gen = x;
                        break;
                    }
                doc["classes"].push_back({{"generator", gen},
                                          {"order", g.element_order(gen)},
                                          {"class_size", classes.classes[i].size()}});
            }
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "spec,order,eta,cyclic\n"
            << "\"" << g.spec_label() << "\"," << g.order() << "," << classes.eta()
            << "," << (cyclic ? "true" : "false") << "\n";
    }
    emit(opts, out.str());
    return 0;
}

int cmd_invariants(const CommonOpts& opts, const std::string& spec_text) {
    FiniteGroup g = realize(parse_spec(spec_text), realize_options(opts));
    const auto pp = prime_power_decompose(g.order());

    bool nilpotent = true;
    std::vector<std::uint64_t> series_orders;
    std::uint32_t cls = 0;
    std::uint64_t exponent_last = 1;
    try {
        LowerCentralSeries series = lower_central_series(g);
        cls = series.nilpotence_class;
        for (const Subgroup& t : series.terms) series_orders.push_back(t.size());
        if (cls >= 1) exponent_last = exponent(series.terms[cls - 1]);
    } catch (const DomainError&) {
        nilpotent = false;
    }
    const Subgroup z = center(g);

    std::ostringstream out;
    if (opts.format == "human") {
        out << "order: " << g.order() << "\n";
        if (pp) out << "p: " << pp->p << "\nn: " << pp->n << "\n";
        else out << "p: - (order is not a prime power)\n";
        if (nilpotent) {
            out << "class: " << cls << "\n";
            out << "series orders:";
            for (std::size_t i = 0; i < series_orders.size(); ++i)
                out << (i ? "," : " ") << series_orders[i];
            out << "\n";
            out << "exponent(G^l): " << exponent_last << "\n";
        } else {
            out << "class: not nilpotent\n";
        }
        out << "center order: " << z.size() << "\n";
    } else if (opts.format == "structured") {
        nlohmann::ordered_json doc;
        doc["spec"] = g.spec_label();
        doc["order"] = g.order();
        if (pp) {
            doc["p"] = pp->p;
            doc["n"] = pp->n;
        }
        doc["nilpotent"] = nilpotent;
        if (nilpotent) {
            doc["class"] = cls;
            doc["series_orders"] = series_orders;
            doc["exponent_last"] = exponent_last;
        }
        doc["center_order"] = z.size();
        out << doc.dump(2) << "\n";
    } else {
        out << "spec,order,p,n,class,center_order,exponent_last,series_orders\n";
        out << "\"" << g.spec_label() << "\"," << g.order() << ",";
        if (pp) out << pp->p << "," << pp->n;
        else out << ",";
        out << ",";
        if (nilpotent) out << cls;
        else out << "not-nilpotent";
        out << "," << z.size() << "," << exponent_last << ",";
        for (std::size_t i = 0; i < series_orders.size(); ++i)
            out << (i ? ";" : "") << series_orders[i];
        out << "\n";
    }
    emit(opts, out.str());
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite) {
    Catalog catalog = default_catalog(opts.max_order, parse_primes(opts.primes));
    Report report = run_suite(suite, catalog);
    std::string text;
    if (opts.format == "structured") text = report_to_json(report);
    else if (opts.format == "csv") text = report_to_csv(report);
    else text = report_to_human(report);
    emit(opts, text);
    return report.failed() == 0 ? 0 : 1;
}

struct TableOpts {
    std::string family;
    std::int64_t p = 2;
    std::int64_t amax = 4;
    std::int64_t bmax = 0;  // defaults to amax
    std::int64_t nmax = 6;
    std::int64_t lmax = 3;
};

int cmd_table(const CommonOpts& opts, const TableOpts& t) {
    if (!is_prime(static_cast<std::uint64_t>(t.p)))
        throw UsageError("--p must be prime");
    std::ostringstream out;
    if (t.family == "pxp") {
        const std::int64_t bmax = t.bmax > 0 ? t.bmax : t.amax;
        out << "p,a,b,eta,g_p,match\n";
        for (std::int64_t a = 1; a <= t.amax; ++a) {
            for (std::int64_t b = 1; b <= std::min(a, bmax); ++b) {
                const Int formula = g_p(t.p, a, b);
                std::uint64_t order = 1;
                bool fits = true;
                for (std::int64_t i = 0; i < a + b; ++i) {
                    order *= static_cast<std::uint64_t>(t.p);
                    if (order > opts.max_order) {
                        fits = false;
                        break;
                    }
                }
                out << t.p << "," << a << "," << b << ",";
                if (!fits) {
                    out << "," << formula << ",skipped\n";
                    continue;
                }
                std::uint64_t pa = 1, pb = 1;
                for (std::int64_t i = 0; i < a; ++i) pa *= static_cast<std::uint64_t>(t.p);
                for (std::int64_t i = 0; i < b; ++i) pb *= static_cast<std::uint64_t>(t.p);
                GroupSpec spec = GroupSpec::product(
                    {GroupSpec::cyclic(pa), GroupSpec::cyclic(pb)});
                const std::uint64_t value = eta(realize(spec, realize_options(opts)));
                out << value << "," << formula << ","
                    << (Int(value) == formula ? "true" : "false") << "\n";
            }
        }
    } else if (t.family == "bound-grid") {
        out << "p,n,l,bound_num,bound_den\n";
        for (std::int64_t n = 2; n <= t.nmax; ++n)
            for (std::int64_t l = 1; l <= t.lmax; ++l) {
                const Rat bound = class_bound(t.p, n, l);
                out << t.p << "," << n << "," << l << "," << numerator(bound)
                    << "," << denominator(bound) << "\n";
            }
    } else {
        throw UsageError("unknown table family '" + t.family +
                         "'; valid families: pxp bound-grid");
    }
    emit(opts, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eta(G) computations for finite p-groups, with exact verification suites"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string spec_text;
    std::string suite;
    TableOpts table_opts;

    CLI::App* eta_cmd = app.add_subcommand("eta", "conjugacy classes of maximal cyclic subgroups");
    eta_cmd->add_option("spec", spec_text, "group spec, e.g. \"dihedral(16)\"")->required();
    add_common(eta_cmd, opts);

    CLI::App* inv_cmd = app.add_subcommand("invariants", "order, class, series, center, exponent");
    inv_cmd->add_option("spec", spec_text, "group spec")->required();
    add_common(inv_cmd, opts);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite over the catalog");
    verify_cmd->add_option("--suite", suite, "suite name")->required();
    add_common(verify_cmd, opts);

    CLI::App* table_cmd = app.add_subcommand("table", "value tables over parameter grids");
    table_cmd->add_option("--family", table_opts.family, "pxp | bound-grid")->required();
    table_cmd->add_option("--p", table_opts.p, "prime");
    table_cmd->add_option("--amax", table_opts.amax, "max exponent a (pxp)");
    table_cmd->add_option("--bmax", table_opts.bmax, "max exponent b (pxp; default amax)");
    table_cmd->add_option("--nmax", table_opts.nmax, "max n (bound-grid)");
    table_cmd->add_option("--lmax", table_opts.lmax, "max class l (bound-grid)");
    add_common(table_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eta_cmd->parsed()) return cmd_eta(opts, spec_text);
        if (inv_cmd->parsed()) return cmd_invariants(opts, spec_text);
        if (verify_cmd->parsed()) return cmd_verify(opts, suite);
        if (table_cmd->parsed()) return cmd_table(opts, table_opts);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
