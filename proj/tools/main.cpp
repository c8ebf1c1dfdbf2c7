#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixloci/catalog.hpp"
#include "fixloci/fixloc.hpp"
#include "fixloci/oracle.hpp"
#include "fixloci/published.hpp"
#include "fixloci/theta.hpp"
#include "fixloci/verify.hpp"

namespace {

using fixloci::Int;
using fixloci::Surface;
using json = nlohmann::ordered_json;

constexpr const char* SCHEMA_VERSION = "1";

std::string int_str(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Surface parse_surface(const std::string& s) {
    if (s == "k3") return Surface::K3;
    if (s == "abelian") return Surface::Abelian;
    throw CLI::ValidationError("--surface", "expected k3 or abelian");
}

std::string surface_name(Surface s) { return s == Surface::K3 ? "k3" : "abelian"; }

json envelope(const std::string& command, json inputs, json payload,
              const std::vector<std::string>& warnings) {
    json env;
    env["schema_version"] = SCHEMA_VERSION;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["payload"] = std::move(payload);
    env["warnings"] = warnings;
    return env;
}

void emit_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string element_str(const fixloci::FiniteAbelianGroup::Element& e) {
    if (e.empty()) return "1";
    std::string s;
    for (int x : e) s += static_cast<char>('0' + x);
    return s;
}

// ---- series ----------------------------------------------------------

struct SeriesArgs {
    std::string group;
    std::string surface = "k3";
    long long order = 10;
    std::string format = "text";
    bool project_identity = false;
};

const fixloci::PublishedSeries* published_for(const std::string& name, Surface surface) {
    if (surface == Surface::K3) {
        for (const auto* s : {&fixloci::published_series_c2_k3(),
                              &fixloci::published_series_c3_k3(),
                              &fixloci::published_series_c2x2_k3(),
                              &fixloci::published_series_d8_example()})
            if (name == s->key) return s;
        return nullptr;
    }
    for (const auto& s : fixloci::published_kummer_identity_rows())
        if (name == s.key) return &s;
    return nullptr;
}

int cmd_series(const SeriesArgs& args) {
    Surface surface = parse_surface(args.surface);
    const auto& action = fixloci::lookup(args.group, surface);
    int order = static_cast<int>(args.order);

    std::vector<std::string> warnings;
    if (!action.note.empty()) warnings.push_back(action.name + ": " + action.note);

    std::vector<Int> identity_row(order + 1);
    std::vector<fixloci::GroupRingElement> full;
    bool torsion_valued = surface == Surface::Abelian;
    if (torsion_valued) {
        auto series = fixloci::theta_series_torsion(action, order);
        for (int i = 0; i <= order; ++i) {
            full.push_back(series.coefficient(i));
            identity_row[i] = full.back().identity_coefficient();
        }
    } else {
        auto series = fixloci::theta_series(action, order);
        for (int i = 0; i <= order; ++i) identity_row[i] = series.coefficient(i);
    }

    if (const auto* ref = published_for(action.name, surface)) {
        for (auto [i, printed] : ref->coefficients)
            if (i <= order && identity_row[static_cast<size_t>(i)] != printed)
                warnings.push_back(action.name + ": coefficient of q^" +
                                   std::to_string(i) + " computed " +
                                   int_str(identity_row[static_cast<size_t>(i)]) +
                                   ", published " + std::to_string(printed));
    }

    if (args.format == "json") {
        json coeffs = json::array();
        for (int i = 0; i <= order; ++i) {
            json c;
            c["exponent"] = i;
            if (torsion_valued && !args.project_identity) {
                json terms = json::array();
                for (const auto& [e, v] : full[static_cast<size_t>(i)].terms())
                    terms.push_back({{"element", element_str(e)}, {"count", int_str(v)}});
                c["terms"] = std::move(terms);
            }
            c["identity"] = int_str(identity_row[static_cast<size_t>(i)]);
            coeffs.push_back(std::move(c));
        }
        json payload;
        payload["group"] = action.name;
        payload["label"] = action.label;
        payload["surface"] = surface_name(surface);
        payload["group_order"] = action.order;
        payload["order"] = order;
        payload["coefficients"] = std::move(coeffs);
        std::cout << envelope("series",
                              {{"group", args.group},
                               {"surface", args.surface},
                               {"order", order},
                               {"project_identity", args.project_identity}},
                              payload, warnings)
                         .dump(2)
                  << "\n";
    } else if (args.format == "csv") {
        std::cout << "exponent,coefficient\n";
        for (int i = 0; i <= order; ++i)
            std::cout << i << "," << identity_row[static_cast<size_t>(i)] << "\n";
    } else {
        std::cout << "# theta series: " << action.name << " (" << surface_name(surface)
                  << "), |G| = " << action.order << ", config " << action.config.str()
                  << "\n";
        for (int i = 0; i <= order; ++i) {
            std::cout << "q^" << i << "\t" << identity_row[static_cast<size_t>(i)];
            if (torsion_valued && !args.project_identity)
                std::cout << "\t" << full[static_cast<size_t>(i)].str();
            std::cout << "\n";
        }
    }
    emit_warnings(warnings);
    return 0;
}

// ---- components ------------------------------------------------------

struct ComponentsArgs {
    std::string group;
    std::string surface = "k3";
    long long n = 1;
    std::string format = "text";
};

int cmd_components(const ComponentsArgs& args) {
    Surface surface = parse_surface(args.surface);
    const auto& action = fixloci::lookup(args.group, surface);
    auto report = fixloci::component_counts(action, args.n);

    std::vector<std::string> warnings;
    if (!action.note.empty()) warnings.push_back(action.name + ": " + action.note);

    if (args.format == "json") {
        json payload;
        payload["group"] = action.name;
        payload["n"] = args.n;
        payload["surface"] = surface_name(surface);
        payload["empty"] = report.empty();
        json rows = json::array();
        for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it)
            rows.push_back({{"dim", 2 * it->k}, {"count", int_str(it->count)}});
        payload["components"] = std::move(rows);
        if (!report.empty()) {
            payload["top_dim"] = 2 * *report.top_k;
            payload["epsilon"] = *report.epsilon;
        }
        payload["p_empirical"] = report.p_empirical;
        payload["p_formula"] = report.p_formula;
        std::cout << envelope("components",
                              {{"group", args.group},
                               {"surface", args.surface},
                               {"n", args.n}},
                              payload, warnings)
                         .dump(2)
                  << "\n";
    } else if (args.format == "csv") {
        std::cout << "dim,count\n";
        for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it)
            std::cout << 2 * it->k << "," << it->count << "\n";
    } else {
        std::cout << "# components: " << action.name << " (" << surface_name(surface)
                  << "), n = " << args.n << ", |G| = " << action.order << "\n";
        if (report.empty()) {
            std::cout << "fixed locus is empty (support multiples of "
                      << report.p_empirical << " only)\n";
        } else {
            std::cout << "dim\tcount\n";
            for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it)
                std::cout << 2 * it->k << "\t" << it->count << "\n";
            std::cout << "top_dim " << 2 * *report.top_k << "  epsilon "
                      << *report.epsilon << "  p " << report.p_empirical
                      << " (formula " << report.p_formula << ")\n";
        }
    }
    emit_warnings(warnings);
    return 0;
}

// ---- table2 ----------------------------------------------------------

int cmd_table2(const std::string& format) {
    std::vector<std::string> warnings;
    json groups = json::array();
    std::ostringstream text;
    text << "# top-dimensional component counts per residue class\n";
    text << "# columns: k, exponent kp+eps|G|, epsilon, count, published, match\n";

    for (const auto& ref : fixloci::published_top_rows()) {
        const auto& action = fixloci::lookup(ref.label, Surface::K3);
        auto gcds = fixloci::support_gcd(action, 2 * action.order);
        auto row = fixloci::table2_row(action);
        if (gcds.p_empirical != ref.p)
            warnings.push_back(action.name + ": computed p " +
                               std::to_string(gcds.p_empirical) + ", published " +
                               std::to_string(ref.p));

        json cells = json::array();
        text << action.name << "  p=" << gcds.p_empirical << " (published "
             << ref.p << ")\n";
        for (size_t k = 0; k < row.size(); ++k) {
            std::string computed = row[k].count ? int_str(*row[k].count) : "-";
            std::string published = "-";
            bool match = true;
            if (k < ref.eps0.size()) {
                long long pv = ref.eps0[k];
                published = std::to_string(pv);
                if (pv == 0)
                    match = !row[k].count || row[k].epsilon > 0;
                else
                    match = row[k].count && row[k].epsilon == 0 && *row[k].count == pv;
                if (row[k].epsilon > 0 && k < ref.eps1.size() && ref.eps1[k]) {
                    published += "/" + std::to_string(*ref.eps1[k]);
                    match = row[k].count && row[k].epsilon == 1 &&
                            *row[k].count == *ref.eps1[k];
                }
            }
            cells.push_back({{"k", k},
                             {"exponent", row[k].exponent},
                             {"epsilon", row[k].epsilon},
                             {"count", computed},
                             {"published", published},
                             {"match", match}});
            text << "  " << k << "\t" << row[k].exponent << "\t" << row[k].epsilon
                 << "\t" << computed << "\t" << published << "\t"
                 << (match ? "match" : "MISMATCH") << "\n";
            if (!match)
                warnings.push_back(action.name + " column " + std::to_string(k) +
                                   ": computed " + computed + ", published " +
                                   published);
        }
        groups.push_back({{"group", action.name},
                          {"label", action.label},
                          {"p_empirical", gcds.p_empirical},
                          {"p_formula", gcds.p_formula},
                          {"p_published", ref.p},
                          {"cells", std::move(cells)}});
    }

    if (format == "json") {
        std::cout << envelope("table2", json::object(), {{"groups", std::move(groups)}},
                              warnings)
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << "group,k,exponent,epsilon,count,published,match\n";
        for (const auto& g : groups)
            for (const auto& c : g["cells"])
                std::cout << g["group"].get<std::string>() << "," << c["k"] << ","
                          << c["exponent"] << "," << c["epsilon"] << ","
                          << c["count"].get<std::string>() << ","
                          << c["published"].get<std::string>() << ","
                          << (c["match"].get<bool>() ? "match" : "mismatch") << "\n";
    } else {
        std::cout << text.str();
    }
    emit_warnings(warnings);
    return 0;
}

// ---- verify ----------------------------------------------------------

struct VerifyArgs {
    bool structural = false;
    bool admissible = false;
    bool kummer = false;
    bool local = false;
    long long max_order = 40;
    long long kummer_order = 20;
    int a_min = 2;
    int a_max = 6;
    long long len = 12;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& args) {
    fixloci::VerifyOptions opts;
    bool any = args.structural || args.admissible || args.kummer || args.local;
    opts.structural = !any || args.structural;
    opts.admissible = !any || args.admissible;
    opts.kummer = !any || args.kummer;
    opts.local = !any || args.local;
    opts.max_order = args.max_order;
    opts.kummer_order = args.kummer_order;
    opts.local_a_min = args.a_min;
    opts.local_a_max = args.a_max;
    opts.local_len = args.len;

    auto report = fixloci::run_verification(opts);

    std::vector<std::string> warnings;
    for (const auto& d : report.discrepancies)
        warnings.push_back("[" + d.code + "] " + d.detail);

    if (args.format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json payload;
        payload["checks"] = std::move(checks);
        payload["all_passed"] = report.all_passed();
        std::cout << envelope("verify",
                              {{"max_order", args.max_order},
                               {"kummer_order", args.kummer_order},
                               {"len", args.len}},
                              payload, warnings)
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& c : report.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                      << (c.detail.empty() || c.pass ? "" : ": " + c.detail) << "\n";
        std::cout << "published-value divergences (expected; engine values stand):\n";
        for (const auto& d : report.discrepancies)
            std::cout << "  [" << d.code << "] " << d.detail << "\n";
        std::cout << (report.all_passed() ? "verification passed"
                                          : "VERIFICATION FAILED")
                  << "\n";
    }
    emit_warnings(warnings);
    return report.all_passed() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fixed-locus component counts on Hilbert schemes via "
                 "root-lattice theta series"};
    app.require_subcommand(1);

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "expand a theta series");
    series->add_option("--group,-g", series_args.group, "group name or label")->required();
    series->add_option("--surface", series_args.surface, "k3 or abelian")
        ->check(CLI::IsMember({"k3", "abelian"}));
    series->add_option("--order,-N", series_args.order, "truncation order")
        ->check(CLI::Range(0LL, 2000LL));
    series->add_option("--format", series_args.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    series->add_flag("--project-identity", series_args.project_identity,
                     "print only the identity-coefficient projection");

    ComponentsArgs comp_args;
    auto* comps = app.add_subcommand("components", "fixed-locus component counts");
    comps->add_option("--group,-g", comp_args.group, "group name or label")->required();
    comps->add_option("--surface", comp_args.surface, "k3 or abelian")
        ->check(CLI::IsMember({"k3", "abelian"}));
    comps->add_option("--n,-n", comp_args.n, "number of points")
        ->required()
        ->check(CLI::Range(1LL, 4000LL));
    comps->add_option("--format", comp_args.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string table2_format = "text";
    auto* table2 = app.add_subcommand("table2",
                                      "recompute the top-dimension table next to the published one");
    table2->add_option("--format", table2_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the two-path verification suite");
    verify->add_flag("--structural", verify_args.structural, "catalog and support checks");
    verify->add_flag("--admissible", verify_args.admissible, "K3 series vs oracle");
    verify->add_flag("--kummer", verify_args.kummer, "group-ring series vs oracle");
    verify->add_flag("--local", verify_args.local, "local partition-model suite");
    verify->add_option("--max-order", verify_args.max_order, "K3 sweep bound")
        ->check(CLI::Range(1LL, 200LL));
    verify->add_option("--kummer-order", verify_args.kummer_order, "Kummer sweep bound")
        ->check(CLI::Range(1LL, 60LL));
    verify->add_option("--a-min", verify_args.a_min)->check(CLI::Range(2, 6));
    verify->add_option("--a-max", verify_args.a_max)->check(CLI::Range(2, 6));
    verify->add_option("--len", verify_args.len, "local colength bound")
        ->check(CLI::Range(0LL, 20LL));
    verify->add_option("--format", verify_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* dump = app.add_subcommand("dump-catalog", "print the embedded catalog verbatim");

    try {
        app.parse(argc, argv);
        if (series->parsed()) return cmd_series(series_args);
        if (comps->parsed()) return cmd_components(comp_args);
        if (table2->parsed()) return cmd_table2(table2_format);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (dump->parsed()) {
            std::cout << fixloci::catalog_text();
            return 0;
        }
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const fixloci::UnknownKeyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fixloci::VerificationError& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
