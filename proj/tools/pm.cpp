// pm: construct, certify, dualize, and color discrete pseudomanifolds.
//
// Graph-producing subcommands write canonical graph JSON to stdout (or -o)
// so they compose in pipelines; analysis subcommands write their JSON
// result to stdout (or -o) and a short human summary to stderr. Exit codes:
// 0 success, 1 semantic negative (a reject, a failed bound, an undecided
// exact query), 2 input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pm/arithmetic.hpp"
#include "pm/coloring.hpp"
#include "pm/duality.hpp"
#include "pm/graph.hpp"
#include "pm/io.hpp"
#include "pm/isomorphism.hpp"
#include "pm/recognition.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

pm::Graph read_graph_arg(const std::string& path) {
    if (path == "-") return pm::read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw pm::input_error("cannot open input file: " + path);
    return pm::read_graph(in);
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw pm::input_error("cannot open output file: " + out_path);
    out << text << "\n";
}

void emit_graph(const std::string& out_path, const pm::Graph& g) {
    write_text(out_path, pm::to_canonical_json(g));
}

// Analysis output: JSON to -o when given (summary then goes to stdout),
// otherwise JSON to stdout and summary to stderr.
void emit_analysis(const std::string& out_path, const std::string& json,
                   const std::string& summary) {
    if (out_path.empty()) {
        std::cout << json << "\n";
        if (!summary.empty()) std::cerr << summary << "\n";
    } else {
        write_text(out_path, json);
        if (!summary.empty()) std::cout << summary << "\n";
    }
}

pm::Budget resolve_budget(double flag_secs) {
    double secs = flag_secs;
    if (secs < 0) {
        if (const char* env = std::getenv("PM_TIME_BUDGET_SECS")) {
            try {
                secs = std::stod(env);
            } catch (...) {
                throw pm::input_error("PM_TIME_BUDGET_SECS is not a number");
            }
        } else {
            secs = 30.0;
        }
    }
    if (secs <= 0) return pm::Budget{std::chrono::milliseconds(0)};
    return pm::Budget{std::chrono::milliseconds(static_cast<long long>(secs * 1000))};
}

std::string chromatic_summary(const pm::ChromaticResult& r) {
    if (r.exact()) return "chromatic number " + std::to_string(r.upper);
    return "chromatic number in [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) +
           "] (budget exhausted)";
}

pm::SphereSpec spec_from_flags(const std::vector<int>& cycles, int suspensions) {
    pm::SphereSpec spec;
    spec.cycle_lengths = cycles;
    spec.suspension_count = suspensions;
    spec.validate();
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"discrete pseudomanifold toolkit"};
    app.require_subcommand(1);
    // Let -o appear after the subcommand and its arguments.
    app.fallthrough();

    std::string out_path;
    app.add_option("-o,--output", out_path, "write the result to a file instead of stdout");

    // construct
    auto* construct = app.add_subcommand("construct", "build a named graph family");
    construct->require_subcommand(1);
    std::vector<int> sphere_cycles;
    int sphere_suspend = 0;
    auto* c_sphere = construct->add_subcommand("sphere", "join of cycles, then suspensions");
    c_sphere->add_option("--cycles", sphere_cycles, "cycle lengths, each >= 4")->delimiter(',');
    c_sphere->add_option("--suspend", sphere_suspend, "number of trailing S0 factors");
    int cp_k = 0;
    auto* c_cp = construct->add_subcommand("cross-polytope", "join of k+1 copies of S0");
    c_cp->add_option("--k", cp_k, "sphere dimension")->required();
    int cycle_n = 0;
    auto* c_cycle = construct->add_subcommand("cycle", "the cycle C_n");
    c_cycle->add_option("--n", cycle_n, "number of vertices (>= 3)")->required();
    int complete_n = 0;
    auto* c_complete = construct->add_subcommand("complete", "the complete graph K_n");
    c_complete->add_option("--n", complete_n, "number of vertices")->required();

    // join / product / refine
    std::string join_a, join_b;
    auto* join = app.add_subcommand("join", "Zykov join of two graphs");
    join->add_option("a", join_a, "first graph (path or '-')")->required();
    join->add_option("b", join_b, "second graph (path or '-')")->required();

    std::string prod_a, prod_b;
    bool prod_report = false;
    auto* product = app.add_subcommand("product", "Cartesian simplex product of two graphs");
    product->add_option("a", prod_a, "first graph (path or '-')")->required();
    product->add_option("b", prod_b, "second graph (path or '-')")->required();
    product->add_flag("--report", prod_report,
                      "also certify the product and report its dimension against m+n+1");

    std::string refine_in = "-";
    auto* refine = app.add_subcommand("refine", "Barycentric refinement");
    refine->add_option("input", refine_in, "graph (path or '-')");

    // verify
    std::string verify_in = "-";
    std::optional<int> verify_dim;
    int verify_jobs = 1;
    auto* verify = app.add_subcommand("verify", "certify a pseudomanifold");
    verify->add_option("input", verify_in, "graph (path or '-')");
    verify->add_option("--dim", verify_dim, "level to certify at (default: clique dimension)");
    verify->add_option("--jobs", verify_jobs, "parallel link certification workers")
        ->check(CLI::PositiveNumber);

    // chromatic
    std::string chrom_in = "-";
    bool chrom_exact = false;
    double chrom_budget = -1;
    auto* chromatic = app.add_subcommand("chromatic", "chromatic number");
    chromatic->add_option("input", chrom_in, "graph (path or '-')");
    chromatic->add_flag("--exact", chrom_exact, "exit 1 unless the exact value was reached");
    chromatic->add_option("--budget", chrom_budget, "time budget in seconds");

    // color
    std::string color_in = "-";
    std::string color_method = "exact";
    std::vector<std::string> color_order;
    double color_budget = -1;
    auto* color = app.add_subcommand("color", "produce a proper coloring");
    color->add_option("input", color_in, "graph (path or '-')");
    color->add_option("--method", color_method, "exact | greedy | forest")
        ->check(CLI::IsMember({"exact", "greedy", "forest"}));
    color->add_option("--order", color_order, "greedy order (default: label order)")
        ->delimiter(',');
    color->add_option("--budget", color_budget, "time budget in seconds (exact method)");

    // dual
    std::string dual_in = "-";
    auto* dual = app.add_subcommand("dual", "facet dual graph");
    dual->add_option("input", dual_in, "graph (path or '-')");

    // codual
    std::string codual_in = "-";
    std::vector<std::string> codual_vertices;
    bool codual_classify = false;
    auto* codual = app.add_subcommand("codual", "complementary dual of a vertex set");
    codual->add_option("input", codual_in, "graph (path or '-')");
    codual->add_option("--vertices", codual_vertices, "vertex labels (empty set: whole graph)")
        ->delimiter(',');
    codual->add_flag("--classify", codual_classify,
                     "classify the result (needs a certified pseudomanifold)");

    // fisk
    std::string fisk_in = "-";
    std::string fisk_join;
    auto* fisk = app.add_subcommand("fisk", "odd part (Fisk variety)");
    fisk->add_option("input", fisk_in, "graph (path or '-')");
    fisk->add_option("--join-check", fisk_join,
                     "second graph: emit both sides of the join identity for the odd part");

    // bounds
    std::string bounds_in = "-";
    std::vector<int> bounds_cycles;
    int bounds_suspend = 0;
    std::string bounds_remainder;
    double bounds_budget = -1;
    auto* bounds = app.add_subcommand("bounds", "chromatic bound report");
    bounds->add_option("input", bounds_in, "graph (path or '-')");
    auto* bopt = bounds->add_option("--sphere-spec", bounds_cycles,
                                    "cycle lengths of the sphere join factor")
                     ->delimiter(',');
    bounds->add_option("--suspend", bounds_suspend, "suspensions of the sphere factor");
    bounds->add_option("--remainder", bounds_remainder,
                       "graph joined with the sphere factor (default: empty graph)");
    bounds->add_option("--budget", bounds_budget, "time budget in seconds");

    // report
    std::string report_kind;
    double report_budget = -1;
    auto* report = app.add_subcommand("report", "reproduce a published report");
    report->add_option("kind", report_kind, "table1")->required();
    report->add_option("--budget", report_budget, "time budget in seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (construct->parsed()) {
        pm::Graph g;
        pm::SphereSpec spec;
        bool have_spec = false;
        if (c_sphere->parsed()) {
            spec = spec_from_flags(sphere_cycles, sphere_suspend);
            g = pm::sphere_from_spec(spec);
            have_spec = true;
        } else if (c_cp->parsed()) {
            g = pm::cross_polytope(cp_k);
            spec.suspension_count = cp_k + 1;
            have_spec = true;
        } else if (c_cycle->parsed()) {
            g = pm::make_cycle(cycle_n);
        } else if (c_complete->parsed()) {
            g = pm::make_complete(complete_n);
        }
        emit_graph(out_path, g);
        if (have_spec) {
            pm::SpherePrediction p = pm::sphere_chromatic_prediction(spec);
            if (p.has_prediction()) {
                std::cerr << "predicted chromatic number: formula " << *p.printed
                          << ", additivity " << *p.additive
                          << (p.divergent ? " (divergent)" : "") << "\n";
            }
        }
        return kExitOk;
    }

    if (join->parsed()) {
        emit_graph(out_path, pm::zykov_join(read_graph_arg(join_a), read_graph_arg(join_b)));
        return kExitOk;
    }

    if (product->parsed()) {
        pm::Graph a = read_graph_arg(prod_a);
        pm::Graph b = read_graph_arg(prod_b);
        emit_graph(out_path, pm::cartesian_simplex_product(a, b));
        if (prod_report) {
            pm::ProductClosureReport rep = pm::product_closure_report(a, b);
            std::cerr << pm::json_string(rep) << "\n";
        }
        return kExitOk;
    }

    if (refine->parsed()) {
        emit_graph(out_path, pm::barycentric_refinement(read_graph_arg(refine_in)));
        return kExitOk;
    }

    if (verify->parsed()) {
        pm::Graph g = read_graph_arg(verify_in);
        int d = verify_dim ? *verify_dim : pm::dimension(g);
        pm::PmCertificate cert = pm::is_pseudomanifold(g, d, verify_jobs);
        std::string summary;
        if (cert.accepted) {
            summary = "accept: a " + std::to_string(d) + "-pseudomanifold";
        } else {
            summary = "reject at level " + std::to_string(d) + ": ";
            summary += std::string(pm::reason_string(cert.witness->reason));
            if (!cert.witness->path.empty()) {
                summary += ", link path";
                for (const auto& v : cert.witness->path) summary += " " + v;
                pm::Graph offending = pm::replay_witness_path(g, cert.witness->path);
                summary += " (offending subgraph: " + std::to_string(offending.vertex_count()) +
                           " vertices, " + std::to_string(offending.edge_count()) + " edges)";
            }
        }
        emit_analysis(out_path, pm::json_string(cert), summary);
        return cert.accepted ? kExitOk : kExitNegative;
    }

    if (chromatic->parsed()) {
        pm::Graph g = read_graph_arg(chrom_in);
        pm::ChromaticResult r = pm::chromatic_number_exact(g, resolve_budget(chrom_budget));
        emit_analysis(out_path, pm::json_string(r),
                      out_path.empty() ? "" : chromatic_summary(r));
        if (!r.exact() && chrom_exact) return kExitNegative;
        return kExitOk;
    }

    if (color->parsed()) {
        pm::Graph g = read_graph_arg(color_in);
        pm::Coloring c;
        std::string note;
        if (color_method == "exact") {
            pm::ChromaticResult r = pm::chromatic_number_exact(g, resolve_budget(color_budget));
            c = *r.witness;
            note = chromatic_summary(r);
        } else if (color_method == "greedy") {
            std::vector<std::string> order = color_order.empty() ? g.labels() : color_order;
            c = pm::greedy_coloring(g, order);
            note = "greedy palette " + std::to_string(c.palette_size);
        } else {
            int d = pm::dimension(g);
            pm::PmCertificate cert = pm::is_pseudomanifold(g, d);
            if (!cert.accepted)
                throw pm::input_error("forest coloring needs a certified pseudomanifold");
            c = pm::forest_coloring(g, cert);
            note = "forest palette " + std::to_string(c.palette_size) + " (2d+2 = " +
                   std::to_string(2 * d + 2) + ")";
        }
        emit_analysis(out_path, pm::json_string(c), note);
        return kExitOk;
    }

    if (dual->parsed()) {
        emit_graph(out_path, pm::dual_graph(read_graph_arg(dual_in)).as_graph());
        return kExitOk;
    }

    if (codual->parsed()) {
        pm::Graph g = read_graph_arg(codual_in);
        if (codual_classify) {
            pm::CodualClassification cls = pm::classify_complementary_dual(g, codual_vertices);
            emit_analysis(out_path, pm::json_string(cls),
                          "class: " + std::string(pm::codual_class_string(cls.cls)));
        } else {
            emit_graph(out_path, pm::complementary_dual(g, codual_vertices));
        }
        return kExitOk;
    }

    if (fisk->parsed()) {
        pm::Graph g = read_graph_arg(fisk_in);
        if (!fisk_join.empty()) {
            pm::FiskJoinCheck chk = pm::fisk_join_check(g, read_graph_arg(fisk_join));
            emit_analysis(out_path, pm::json_string(chk),
                          chk.equal ? "both readings agree" : "the two readings differ");
        } else {
            pm::FiskRecord rec = pm::fisk_variety(g);
            emit_analysis(out_path, pm::json_string(rec),
                          std::to_string(rec.odd_simplices.size()) + " odd simplices, " +
                              std::to_string(rec.subgraph.vertex_count()) +
                              " vertices generated");
        }
        return kExitOk;
    }

    if (bounds->parsed()) {
        pm::Graph g = read_graph_arg(bounds_in);
        std::optional<pm::SphereDecomposition> dec;
        if (!bopt->empty() || bounds_suspend > 0) {
            pm::SphereDecomposition d;
            d.spec = spec_from_flags(bounds_cycles, bounds_suspend);
            if (!bounds_remainder.empty()) d.remainder = read_graph_arg(bounds_remainder);
            dec = std::move(d);
        }
        pm::BoundsReport rep = pm::check_bounds(g, dec, resolve_budget(bounds_budget));
        std::string summary = "d=" + std::to_string(rep.dimension) + ", " +
                              chromatic_summary(rep.chromatic);
        for (const auto& b : rep.bounds) {
            summary += "; " + b.name + ":";
            if (b.lower) summary += " " + std::to_string(*b.lower) + " <= X";
            if (b.lower && b.upper) summary += ",";
            if (b.upper) summary += " X <= " + std::to_string(*b.upper);
            summary += b.holds ? (*b.holds ? " [holds]" : " [FAILS]") : " [undecided]";
        }
        emit_analysis(out_path, pm::json_string(rep), summary);
        return rep.any_failed() ? kExitNegative : kExitOk;
    }

    if (report->parsed()) {
        if (report_kind != "table1") throw pm::input_error("unknown report: " + report_kind);
        pm::Table1Report rep = pm::table1_report(resolve_budget(report_budget));
        emit_analysis(out_path, pm::json_string(rep), pm::table1_text(rep));
        return kExitOk;
    }

    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pm::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
}
