// Acceptance suite: one pass/fail line per criterion. Exits nonzero when
// anything fails. Run through ctest as "acceptance" or directly.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "graphgen.hpp"
#include "oracles.hpp"
#include "pm/arithmetic.hpp"
#include "pm/coloring.hpp"
#include "pm/duality.hpp"
#include "pm/graph.hpp"
#include "pm/io.hpp"
#include "pm/isomorphism.hpp"
#include "pm/recognition.hpp"

using namespace pm;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

using Seconds = std::chrono::duration<double>;

Budget minute() { return std::chrono::milliseconds(55'000); }

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.index_edges())
        for (int w : g.neighbors(u))
            if (w != v && g.adjacent(v, w)) return true;
    return false;
}

// 1. Exact solver equals the brute-force palette search on every connected
//    graph with at most 7 vertices, one representative per isomorphism
//    class; total runtime must stay under 5 minutes.
Outcome oracle_equivalence() {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    const int expected_counts[] = {0, 1, 1, 2, 6, 21, 112, 853};
    int total = 0;
    for (int n = 1; n <= 7; ++n) {
        auto masks = graphgen::connected_canonical_masks(n);
        out.expect(static_cast<int>(masks.size()) == expected_counts[n],
                   "connected graph count on " + std::to_string(n) + " vertices: got " +
                       std::to_string(masks.size()) + ", expected " +
                       std::to_string(expected_counts[n]));
        for (std::uint32_t mask : masks) {
            Graph g = graphgen::mask_to_graph(mask, n);
            ChromaticResult r = chromatic_number_exact(g);
            int want = oracle::brute_chromatic(g);
            if (!r.exact() || r.upper != want) {
                out.fail("mismatch on n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                         ": solver " + std::to_string(r.upper) + " oracle " + std::to_string(want));
                return out;
            }
            if (!verify_coloring(g, *r.witness)) {
                out.fail("improper witness on mask " + std::to_string(mask));
                return out;
            }
            ++total;
        }
    }
    double secs = Seconds(std::chrono::steady_clock::now() - start).count();
    out.expect(secs <= 300.0, "runtime " + std::to_string(secs) + "s exceeds 5 min");
    out.detail = std::to_string(total) + " graphs";
    return out;
}

// 2. The printed sphere values: X of one, two, three joined C5's.
Outcome table1_sphere_values() {
    Outcome out;
    const int expected[] = {3, 6, 9};
    for (int copies = 1; copies <= 3; ++copies) {
        SphereSpec spec;
        spec.cycle_lengths.assign(copies, 5);
        auto start = std::chrono::steady_clock::now();
        ChromaticResult r = chromatic_number_exact(sphere_from_spec(spec), minute());
        double secs = Seconds(std::chrono::steady_clock::now() - start).count();
        out.expect(r.exact() && r.upper == expected[copies - 1],
                   spec.text() + ": got " + std::to_string(r.upper) + ", expected " +
                       std::to_string(expected[copies - 1]));
        out.expect(secs <= 60.0, spec.text() + " took " + std::to_string(secs) + "s");
    }
    return out;
}

// 3. Join additivity and suspension increment on 200 seeded random pairs.
Outcome join_additivity() {
    Outcome out;
    std::mt19937 rng(0);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = graphgen::random_graph(rng, 7, "g");
        Graph h = graphgen::random_graph(rng, 7, "h");
        ChromaticResult rg = chromatic_number_exact(g);
        ChromaticResult rh = chromatic_number_exact(h);
        ChromaticResult rj = chromatic_number_exact(zykov_join(g, h));
        if (!rg.exact() || !rh.exact() || !rj.exact() || rj.upper != rg.upper + rh.upper) {
            out.fail("additivity violated at trial " + std::to_string(trial));
            return out;
        }
        ChromaticResult rs = chromatic_number_exact(suspension(g));
        if (!rs.exact() || rs.upper != rg.upper + 1) {
            out.fail("suspension increment violated at trial " + std::to_string(trial));
            return out;
        }
    }
    out.detail = "200 pairs";
    return out;
}

// 4. Recognition fixtures, including the join-closure dimensions.
Outcome recognition_fixtures() {
    Outcome out;
    for (int n = 4; n <= 12; ++n)
        out.expect(is_pseudomanifold(make_cycle(n), 1).accepted,
                   "C" + std::to_string(n) + " should accept at 1");

    Graph k4 = make_complete(4);
    for (int d = 0; d <= 4; ++d) {
        PmCertificate c = is_pseudomanifold(k4, d);
        out.expect(!c.accepted, "K4 must reject at " + std::to_string(d));
        if (c.accepted) continue;
        Graph offending = replay_witness_path(k4, c.witness->path);
        bool replays = false;
        switch (c.witness->reason) {
            case RejectReason::NotACycle: replays = !cycle_length(offending); break;
            case RejectReason::CycleTooShort:
                replays = cycle_length(offending) && *cycle_length(offending) < 4;
                break;
            case RejectReason::LinkDimensionMismatch: replays = offending.vertex_count() == 0; break;
            case RejectReason::EmptyExpected: replays = offending.vertex_count() > 0; break;
        }
        out.expect(replays, "K4 witness at " + std::to_string(d) + " does not replay");
    }

    out.expect(is_pseudomanifold(suspension(make_cycle(4)), 2).accepted, "octahedron at 2");

    const std::vector<std::pair<std::vector<int>, int>> joins = {
        {{4, 4}, 3}, {{4, 5}, 3}, {{5, 5}, 3}, {{4, 4, 4}, 5}};
    for (const auto& [lengths, dim] : joins) {
        Graph g = corpus::join_of_cycles(lengths);
        out.expect(is_pseudomanifold(g, dim).accepted,
                   "join should accept at " + std::to_string(dim));
        out.expect(pseudomanifold_dimension(g) == dim, "join dimension");
    }
    return out;
}

// 5. The worked dual-graph examples and the complete-graph coduals.
Outcome duality_fixtures() {
    Outcome out;
    Graph octa = suspension(make_cycle(4));
    out.expect(is_isomorphic(dual_graph(octa).as_graph(), oracle::hypercube(3)),
               "dual(octahedron) is not the cube");

    for (int n = 4; n <= 8; ++n) {
        Graph wheel = zykov_join(make_complete(1, "hub"), make_cycle(n, "rim"));
        out.expect(is_isomorphic(dual_graph(wheel).as_graph(), make_cycle(n)),
                   "dual(W" + std::to_string(n) + ") is not C" + std::to_string(n));
    }

    out.expect(is_isomorphic(dual_graph(cross_polytope(3)).as_graph(), oracle::hypercube(4)),
               "dual(cross_polytope(3)) is not the tesseract");

    for (int m = 1; m <= 6; ++m) {
        Graph km = make_complete(m);
        for (int n = 1; n <= m; ++n) {
            std::vector<std::string> sub(km.labels().begin(), km.labels().begin() + n);
            if (!is_isomorphic(complementary_dual(km, sub), make_complete(m - n)))
                out.fail("codual(K" + std::to_string(m) + ", K" + std::to_string(n) + ")");
        }
    }
    return out;
}

// 6. Dual regularity, triangle-freeness, and codual dimensions over the
//    whole corpus.
Outcome dual_and_codual_properties() {
    Outcome out;
    auto corpus_list = corpus::instances();
    out.expect(corpus_list.size() >= 30, "corpus too small");
    for (const auto& inst : corpus_list) {
        int d = inst.dimension;
        DualGraph dual = dual_graph(inst.graph);
        Graph dg = dual.as_graph();
        for (int v = 0; v < dg.vertex_count(); ++v)
            if (dg.degree(v) != d + 1) {
                out.fail(inst.name + ": dual not " + std::to_string(d + 1) + "-regular");
                break;
            }
        if (has_triangle(dg)) out.fail(inst.name + ": dual has a triangle");

        for (int n = 1; n <= d; ++n) {
            for (const auto& s : simplices_of_dimension(inst.graph, n - 1)) {
                Graph codual = complementary_dual(inst.graph, s.vertices);
                if (!is_pseudomanifold(codual, d - n).accepted) {
                    out.fail(inst.name + ": codual of " + s.label() + " fails at " +
                             std::to_string(d - n));
                    return out;
                }
                if (n == d - 1) {
                    auto len = cycle_length(codual);
                    if (!len || *len < 4) {
                        out.fail(inst.name + ": dual link of " + s.label() + " is not C>=4");
                        return out;
                    }
                }
            }
        }
    }
    out.detail = std::to_string(corpus_list.size()) + " instances";
    return out;
}

// 7. The sandwich bound with exact chromatic numbers, plus the forest
//    coloring staying proper within 2d+2 colors.
Outcome sandwich_and_forest() {
    Outcome out;
    for (const auto& inst : corpus::instances()) {
        int d = inst.dimension;
        ChromaticResult r = chromatic_number_exact(inst.graph, minute());
        if (!r.exact()) {
            out.fail(inst.name + ": exact chromatic number not reached in budget");
            continue;
        }
        out.expect(d + 1 <= r.upper && r.upper <= 2 * d + 2,
                   inst.name + ": X=" + std::to_string(r.upper) + " outside [" +
                       std::to_string(d + 1) + "," + std::to_string(2 * d + 2) + "]");

        PmCertificate cert = is_pseudomanifold(inst.graph, d);
        Coloring fc = forest_coloring(inst.graph, cert);
        out.expect(verify_coloring(inst.graph, fc), inst.name + ": forest coloring improper");
        out.expect(fc.palette_size <= 2 * d + 2,
                   inst.name + ": forest palette " + std::to_string(fc.palette_size) + " > " +
                       std::to_string(2 * d + 2));
    }
    return out;
}

// 8. The sphere-join bounds on every decomposed corpus instance, plus the
//    worked case C4 + C5.
Outcome sphere_join_bounds() {
    Outcome out;
    int decomposed = 0;
    for (const auto& inst : corpus::instances()) {
        if (!inst.decomposition) continue;
        ++decomposed;
        BoundsReport rep = check_bounds(inst.graph, inst.decomposition, minute());
        if (!rep.chromatic.exact()) {
            out.fail(inst.name + ": no exact value in budget");
            continue;
        }
        int x = rep.chromatic.upper;
        int d = rep.dimension;
        out.expect(x <= 2 * d + 1, inst.name + ": X=" + std::to_string(x) + " > 2d+1");
        int close_k = (d % 2 == 0) ? d / 2 - 1 : (d + 1) / 2 - 1;
        if (inst.decomposition->spec.parity() == SphereParity::Even &&
            inst.decomposition->spec.dimension() == close_k) {
            int ceil_bound = (3 * (d + 1) + 1) / 2;
            out.expect(x <= ceil_bound, inst.name + ": X=" + std::to_string(x) +
                                            " > ceil(3(d+1)/2)=" + std::to_string(ceil_bound));
            bool reported = false;
            for (const auto& b : rep.bounds)
                if (b.name == "even-cycle-close-k") reported = b.holds == true;
            out.expect(reported, inst.name + ": close-k bound not reported as holding");
        }
    }
    out.expect(decomposed >= 20, "too few decomposed instances");

    Graph worked = zykov_join(make_cycle(4, "a"), make_cycle(5, "b"));
    ChromaticResult r = chromatic_number_exact(worked, minute());
    int ceil_worked = (3 * (3 + 1) + 1) / 2;  // d = 3
    out.expect(r.exact() && r.upper == 5, "X(C4+C5) should be 5");
    out.expect(ceil_worked == 6 && r.upper <= ceil_worked, "worked case 5 <= 6");
    out.detail = std::to_string(decomposed) + " decompositions";
    return out;
}

// 9. Every divergence between the printed statements and the computed
//    values must be flagged: the even-dimension sphere formula, the table
//    caption, and the product dimension.
Outcome divergence_flags() {
    Outcome out;

    SphereSpec octa_spec;
    octa_spec.cycle_lengths = {4};
    octa_spec.suspension_count = 1;
    SpherePrediction pred = sphere_chromatic_prediction(octa_spec);
    out.expect(pred.divergent, "even k=2 prediction must flag divergence");
    out.expect(pred.printed == 4 && pred.additive == 3, "prediction values");
    ChromaticResult octa_x = chromatic_number_exact(sphere_from_spec(octa_spec));
    out.expect(octa_x.exact() && octa_x.upper == 3, "exact X(octahedron) must be 3");

    Table1Report table = table1_report(minute());
    out.expect(table.caption_mismatch, "table caption mismatch must be flagged");
    out.expect(table.recomputed_match, "recomputed sphere values must match the printed column");

    ProductClosureReport prod = product_closure_report(make_cycle(4), make_cycle(4, "w"));
    out.expect(prod.certified_dimension == 2, "(C4 x C4)_1 must certify at 2");
    out.expect(prod.join_rule_dimension == 3, "join rule says m+n+1 = 3");
    out.expect(!prod.matches_join_rule, "the discrepancy must be recorded");
    return out;
}

// 10. Refinement and product fixtures.
Outcome refinement_and_product() {
    Outcome out;
    for (int n = 4; n <= 10; ++n)
        out.expect(is_isomorphic(barycentric_refinement(make_cycle(n)), make_cycle(2 * n)),
                   "refinement of C" + std::to_string(n));

    Graph p = cartesian_simplex_product(make_complete(2), make_complete(1, "w"));
    out.expect(is_isomorphic(p, make_path(3)), "(K2 x 1)_1 should be P3");

    Graph prod = cartesian_simplex_product(make_cycle(4), make_cycle(4, "w"));
    out.expect(prod.vertex_count() == 64, "(C4 x C4)_1 should have 64 vertices");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"oracle-equivalence", oracle_equivalence},
        {"table1-sphere-values", table1_sphere_values},
        {"join-additivity", join_additivity},
        {"recognition-fixtures", recognition_fixtures},
        {"duality-fixtures", duality_fixtures},
        {"dual-codual-properties", dual_and_codual_properties},
        {"sandwich-and-forest-coloring", sandwich_and_forest},
        {"sphere-join-bounds", sphere_join_bounds},
        {"divergence-flags", divergence_flags},
        {"refinement-and-product", refinement_and_product},
    };

    int failures = 0;
    int id = 0;
    for (const auto& c : criteria) {
        ++id;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double secs = Seconds(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2d] %s %s (%.1fs)%s%s\n", id, out.pass ? "PASS" : "FAIL", c.name, secs,
                    out.detail.empty() ? "" : " ", out.detail.c_str());
        std::fflush(stdout);
        failures += !out.pass;
    }
    std::printf("ACCEPTANCE: %d/10 passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
