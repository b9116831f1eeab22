#include "pm/recognition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <thread>

namespace pm {

namespace {

using Memo = std::map<std::string, PmCertificate>;

PmCertificate accept_at(int level) { return {level, true, std::nullopt}; }

PmCertificate reject_at(int level, RejectReason reason, std::vector<std::string> path = {}) {
    return {level, false, PmWitness{std::move(path), reason}};
}

PmCertificate certify(const Graph& g, int level, Memo& memo);

PmCertificate certify_links(const Graph& g, int level, Memo& memo) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        PmCertificate sub = certify(unit_link_by_index(g, v), level - 1, memo);
        if (!sub.accepted) {
            std::vector<std::string> path{g.label(v)};
            path.insert(path.end(), sub.witness->path.begin(), sub.witness->path.end());
            return reject_at(level, sub.witness->reason, std::move(path));
        }
    }
    return accept_at(level);
}

PmCertificate certify(const Graph& g, int level, Memo& memo) {
    if (level == -1) {
        if (g.vertex_count() == 0) return accept_at(-1);
        return reject_at(-1, RejectReason::EmptyExpected);
    }
    if (g.vertex_count() == 0) return reject_at(level, RejectReason::LinkDimensionMismatch);
    if (level == 1) {
        auto n = cycle_length(g);
        if (!n) return reject_at(1, RejectReason::NotACycle);
        if (*n < 4) return reject_at(1, RejectReason::CycleTooShort);
        return accept_at(1);
    }

    std::string key = std::to_string(level) + '#' + g.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    PmCertificate cert = certify_links(g, level, memo);
    memo.emplace(std::move(key), cert);
    return cert;
}

}  // namespace

std::string_view reason_string(RejectReason r) {
    switch (r) {
        case RejectReason::NotACycle: return "not-a-cycle";
        case RejectReason::CycleTooShort: return "cycle-too-short";
        case RejectReason::LinkDimensionMismatch: return "link-dimension-mismatch";
        case RejectReason::EmptyExpected: return "empty-expected";
    }
    return "?";
}

std::optional<RejectReason> reason_from_string(std::string_view s) {
    for (auto r : {RejectReason::NotACycle, RejectReason::CycleTooShort,
                   RejectReason::LinkDimensionMismatch, RejectReason::EmptyExpected})
        if (reason_string(r) == s) return r;
    return std::nullopt;
}

PmCertificate is_pseudomanifold(const Graph& g, int d, int jobs) {
    if (d < -1) throw input_error("certification level must be >= -1");

    PmCertificate cert;
    if (jobs > 1 && d >= 2 && g.vertex_count() > 1) {
        // Fan the top-level links out to workers, each with a private memo;
        // the witness is the canonically smallest failing vertex regardless
        // of which worker found it.
        int n = g.vertex_count();
        int workers = std::min<int>(jobs, n);
        std::vector<PmCertificate> subs(n);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                Memo memo;
                for (int v = w; v < n; v += workers)
                    subs[v] = certify(unit_link_by_index(g, v), d - 1, memo);
            });
        for (auto& t : pool) t.join();
        cert = accept_at(d);
        for (int v = 0; v < n; ++v)
            if (!subs[v].accepted) {
                std::vector<std::string> path{g.label(v)};
                path.insert(path.end(), subs[v].witness->path.begin(),
                            subs[v].witness->path.end());
                cert = reject_at(d, subs[v].witness->reason, std::move(path));
                break;
            }
    } else {
        Memo memo;
        cert = certify(g, d, memo);
    }

    // Purity is a consequence of the recursion: every maximal simplex of an
    // accepted graph has exactly d + 1 vertices.
    assert(!cert.accepted || dimension(g) == d);
    return cert;
}

std::optional<int> pseudomanifold_dimension(const Graph& g) {
    int d = dimension(g);
    PmCertificate cert = is_pseudomanifold(g, d);
    if (cert.accepted) return d;
    return std::nullopt;
}

bool is_subpseudomanifold(const Graph& sub, const Graph& host) {
    if (!pseudomanifold_dimension(sub)) return false;
    for (const auto& l : sub.labels())
        if (!host.has_vertex(l)) return false;
    for (const auto& [u, v] : sub.label_edges())
        if (!host.adjacent_labels(u, v)) return false;
    return true;
}

Graph replay_witness_path(const Graph& g, const std::vector<std::string>& path) {
    Graph cur = g;
    for (const auto& v : path) cur = unit_link(cur, v);
    return cur;
}

}  // namespace pm
